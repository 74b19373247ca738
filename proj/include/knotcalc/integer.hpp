#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace knotcalc {

using Int = mpz_class;
using Rational = mpq_class;

inline Int to_int(std::int64_t v) {
  // mpz_class(long) is only 64-bit on LP64; go through the string path otherwise.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return Int(static_cast<long>(v));
  } else {
    return Int(std::to_string(v));
  }
}

inline bool fits_int64(const Int& v) { return v.fits_slong_p() && sizeof(long) >= 8; }

}  // namespace knotcalc
