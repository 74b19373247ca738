#include <stdexcept>

#include "box_search_impl.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace knotcalc::kernels {

#if defined(__AVX2__)

BoxResult box_search_avx2(const BoxProblem& problem) {
  // stride is a multiple of 8, so whole 256-bit lanes cover each row.
  return run_box_search(problem, [](std::int32_t* w, const std::int32_t* col, std::size_t stride) {
    for (std::size_t j = 0; j < stride; j += 8) {
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
      __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + j));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(w + j), _mm256_add_epi32(acc, c));
    }
  });
}

#else

BoxResult box_search_avx2(const BoxProblem&) { throw std::runtime_error("AVX2 kernel not compiled for this target"); }

#endif

}  // namespace knotcalc::kernels
