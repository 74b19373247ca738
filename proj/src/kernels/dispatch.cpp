#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "knotcalc/kernels/box_search.hpp"

namespace knotcalc::kernels {

BoxProblem make_problem(std::size_t n, const std::vector<std::int64_t>& dense, std::vector<Progression> axes,
                        std::int32_t radius) {
  if (dense.size() != n * n || axes.size() != n) throw std::invalid_argument("box problem shape mismatch");
  BoxProblem pb;
  pb.n = n;
  pb.stride = std::max<std::size_t>(8, (n + 7) / 8 * 8);
  pb.matrix.assign(n * pb.stride, 0);
  pb.axes = std::move(axes);
  pb.radius = radius;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t v = dense[r * n + c];
      if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max()) {
        throw std::out_of_range("matrix entry does not fit the enumeration kernel");
      }
      pb.matrix[r * pb.stride + c] = static_cast<std::int32_t>(v);
    }
  }
  return pb;
}

bool avx2_available() {
#if defined(KNOTCALC_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

enum class Choice { Scalar, Avx2 };

Choice choose() {
  if (const char* forced = std::getenv("KNOTCALC_KERNEL")) {
    const std::string name(forced);
    if (name == "scalar") return Choice::Scalar;
    if (name == "avx2" && avx2_available()) return Choice::Avx2;
  }
  return avx2_available() ? Choice::Avx2 : Choice::Scalar;
}

Choice chosen() {
  static const Choice c = choose();
  return c;
}

}  // namespace

BoxResult box_search(const BoxProblem& problem) {
  return chosen() == Choice::Avx2 ? box_search_avx2(problem) : box_search_scalar(problem);
}

std::string_view active_kernel() { return chosen() == Choice::Avx2 ? "avx2" : "scalar"; }

}  // namespace knotcalc::kernels
