#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace knotcalc::kernels {

/// Values first, first + step, ..., first + (count-1) step.
struct Progression {
  std::int32_t first = 0;
  std::int32_t step = 1;
  std::int32_t count = 1;
};

/// Maximize x^T L x over the grid prod_i axes[i]. `matrix` is symmetric,
/// row-major with row length `stride` (a multiple of 8, padding zero).
/// Callers guarantee |(L x)_i| < 2^30 over the grid.
struct BoxProblem {
  std::size_t n = 0;
  std::size_t stride = 0;
  std::vector<std::int32_t> matrix;
  std::vector<Progression> axes;
  /// A maximizer is "inside" when every |x_i| < radius.
  std::int32_t radius = 0;
};

struct BoxResult {
  std::int64_t best = 0;
  /// First maximizer in odometer order (axis 0 fastest).
  std::vector<std::int32_t> argmax;
  /// Some maximizer lies strictly inside the radius box.
  bool inside = false;
  std::uint64_t visited = 0;
};

BoxProblem make_problem(std::size_t n, const std::vector<std::int64_t>& dense, std::vector<Progression> axes,
                        std::int32_t radius);

BoxResult box_search_scalar(const BoxProblem& problem);
/// Same contract and bit-identical results; only callable when
/// avx2_available() is true.
BoxResult box_search_avx2(const BoxProblem& problem);

bool avx2_available();

/// Runtime-selected kernel. KNOTCALC_KERNEL=scalar|avx2 overrides detection.
BoxResult box_search(const BoxProblem& problem);
std::string_view active_kernel();

}  // namespace knotcalc::kernels
