#include "box_search_impl.hpp"

namespace knotcalc::kernels {

BoxResult box_search_scalar(const BoxProblem& problem) {
  return run_box_search(problem, [](std::int32_t* w, const std::int32_t* col, std::size_t stride) {
    for (std::size_t j = 0; j < stride; ++j) w[j] += col[j];
  });
}

}  // namespace knotcalc::kernels
