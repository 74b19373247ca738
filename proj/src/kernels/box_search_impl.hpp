#pragma once

// Shared odometer walk for the box-search kernels. Each kernel translation
// unit includes this with its own column-add primitive; everything here has
// internal linkage so differently-targeted copies never get merged.

#include <limits>

#include "knotcalc/kernels/box_search.hpp"

namespace knotcalc::kernels {
namespace {

template <class AddColumn>
BoxResult run_box_search(const BoxProblem& pb, AddColumn add_column) {
  BoxResult res;
  const std::size_t n = pb.n;
  const std::size_t stride = pb.stride;
  if (n == 0) {
    res.inside = true;
    res.visited = 1;
    return res;
  }
  for (const auto& ax : pb.axes) {
    if (ax.count < 1) return res;
  }

  std::vector<std::int32_t> x(n), idx(n, 0);
  std::vector<std::int32_t> w(stride, 0);
  std::vector<std::int32_t> step_cols(n * stride, 0), wrap_cols(n * stride, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = pb.axes[i].first;

  std::int64_t q = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += std::int64_t{pb.matrix[r * stride + c]} * x[c];
    w[r] = static_cast<std::int32_t>(acc);
    q += acc * x[r];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ax = pb.axes[i];
    const std::int32_t last = ax.first + (ax.count - 1) * ax.step;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int32_t lij = pb.matrix[j * stride + i];
      step_cols[i * stride + j] = ax.step * lij;
      wrap_cols[i * stride + j] = (ax.first - last) * lij;
    }
  }

  auto on_edge = [&](std::int32_t v) { return v >= pb.radius || -v >= pb.radius; };
  std::size_t edge_count = 0;
  for (std::size_t i = 0; i < n; ++i) edge_count += on_edge(x[i]);

  res.best = std::numeric_limits<std::int64_t>::min();
  for (;;) {
    ++res.visited;
    if (q > res.best) {
      res.best = q;
      res.argmax = x;
      res.inside = edge_count == 0;
    } else if (q == res.best && edge_count == 0) {
      res.inside = true;
    }

    std::size_t i = 0;
    for (; i < n; ++i) {
      const auto& ax = pb.axes[i];
      const std::int64_t lii = pb.matrix[i * stride + i];
      if (idx[i] + 1 < ax.count) {
        const std::int64_t d = ax.step;
        q += 2 * d * w[i] + d * d * lii;
        add_column(w.data(), step_cols.data() + i * stride, stride);
        edge_count -= on_edge(x[i]);
        x[i] += ax.step;
        edge_count += on_edge(x[i]);
        ++idx[i];
        break;
      }
      const std::int64_t d = std::int64_t{ax.first} - x[i];
      if (d != 0) {
        q += 2 * d * w[i] + d * d * lii;
        add_column(w.data(), wrap_cols.data() + i * stride, stride);
        edge_count -= on_edge(x[i]);
        x[i] = ax.first;
        edge_count += on_edge(x[i]);
      }
      idx[i] = 0;
    }
    if (i == n) break;
  }
  return res;
}

}  // namespace
}  // namespace knotcalc::kernels
