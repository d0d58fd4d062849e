#pragma once

#include <functional>
#include <span>

namespace simplex_sections {

struct QuadratureResult {
  double value = 0.0;
  double err = 0.0;
  long evaluations = 0;
  int intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-11;
  int max_depth = 40;
  int max_intervals = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [lo, hi], bisecting the
/// interval with the largest error estimate. `breaks` are interior points
/// where the integrand has features; they seed the initial partition.
/// Throws TolUnreachable when the depth or interval budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opts, std::span<const double> breaks = {});

/// The 15-point Kronrod rule, for callers that need fixed symmetric grids.
struct KronrodRule {
  static constexpr int size = 15;
  static const double nodes[15];    ///< on [-1, 1]
  static const double weights[15];  ///< Kronrod weights
};

}  // namespace simplex_sections
