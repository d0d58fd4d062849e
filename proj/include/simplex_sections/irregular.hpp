#pragma once

#include "simplex_sections/direction.hpp"
#include "simplex_sections/polytope.hpp"

namespace simplex_sections {

/// S(delta) = V S_reg with V = I + delta w w^T, w = (1, ..., 1, -1, ..., -1)
/// split into two halves of size (n+1)/2. det V = 1 + (n+1) delta.
class DeformedSimplex {
 public:
  /// Requires n+1 even and -1/(n+1) < delta <= 0 (OutOfRange otherwise).
  static DeformedSimplex make(int n, double delta);

  int n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  const Mat& matrix() const noexcept { return spec_.vertices(); }
  const SimplexSpec& spec() const noexcept { return spec_; }

  /// Unit normal of the facet opposite vertex `l` (a hyperplane through 0).
  Direction face_normal(int l) const;
  /// w / sqrt(n+1).
  Direction central_direction() const;

 private:
  DeformedSimplex(int n, double delta, SimplexSpec spec) : n_(n), delta_(delta), spec_(std::move(spec)) {}

  int n_;
  double delta_;
  SimplexSpec spec_;
};

/// vol(H_a cap S) for S = V S_reg:
///   |det V| / ||V^T a|| * sqrt(n+1-K^2) / sqrt(n+1-K~^2) * vol(H_a~ cap S_reg),
/// a~ = V^T a / ||V^T a||, the last factor from the residue sum.
VolumeResult general_section_volume(const SimplexSpec& s, const Direction& a);

/// vol(central section) / vol(face) for S(delta).
double central_vs_face_ratio(int n, double delta);

/// (n+1)(n-1)! / (2 ((n-1)!!)^2), the ratio as delta -> -1/(n+1).
double ratio_limit(int n);

struct CounterexampleDelta {
  double delta = 0.0;
  double ratio = 0.0;
  double central_oracle = 0.0;  ///< central section, vertex oracle
  double face_oracle = 0.0;     ///< largest face, vertex oracle
  double face_spread = 0.0;     ///< (max - min) / max over all n+1 faces
};

/// Bisection for a delta with ratio > 1 + tol, confirmed against every face
/// with the vertex oracle. Throws NotFound when no such delta exists in
/// [-1/(n+1) + 1e-6, 0].
CounterexampleDelta find_counterexample_delta(int n, double tol = 1e-6);

/// Polynomial extrapolation of the ratio along delta = -1/(n+1) + h to h = 0.
double extrapolated_ratio_limit(int n);

}  // namespace simplex_sections
