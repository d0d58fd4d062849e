#include "simplex_sections/irregular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"

namespace simplex_sections {

namespace {

constexpr double kClamp = 1e-6;

void require_even(int n) {
  if (n < 1 || (n + 1) % 2 != 0) throw SectionError(ErrorCode::OutOfRange, "n+1 must be even");
}

double double_factorial(int m) {
  double f = 1.0;
  for (int i = m; i > 1; i -= 2) f *= i;
  return f;
}

}  // namespace

DeformedSimplex DeformedSimplex::make(int n, double delta) {
  require_even(n);
  if (!(delta > -1.0 / (n + 1) && delta <= 0.0))
    throw SectionError(ErrorCode::OutOfRange, "delta must lie in (-1/(n+1), 0]");
  const int dim = n + 1, half = dim / 2;
  Mat v = Mat::identity(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) v(i, j) += ((i < half) == (j < half) ? delta : -delta);
  return DeformedSimplex(n, delta, SimplexSpec::general(std::move(v)));
}

Direction DeformedSimplex::face_normal(int l) const {
  Vec e(static_cast<std::size_t>(n_ + 1), 0.0);
  e[static_cast<std::size_t>(l)] = 1.0;
  return Direction(solve_small(matrix().transpose(), e));
}

Direction DeformedSimplex::central_direction() const {
  const int dim = n_ + 1;
  Vec w(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) w[j] = j < dim / 2 ? 1.0 : -1.0;
  return Direction(std::move(w));
}

VolumeResult general_section_volume(const SimplexSpec& s, const Direction& a) {
  if (s.is_regular()) return residue_volume(a);
  Vec ta = s.vertices().transpose() * a.entries();
  const double tn = norm(ta);
  // Normals obtained by solving against a nearly singular V carry noise of
  // order cond(V) * eps in coordinates that should vanish; left in place
  // they make the residue sum cancel catastrophically.
  const double cond = std::pow(s.vertices().max_column_norm(), s.n() + 1) / std::abs(det(s.vertices()));
  const double snap = std::max(1e-14, 64.0 * cond * std::numeric_limits<double>::epsilon()) * tn;
  for (double& x : ta)
    if (std::abs(x) < snap) x = 0.0;
  const Direction at(ta);
  const int dim = s.n() + 1;
  const double k = a.ksum(), kt = at.ksum();
  const double num = dim - k * k, den = dim - kt * kt;
  if (!(num > 0.0) || !(den > 0.0))
    throw SectionError(ErrorCode::DegenerateInput, "hyperplane is parallel to the simplex hull");
  const VolumeResult base = residue_volume(at);
  const double factor = std::abs(det(s.vertices())) / tn * std::sqrt(num / den);
  VolumeResult r = base;
  r.value = factor * base.value;
  r.err = factor * base.err;
  return r;
}

double central_vs_face_ratio(int n, double delta) {
  const DeformedSimplex s = DeformedSimplex::make(n, delta);
  const double central = general_section_volume(s.spec(), s.central_direction()).value;
  const double face = general_section_volume(s.spec(), s.face_normal(0)).value;
  return central / face;
}

double ratio_limit(int n) {
  require_even(n);
  double fact = 1.0;
  for (int i = 2; i <= n - 1; ++i) fact *= i;
  const double df = double_factorial(n - 1);
  return (n + 1) * fact / (2.0 * df * df);
}

CounterexampleDelta find_counterexample_delta(int n, double tol) {
  require_even(n);
  double lo = -1.0 / (n + 1) + kClamp, hi = 0.0;
  auto excess = [&](double d) { return central_vs_face_ratio(n, d) - 1.0 - tol; };
  if (excess(lo) <= 0.0) throw SectionError(ErrorCode::NotFound, "ratio stays below 1 + tol");
  if (excess(hi) > 0.0) lo = hi;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }

  CounterexampleDelta out;
  out.delta = lo;
  out.ratio = central_vs_face_ratio(n, lo);
  const DeformedSimplex s = DeformedSimplex::make(n, lo);
  out.central_oracle = polytope_volume(hyperplane_section_vertices(s.spec(), s.central_direction())).value;
  double fmin = INFINITY, fmax = 0.0;
  for (int l = 0; l <= n; ++l) {
    const double f = polytope_volume(hyperplane_section_vertices(s.spec(), s.face_normal(l))).value;
    fmin = std::min(fmin, f);
    fmax = std::max(fmax, f);
  }
  out.face_oracle = fmax;
  out.face_spread = (fmax - fmin) / fmax;
  if (!(out.central_oracle > fmax)) throw SectionError(ErrorCode::NotFound, "oracle does not confirm the ratio");
  return out;
}

double extrapolated_ratio_limit(int n) {
  require_even(n);
  // Neville's scheme in h with h halving from 1e-2.
  constexpr int kLevels = 8;
  std::vector<double> h(kLevels), t(kLevels);
  for (int i = 0; i < kLevels; ++i) {
    h[i] = 1e-2 * std::pow(0.5, i);
    t[i] = central_vs_face_ratio(n, -1.0 / (n + 1) + h[i]);
  }
  for (int m = 1; m < kLevels; ++m)
    for (int i = kLevels - 1; i >= m; --i) t[i] = (h[i - m] * t[i] - h[i] * t[i - 1]) / (h[i - m] - h[i]);
  return t[kLevels - 1];
}

}  // namespace simplex_sections
