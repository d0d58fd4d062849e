#pragma once

#include <span>
#include <string_view>

#include "simplex_sections/linalg.hpp"

namespace simplex_sections {

/// Unit normal vector a in R^{n+1} of a hyperplane H_a = {x : <a,x> = 0}.
///
/// The constructor normalizes its input and keeps the coordinate order, so
/// conversions round-trip exactly. Section volume is invariant under
/// coordinate permutations and a -> -a; `canonical()` picks the
/// representative with ksum >= 0 and coordinates sorted descending.
class Direction {
 public:
  explicit Direction(Vec entries);

  /// Rejects instead of normalizing when |norm - 1| > tol.
  static Direction exact(Vec entries, double tol = 1e-9);

  std::span<const double> entries() const noexcept { return a_; }
  const Vec& vec() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }
  int n() const noexcept { return static_cast<int>(a_.size()) - 1; }
  double operator[](std::size_t i) const { return a_[i]; }

  double norm() const noexcept { return norm_; }
  double input_norm() const noexcept { return input_norm_; }
  /// K = sum of coordinates.
  double ksum() const noexcept { return ksum_; }

  int positive_count() const noexcept;
  int negative_count() const noexcept;

  Direction canonical() const;
  Direction negated() const;

 private:
  Vec a_;
  double input_norm_ = 0.0;
  double norm_ = 0.0;
  double ksum_ = 0.0;
};

/// Central representation H_a^t = {x : <a,x> = t} with sum(a) = 0.
struct CentralForm {
  Direction a0;
  double t = 0.0;

  /// Validates |sum(a0)| < 1e-12.
  static CentralForm make(Vec a0, double t);
};

enum class Method { Residue, Quadrature, Oracle, MonteCarlo, ClosedForm };

std::string_view to_string(Method m);

struct VolumeResult {
  double value = 0.0;
  Method method = Method::ClosedForm;
  double err = 0.0;
  /// Set when the input lies outside the range the volume formulas were
  /// stated for (|K| > 1 for non-central hyperplanes).
  bool unvalidated = false;
};

}  // namespace simplex_sections
