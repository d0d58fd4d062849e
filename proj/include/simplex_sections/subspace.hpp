#pragma once

#include <span>

#include "simplex_sections/direction.hpp"
#include "simplex_sections/linalg.hpp"

namespace simplex_sections {

/// Linear subspace H of R^{n+1}, stored through an orthonormal basis of its
/// orthogonal complement. k = dim H = n + 1 - codim.
class SubspaceBasis {
 public:
  /// `normals` span the complement; they are orthonormalized here and must
  /// be independent.
  static SubspaceBasis from_normals(std::span<const Vec> normals);
  /// `spanning` spans H itself (dependent vectors are dropped).
  static SubspaceBasis from_spanning(std::span<const Vec> spanning, std::size_t ambient);
  static SubspaceBasis hyperplane(const Direction& a);

  int n() const noexcept { return n_; }
  int codim() const noexcept { return static_cast<int>(normals_.size()); }
  int k() const noexcept { return n_ + 1 - codim(); }

  const std::vector<Vec>& normals() const noexcept { return normals_; }
  /// Orthonormal basis of H (computed on demand).
  std::vector<Vec> basis() const;

  /// sum_l (sum_j a^l_j)^2, the quantity in the distance and volume
  /// prefactors.
  double normal_sum_squares() const;

  /// ||x - P x|| where P projects onto H.
  double distance_to(std::span<const double> x) const;

 private:
  SubspaceBasis(int n, std::vector<Vec> normals) : n_(n), normals_(std::move(normals)) {}

  int n_ = 0;
  std::vector<Vec> normals_;
};

}  // namespace simplex_sections
