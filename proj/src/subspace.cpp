#include "simplex_sections/subspace.hpp"

#include <cmath>

#include "simplex_sections/errors.hpp"

namespace simplex_sections {

SubspaceBasis SubspaceBasis::from_normals(std::span<const Vec> normals) {
  if (normals.empty()) throw SectionError(ErrorCode::DegenerateInput, "need at least one normal");
  const std::size_t dim = normals.front().size();
  for (const auto& v : normals)
    if (v.size() != dim) throw SectionError(ErrorCode::DegenerateInput, "normals of unequal length");
  if (normals.size() >= dim)
    throw SectionError(ErrorCode::DegenerateInput, "codimension must be below the ambient dimension");
  return SubspaceBasis(static_cast<int>(dim) - 1, gram_schmidt(normals));
}

SubspaceBasis SubspaceBasis::from_spanning(std::span<const Vec> spanning, std::size_t ambient) {
  for (const auto& v : spanning)
    if (v.size() != ambient) throw SectionError(ErrorCode::DegenerateInput, "vector of wrong length");
  const auto h = orthonormal_span(spanning);
  if (h.empty() || h.size() >= ambient)
    throw SectionError(ErrorCode::DegenerateInput, "spanning set must give a proper nonzero subspace");
  return SubspaceBasis(static_cast<int>(ambient) - 1, orthogonal_complement(h, ambient));
}

SubspaceBasis SubspaceBasis::hyperplane(const Direction& a) {
  return SubspaceBasis(a.n(), {a.vec()});
}

std::vector<Vec> SubspaceBasis::basis() const {
  return orthogonal_complement(normals_, static_cast<std::size_t>(n_ + 1));
}

double SubspaceBasis::normal_sum_squares() const {
  double s = 0.0;
  for (const auto& a : normals_) {
    const double k = sum(a);
    s += k * k;
  }
  return s;
}

double SubspaceBasis::distance_to(std::span<const double> x) const {
  // x - P x is the component along the complement.
  double s = 0.0;
  for (const auto& a : normals_) {
    const double c = dot(a, x);
    s += c * c;
  }
  return std::sqrt(s);
}

}  // namespace simplex_sections
