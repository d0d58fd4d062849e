#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "simplex_sections/direction.hpp"
#include "simplex_sections/linalg.hpp"
#include "simplex_sections/parallel.hpp"
#include "simplex_sections/subspace.hpp"

namespace simplex_sections {

/// Simplex conv{v^1, ..., v^{n+1}} in R^{n+1} whose vertices lie on
/// {sum x = 1}. The regular simplex has the standard basis as vertices.
class SimplexSpec {
 public:
  static SimplexSpec regular(int n);
  /// Columns are the vertices. Throws Singular for a singular matrix and
  /// DegenerateInput when a column sum differs from 1 by more than 1e-12.
  static SimplexSpec general(Mat vertices);

  int n() const noexcept { return n_; }
  bool is_regular() const noexcept { return regular_; }
  const Mat& vertices() const noexcept { return v_; }
  Vec vertex(std::size_t i) const { return v_.column(i); }

  /// n-volume inside the affine plane {sum x = 1}.
  double volume() const;

 private:
  SimplexSpec(int n, Mat v, bool regular) : n_(n), v_(std::move(v)), regular_(regular) {}

  int n_ = 0;
  Mat v_;
  bool regular_ = true;
};

/// Section polytope with ambient vertex coordinates. zero_sets[i] lists the
/// barycentric indices j with lambda_j = 0 at vertex i; they identify the
/// facets of the section with the facets of the simplex.
struct SectionPolytope {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> zero_sets;
};

/// H_b cap S from edge intersections. Throws EmptySection when b has a
/// strict sign on every vertex and PointSection for a single vertex.
SectionPolytope hyperplane_section_vertices(const SimplexSpec& s, const Direction& b);

/// H cap S from basic feasible solutions on supports of size codim+1.
/// Limited to n <= 12 and codim <= 4 (NotSupported beyond).
SectionPolytope kdim_section_vertices(const SimplexSpec& s, const SubspaceBasis& h);

/// Intrinsic volume by recursive pyramids over the facets, apex at the
/// vertex centroid.
VolumeResult polytope_volume(const SectionPolytope& p);

/// V(x) = vol(H_{a(x)} cap S) for a(x) = (x, 1-x, -1/N, ..., -1/N), n = N+1.
double frustum_volume(int N, double x);

/// Slab estimate p * vol_n(S) * ||b_par|| / (2 eps), with b_par the part of b
/// inside {sum x = 0}. `err` is the binomial standard error.
VolumeResult mc_slab_volume(const SimplexSpec& s, const Direction& b, double eps, std::int64_t samples,
                            std::uint64_t seed, Execution exec = Execution::Parallel);

}  // namespace simplex_sections
