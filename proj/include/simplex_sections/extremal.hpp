#pragma once

#include <cstdint>
#include <span>

#include "simplex_sections/direction.hpp"
#include "simplex_sections/parallel.hpp"
#include "simplex_sections/subspace.hpp"

namespace simplex_sections {

struct SignPattern {
  int P = 0;  ///< positive coordinates
  int N = 0;  ///< negative coordinates
  int n = 0;

  static SignPattern of(const Direction& a);
};

struct RescaleSolution {
  double gamma = 1.0;
  double beta = 1.0;
  Direction transformed;
};

enum class Block { Negative, Positive };

/// Collapses one sign block of `a` into a single coordinate and rescales the
/// other block so that the norm and the coordinate sum are preserved.
/// Negative: (g a_+, b sum(a_-), 0, ...). Positive: (g sum(a_+), 0, ..., b a_-).
/// Requires 0 <= K <= 1 and both signs present; throws NoSolution when the
/// root leaves [0, 1].
RescaleSolution concentrate_transform(const Direction& a, Block block = Block::Negative);

/// Replaces every negative coordinate by their mean and rescales: the
/// positives by g, the negatives by b, with 1 <= g <= b.
RescaleSolution balance_transform(const Direction& a);

struct FrustumMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Minimum of frustum_volume(N, .) on [0, 1/2] (the function is symmetric
/// about 1/2): grid scan plus golden-section refinement to 1e-10 in x.
/// Requires 2 <= N <= 8 and grid >= 1000.
FrustumMinimum minimize_frustum(int N, int grid = 2000);

/// Outcome of a randomized falsification run.
struct SearchReport {
  int n = 0;
  std::int64_t trials = 0;
  double bound = 0.0;
  double extreme = 0.0;  ///< smallest (lower-bound runs) or largest value seen
  Vec witness;           ///< direction attaining `extreme`
  double margin = 0.0;   ///< distance of `extreme` from the bound, >= 0 on success
};

/// Central directions over every sign pattern P = 1..n, each checked against
/// special_min_volume(n) - 1e-10. n in {2, 3, 4}; throws Counterexample.
SearchReport verify_global_min_small(int n, std::int64_t trials, std::uint64_t seed,
                                     Execution exec = Execution::Parallel);

/// The same search for any 2 <= n <= 10. It never throws on a value below
/// the face-parallel section: it only reports.
SearchReport explore_global_min(int n, std::int64_t trials, std::uint64_t seed,
                                Execution exec = Execution::Parallel);

/// Central directions with one positive coordinate against
/// special_min_volume(n) - 1e-10; throws Counterexample.
SearchReport verify_single_positive_min(int n, std::int64_t trials, std::uint64_t seed,
                                        Execution exec = Execution::Parallel);

/// Random directions with sum(a) = K against max_noncentral_bound(n, K)
/// + 1e-10; throws Counterexample.
SearchReport verify_noncentral_bound(int n, double ksum, std::int64_t trials, std::uint64_t seed,
                                     Execution exec = Execution::Parallel);

/// Smallest central section over sign pattern P = 2, i.e. the minimum of
/// the frustum curve for N = n - 1.
double two_positive_minimum(int n);

struct KdimReport {
  int n = 0;
  int k = 0;
  std::int64_t trials = 0;
  double general_bound = 0.0;
  double conditional_bound = 0.0;
  double max_general_ratio = 0.0;       ///< max vol / general_bound
  std::int64_t qualified = 0;           ///< subspaces passing the distance test
  double max_conditional_ratio = 0.0;   ///< over qualified subspaces
  double witness_volume = 0.0;
  bool witness_saturates = false;       ///< |witness - conditional| <= 1e-9 relative
};

/// Random k-subspaces through the centroid measured by the oracle. Requires
/// 2 <= k <= n <= 8 and codim <= 4; throws Counterexample.
KdimReport verify_kdim_bound(int n, int k, std::int64_t trials, std::uint64_t seed,
                             Execution exec = Execution::Parallel);

/// max_j ||e_j - P e_j||^2 for the projection P onto H.
double max_vertex_distance_sq(const SubspaceBasis& h);

/// span{e_1, ..., e_{k-1}, sum_{j >= k} e_j}.
SubspaceBasis kdim_witness(int n, int k);

struct Sandwich {
  double lower;    ///< 1 + sum x
  double product;  ///< prod (1 + x_j)
  double upper;    ///< (1 + sum x / N)^N
};

Sandwich bernoulli_sandwich(std::span<const double> x);

}  // namespace simplex_sections
