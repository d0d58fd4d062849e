#pragma once

#include <cstdint>
#include <random>

#include "simplex_sections/direction.hpp"
#include "simplex_sections/subspace.hpp"

namespace simplex_sections {

using Rng = std::mt19937_64;

/// Independent stream for trial `stream` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

Vec gaussian_vector(Rng& rng, std::size_t dim);

/// Uniform point of the standard simplex in R^dim (barycentric weights),
/// from the spacings of dim-1 sorted uniforms.
Vec uniform_simplex_point(Rng& rng, std::size_t dim);

/// Uniform on the unit sphere of R^{n+1}.
Direction random_direction(Rng& rng, int n);

/// Uniform on {||a|| = 1, sum a = K}: a = (K/(n+1)) 1 + sqrt(1 - K^2/(n+1)) u
/// with u a uniform unit vector orthogonal to 1. Requires K^2 < n+1.
Direction random_constrained_direction(Rng& rng, int n, double ksum);

/// Central direction (sum 0) with exactly `positives` positive coordinates
/// in the leading slots and the rest negative.
Direction random_signed_central_direction(Rng& rng, int n, int positives);

/// Random k-dimensional subspace containing the centroid: the centroid plus
/// k-1 Gaussian vectors, orthonormalized.
SubspaceBasis random_centroid_subspace(Rng& rng, int n, int k);

}  // namespace simplex_sections
