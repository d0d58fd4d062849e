#pragma once

#include <cstdint>

#include "simplex_sections/direction.hpp"
#include "simplex_sections/parallel.hpp"
#include "simplex_sections/subspace.hpp"

namespace simplex_sections {

/// Hyperplane section volume from the Fourier integral
///   F = (1/pi) int_0^inf Re prod_j 1/(1 + i a_j s) ds,
/// evaluated in log(s) with rigorous tail bounds at both ends.
/// Requires n >= 3 and a sign change in `a`.
VolumeResult hyperplane_volume_quadrature(const Direction& a, double tol = 1e-10);

/// |int_{-L}^{L} Im prod_j 1/(1 + i a_j s) ds| on the mirrored grid used by
/// the quadrature above (the imaginary part is odd, so this should vanish).
double fourier_imaginary_residual(const Direction& a);

/// (k-1)-volume of H cap S for codim 1 or 2. Codim 2 is integrated in polar
/// coordinates, splitting the angular range where a row of the normal basis
/// becomes orthogonal to the ray. Codim >= 3 throws NotSupported.
VolumeResult kdim_volume_quadrature(const SubspaceBasis& h, double tol = 1e-8);

/// sqrt(n+1 - sum_l (sum_j a^l_j)^2) / (k-1)!
double fourier_prefactor(const SubspaceBasis& h);

/// k / (k! dist(H cap {sum x = 1}, 0)): the same constant reached through
/// the origin distance and the pyramid volume formula.
double pyramid_prefactor(const SubspaceBasis& h);

/// Monte Carlo estimate of int_{H cap R^{n+1}_{>=0}} exp(-sum x) dx with a
/// multivariate Cauchy proposal in H-coordinates, converted to the
/// (k-1)-volume of H cap S. `err` is the standard error.
VolumeResult mc_exponential_check(const SubspaceBasis& h, std::int64_t samples, std::uint64_t seed,
                                  Execution exec = Execution::Parallel);

}  // namespace simplex_sections
