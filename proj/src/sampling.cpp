#include "simplex_sections/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "simplex_sections/errors.hpp"
#include "simplex_sections/parallel.hpp"

namespace simplex_sections {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return Rng(stream_seed(seed, stream)); }

Vec gaussian_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (auto& x : v) x = g(rng);
  return v;
}

Vec uniform_simplex_point(Rng& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec cuts(dim - 1);
  for (auto& c : cuts) c = u(rng);
  std::sort(cuts.begin(), cuts.end());
  Vec w(dim);
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    w[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  w[dim - 1] = 1.0 - prev;
  return w;
}

Direction random_direction(Rng& rng, int n) {
  for (;;) {
    Vec g = gaussian_vector(rng, static_cast<std::size_t>(n + 1));
    if (norm(g) > 1e-8) return Direction(std::move(g));
  }
}

Direction random_constrained_direction(Rng& rng, int n, double ksum) {
  const double n1 = n + 1.0;
  if (!(ksum * ksum < n1)) throw SectionError(ErrorCode::OutOfRange, "need K^2 < n+1");
  for (;;) {
    Vec g = gaussian_vector(rng, static_cast<std::size_t>(n + 1));
    const double mean = sum(g) / n1;
    for (auto& x : g) x -= mean;
    const double ng = norm(g);
    if (ng < 1e-8) continue;
    const double scale = std::sqrt(1.0 - ksum * ksum / n1) / ng;
    for (auto& x : g) x = ksum / n1 + scale * x;
    return Direction(std::move(g));
  }
}

Direction random_signed_central_direction(Rng& rng, int n, int positives) {
  if (positives < 1 || positives > n)
    throw SectionError(ErrorCode::OutOfRange, "need 1 <= positives <= n");
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> spread(0.0, 1.5);
  Vec a(static_cast<std::size_t>(n + 1));
  // Log-normal-ish magnitudes with a random spread so both balanced and
  // very unbalanced patterns are visited.
  const double s = spread(rng);
  std::normal_distribution<double> g(0.0, 1.0);
  double pos = 0.0;
  double neg = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double m = e(rng) * std::exp(s * g(rng)) + 1e-9;
    if (j < positives) {
      a[static_cast<std::size_t>(j)] = m;
      pos += m;
    } else {
      a[static_cast<std::size_t>(j)] = -m;
      neg += m;
    }
  }
  for (int j = positives; j <= n; ++j) a[static_cast<std::size_t>(j)] *= pos / neg;
  // Remove the rounding residue of the sum from the largest coordinate.
  const double drift = sum(a);
  a[static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin())] -= drift;
  return Direction(std::move(a));
}

SubspaceBasis random_centroid_subspace(Rng& rng, int n, int k) {
  if (k < 1 || k > n) throw SectionError(ErrorCode::OutOfRange, "need 1 <= k <= n");
  const auto dim = static_cast<std::size_t>(n + 1);
  std::vector<Vec> span;
  span.push_back(Vec(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
  while (span.size() < static_cast<std::size_t>(k)) span.push_back(gaussian_vector(rng, dim));
  return SubspaceBasis::from_spanning(span, dim);
}

}  // namespace simplex_sections
