#include "simplex_sections/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "simplex_sections/errors.hpp"

namespace simplex_sections {

namespace {

// Positive coordinates closer than this (relative to max |a_j|) are merged
// into one pole.
constexpr double kTieTol = 1e-6;
// Coordinates below this (relative) are snapped to zero.
constexpr double kZeroTol = 1e-14;

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

struct ResidueSum {
  long double value = 0.0L;
  long double magnitude = 0.0L;  // sum of |partial products|, for the rounding bound
  double merge_err = 0.0;        // relative, from collapsing near-ties
  bool has_positive = false;
};

// sum over positive nodes v of Res_{z=v} z^{n-1} / prod_k (z - a_k).
// For a simple pole this is a_j^{n-1} / prod_{k != j}(a_j - a_k), the
// summand of the section functional. A cluster of m equal nodes is expanded
// as a Taylor series in w = z - v and the coefficient of w^{m-1} is taken.
ResidueSum residue_sum(const Vec& raw) {
  const int n = static_cast<int>(raw.size()) - 1;
  const int power = n - 1;
  double amax = 0.0;
  for (double x : raw) amax = std::max(amax, std::abs(x));

  std::vector<long double> a(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    a[i] = std::abs(raw[i]) < kZeroTol * amax ? 0.0L : static_cast<long double>(raw[i]);

  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0.0L) pos.push_back(i);
  std::sort(pos.begin(), pos.end(), [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });

  ResidueSum out;
  out.has_positive = !pos.empty();
  std::vector<bool> in_cluster(a.size(), false);
  std::size_t start = 0;
  while (start < pos.size()) {
    std::size_t stop = start + 1;
    while (stop < pos.size() && a[pos[stop - 1]] - a[pos[stop]] < kTieTol * amax) ++stop;
    const std::size_t m = stop - start;

    long double v = 0.0L;
    for (std::size_t c = start; c < stop; ++c) v += a[pos[c]];
    v /= static_cast<long double>(m);
    const long double spread = a[pos[start]] - a[pos[stop - 1]];
    for (std::size_t c = start; c < stop; ++c) in_cluster[pos[c]] = true;

    // Taylor coefficients of (v + w)^power, truncated at degree m-1.
    std::vector<long double> coef(m, 0.0L), mag(m, 0.0L);
    {
      long double binom = 1.0L;
      for (std::size_t i = 0; i < m && static_cast<int>(i) <= power; ++i) {
        coef[i] = binom * std::pow(v, static_cast<long double>(power - static_cast<int>(i)));
        mag[i] = coef[i];
        binom = binom * static_cast<long double>(power - static_cast<int>(i)) /
                static_cast<long double>(i + 1);
      }
    }
    long double nearest = v;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (in_cluster[k]) continue;
      const long double d = v - a[k];
      nearest = std::min(nearest, std::abs(d));
      // multiply by 1/(d + w) = sum_i (-1)^i w^i / d^{i+1}
      std::vector<long double> series(m), aseries(m);
      long double term = 1.0L / d;
      for (std::size_t i = 0; i < m; ++i) {
        series[i] = term;
        aseries[i] = std::abs(term);
        term = -term / d;
      }
      std::vector<long double> next(m, 0.0L), nmag(m, 0.0L);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; i + j < m; ++j) {
          next[i + j] += coef[i] * series[j];
          nmag[i + j] += mag[i] * aseries[j];
        }
      coef.swap(next);
      mag.swap(nmag);
    }
    for (std::size_t c = start; c < stop; ++c) in_cluster[pos[c]] = false;

    out.value += coef[m - 1];
    out.magnitude += mag[m - 1];
    if (m > 1 && spread > 0.0L) {
      const double rel = static_cast<double>(spread / std::min(v, nearest));
      out.merge_err += static_cast<double>(std::abs(coef[m - 1])) * rel * rel * double(m * m);
    }
    start = stop;
  }
  return out;
}

struct FunctionalValue {
  double value;
  double err;
};

// Evaluates the functional on whichever of a, -a gives the better-conditioned
// sum; both are exact (the full divided difference of z^{n-1} vanishes).
FunctionalValue functional(const Direction& a) {
  Vec snapped = a.vec();
  double amax = 0.0;
  for (double x : snapped) amax = std::max(amax, std::abs(x));
  int np = 0, nn = 0;
  for (double& x : snapped) {
    if (std::abs(x) < kZeroTol * amax) x = 0.0;
    np += x > 0.0;
    nn += x < 0.0;
  }
  if (np == 0 && nn == 0) throw SectionError(ErrorCode::DegenerateInput, "zero direction");
  const bool has_zero = static_cast<int>(a.size()) > np + nn;
  if ((np == 0 || nn == 0) && !has_zero)
    throw SectionError(ErrorCode::EmptySection, "all coordinates share a sign; H_a misses S");

  auto eval = [](const Vec& v) {
    const ResidueSum r = residue_sum(v);
    const long double eps = std::numeric_limits<long double>::epsilon();
    const double round = static_cast<double>(4.0L * eps * (v.size() + 2) * r.magnitude);
    return FunctionalValue{static_cast<double>(r.value), round + r.merge_err};
  };

  if (nn == 0) return eval(snapped);
  const Vec neg = scaled(snapped, -1.0);
  if (np == 0) return eval(neg);
  const FunctionalValue plus = eval(snapped);
  const FunctionalValue minus = eval(neg);
  return plus.err <= minus.err ? plus : minus;
}

}  // namespace

Direction special_min_direction(int n) {
  if (n < 2) throw SectionError(ErrorCode::OutOfRange, "n >= 2 required");
  const double nd = n;
  Vec a(static_cast<std::size_t>(n + 1), -1.0 / std::sqrt(nd * (nd + 1.0)));
  a[0] = std::sqrt(nd / (nd + 1.0));
  return Direction(std::move(a));
}

Direction special_max_direction(int n) {
  if (n < 2) throw SectionError(ErrorCode::OutOfRange, "n >= 2 required");
  Vec a(static_cast<std::size_t>(n + 1), 0.0);
  a.front() = 1.0 / std::numbers::sqrt2;
  a.back() = -1.0 / std::numbers::sqrt2;
  return Direction(std::move(a));
}

double special_min_volume(int n) {
  if (n < 2) throw SectionError(ErrorCode::OutOfRange, "n >= 2 required");
  const double nd = n;
  return std::sqrt(nd + 1.0) / factorial(n - 1) * std::pow(nd / (nd + 1.0), nd - 0.5);
}

double special_max_volume(int n) {
  if (n < 2) throw SectionError(ErrorCode::OutOfRange, "n >= 2 required");
  return std::sqrt(n + 1.0) / (factorial(n - 1) * std::numbers::sqrt2);
}

double hyperplane_prefactor(int n, double ksum) {
  const double rad = n + 1.0 - ksum * ksum;
  if (!(rad > 0.0)) throw SectionError(ErrorCode::DegenerateInput, "n+1-K^2 <= 0");
  return std::sqrt(rad) / factorial(n - 1);
}

double f_value(const Direction& a) { return functional(a).value; }

VolumeResult residue_volume(const Direction& a) {
  if (a.n() < 2) throw SectionError(ErrorCode::OutOfRange, "n >= 2 required");
  const double pre = hyperplane_prefactor(a.n(), a.ksum());
  const FunctionalValue f = functional(a);
  VolumeResult r;
  r.method = Method::Residue;
  r.value = std::max(0.0, pre * f.value);
  r.err = pre * f.err;
  r.unvalidated = std::abs(a.ksum()) > 1.0;
  return r;
}

Direction central_to_embedded(const CentralForm& cf) {
  const double n1 = static_cast<double>(cf.a0.size());
  const double scale = std::sqrt(1.0 + n1 * cf.t * cf.t);
  Vec b(cf.a0.size());
  for (std::size_t j = 0; j < b.size(); ++j) b[j] = (cf.a0[j] - cf.t) / scale;
  return Direction(std::move(b));
}

CentralForm embedded_to_central(const Direction& b) {
  const double n1 = static_cast<double>(b.size());
  const double s = b.ksum();
  const double rad = n1 - s * s;
  if (!(rad > 1e-12)) throw SectionError(ErrorCode::DegenerateInput, "(sum b)^2 >= n+1");
  const double t = -s / std::sqrt(n1 * rad);
  const double fac = std::sqrt(n1 / rad);
  Vec a(b.size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = fac * b[j] + t;
  // sum(a) = 0 up to rounding; remove the residue so the central invariant holds.
  const double drift = sum(a) / n1;
  for (auto& x : a) x -= drift;
  return CentralForm{Direction(std::move(a)), t};
}

double centroid_distance(const Direction& b) {
  const double n1 = static_cast<double>(b.size());
  const double s = b.ksum();
  const double rad = n1 - s * s;
  if (!(rad > 1e-12)) throw SectionError(ErrorCode::DegenerateInput, "(sum b)^2 >= n+1");
  return std::abs(s) / std::sqrt(n1 * rad);
}

double subspace_origin_distance(const SubspaceBasis& h) {
  const double rad = h.n() + 1.0 - h.normal_sum_squares();
  if (!(rad > 1e-12))
    throw SectionError(ErrorCode::DegenerateInput, "subspace is parallel to the simplex hull");
  return 1.0 / std::sqrt(rad);
}

NoncentralBound max_noncentral_bound(int n, double ksum) {
  if (n < 2) throw SectionError(ErrorCode::OutOfRange, "n >= 2 required");
  if (!(ksum >= 0.0 && ksum <= 1.0)) throw SectionError(ErrorCode::OutOfRange, "K must lie in [0,1]");
  const double bound = hyperplane_prefactor(n, ksum) / std::sqrt(2.0 - ksum * ksum);
  const double root = std::sqrt(0.5 - ksum * ksum / 4.0);
  Vec a(static_cast<std::size_t>(n + 1), 0.0);
  a[0] = ksum / 2.0 + root;
  a[1] = ksum / 2.0 - root;
  return {bound, Direction(std::move(a))};
}

KdimBounds bl_bounds(int n, int k) {
  if (n < 2 || k < 2 || k > n) throw SectionError(ErrorCode::OutOfRange, "need 2 <= k <= n");
  const double n1 = n + 1.0;
  const double kd = k;
  const double lead = std::sqrt(n1) / factorial(k - 1);
  KdimBounds b{};
  b.general = lead * std::pow(std::sqrt(kd), kd / n1) / std::sqrt(n1);
  b.conditional = lead / std::sqrt(n + 2.0 - kd);
  return b;
}

double kdim_distance_threshold(int n, int k) {
  if (n < 2 || k < 2 || k > n) throw SectionError(ErrorCode::OutOfRange, "need 2 <= k <= n");
  return (n + 1.0 - k) / (n + 2.0 - k);
}

}  // namespace simplex_sections
