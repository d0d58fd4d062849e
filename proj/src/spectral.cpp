#include "simplex_sections/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/quadrature.hpp"
#include "simplex_sections/sampling.hpp"

namespace simplex_sections {

namespace {

using cplx = std::complex<double>;

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

cplx characteristic(std::span<const double> coeffs, double s) {
  cplx p(1.0, 0.0);
  for (double c : coeffs) p /= cplx(1.0, c * s);
  return p;
}

// Integration window in y = log(s) for int_0^inf s^{power} |prod 1/(1+i c s)| ds
// with tails below `tail`: the lower end uses |g| <= 1, the upper end
// |g| <= s^{-m} / prod |c_j|.
struct LogWindow {
  double lo, hi;
  std::vector<double> breaks;
};

LogWindow log_window(std::span<const double> coeffs, int power, double tail) {
  LogWindow w;
  const double m = static_cast<double>(coeffs.size());
  double log_prod = 0.0;
  for (double c : coeffs) {
    log_prod += std::log(std::abs(c));
    w.breaks.push_back(-std::log(std::abs(c)));
  }
  std::sort(w.breaks.begin(), w.breaks.end());
  const double p1 = power + 1.0;
  // int_{-inf}^{lo} e^{p1 y} dy = e^{p1 lo} / p1 <= tail
  w.lo = std::log(tail * p1) / p1;
  // int_S^inf s^{power-m} ds / prod|c| = S^{p1-m} / ((m-p1) prod|c|) <= tail
  const double decay = m - p1;
  w.hi = (std::log(tail * decay) + log_prod) / (-decay);
  w.lo = std::min(w.lo, w.breaks.front() - 8.0);
  w.hi = std::max(w.hi, w.breaks.back() + 8.0);
  return w;
}

std::vector<double> nonzero_coefficients(std::span<const double> a) {
  double amax = 0.0;
  for (double x : a) amax = std::max(amax, std::abs(x));
  std::vector<double> c;
  for (double x : a)
    if (std::abs(x) > 1e-14 * amax) c.push_back(x);
  return c;
}

// int_0^inf s^power Re g(s) ds, two passes so the tail budget is relative
// to the size of the integral.
QuadratureResult radial_integral(std::span<const double> coeffs, int power, double tol) {
  double cmax = 0.0;
  for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
  const double scale = std::pow(1.0 / cmax, power + 1);
  auto integrand = [&](double y) {
    const double s = std::exp(y);
    return std::pow(s, power + 1) * characteristic(coeffs, s).real();
  };
  QuadratureOptions rough;
  rough.rel_tol = 1e-6;
  rough.abs_tol = 1e-9 * scale;
  rough.max_depth = 60;
  LogWindow w = log_window(coeffs, power, 1e-8 * scale);
  QuadratureResult first = integrate_adaptive(integrand, w.lo, w.hi, rough, w.breaks);

  const double tail = 1e-3 * tol * std::max(std::abs(first.value), 1e-6 * scale);
  w = log_window(coeffs, power, tail);
  QuadratureOptions fine;
  fine.rel_tol = 0.1 * tol;
  fine.abs_tol = tail;
  fine.max_depth = 60;
  QuadratureResult out = integrate_adaptive(integrand, w.lo, w.hi, fine, w.breaks);
  out.err += 2.0 * tail;
  out.evaluations += first.evaluations;
  return out;
}

void require_sign_change(std::span<const double> a) {
  bool pos = false, neg = false;
  for (double x : a) {
    pos = pos || x > 0.0;
    neg = neg || x < 0.0;
  }
  if (!pos || !neg) throw SectionError(ErrorCode::EmptySection, "hyperplane needs a sign change");
}

}  // namespace

double fourier_prefactor(const SubspaceBasis& h) {
  const double rad = h.n() + 1.0 - h.normal_sum_squares();
  if (!(rad > 0.0)) throw SectionError(ErrorCode::DegenerateInput, "subspace is parallel to the simplex hull");
  return std::sqrt(rad) / factorial(h.k() - 1);
}

double pyramid_prefactor(const SubspaceBasis& h) {
  const int k = h.k();
  return k / (factorial(k) * subspace_origin_distance(h));
}

VolumeResult hyperplane_volume_quadrature(const Direction& a, double tol) {
  if (a.n() < 3) throw SectionError(ErrorCode::NotSupported, "Fourier quadrature needs n >= 3");
  require_sign_change(a.entries());
  const auto coeffs = nonzero_coefficients(a.entries());
  const QuadratureResult q = radial_integral(coeffs, 0, tol);
  const double pre = hyperplane_prefactor(a.n(), a.ksum());
  VolumeResult r;
  r.method = Method::Quadrature;
  r.value = std::max(0.0, pre * q.value / std::numbers::pi);
  r.err = pre * q.err / std::numbers::pi;
  r.unvalidated = std::abs(a.ksum()) > 1.0;
  return r;
}

double fourier_imaginary_residual(const Direction& a) {
  const auto coeffs = nonzero_coefficients(a.entries());
  const LogWindow w = log_window(coeffs, 0, 1e-14);
  // Fixed mirrored grid: Kronrod panels of unit width in log(s), each node
  // s paired with -s.
  double total = 0.0;
  for (double lo = w.lo; lo < w.hi; lo += 1.0) {
    const double c = lo + 0.5;
    for (int i = 0; i < KronrodRule::size; ++i) {
      const double s = std::exp(c + 0.5 * KronrodRule::nodes[i]);
      const double odd = characteristic(coeffs, s).imag() + characteristic(coeffs, -s).imag();
      total += 0.5 * KronrodRule::weights[i] * s * odd;
    }
  }
  return std::abs(total);
}

VolumeResult kdim_volume_quadrature(const SubspaceBasis& h, double tol) {
  if (h.codim() == 1) return hyperplane_volume_quadrature(Direction(h.normals().front()), tol);
  if (h.codim() != 2) throw SectionError(ErrorCode::NotSupported, "quadrature is limited to codim <= 2");

  const auto& a1 = h.normals()[0];
  const auto& a2 = h.normals()[1];
  struct Row {
    double x, y;
  };
  std::vector<Row> rows;
  double rmax = 0.0;
  for (std::size_t j = 0; j < a1.size(); ++j) rmax = std::max(rmax, std::hypot(a1[j], a2[j]));
  for (std::size_t j = 0; j < a1.size(); ++j)
    if (std::hypot(a1[j], a2[j]) > 1e-14 * rmax) rows.push_back({a1[j], a2[j]});

  // Along the ray orthogonal to row j the decay order drops by the number of
  // rows parallel to j; at least two must remain for integrability.
  std::vector<double> angles;
  for (const auto& r : rows) {
    int parallel = 0;
    for (const auto& o : rows)
      if (std::abs(r.x * o.y - r.y * o.x) <= 1e-12 * std::hypot(r.x, r.y) * std::hypot(o.x, o.y))
        ++parallel;
    if (static_cast<int>(rows.size()) - parallel < 2)
      throw SectionError(ErrorCode::NotSupported, "Fourier integrand is not integrable for this subspace");
    double t = std::atan2(r.x, -r.y);
    if (t < 0.0) t += std::numbers::pi;
    if (t >= std::numbers::pi) t -= std::numbers::pi;
    angles.push_back(t);
  }

  long evaluations = 0;
  auto inner = [&](double theta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    std::vector<double> c;
    c.reserve(rows.size());
    double cmax = 0.0;
    for (const auto& r : rows) cmax = std::max(cmax, std::abs(r.x * ct + r.y * st));
    for (const auto& r : rows) {
      const double v = r.x * ct + r.y * st;
      if (std::abs(v) > 1e-15 * cmax) c.push_back(v);
    }
    const QuadratureResult q = radial_integral(c, 1, 0.1 * tol);
    evaluations += q.evaluations;
    return 2.0 * q.value;
  };

  QuadratureOptions outer;
  outer.rel_tol = tol;
  outer.abs_tol = 0.0;
  outer.max_depth = 60;
  outer.max_intervals = 20000;
  const QuadratureResult q = integrate_adaptive(inner, 0.0, std::numbers::pi, outer, angles);

  const double pre = fourier_prefactor(h) / (4.0 * std::numbers::pi * std::numbers::pi);
  VolumeResult r;
  r.method = Method::Quadrature;
  r.value = std::max(0.0, pre * q.value);
  r.err = pre * q.err;
  return r;
}

VolumeResult mc_exponential_check(const SubspaceBasis& h, std::int64_t samples, std::uint64_t seed,
                                  Execution exec) {
  if (samples < 1000) throw SectionError(ErrorCode::OutOfRange, "need at least 1e3 samples");
  const std::vector<Vec> q = h.basis();
  const std::size_t k = q.size();
  const std::size_t dim = static_cast<std::size_t>(h.n() + 1);

  // p = Q^T 1, so sum(Q u) = <p, u>.
  Vec p(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) p[i] = sum(q[i]);
  const double pn = norm(p);
  if (pn < 1e-12) throw SectionError(ErrorCode::ZeroHits, "H is orthogonal to the all-ones vector");
  const double sigma = 1.0 / pn;
  const double kd = static_cast<double>(k);
  const double log_norm = std::lgamma(0.5 * (kd + 1.0)) - 0.5 * (kd + 1.0) * std::log(std::numbers::pi) -
                          kd * std::log(sigma);

  constexpr std::int64_t kChunk = 8192;
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  struct Partial {
    double sum = 0.0, sum_sq = 0.0;
    std::int64_t hits = 0;
  };
  std::vector<Partial> parts(static_cast<std::size_t>(chunks));

  for_each_index(exec, chunks, [&](std::int64_t c) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(c));
    std::normal_distribution<double> g(0.0, 1.0);
    const std::int64_t count = std::min(kChunk, samples - c * kChunk);
    Partial acc;
    Vec u(k), x(dim);
    for (std::int64_t s = 0; s < count; ++s) {
      const double w = std::abs(g(rng));
      double r2 = 0.0;
      for (auto& ui : u) {
        ui = sigma * g(rng) / w;
        r2 += ui * ui;
      }
      std::fill(x.begin(), x.end(), 0.0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j) x[j] += q[i][j] * u[i];
      if (std::any_of(x.begin(), x.end(), [](double v) { return v < 0.0; })) continue;
      const double log_density = log_norm - 0.5 * (kd + 1.0) * std::log1p(r2 / (sigma * sigma));
      const double weight = std::exp(-dot(p, u) - log_density);
      acc.sum += weight;
      acc.sum_sq += weight * weight;
      ++acc.hits;
    }
    parts[static_cast<std::size_t>(c)] = acc;
  });

  Partial total;
  for (const auto& part : parts) {
    total.sum += part.sum;
    total.sum_sq += part.sum_sq;
    total.hits += part.hits;
  }
  if (total.hits == 0) throw SectionError(ErrorCode::ZeroHits, "no sample landed in the cone");
  const double nd = static_cast<double>(samples);
  const double mean = total.sum / nd;
  const double var = std::max(0.0, total.sum_sq / nd - mean * mean);
  const double pre = pyramid_prefactor(h);
  VolumeResult r;
  r.method = Method::MonteCarlo;
  r.value = pre * mean;
  r.err = pre * std::sqrt(var / nd);
  return r;
}

}  // namespace simplex_sections
