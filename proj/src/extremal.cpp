#include "simplex_sections/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/polytope.hpp"
#include "simplex_sections/sampling.hpp"

namespace simplex_sections {

namespace {

struct Blocks {
  std::vector<std::size_t> pos, neg;
  double sp = 0.0, sn = 0.0, qp = 0.0, qn = 0.0;
};

Blocks split(const Direction& a) {
  Blocks b;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > 0.0) {
      b.pos.push_back(j);
      b.sp += a[j];
      b.qp += a[j] * a[j];
    } else if (a[j] < 0.0) {
      b.neg.push_back(j);
      b.sn += a[j];
      b.qn += a[j] * a[j];
    }
  }
  if (b.pos.empty() || b.neg.empty()) throw SectionError(ErrorCode::DegenerateInput, "both signs are required");
  return b;
}

// Roots of c2 t^2 + c1 t + c0 = 0, larger first.
std::pair<double, double> quadratic_roots(double c2, double c1, double c0) {
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) throw SectionError(ErrorCode::NoSolution, "rescale system has no real root");
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  double r1 = q / c2, r2 = q != 0.0 ? c0 / q : 0.0;
  if (r1 < r2) std::swap(r1, r2);
  return {r1, r2};
}

bool inside(double x, double lo, double hi) { return x >= lo - 1e-12 && x <= hi + 1e-12; }

double clamp_to(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

Direction assemble(Vec v) {
  // Inputs are unit vectors; renormalizing only removes rounding.
  return Direction(std::move(v));
}

void require_unit_k(const Direction& a) {
  if (a.ksum() < -1e-12 || a.ksum() > 1.0 + 1e-12)
    throw SectionError(ErrorCode::OutOfRange, "coordinate sum must lie in [0, 1]");
}

// Per-trial value slots reduced in index order.
template <class Trial>
std::vector<std::pair<double, Vec>> run_trials(std::int64_t trials, Execution exec, Trial&& trial) {
  std::vector<std::pair<double, Vec>> out(static_cast<std::size_t>(trials));
  for_each_index(exec, trials, [&](std::int64_t i) { out[static_cast<std::size_t>(i)] = trial(i); });
  return out;
}

SearchReport lower_search(int n, std::int64_t trials, std::uint64_t seed, Execution exec, bool strict,
                          auto&& positives_for) {
  const double bound = special_min_volume(n);
  auto results = run_trials(trials, exec, [&](std::int64_t i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const Direction a = random_signed_central_direction(rng, n, positives_for(i));
    const double v = residue_volume(a).value;
    if (strict && v < bound - 1e-10)
      throw Counterexample("central section below the face-parallel section", a.vec(), v, bound);
    return std::pair<double, Vec>(v, a.vec());
  });
  SearchReport r;
  r.n = n;
  r.trials = trials;
  r.bound = bound;
  r.extreme = std::numeric_limits<double>::infinity();
  for (auto& [v, w] : results)
    if (v < r.extreme) {
      r.extreme = v;
      r.witness = w;
    }
  r.margin = r.extreme - bound;
  return r;
}

}  // namespace

SignPattern SignPattern::of(const Direction& a) {
  return SignPattern{a.positive_count(), a.negative_count(), a.n()};
}

RescaleSolution concentrate_transform(const Direction& a, Block block) {
  require_unit_k(a);
  const Blocks b = split(a);
  const double k = a.ksum();
  Vec out(a.size(), 0.0);
  RescaleSolution s{1.0, 1.0, a};
  if (block == Block::Negative) {
    const auto [g, g2] = quadratic_roots(b.qp + b.sp * b.sp, -2.0 * k * b.sp, k * k - 1.0);
    (void)g2;
    const double beta = (k - g * b.sp) / b.sn;
    if (!inside(g, 0.0, 1.0) || !inside(beta, 0.0, 1.0))
      throw SectionError(ErrorCode::NoSolution, "concentrating root outside [0, 1]");
    s.gamma = clamp_to(g, 0.0, 1.0);
    s.beta = clamp_to(beta, 0.0, 1.0);
    for (auto j : b.pos) out[j] = s.gamma * a[j];
    out[b.neg.front()] = s.beta * b.sn;
  } else {
    const auto [beta, b2] = quadratic_roots(b.sn * b.sn + b.qn, -2.0 * k * b.sn, k * k - 1.0);
    (void)b2;
    const double g = (k - beta * b.sn) / b.sp;
    if (!inside(g, 0.0, 1.0) || !inside(beta, 0.0, 1.0))
      throw SectionError(ErrorCode::NoSolution, "concentrating root outside [0, 1]");
    s.gamma = clamp_to(g, 0.0, 1.0);
    s.beta = clamp_to(beta, 0.0, 1.0);
    out[b.pos.front()] = s.gamma * b.sp;
    for (auto j : b.neg) out[j] = s.beta * a[j];
  }
  s.transformed = assemble(std::move(out));
  return s;
}

RescaleSolution balance_transform(const Direction& a) {
  if (a.ksum() < -1e-12) throw SectionError(ErrorCode::OutOfRange, "coordinate sum must be nonnegative");
  const Blocks b = split(a);
  const double k = a.ksum();
  const double nn = static_cast<double>(b.neg.size());
  const double hi = 1.0 / std::sqrt(b.qp);
  const auto [r1, r2] = quadratic_roots(nn * b.qp + b.sp * b.sp, -2.0 * k * b.sp, k * k - nn);
  double g;
  if (inside(r1, 1.0, hi))
    g = r1;
  else if (inside(r2, 1.0, hi))
    g = r2;
  else
    throw SectionError(ErrorCode::NoSolution, "balancing root outside [1, 1/||a_+||]");
  g = clamp_to(g, 1.0, hi);
  const double beta = (k - g * b.sp) / b.sn;
  if (beta < g - 1e-12) throw SectionError(ErrorCode::NoSolution, "balancing gave beta < gamma");
  Vec out(a.size(), 0.0);
  for (auto j : b.pos) out[j] = g * a[j];
  const double mean = b.sn / nn;
  for (auto j : b.neg) out[j] = beta * mean;
  return RescaleSolution{g, beta, assemble(std::move(out))};
}

FrustumMinimum minimize_frustum(int N, int grid) {
  if (N < 2 || N > 8) throw SectionError(ErrorCode::OutOfRange, "N must lie in 2..8");
  if (grid < 1000) throw SectionError(ErrorCode::OutOfRange, "grid must be at least 1000");
  int best = 0;
  double best_v = frustum_volume(N, 0.0);
  for (int i = 1; i <= grid; ++i) {
    const double v = frustum_volume(N, 0.5 * i / grid);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best == 0 || best == grid) return {0.5 * best / grid, best_v};

  double lo = 0.5 * (best - 1) / grid, hi = 0.5 * (best + 1) / grid;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  double f1 = frustum_volume(N, x1), f2 = frustum_volume(N, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = frustum_volume(N, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = frustum_volume(N, x2);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, frustum_volume(N, x)};
}

SearchReport verify_global_min_small(int n, std::int64_t trials, std::uint64_t seed, Execution exec) {
  if (n < 2 || n > 4) throw SectionError(ErrorCode::OutOfRange, "global minimality is established for n = 2, 3, 4");
  return lower_search(n, trials, seed, exec, true, [n](std::int64_t i) { return 1 + static_cast<int>(i % n); });
}

SearchReport explore_global_min(int n, std::int64_t trials, std::uint64_t seed, Execution exec) {
  if (n < 2 || n > 10) throw SectionError(ErrorCode::OutOfRange, "n must lie in 2..10");
  return lower_search(n, trials, seed, exec, false, [n](std::int64_t i) { return 1 + static_cast<int>(i % n); });
}

SearchReport verify_single_positive_min(int n, std::int64_t trials, std::uint64_t seed, Execution exec) {
  if (n < 2 || n > 10) throw SectionError(ErrorCode::OutOfRange, "n must lie in 2..10");
  return lower_search(n, trials, seed, exec, true, [](std::int64_t) { return 1; });
}

SearchReport verify_noncentral_bound(int n, double ksum, std::int64_t trials, std::uint64_t seed, Execution exec) {
  if (ksum < 0.0 || ksum > 1.0) throw SectionError(ErrorCode::OutOfRange, "K must lie in [0, 1]");
  const double bound = max_noncentral_bound(n, ksum).bound;
  auto results = run_trials(trials, exec, [&](std::int64_t i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const Direction a = random_constrained_direction(rng, n, ksum);
    const double v = residue_volume(a).value;
    if (v > bound + 1e-10) throw Counterexample("section exceeds the non-central bound", a.vec(), v, bound);
    return std::pair<double, Vec>(v, a.vec());
  });
  SearchReport r;
  r.n = n;
  r.trials = trials;
  r.bound = bound;
  r.extreme = -std::numeric_limits<double>::infinity();
  for (auto& [v, w] : results)
    if (v > r.extreme) {
      r.extreme = v;
      r.witness = w;
    }
  r.margin = bound - r.extreme;
  return r;
}

double two_positive_minimum(int n) {
  if (n < 3 || n > 9) throw SectionError(ErrorCode::OutOfRange, "n must lie in 3..9");
  return minimize_frustum(n - 1).value;
}

double max_vertex_distance_sq(const SubspaceBasis& h) {
  double worst = 0.0;
  for (int j = 0; j <= h.n(); ++j) {
    Vec e(static_cast<std::size_t>(h.n() + 1), 0.0);
    e[j] = 1.0;
    const double d = h.distance_to(e);
    worst = std::max(worst, d * d);
  }
  return worst;
}

SubspaceBasis kdim_witness(int n, int k) {
  if (k < 2 || k > n) throw SectionError(ErrorCode::OutOfRange, "k must lie in 2..n");
  const std::size_t dim = static_cast<std::size_t>(n + 1);
  std::vector<Vec> span;
  for (int j = 0; j < k - 1; ++j) {
    Vec e(dim, 0.0);
    e[j] = 1.0;
    span.push_back(std::move(e));
  }
  Vec rest(dim, 0.0);
  for (std::size_t j = static_cast<std::size_t>(k - 1); j < dim; ++j) rest[j] = 1.0;
  span.push_back(std::move(rest));
  return SubspaceBasis::from_spanning(span, dim);
}

KdimReport verify_kdim_bound(int n, int k, std::int64_t trials, std::uint64_t seed, Execution exec) {
  if (k < 2 || k > n || n > 8) throw SectionError(ErrorCode::OutOfRange, "need 2 <= k <= n <= 8");
  if (n + 1 - k > 4) throw SectionError(ErrorCode::OutOfRange, "codim must be at most 4");
  const KdimBounds bounds = bl_bounds(n, k);
  const double threshold = kdim_distance_threshold(n, k);
  const SimplexSpec s = SimplexSpec::regular(n);

  struct Slot {
    double vol = 0.0;
    bool qualified = false;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(trials));
  for_each_index(exec, trials, [&](std::int64_t i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const SubspaceBasis h = random_centroid_subspace(rng, n, k);
    const double v = polytope_volume(kdim_section_vertices(s, h)).value;
    const bool q = max_vertex_distance_sq(h) <= threshold;
    std::vector<double> flat;
    for (const auto& a : h.normals()) flat.insert(flat.end(), a.begin(), a.end());
    if (v > bounds.general + 1e-9) throw Counterexample("k-section exceeds the general bound", flat, v, bounds.general);
    if (q && v > bounds.conditional + 1e-9)
      throw Counterexample("k-section exceeds the conditional bound", flat, v, bounds.conditional);
    slots[static_cast<std::size_t>(i)] = {v, q};
  });

  KdimReport r;
  r.n = n;
  r.k = k;
  r.trials = trials;
  r.general_bound = bounds.general;
  r.conditional_bound = bounds.conditional;
  for (const auto& sl : slots) {
    r.max_general_ratio = std::max(r.max_general_ratio, sl.vol / bounds.general);
    if (sl.qualified) {
      ++r.qualified;
      r.max_conditional_ratio = std::max(r.max_conditional_ratio, sl.vol / bounds.conditional);
    }
  }
  r.witness_volume = polytope_volume(kdim_section_vertices(s, kdim_witness(n, k))).value;
  r.witness_saturates = std::abs(r.witness_volume - bounds.conditional) <= 1e-9 * bounds.conditional;
  return r;
}

Sandwich bernoulli_sandwich(std::span<const double> x) {
  double s = 0.0, p = 1.0;
  for (double v : x) {
    s += v;
    p *= 1.0 + v;
  }
  const double nd = static_cast<double>(x.size());
  return Sandwich{1.0 + s, p, std::pow(1.0 + s / nd, nd)};
}

}  // namespace simplex_sections
