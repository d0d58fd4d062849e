#include "simplex_sections/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "simplex_sections/errors.hpp"

namespace simplex_sections {

namespace {

// Kronrod nodes on [0, 1] (positive half), G7 nodes are the odd indices.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, err;
  int depth;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel kronrod(const std::function<double(double)>& f, double lo, double hi, int depth) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fs = f(c - dx) + f(c + dx);
    k += kWgk[i] * fs;
    if (i % 2 == 1) g += kWg[i / 2] * fs;
  }
  k *= h;
  g *= h;
  return {lo, hi, k, std::abs(k - g), depth};
}

}  // namespace

const double KronrodRule::nodes[15] = {-kXgk[0], -kXgk[1], -kXgk[2], -kXgk[3], -kXgk[4],
                                       -kXgk[5], -kXgk[6], 0.0,      kXgk[6],  kXgk[5],
                                       kXgk[4],  kXgk[3],  kXgk[2],  kXgk[1],  kXgk[0]};
const double KronrodRule::weights[15] = {kWgk[0], kWgk[1], kWgk[2], kWgk[3], kWgk[4],
                                         kWgk[5], kWgk[6], kWgk[7], kWgk[6], kWgk[5],
                                         kWgk[4], kWgk[3], kWgk[2], kWgk[1], kWgk[0]};

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opts, std::span<const double> breaks) {
  std::vector<double> cuts{lo};
  for (double b : breaks)
    if (b > lo && b < hi) cuts.push_back(b);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> heap;
  QuadratureResult out;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = kronrod(f, cuts[i], cuts[i + 1], 0);
    out.evaluations += 15;
    total += p.value;
    total_err += p.err;
    heap.push(p);
  }

  // Panels that can no longer be split still count toward the error.
  double frozen_err = 0.0;
  while (!heap.empty()) {
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    if (total_err <= target) break;
    Panel worst = heap.top();
    heap.pop();
    if (static_cast<int>(heap.size()) >= opts.max_intervals)
      throw SectionError(ErrorCode::TolUnreachable, "interval budget exhausted");
    if (worst.depth >= opts.max_depth) {
      frozen_err += worst.err;
      if (frozen_err > target)
        throw SectionError(ErrorCode::TolUnreachable, "adaptive refinement stalled");
      ++out.intervals;
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = kronrod(f, worst.lo, mid, worst.depth + 1);
    Panel right = kronrod(f, mid, worst.hi, worst.depth + 1);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
  }
  if (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)))
    throw SectionError(ErrorCode::TolUnreachable, "adaptive refinement stalled");
  out.value = total;
  out.err = std::max(total_err, 0.0);
  out.intervals += static_cast<int>(heap.size());
  if (!std::isfinite(out.value)) throw SectionError(ErrorCode::TolUnreachable, "non-finite integral");
  return out;
}

}  // namespace simplex_sections
