#include "simplex_sections/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "simplex_sections/errors.hpp"
#include "simplex_sections/sampling.hpp"

namespace simplex_sections {

namespace {

constexpr double kSignSnap = 1e-12;
constexpr double kDedup = 1e-10;

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::vector<int> complement(int dim, std::initializer_list<int> keep) {
  std::vector<int> out;
  for (int j = 0; j < dim; ++j)
    if (std::find(keep.begin(), keep.end(), j) == keep.end()) out.push_back(j);
  return out;
}

// Orthonormal basis of the directions spanned by pts[idx] - pts[idx[0]].
std::vector<Vec> affine_directions(const std::vector<Vec>& pts, const std::vector<int>& idx) {
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(difference(pts[idx[i]], pts[idx[0]]));
  if (diffs.empty()) return {};
  double scale = 0.0;
  for (const auto& d : diffs) scale = std::max(scale, norm(d));
  if (scale < kDedup) return {};
  return orthonormal_span(diffs, 1e-9);
}

void add_vertex(SectionPolytope& p, Vec x, std::vector<int> zeros) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (distance(p.vertices[i], x) <= kDedup) {
      auto& z = p.zero_sets[i];
      std::vector<int> merged;
      std::set_union(z.begin(), z.end(), zeros.begin(), zeros.end(), std::back_inserter(merged));
      z = std::move(merged);
      return;
    }
  }
  p.vertices.push_back(std::move(x));
  p.zero_sets.push_back(std::move(zeros));
}

void finish(SectionPolytope& p) {
  if (p.vertices.empty()) throw SectionError(ErrorCode::EmptySection, "subspace misses the simplex");
  std::vector<int> all(p.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  p.dim = static_cast<int>(affine_directions(p.vertices, all).size());
}

class PyramidVolume {
 public:
  explicit PyramidVolume(const SectionPolytope& p) : p_(p) {}

  double operator()(const std::vector<int>& face, int d) {
    if (d == 0) return 1.0;
    if (d == 1) {
      double len = 0.0;
      for (int i : face)
        for (int j : face) len = std::max(len, distance(p_.vertices[i], p_.vertices[j]));
      return len;
    }
    std::string key(p_.vertices.size(), '0');
    for (int i : face) key[i] = '1';
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t dim = p_.vertices.front().size();
    Vec centroid(dim, 0.0);
    for (int i : face)
      for (std::size_t c = 0; c < dim; ++c) centroid[c] += p_.vertices[i][c] / face.size();

    std::vector<int> labels;
    for (int i : face) labels.insert(labels.end(), p_.zero_sets[i].begin(), p_.zero_sets[i].end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::map<std::string, bool> seen;
    double vol = 0.0;
    bool any = false;
    for (int label : labels) {
      std::vector<int> facet;
      for (int i : face)
        if (std::binary_search(p_.zero_sets[i].begin(), p_.zero_sets[i].end(), label)) facet.push_back(i);
      if (facet.size() == face.size() || facet.size() < static_cast<std::size_t>(d)) continue;
      std::string fkey(p_.vertices.size(), '0');
      for (int i : facet) fkey[i] = '1';
      if (!seen.emplace(fkey, true).second) continue;
      const auto dirs = affine_directions(p_.vertices, facet);
      if (static_cast<int>(dirs.size()) != d - 1) continue;
      Vec rel = difference(centroid, p_.vertices[facet.front()]);
      for (const auto& u : dirs) {
        const double c = dot(rel, u);
        for (std::size_t k = 0; k < dim; ++k) rel[k] -= c * u[k];
      }
      vol += norm(rel) * (*this)(facet, d - 1) / d;
      any = true;
    }
    if (!any) throw SectionError(ErrorCode::DegeneratePolytope, "face without facets");
    memo_.emplace(std::move(key), vol);
    return vol;
  }

 private:
  const SectionPolytope& p_;
  std::map<std::string, double> memo_;
};

}  // namespace

SimplexSpec SimplexSpec::regular(int n) {
  if (n < 1) throw SectionError(ErrorCode::OutOfRange, "n must be at least 1");
  return SimplexSpec(n, Mat::identity(static_cast<std::size_t>(n + 1)), true);
}

SimplexSpec SimplexSpec::general(Mat vertices) {
  if (!vertices.square() || vertices.rows() < 2)
    throw SectionError(ErrorCode::DegenerateInput, "vertex matrix must be square");
  for (std::size_t j = 0; j < vertices.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < vertices.rows(); ++i) s += vertices(i, j);
    if (std::abs(s - 1.0) > 1e-12)
      throw SectionError(ErrorCode::DegenerateInput, "vertex " + std::to_string(j) + " is off {sum x = 1}");
  }
  if (std::abs(det(vertices)) <= 1e-10 * std::pow(vertices.max_column_norm(), vertices.rows()))
    throw SectionError(ErrorCode::Singular, "vertex matrix is singular");
  const int n = static_cast<int>(vertices.rows()) - 1;
  return SimplexSpec(n, std::move(vertices), false);
}

double SimplexSpec::volume() const {
  const double reg = std::sqrt(n_ + 1.0) / factorial(n_);
  return regular_ ? reg : std::abs(det(v_)) * reg;
}

SectionPolytope hyperplane_section_vertices(const SimplexSpec& s, const Direction& b) {
  const int dim = s.n() + 1;
  if (static_cast<int>(b.size()) != dim) throw SectionError(ErrorCode::DegenerateInput, "dimension mismatch");
  std::vector<Vec> v(dim);
  Vec side(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = s.vertex(i);
    side[i] = dot(b.entries(), v[i]);
    if (std::abs(side[i]) <= kSignSnap) side[i] = 0.0;
  }
  SectionPolytope p;
  for (int i = 0; i < dim; ++i)
    if (side[i] == 0.0) add_vertex(p, v[i], complement(dim, {i}));
  for (int i = 0; i < dim; ++i) {
    if (side[i] <= 0.0) continue;
    for (int j = 0; j < dim; ++j) {
      if (side[j] >= 0.0) continue;
      const double lam = -side[j] / (side[i] - side[j]);
      Vec x(dim);
      for (int c = 0; c < dim; ++c) x[c] = lam * v[i][c] + (1.0 - lam) * v[j][c];
      auto zeros = complement(dim, {i, j});
      add_vertex(p, std::move(x), std::move(zeros));
    }
  }
  if (p.vertices.empty()) throw SectionError(ErrorCode::EmptySection, "hyperplane misses the simplex");
  if (p.vertices.size() == 1) throw SectionError(ErrorCode::PointSection, "hyperplane touches a single vertex");
  finish(p);
  return p;
}

SectionPolytope kdim_section_vertices(const SimplexSpec& s, const SubspaceBasis& h) {
  const int dim = s.n() + 1;
  const int codim = h.codim();
  if (h.n() != s.n()) throw SectionError(ErrorCode::DegenerateInput, "dimension mismatch");
  if (s.n() > 12 || codim > 4) throw SectionError(ErrorCode::NotSupported, "support enumeration limited to n <= 12, codim <= 4");
  if (codim > s.n() - 1) throw SectionError(ErrorCode::OutOfRange, "codim must be at most n-1");

  // Constraint rows in barycentric coordinates: <a^l, V lambda> = 0 and sum lambda = 1.
  const Mat vt = s.vertices().transpose();
  std::vector<Vec> rows;
  rows.push_back(Vec(dim, 1.0));
  for (const auto& a : h.normals()) rows.push_back(vt * a);
  const int m = codim + 1;

  SectionPolytope p;
  std::vector<int> support(m);
  std::iota(support.begin(), support.end(), 0);
  while (true) {
    Mat sys(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) sys(r, c) = rows[r][support[c]];
    Vec rhs(m, 0.0);
    rhs[0] = 1.0;
    bool feasible = false;
    Vec lam;
    try {
      lam = solve_small(sys, rhs);
      feasible = std::all_of(lam.begin(), lam.end(), [](double x) { return x >= -kSignSnap; });
    } catch (const SectionError& e) {
      if (e.code() != ErrorCode::Singular) throw;
    }
    if (feasible) {
      Vec bary(dim, 0.0);
      for (int c = 0; c < m; ++c) bary[support[c]] = std::max(0.0, lam[c]);
      std::vector<int> zeros;
      for (int j = 0; j < dim; ++j)
        if (bary[j] <= kSignSnap) zeros.push_back(j);
      add_vertex(p, s.vertices() * bary, std::move(zeros));
    }
    int i = m - 1;
    while (i >= 0 && support[i] == dim - m + i) --i;
    if (i < 0) break;
    ++support[i];
    for (int j = i + 1; j < m; ++j) support[j] = support[j - 1] + 1;
  }
  finish(p);
  return p;
}

VolumeResult polytope_volume(const SectionPolytope& p) {
  if (p.vertices.empty()) throw SectionError(ErrorCode::EmptySection, "empty polytope");
  std::vector<int> all(p.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  PyramidVolume vol(p);
  VolumeResult r;
  r.method = Method::Oracle;
  r.value = vol(all, p.dim);
  r.err = 1e-13 * std::max(1.0, r.value);
  return r;
}

double frustum_volume(int N, double x) {
  if (N < 2) throw SectionError(ErrorCode::OutOfRange, "N must be at least 2");
  if (!(x >= 0.0 && x <= 1.0)) throw SectionError(ErrorCode::OutOfRange, "x must lie in [0, 1]");
  const double nd = N;
  const double p = nd * x / (nd * x + 1.0);
  const double q = nd * (1.0 - x) / (nd * (1.0 - x) + 1.0);
  const double u = 1.0 / (nd * x + 1.0);
  const double w = 1.0 / (nd * (1.0 - x) + 1.0);
  const double cross = x * u - (1.0 - x) * w;
  const double height = std::sqrt(u * u + w * w + nd * cross * cross);
  double series = 0.0;
  for (int m = 0; m < N; ++m) series += std::pow(p, N - 1 - m) * std::pow(q, m);
  return std::sqrt(nd) / factorial(N) * height * series;
}

VolumeResult mc_slab_volume(const SimplexSpec& s, const Direction& b, double eps, std::int64_t samples,
                            std::uint64_t seed, Execution exec) {
  if (!(eps > 0.0 && eps <= 0.1)) throw SectionError(ErrorCode::OutOfRange, "eps must lie in (0, 0.1]");
  if (samples < 1) throw SectionError(ErrorCode::OutOfRange, "samples must be positive");
  const std::size_t dim = static_cast<std::size_t>(s.n() + 1);
  const Vec side = s.vertices().transpose() * b.entries();

  constexpr std::int64_t kChunk = 16384;
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::int64_t> hits(static_cast<std::size_t>(chunks), 0);
  for_each_index(exec, chunks, [&](std::int64_t c) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(c));
    const std::int64_t count = std::min(kChunk, samples - c * kChunk);
    std::int64_t h = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const Vec lam = uniform_simplex_point(rng, dim);
      if (std::abs(dot(side, lam)) <= eps) ++h;
    }
    hits[static_cast<std::size_t>(c)] = h;
  });
  const std::int64_t total = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
  if (total == 0) throw SectionError(ErrorCode::ZeroHits, "no sample fell in the slab");

  const double k = b.ksum();
  const double bpar = std::sqrt(std::max(0.0, 1.0 - k * k / static_cast<double>(dim)));
  const double scale = s.volume() * bpar / (2.0 * eps);
  const double ph = static_cast<double>(total) / static_cast<double>(samples);
  VolumeResult r;
  r.method = Method::MonteCarlo;
  r.value = scale * ph;
  r.err = scale * std::sqrt(ph * (1.0 - ph) / static_cast<double>(samples));
  return r;
}

}  // namespace simplex_sections
