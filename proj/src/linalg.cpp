#include "simplex_sections/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "simplex_sections/errors.hpp"

namespace simplex_sections {

namespace {

constexpr double kPivotTol = 1e-10;

// One classical Gram-Schmidt sweep of `v` against `basis`.
void project_out(Vec& v, std::span<const Vec> basis) {
  Vec coeffs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] = dot(basis[i], v);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coeffs[i] * basis[i][j];
}

double input_scale(std::span<const Vec> vectors) {
  double scale = 0.0;
  for (const auto& v : vectors) scale = std::max(scale, norm(v));
  return scale;
}

}  // namespace

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw SectionError(ErrorCode::DegenerateInput, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns) {
  if (columns.empty()) return {};
  Mat m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows())
      throw SectionError(ErrorCode::DegenerateInput, "columns of unequal length");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw SectionError(ErrorCode::DegenerateInput, "shape mismatch in product");
  Mat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

Vec Mat::operator*(std::span<const double> x) const {
  if (x.size() != cols_) throw SectionError(ErrorCode::DegenerateInput, "shape mismatch in product");
  Vec out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

double Mat::max_column_norm() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j) * (*this)(i, j);
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double sum(std::span<const double> a) { return std::accumulate(a.begin(), a.end(), 0.0); }

Vec scaled(std::span<const double> a, double s) {
  Vec out(a.begin(), a.end());
  for (auto& x : out) x *= s;
  return out;
}

Vec difference(std::span<const double> a, std::span<const double> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<Vec> gram_schmidt(std::span<const Vec> vectors) {
  const double scale = input_scale(vectors);
  std::vector<Vec> out;
  out.reserve(vectors.size());
  for (const auto& v0 : vectors) {
    Vec v = v0;
    project_out(v, out);
    project_out(v, out);
    const double nv = norm(v);
    if (!(nv >= kPivotTol * scale) || scale == 0.0)
      throw SectionError(ErrorCode::RankDeficient, "input vectors are linearly dependent");
    for (auto& x : v) x /= nv;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> orthonormal_span(std::span<const Vec> vectors, double rel_tol) {
  const double scale = input_scale(vectors);
  std::vector<Vec> out;
  if (scale == 0.0) return out;
  for (const auto& v0 : vectors) {
    Vec v = v0;
    project_out(v, out);
    project_out(v, out);
    const double nv = norm(v);
    if (nv < rel_tol * scale) continue;
    for (auto& x : v) x /= nv;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> orthogonal_complement(std::span<const Vec> basis, std::size_t dim) {
  std::vector<Vec> all(basis.begin(), basis.end());
  const std::size_t given = all.size();
  for (std::size_t j = 0; j < dim && all.size() < dim; ++j) {
    Vec e(dim, 0.0);
    e[j] = 1.0;
    project_out(e, all);
    project_out(e, all);
    const double ne = norm(e);
    // Each unit vector contributes at least 1/sqrt(dim) of new direction
    // for some j, so a loose threshold is safe here.
    if (ne < 1e-6) continue;
    for (auto& x : e) x /= ne;
    all.push_back(std::move(e));
  }
  return {all.begin() + static_cast<std::ptrdiff_t>(given), all.end()};
}

Vec solve_small(const Mat& a, std::span<const double> b) {
  if (!a.square() || b.size() != a.rows())
    throw SectionError(ErrorCode::DegenerateInput, "solve_small needs a square system");
  const std::size_t n = a.rows();
  const double scale = a.max_column_norm();
  Mat m = a;
  Vec x(b.begin(), b.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (!(std::abs(m(piv, col)) > kPivotTol * scale))
      throw SectionError(ErrorCode::Singular, "pivot below threshold");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      std::swap(x[col], x[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      x[r] -= f * x[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

double det(const Mat& a) {
  if (!a.square()) throw SectionError(ErrorCode::DegenerateInput, "det needs a square matrix");
  const std::size_t n = a.rows();
  Mat m = a;
  double d = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (m(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      d = -d;
    }
    d *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return d;
}

}  // namespace simplex_sections
