#pragma once

// Small dense linear algebra. Dimensions stay below ~16 everywhere in this
// project, so everything is a plain row-major std::vector.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace simplex_sections {

using Vec = std::vector<double>;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(std::size_t n);
  static Mat from_columns(std::span<const Vec> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  Mat transpose() const;

  Mat operator*(const Mat& rhs) const;
  Vec operator*(std::span<const double> x) const;

  /// Largest column 2-norm; the scale used for pivot thresholds.
  double max_column_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double sum(std::span<const double> a);
Vec scaled(std::span<const double> a, double s);
Vec difference(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

/// Classical Gram-Schmidt with a second orthogonalization pass.
/// Throws RankDeficient when a pivot falls below 1e-10 of the input scale.
std::vector<Vec> gram_schmidt(std::span<const Vec> vectors);

/// Same procedure, but dependent vectors are dropped instead of rejected.
/// `rel_tol` is relative to the largest input norm.
std::vector<Vec> orthonormal_span(std::span<const Vec> vectors, double rel_tol = 1e-10);

/// Orthonormal basis of the orthogonal complement of span(`basis`) in R^dim.
/// `basis` must already be orthonormal.
std::vector<Vec> orthogonal_complement(std::span<const Vec> basis, std::size_t dim);

/// Gaussian elimination with partial pivoting. Throws Singular.
Vec solve_small(const Mat& a, std::span<const double> b);

/// Determinant by pivoted elimination; a singular matrix gives 0.
double det(const Mat& a);

}  // namespace simplex_sections
