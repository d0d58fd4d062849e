#pragma once

// Test-side reference computations. None of them call into the residue,
// quadrature or vertex-enumeration code of the library.

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

inline double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

inline std::vector<double> unit(std::vector<double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  s = std::sqrt(s);
  for (double& x : a) x /= s;
  return a;
}

/// Plain divided-difference sum for pairwise distinct coordinates, in long
/// double, with no tie handling.
inline double naive_section(std::vector<double> a) {
  a = unit(std::move(a));
  const int n = static_cast<int>(a.size()) - 1;
  long double f = 0.0L, k = 0.0L;
  for (double x : a) k += x;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] <= 0.0) continue;
    long double t = std::pow(static_cast<long double>(a[j]), n - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != j) t /= static_cast<long double>(a[j]) - a[i];
    f += t;
  }
  return static_cast<double>(std::sqrt(n + 1.0L - k * k) * f) / factorial(n - 1);
}

/// vol_n{x in S : <a, x> <= t} for the regular simplex, from the
/// half-space formula sum_j (t - a_j)_+^n / prod_{k != j} (a_k - a_j)
/// (distinct coordinates).
inline long double halfspace_volume(const std::vector<double>& a, long double t) {
  const int n = static_cast<int>(a.size()) - 1;
  long double s = 0.0L;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const long double d = t - a[j];
    if (d <= 0.0L) continue;
    long double term = std::pow(d, n);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != j) term /= static_cast<long double>(a[i]) - a[j];
    s += term;
  }
  return s * std::sqrt(static_cast<long double>(n + 1)) / factorial(n);
}

/// Section volume as the t-derivative of the half-space volume (central
/// difference), scaled by the in-plane length of a.
inline double derivative_section(std::vector<double> a, double h = 1e-4) {
  a = unit(std::move(a));
  long double k = 0.0L;
  for (double x : a) k += x;
  const long double dv = (halfspace_volume(a, h) - halfspace_volume(a, -h)) / (2.0L * h);
  const long double par = std::sqrt(1.0L - k * k / static_cast<long double>(a.size()));
  return static_cast<double>(dv * par);
}

}  // namespace oracle
