#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles/oracles.hpp"
#include "oracles/reference.hpp"
#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/sampling.hpp"

using namespace simplex_sections;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

}  // namespace

TEST_SUITE("closed_form") {
  TEST_CASE("special volumes against mpmath") {
    CHECK(rel(special_min_volume(2), ref::special_min_2) < 1e-15);
    CHECK(rel(special_min_volume(3), ref::special_min_3) < 1e-15);
    CHECK(rel(special_min_volume(4), ref::special_min_4) < 1e-15);
    CHECK(rel(special_min_volume(10), ref::special_min_10) < 1e-14);
    CHECK(rel(special_max_volume(2), ref::special_max_2) < 1e-15);
    CHECK(rel(special_max_volume(3), ref::special_max_3) < 1e-15);
    CHECK(rel(special_max_volume(4), ref::special_max_4) < 1e-15);
    CHECK(rel(special_max_volume(10), ref::special_max_10) < 1e-14);
  }

  TEST_CASE("residue reproduces the special values despite the n-fold tie") {
    for (int n = 2; n <= 10; ++n) {
      CAPTURE(n);
      CHECK(rel(residue_volume(special_min_direction(n)).value, special_min_volume(n)) < 1e-12);
      CHECK(rel(residue_volume(special_max_direction(n)).value, special_max_volume(n)) < 1e-12);
    }
  }

  TEST_CASE("residue against mpmath quadrature") {
    CHECK(rel(residue_volume(Direction(Vec{0.7, 0.3, -0.5, -0.3, -0.2})).value, ref::n4_mixed) < 1e-13);
    CHECK(rel(residue_volume(Direction(Vec{0.9, -0.35, 0.2, -0.6, 0.05, 0.45, -0.15})).value, ref::n6_mixed) < 1e-12);
    CHECK(rel(residue_volume(Direction(Vec{0.8, 0.1, -0.3, 0.4, -0.2, 0.25})).value, ref::n5_noncentral) < 1e-12);
    CHECK(residue_volume(Direction(Vec{0.5, 0.5, -0.5, -0.5})).value == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("residue against the naive sum and the half-space derivative") {
    Rng rng = make_rng(7, 0);
    for (int t = 0; t < 200; ++t) {
      const int n = 3 + t % 6;
      const double k = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Direction a = random_constrained_direction(rng, n, k);
      CAPTURE(a.vec());
      const double r = residue_volume(a).value;
      CHECK(rel(r, oracle::naive_section(a.vec())) < 1e-9);
      CHECK(rel(r, oracle::derivative_section(a.vec())) < 1e-6);
    }
  }

  TEST_CASE("F is even and permutation invariant") {
    Rng rng = make_rng(8, 0);
    for (int t = 0; t < 50; ++t) {
      const Direction a = random_direction(rng, 6);
      if (a.positive_count() == 0 || a.negative_count() == 0) continue;
      CHECK(rel(f_value(a.negated()), f_value(a)) < 1e-12);
      Vec p = a.vec();
      std::rotate(p.begin(), p.begin() + 2, p.end());
      CHECK(rel(f_value(Direction(p)), f_value(a)) < 1e-12);
    }
  }

  TEST_CASE("near ties are continuous") {
    // triple tie among positives, approached from outside the merge window
    const Vec base{0.4, 0.4, 0.4, -0.3, -0.5, -0.4};
    const double tied = f_value(Direction(base));
    for (double h : {1e-3, 1e-4, 1e-5, 1e-7}) {
      Vec v = base;
      v[0] += h;
      v[2] -= h;
      CAPTURE(h);
      CHECK(rel(f_value(Direction(v)), tied) < 10 * h);
    }
  }

  TEST_CASE("facet and empty sections") {
    CHECK(f_value(Direction(Vec{1, 0, 0, 0})) == doctest::Approx(1.0));
    CHECK(residue_volume(Direction(Vec{1, 0, 0, 0})).value == doctest::Approx(std::sqrt(3.0) / 2));
    try {
      residue_volume(Direction(Vec{1, 2, 3}));
      FAIL("expected EmptySection");
    } catch (const SectionError& e) {
      CHECK(e.code() == ErrorCode::EmptySection);
    }
  }

  TEST_CASE("large K is flagged") {
    const Direction a(Vec{2, 2, 2, -0.1});
    CHECK(std::abs(a.ksum()) > 1.0);
    CHECK(residue_volume(a).unvalidated);
    CHECK_FALSE(residue_volume(Direction(Vec{1, -1, 0})).unvalidated);
  }

  TEST_CASE("representation round trips") {
    Rng rng = make_rng(9, 0);
    for (int t = 0; t < 500; ++t) {
      const int n = 2 + t % 7;
      Vec a0 = gaussian_vector(rng, static_cast<std::size_t>(n + 1));
      const double mean = sum(a0) / (n + 1);
      for (double& x : a0) x -= mean;
      const double off = std::uniform_real_distribution<double>(-0.5, 0.5)(rng);
      const CentralForm cf = CentralForm::make(a0, off);
      const Direction b = central_to_embedded(cf);
      const CentralForm back = embedded_to_central(b);
      CHECK(std::abs(back.t - cf.t) < 1e-10);
      for (std::size_t j = 0; j < a0.size(); ++j) CHECK(std::abs(back.a0[j] - cf.a0[j]) < 1e-10);
      CHECK(std::abs(centroid_distance(b) - std::abs(off)) < 1e-12);
    }
  }

  TEST_CASE("non-central bound") {
    for (int n = 3; n <= 8; ++n) {
      const auto b0 = max_noncentral_bound(n, 0.0);
      CHECK(rel(b0.bound, special_max_volume(n)) < 1e-14);
      for (double k : {0.25, 0.5, 1.0}) {
        const auto b = max_noncentral_bound(n, k);
        CHECK(b.maximizer.ksum() == doctest::Approx(k).epsilon(1e-14));
        CHECK(rel(residue_volume(b.maximizer).value, b.bound) < 1e-12);
      }
    }
    // at K = 1 the maximizer is a vertex direction and the section a facet
    CHECK(rel(max_noncentral_bound(5, 1.0).bound, std::sqrt(5.0) / 24.0) < 1e-14);
  }

  TEST_CASE("k-dimensional bounds") {
    const auto b = bl_bounds(5, 3);
    CHECK(b.conditional == doctest::Approx(std::sqrt(6.0) / 4.0));
    CHECK(b.general == doctest::Approx(std::pow(std::sqrt(3.0), 0.5) / 2.0));
    CHECK(kdim_distance_threshold(5, 3) == doctest::Approx(3.0 / 4.0));
    // k = n: the conditional bound is the maximal hyperplane section
    CHECK(rel(bl_bounds(6, 6).conditional, special_max_volume(6)) < 1e-14);
  }
}
