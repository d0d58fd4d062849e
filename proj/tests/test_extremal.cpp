#include <doctest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "oracles/reference.hpp"
#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/extremal.hpp"
#include "simplex_sections/polytope.hpp"
#include "simplex_sections/sampling.hpp"

using namespace simplex_sections;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

void check_invariants(const Direction& a, const RescaleSolution& s) {
  CHECK(std::abs(norm(s.transformed.vec()) - 1.0) < 1e-12);
  CHECK(std::abs(s.transformed.ksum() - a.ksum()) < 1e-12);
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] * s.transformed[j] >= 0.0);
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("concentrating fixed point") {
    const Direction a(Vec{0.5, 0.4, 0.3, -0.7, 0});
    const auto s = concentrate_transform(a);
    CHECK(s.gamma == doctest::Approx(1.0));
    CHECK(s.beta == doctest::Approx(1.0));
  }

  TEST_CASE("concentrating chain ends at the bound") {
    Rng rng = make_rng(41, 0);
    for (int t = 0; t < 200; ++t) {
      const int n = 3 + t % 6;
      const double k = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Direction a = random_constrained_direction(rng, n, k);
      const auto s1 = concentrate_transform(a, Block::Negative);
      check_invariants(a, s1);
      const auto s2 = concentrate_transform(s1.transformed, Block::Positive);
      check_invariants(a, s2);
      CHECK(s2.transformed.positive_count() == 1);
      CHECK(s2.transformed.negative_count() == 1);
      CHECK(std::abs(f_value(s2.transformed) - 1.0 / std::sqrt(2.0 - k * k)) < 1e-10);
    }
  }

  TEST_CASE("single positive coordinate: both transforms are monotone") {
    Rng rng = make_rng(42, 0);
    for (int t = 0; t < 500; ++t) {
      const int n = 3 + t % 6;
      const Direction a = random_signed_central_direction(rng, n, 1);
      const double f = f_value(a);
      CHECK(f_value(concentrate_transform(a).transformed) >= f - 1e-10);
      CHECK(f_value(balance_transform(a).transformed) <= f + 1e-10);
    }
  }

  TEST_CASE("two positive coordinates: concentrating can shrink the section") {
    const Direction a(Vec{-0.54699651845863151, 0.7576727064821821, 0.30177229079355111, -0.18082229384699949,
                          0.054439518763698055});
    const auto s = concentrate_transform(a);
    check_invariants(a, s);
    const SimplexSpec simplex = SimplexSpec::regular(4);
    const double before = polytope_volume(hyperplane_section_vertices(simplex, a)).value;
    const double after = polytope_volume(hyperplane_section_vertices(simplex, s.transformed)).value;
    CHECK(rel(before, ref::n4_two_positive) < 1e-12);
    CHECK(rel(after, ref::n4_two_positive_collapsed) < 1e-12);
    CHECK(after < 0.95 * before);
  }

  TEST_CASE("balancing") {
    const Direction a(Vec{0.7, 0.3, -0.5, -0.3, -0.2});
    const auto s = balance_transform(a);
    check_invariants(a, s);
    CHECK(s.gamma >= 1.0);
    CHECK(s.beta >= s.gamma);
    CHECK(s.transformed[2] == doctest::Approx(s.transformed[3]).epsilon(1e-14));
    CHECK(s.transformed[3] == doctest::Approx(s.transformed[4]).epsilon(1e-14));
    CHECK(f_value(s.transformed) < f_value(a));

    const auto twice = balance_transform(s.transformed);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(twice.transformed[j] - s.transformed[j]) < 1e-11);

    const Direction fixed(Vec{0.6, 0.2, -0.4, -0.4});
    CHECK(balance_transform(fixed).gamma == doctest::Approx(1.0));
  }

  TEST_CASE("balancing one positive coordinate gives the face-parallel direction") {
    Rng rng = make_rng(43, 0);
    for (int n = 3; n <= 8; ++n) {
      const Direction a = random_signed_central_direction(rng, n, 1);
      const auto s = balance_transform(a);
      CHECK(rel(f_value(s.transformed), f_value(special_min_direction(n))) < 1e-12);
    }
  }

  TEST_CASE("rescaling needs both signs") {
    CHECK_THROWS_AS(concentrate_transform(Direction(Vec{1, 0, 0})), SectionError);
    CHECK_THROWS_AS(concentrate_transform(Direction(Vec{1, 1, -0.1})), SectionError);
  }

  TEST_CASE("Bernoulli and mean inequalities") {
    Rng rng = make_rng(44, 0);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int t = 0; t < 1000; ++t) {
      Vec x(static_cast<std::size_t>(1 + t % 7));
      for (double& v : x) v = u(rng);
      const Sandwich s = bernoulli_sandwich(x);
      CHECK(s.lower <= s.product * (1 + 1e-14));
      CHECK(s.product <= s.upper * (1 + 1e-14));
      if (x.size() > 1) CHECK(s.lower < s.product);
    }
    const Vec same{0.5, 0.5, 0.5};
    const Sandwich s = bernoulli_sandwich(same);
    CHECK(s.product == doctest::Approx(s.upper).epsilon(1e-15));
  }

  TEST_CASE("frustum minimum") {
    for (int N = 2; N <= 4; ++N) CHECK(minimize_frustum(N).x == doctest::Approx(0.5).epsilon(1e-10));
    const auto m5 = minimize_frustum(5);
    CHECK(m5.value <= frustum_volume(5, 0.0));
    CHECK(frustum_volume(5, 0.0) < frustum_volume(5, 0.5));
    CHECK(two_positive_minimum(3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rel(two_positive_minimum(4), ref::nine_sqrt6_over_125) < 1e-12);
    CHECK(two_positive_minimum(4) > special_min_volume(4));
    CHECK_THROWS_AS(minimize_frustum(9), SectionError);
    CHECK_THROWS_AS(minimize_frustum(4, 10), SectionError);
  }

  TEST_CASE("global minimum search") {
    const auto r2 = verify_global_min_small(2, 20000, 1);
    CHECK(r2.margin >= -1e-10);
    CHECK(r2.extreme == doctest::Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-6));
    CHECK(verify_global_min_small(3, 5000, 2).margin >= -1e-10);
    CHECK(verify_global_min_small(4, 5000, 3).margin >= -1e-10);
    CHECK_THROWS_AS(verify_global_min_small(5, 10, 1), SectionError);
    const auto e = explore_global_min(6, 2000, 4);
    CHECK(e.extreme > 0.0);
  }

  TEST_CASE("non-central bound search") {
    for (double k : {0.0, 0.5, 1.0}) CHECK(verify_noncentral_bound(5, k, 3000, 5).margin >= -1e-10);
  }

  TEST_CASE("k-dimensional bounds") {
    const auto r = verify_kdim_bound(5, 3, 200, 6);
    CHECK(r.max_general_ratio <= 1.0);
    CHECK(r.max_conditional_ratio <= 1.0);
    CHECK(r.witness_saturates);
    CHECK(r.witness_volume == doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-12));
    // k = n: the witness is the maximal hyperplane section
    const auto h = kdim_witness(5, 5);
    CHECK(rel(polytope_volume(kdim_section_vertices(SimplexSpec::regular(5), h)).value, special_max_volume(5)) < 1e-12);
    CHECK(max_vertex_distance_sq(h) <= kdim_distance_threshold(5, 5) + 1e-12);
  }

  TEST_CASE("serial and parallel runs are identical") {
    const auto a = verify_noncentral_bound(6, 0.3, 3000, 9, Execution::Serial);
    const auto b = verify_noncentral_bound(6, 0.3, 3000, 9, Execution::Parallel);
    CHECK(a.extreme == b.extreme);
    CHECK(a.witness == b.witness);
    const auto c = verify_kdim_bound(5, 4, 100, 9, Execution::Serial);
    const auto d = verify_kdim_bound(5, 4, 100, 9, Execution::Parallel);
    CHECK(c.max_general_ratio == d.max_general_ratio);
    CHECK(c.qualified == d.qualified);
  }
}
