#include <doctest.h>

#include <cmath>

#include "oracles/reference.hpp"
#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/extremal.hpp"
#include "simplex_sections/polytope.hpp"
#include "simplex_sections/sampling.hpp"
#include "simplex_sections/spectral.hpp"

using namespace simplex_sections;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("special directions") {
    CHECK(rel(hyperplane_volume_quadrature(special_max_direction(4)).value, ref::special_max_4) < 1e-8);
    CHECK(rel(hyperplane_volume_quadrature(special_min_direction(4)).value, ref::special_min_4) < 1e-8);
    CHECK(rel(hyperplane_volume_quadrature(Direction(Vec{0.9, -0.35, 0.2, -0.6, 0.05, 0.45, -0.15})).value,
              ref::n6_mixed) < 1e-9);
  }

  TEST_CASE("agrees with the residue sum") {
    Rng rng = make_rng(21, 0);
    for (int t = 0; t < 60; ++t) {
      const int n = 3 + t % 5;
      const double k = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Direction a = random_constrained_direction(rng, n, k);
      CAPTURE(a.vec());
      const VolumeResult q = hyperplane_volume_quadrature(a);
      const double r = residue_volume(a).value;
      CHECK(rel(q.value, r) < 1e-8);
      CHECK(q.err < 1e-8 * r);
    }
  }

  TEST_CASE("imaginary part vanishes on the mirrored grid") {
    Rng rng = make_rng(22, 0);
    for (int t = 0; t < 10; ++t) CHECK(fourier_imaginary_residual(random_direction(rng, 5)) < 1e-12);
  }

  TEST_CASE("contract errors") {
    CHECK_THROWS_AS(hyperplane_volume_quadrature(Direction(Vec{1, -1, 0.5})), SectionError);
    try {
      hyperplane_volume_quadrature(Direction(Vec{1, 1, 1, 1, 1}));
      FAIL("expected EmptySection");
    } catch (const SectionError& e) {
      CHECK(e.code() == ErrorCode::EmptySection);
    }
    Rng rng = make_rng(23, 0);
    const SubspaceBasis h = random_centroid_subspace(rng, 6, 3);
    try {
      kdim_volume_quadrature(h);
      FAIL("expected NotSupported");
    } catch (const SectionError& e) {
      CHECK(e.code() == ErrorCode::NotSupported);
    }
  }

  TEST_CASE("the two prefactors coincide") {
    Rng rng = make_rng(24, 0);
    for (int t = 0; t < 40; ++t) {
      const int n = 3 + t % 5;
      const int k = n - t % 3;
      const SubspaceBasis h = random_centroid_subspace(rng, n, k);
      CHECK(rel(pyramid_prefactor(h), fourier_prefactor(h)) < 1e-12);
    }
    const SubspaceBasis h = SubspaceBasis::hyperplane(Direction(Vec{0.8, 0.1, -0.3, 0.4, -0.2, 0.25}));
    CHECK(rel(pyramid_prefactor(h), fourier_prefactor(h)) < 1e-12);
  }

  TEST_CASE("codim 1 delegates") {
    const Direction a(Vec{0.7, 0.3, -0.5, -0.3, -0.2});
    CHECK(rel(kdim_volume_quadrature(SubspaceBasis::hyperplane(a)).value, hyperplane_volume_quadrature(a, 1e-8).value) <
          1e-10);
  }

  TEST_CASE("codim 2 against the vertex oracle") {
    Rng rng = make_rng(25, 0);
    const SimplexSpec s = SimplexSpec::regular(5);
    for (int t = 0; t < 5; ++t) {
      const SubspaceBasis h = random_centroid_subspace(rng, 5, 4);
      CHECK(rel(kdim_volume_quadrature(h).value, polytope_volume(kdim_section_vertices(s, h)).value) < 1e-5);
    }
    // span{e1 - e2, e3 - e4, 1} as the subspace itself
    const std::vector<Vec> span{{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, -1}};
    const SubspaceBasis h = SubspaceBasis::from_spanning(span, 6);
    CHECK(rel(kdim_volume_quadrature(h).value, polytope_volume(kdim_section_vertices(s, h)).value) < 1e-5);
  }

  TEST_CASE("codim 2 witness subspace") {
    const SubspaceBasis h = kdim_witness(5, 4);
    const double expected = std::sqrt(6.0) / (6.0 * std::sqrt(3.0));
    CHECK(rel(kdim_volume_quadrature(h).value, expected) < 1e-6);
  }

  TEST_CASE("exponential Monte Carlo") {
    SUBCASE("maximal hyperplane section") {
      const VolumeResult r = mc_exponential_check(SubspaceBasis::hyperplane(special_max_direction(4)), 1000000, 5);
      CHECK(std::abs(r.value - ref::special_max_4) < 3 * r.err);
    }
    SUBCASE("an edge") {
      const std::vector<Vec> span{{1, 0, 0, 0}, {0, 1, 0, 0}};
      const VolumeResult r = mc_exponential_check(SubspaceBasis::from_spanning(span, 4), 200000, 6);
      CHECK(std::abs(r.value - std::sqrt(2.0)) < 3 * r.err);
    }
    SUBCASE("random codim 2") {
      Rng rng = make_rng(26, 0);
      const SubspaceBasis h = random_centroid_subspace(rng, 5, 4);
      const VolumeResult r = mc_exponential_check(h, 400000, 7);
      CHECK(std::abs(r.value - kdim_volume_quadrature(h).value) < 3 * r.err);
    }
    SUBCASE("too few samples") { CHECK_THROWS_AS(mc_exponential_check(kdim_witness(4, 3), 10, 1), SectionError); }
  }
}
