#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles/oracles.hpp"
#include "oracles/reference.hpp"
#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/polytope.hpp"
#include "simplex_sections/sampling.hpp"

using namespace simplex_sections;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

Vec unit_vector(int dim, int j) {
  Vec e(static_cast<std::size_t>(dim), 0.0);
  e[static_cast<std::size_t>(j)] = 1.0;
  return e;
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("square section") {
    const auto p = hyperplane_section_vertices(SimplexSpec::regular(3), Direction(Vec{0.5, 0.5, -0.5, -0.5}));
    CHECK(p.vertices.size() == 4);
    CHECK(p.dim == 2);
    for (const auto& v : p.vertices)
      for (double x : v) CHECK((x == doctest::Approx(0.5) || x == doctest::Approx(0.0)));
    CHECK(polytope_volume(p).value == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("face-parallel section is a regular simplex") {
    for (int n = 3; n <= 7; ++n) {
      const auto p = hyperplane_section_vertices(SimplexSpec::regular(n), special_min_direction(n));
      REQUIRE(p.vertices.size() == static_cast<std::size_t>(n));
      const double side = distance(p.vertices[0], p.vertices[1]);
      for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
          CHECK(distance(p.vertices[i], p.vertices[j]) == doctest::Approx(side).epsilon(1e-12));
      CHECK(rel(polytope_volume(p).value, special_min_volume(n)) < 1e-12);
    }
  }

  TEST_CASE("planar segment") {
    const auto p = hyperplane_section_vertices(SimplexSpec::regular(2), Direction(Vec{1, -0.3, -0.2}));
    CHECK(p.vertices.size() == 2);
    CHECK(p.dim == 1);
  }

  TEST_CASE("empty and point sections") {
    const SimplexSpec s = SimplexSpec::regular(3);
    try {
      hyperplane_section_vertices(s, Direction(Vec{1, 1, 2, 1}));
      FAIL("expected EmptySection");
    } catch (const SectionError& e) {
      CHECK(e.code() == ErrorCode::EmptySection);
    }
    try {
      hyperplane_section_vertices(s, Direction(Vec{0, 1, 2, 1}));
      FAIL("expected PointSection");
    } catch (const SectionError& e) {
      CHECK(e.code() == ErrorCode::PointSection);
    }
  }

  TEST_CASE("agrees with the test-side sums") {
    Rng rng = make_rng(31, 0);
    for (int t = 0; t < 150; ++t) {
      const int n = 3 + t % 5;
      const double k = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Direction a = random_constrained_direction(rng, n, k);
      CAPTURE(a.vec());
      const double o = polytope_volume(hyperplane_section_vertices(SimplexSpec::regular(n), a)).value;
      CHECK(rel(o, oracle::naive_section(a.vec())) < 1e-9);
    }
    const double o = polytope_volume(
        hyperplane_section_vertices(SimplexSpec::regular(6), Direction(Vec{0.9, -0.35, 0.2, -0.6, 0.05, 0.45, -0.15})))
                         .value;
    CHECK(rel(o, ref::n6_mixed) < 1e-12);
  }

  TEST_CASE("faces") {
    for (int k = 2; k <= 7; ++k) {
      const int n = std::max(k, 4);
      std::vector<Vec> span;
      for (int j = 0; j < k; ++j) span.push_back(unit_vector(n + 1, j));
      const auto p = kdim_section_vertices(SimplexSpec::regular(n), SubspaceBasis::from_spanning(span, n + 1));
      CHECK(p.vertices.size() == static_cast<std::size_t>(k));
      CHECK(rel(polytope_volume(p).value, std::sqrt(k) / oracle::factorial(k - 1)) < 1e-12);
    }
    SectionPolytope seg;
    seg.dim = 1;
    seg.vertices = {unit_vector(3, 0), unit_vector(3, 1)};
    seg.zero_sets = {{1, 2}, {0, 2}};
    CHECK(polytope_volume(seg).value == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("support enumeration matches edge intersections") {
    Rng rng = make_rng(32, 0);
    for (int t = 0; t < 20; ++t) {
      const Direction a = random_constrained_direction(rng, 5, 0.3);
      const SimplexSpec s = SimplexSpec::regular(5);
      const auto p = hyperplane_section_vertices(s, a);
      const auto q = kdim_section_vertices(s, SubspaceBasis::hyperplane(a));
      CHECK(p.vertices.size() == q.vertices.size());
      CHECK(rel(polytope_volume(p).value, polytope_volume(q).value) < 1e-12);
    }
  }

  TEST_CASE("k-subspace through e1, e2 and the centroid of the rest") {
    std::vector<Vec> span{unit_vector(6, 0), unit_vector(6, 1), {0, 0, 1, 1, 1, 1}};
    const auto p = kdim_section_vertices(SimplexSpec::regular(5), SubspaceBasis::from_spanning(span, 6));
    REQUIRE(p.vertices.size() == 3);
    bool found = false;
    for (const auto& v : p.vertices)
      found = found || (std::abs(v[0]) < 1e-12 && std::abs(v[2] - 0.25) < 1e-12 && std::abs(v[5] - 0.25) < 1e-12);
    CHECK(found);
    CHECK(rel(polytope_volume(p).value, std::sqrt(6.0) / 4.0) < 1e-12);
  }

  TEST_CASE("enumeration limits") {
    Rng rng = make_rng(33, 0);
    CHECK_THROWS_AS(kdim_section_vertices(SimplexSpec::regular(13), random_centroid_subspace(rng, 13, 12)),
                    SectionError);
    CHECK_THROWS_AS(kdim_section_vertices(SimplexSpec::regular(9), random_centroid_subspace(rng, 9, 4)),
                    SectionError);
  }

  TEST_CASE("two positive coordinates give parallel regular slices") {
    const double beta = -0.2;
    const Vec raw{0.6, 0.25, beta, beta, beta, beta};
    const Direction a(raw);
    const auto p = hyperplane_section_vertices(SimplexSpec::regular(5), a);
    // K_i: the vertices on edges [e_i, e_j], j among the negatives
    for (int i = 0; i < 2; ++i) {
      std::vector<Vec> slice;
      for (std::size_t v = 0; v < p.vertices.size(); ++v)
        if (p.vertices[v][i] > 1e-12) slice.push_back(p.vertices[v]);
      REQUIRE(slice.size() == 4);
      const double side = std::sqrt(2.0) * raw[i] / (raw[i] - beta);
      for (std::size_t x = 0; x < slice.size(); ++x)
        for (std::size_t y = x + 1; y < slice.size(); ++y)
          CHECK(distance(slice[x], slice[y]) == doctest::Approx(side).epsilon(1e-10));
    }
  }

  TEST_CASE("frustum closed form") {
    CHECK(rel(frustum_volume(5, 0.0), ref::frustum5_0) < 1e-13);
    CHECK(rel(frustum_volume(5, 0.5), ref::frustum5_half) < 1e-13);
    CHECK(rel(frustum_volume(3, 0.5), ref::nine_sqrt6_over_125) < 1e-13);
    for (int i = 0; i <= 20; ++i) {
      const double x = i / 20.0;
      CHECK(rel(frustum_volume(3, x), residue_volume(Direction(Vec{x, 1 - x, -1.0 / 3, -1.0 / 3, -1.0 / 3})).value) < 1e-11);
    }
    // V(0) is the face-parallel section of the n = N simplex placed in one
    // dimension higher
    for (int N = 2; N <= 6; ++N) {
      Vec a = special_min_direction(N).vec();
      a.push_back(0.0);
      CHECK(rel(frustum_volume(N, 0.0), residue_volume(Direction(a)).value) < 1e-12);
    }
    CHECK_THROWS_AS(frustum_volume(5, 1.5), SectionError);
    CHECK_THROWS_AS(frustum_volume(1, 0.5), SectionError);
  }

  TEST_CASE("slab Monte Carlo") {
    SUBCASE("maximal section n = 4") {
      const auto r = mc_slab_volume(SimplexSpec::regular(4), special_max_direction(4), 1e-3, 1000000, 3);
      CHECK(std::abs(r.value - ref::special_max_4) < 3 * r.err);
    }
    SUBCASE("square") {
      const auto r = mc_slab_volume(SimplexSpec::regular(3), Direction(Vec{0.5, 0.5, -0.5, -0.5}), 1e-3, 1000000, 4);
      CHECK(std::abs(r.value - 0.5) < 3 * r.err);
    }
    SUBCASE("non-central n = 5") {
      const Direction a(Vec{0.8, 0.1, -0.3, 0.4, -0.2, 0.25});
      const auto r = mc_slab_volume(SimplexSpec::regular(5), a, 1e-3, 1000000, 5);
      CHECK(std::abs(r.value - ref::n5_noncentral) < 3 * r.err);
    }
    SUBCASE("no hits") {
      try {
        mc_slab_volume(SimplexSpec::regular(3), Direction(Vec{1, 1, 1, 1}), 1e-3, 1000, 1);
        FAIL("expected ZeroHits");
      } catch (const SectionError& e) {
        CHECK(e.code() == ErrorCode::ZeroHits);
      }
    }
  }
}
