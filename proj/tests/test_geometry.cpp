#include "coxpres/collineation.hpp"
#include "coxpres/geometry.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace coxpres;

namespace {

RationalCone cone(std::vector<std::vector<long>> rays, std::size_t dim = 2) {
  std::vector<IntVector> gens;
  for (const auto& r : rays) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    gens.push_back(std::move(v));
  }
  return RationalCone(dim, std::move(gens));
}

IntVector v(std::initializer_list<long> xs) { return to_int_vector(xs); }

// Chamber of w by definition: intersection of every orbit cone cone(Q_S)
// containing w, over all nonempty column subsets S.
RationalCone brute_force_chamber(const IntMatrix& q, const IntVector& w) {
  const std::size_t n = q.cols();
  std::optional<RationalCone> acc;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) gens.push_back(q.column(j));
    RationalCone c(2, gens);
    if (!c.contains(w)) continue;
    acc = acc ? cone_intersect(*acc, c) : c;
  }
  return acc.value_or(RationalCone(2));
}

}  // namespace

TEST_CASE("canonical form") {
  auto c = cone({{2, 2}, {1, 0}, {3, 1}});
  CHECK(c.generators() == std::vector<IntVector>{v({1, 0}), v({1, 1})});
  CHECK(cone({{1, 0}, {1, 1}}) == cone({{1, 1}, {2, 0}}));
}

TEST_CASE("membership") {
  auto l1 = cone({{1, 1}, {1, 0}});
  CHECK(l1.contains(v({2, 1}), Membership::relative_interior));
  CHECK_FALSE(l1.contains(v({1, 1}), Membership::relative_interior));
  CHECK(l1.contains(v({1, 1}), Membership::closed));
  CHECK_FALSE(cone({{1, 0}}).contains(v({1, 1})));
  CHECK(cone({{1, 0}}).contains(v({5, 0}), Membership::relative_interior));
  // Zero cone: relint is the origin.
  RationalCone zero(2);
  CHECK(zero.contains(v({0, 0}), Membership::relative_interior));
  CHECK_FALSE(zero.contains(v({1, 0})));
  // Halfspace agreement in 3D.
  auto oct = cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  auto hs = halfspaces(oct);
  CHECK(hs.inequalities.size() == 3);
  CHECK(hs.equations.empty());
  CHECK(cone_membership(oct, v({1, 2, 3}), Membership::relative_interior));
  CHECK_FALSE(cone_membership(oct, v({1, 0, 3}), Membership::relative_interior));
  CHECK_FALSE(cone_membership(oct, v({1, -1, 3}), Membership::closed));
}

TEST_CASE("intersection") {
  CHECK(cone_intersect(cone({{1, 1}, {1, -1}}), cone({{1, 0}, {0, 1}})) == cone({{1, 1}, {1, 0}}));
  auto c = cone({{1, 2}, {3, 1}});
  CHECK(cone_intersect(c, c) == c);
  auto w1 = std::vector<long>{1, 1, -1}, w2 = std::vector<long>{1, 0, 0},
       w3 = std::vector<long>{1, -1, 0}, w4 = std::vector<long>{0, 0, 1};
  auto all = cone({w1, w2, w3, w4}, 3);
  auto three = cone({w1, w2, w3}, 3);
  CHECK(cone_intersect(all, three) == three);
  CHECK(cone_intersect(cone({{1, 0}}), cone({{0, 1}})).is_zero());
  auto hi = RationalCone(4, {v({1, 0, 0, 0})});
  CHECK_THROWS_AS(cone_intersect(hi, hi), UnsupportedDimension);
}

TEST_CASE("git fan") {
  SUBCASE("weights of X(2,3,3)") {
    auto q = weight_matrices(Params::make(3, 3)).q;
    auto gf = git_fan(q);
    REQUIRE(gf.chambers.size() == 2);
    CHECK(gf.chambers[0] == cone({{1, 1}, {1, 0}}));
    CHECK(gf.chambers[1] == cone({{1, 0}, {1, -1}}));
    CHECK_FALSE(gf.degenerate);
  }
  SUBCASE("repeated column") {
    auto gf = git_fan(IntMatrix{{1, 1}, {0, 0}});
    CHECK(gf.degenerate);
    REQUIRE(gf.chambers.size() == 1);
    CHECK(gf.chambers[0] == cone({{1, 0}}));
  }
  SUBCASE("two independent columns") {
    auto q = IntMatrix{{1, 1}, {1, -1}};
    auto gf = git_fan(q);
    REQUIRE(gf.chambers.size() == 1);
    CHECK(gf.chambers[0] == cone({{1, -1}, {1, 1}}));
    CHECK(brute_force_chamber(q, v({3, 1})) == gf.chambers[0]);
  }
  SUBCASE("rank zero is rejected") {
    CHECK_THROWS(git_fan(IntMatrix(2, 3)));
  }
}

TEST_CASE("git fan agrees with the chamber definition on samples") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ent(-3, 3);
  std::uniform_int_distribution<int> pos(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    // Columns in the open right halfplane keep the effective cone pointed.
    std::size_t n = 2 + trial % 4;
    IntMatrix q(2, n);
    for (std::size_t j = 0; j < n; ++j) {
      q(0, j) = pos(rng);
      q(1, j) = ent(rng);
    }
    if (rank(q) < 2) continue;
    auto gf = git_fan(q);
    for (int s = 0; s < 8; ++s) {
      IntVector w = v({pos(rng) * 3, ent(rng)});
      RationalCone eff(2, [&] {
        std::vector<IntVector> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(q.column(j));
        return cols;
      }());
      if (!eff.contains(w)) continue;
      auto expected = brute_force_chamber(q, w);
      int interiors = 0;
      bool covered = false;
      for (const auto& ch : gf.chambers) {
        if (ch.contains(w)) covered = true;
        if (ch.contains(w, Membership::relative_interior)) {
          ++interiors;
          CHECK(ch == expected);
        }
      }
      CHECK(covered);
      CHECK(interiors <= 1);
    }
  }
}

TEST_CASE("gale cone test") {
  Params p = Params::make(3, 3);
  auto q = weight_matrices(p).q;
  auto pm = gale_matrix_P(p);
  // Columns 0..2 are a+, 3..11 a0, 12..14 a-.
  CHECK(gale_cone_test(pm, q, v({2, 1}), {0, 4}));
  CHECK_FALSE(gale_cone_test(pm, q, v({2, 1}), {3, 4}));
  CHECK(gale_cone_test(pm, q, v({2, -1}), {1, 13}));
  CHECK_FALSE(gale_cone_test(pm, q, v({2, 1}), {}));
  IntMatrix bad = pm;
  bad(0, 0) += 1;
  CHECK_THROWS_AS(gale_cone_test(bad, q, v({2, 1}), {0, 4}), GalePairError);
}

TEST_CASE("quotient fans") {
  Params p = Params::make(3, 3);
  auto q = weight_matrices(p).q;
  auto pm = gale_matrix_P(p);
  auto s1 = quotient_fan(pm, q, v({2, 1}));
  auto s2 = quotient_fan(pm, q, v({2, -1}));
  CHECK(s1.cones.size() == 36);
  CHECK(s2.cones.size() == 36);
  CHECK(s1.simplicial);
  for (const auto& c : s1.cones) CHECK(c.size() == 13);
}

TEST_CASE("stellar subdivision") {
  Fan quad{2, {v({1, 0}), v({0, 1})}, {{0, 1}}, true};
  auto sub = stellar_subdivide(quad, {0, 1}, v({1, 1}));
  REQUIRE(sub.rays.size() == 3);
  CHECK(sub.rays[2] == v({1, 1}));
  REQUIRE(sub.cones.size() == 2);
  std::vector<std::vector<std::size_t>> expect{{0, 2}, {1, 2}};
  auto got = sub.cones;
  std::sort(got.begin(), got.end());
  CHECK(got == expect);

  CHECK_THROWS_AS(stellar_subdivide(quad, {0}, v({1, 0})), SubdivisionError);
  CHECK_THROWS_AS(stellar_subdivide(quad, {0, 1}, v({1, -1})), SubdivisionError);
  Fan nonsimp = quad;
  nonsimp.simplicial = false;
  CHECK_THROWS_AS(stellar_subdivide(nonsimp, {0, 1}, v({1, 1})), SubdivisionError);

  Params p = Params::make(3, 3);
  auto pm = gale_matrix_P(p);
  auto s1 = quotient_fan(pm, weight_matrices(p).q, v({2, 1}));
  std::vector<std::size_t> target{12, 13, 14};
  auto ray = barycenter_direction(pm, target);
  auto sinf = stellar_subdivide(s1, target, ray);
  CHECK(sinf.rays.size() == s1.rays.size() + 1);
  CHECK(sinf.cones.size() == 3 * 3 + 3 * 9 * 3);
}

TEST_CASE("barycenter direction") {
  Params p = Params::make(3, 3);
  auto pm = gale_matrix_P(p);
  IntVector e(13, BigInt(0));
  e[12] = 1;
  CHECK(barycenter_direction(pm, {12, 13, 14}) == e);
  CHECK(barycenter_direction(IntMatrix{{2}, {4}}, {0}) == v({1, 2}));
  CHECK(barycenter_direction(IntMatrix{{1, 1}, {1, 3}}, {0, 1}) == v({1, 2}));
  CHECK_THROWS(barycenter_direction(IntMatrix{{1, -1}}, {0, 1}));
}

TEST_CASE("mori cones") {
  auto pres = cox_presentation(Params::make(3, 4));
  auto mc = mori_cones(generator_degrees(pres));
  CHECK(mc.effective == cone({{1, 1, -1}, {1, -1, 0}, {0, 0, 1}}, 3));
  CHECK(mc.movable == cone({{1, 1, -1}, {1, 0, 0}, {1, -1, 0}}, 3));

  auto single = mori_cones({v({1, 0, 0})});
  CHECK(single.effective == cone({{1, 0, 0}}, 3));
  CHECK(single.movable.is_zero());

  auto basis = mori_cones({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  CHECK(basis.effective.generators().size() == 3);
  CHECK(basis.movable.is_zero());
}

TEST_CASE("simplicial coordinates") {
  std::vector<Rational> coords;
  REQUIRE(simplicial_coordinates({v({1, 0, 0}), v({1, 1, 0})}, v({3, 2, 0}), coords));
  CHECK(coords == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK_FALSE(simplicial_coordinates({v({1, 0, 0})}, v({0, 1, 0}), coords));
}
