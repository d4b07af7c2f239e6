#include "coxpres/collineation.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace coxpres;

namespace {

Polynomial P(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

IntVector v(std::initializer_list<long> xs) { return to_int_vector(xs); }

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("params") {
  CHECK_THROWS_AS(Params::make(1, 3), UnsupportedParams);
  CHECK_THROWS_AS(Params::make(3, 0), UnsupportedParams);
  Params p = Params::make(4, 3);
  CHECK(p.n() == 21);
  CHECK(p.a_plus() == 6);
  CHECK(p.a_zero() == 12);
  CHECK(p.a_minus() == 3);
  CHECK(p.a_plus() + p.a_zero() + p.a_minus() == p.n());
}

TEST_CASE("pluecker relations") {
  auto r4 = plucker_relations(4);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0] == P(grassmann_ring(4), "T_1_2*T_3_4 - T_1_3*T_2_4 + T_1_4*T_2_3"));
  CHECK(plucker_relations(5).size() == 5);
  CHECK(plucker_relations(6).size() == 15);
  CHECK(plucker_relations(3).empty());
  CHECK(quadruples(7).size() == 35);
}

TEST_CASE("presentation in the general regime") {
  Params p = Params::make(3, 3);
  auto pres = cox_presentation(p);
  CHECK(pres.regime == Regime::general);
  CHECK(pres.ring->vars.size() == 16);
  CHECK(pres.ring->vars.name(15) == "Tinf");
  CHECK(pres.relations.size() == 15);
  CHECK(pres.class_group_rank == 3);
  auto tinf = *pres.ring->vars.index_of(kTinf);
  std::size_t with_tinf = 0;
  for (const auto& f : pres.relations)
    if (f.support()[tinf]) ++with_tinf;
  CHECK(with_tinf == 9);

  auto col = [&](const char* name) { return pres.grading.degrees.column(*pres.ring->vars.index_of(name)); };
  CHECK(col("T_1_2") == v({1, 1, -1}));
  CHECK(col("T_4_5") == v({1, -1, 0}));
  CHECK(col("T_2_6") == v({1, 0, 0}));
  CHECK(col("Tinf") == v({0, 0, 1}));

  auto expected = P(pres.ring, "Tinf*T_1_2*T_4_5 - T_1_4*T_2_5 + T_1_5*T_2_4");
  CHECK(std::count(pres.relations.begin(), pres.relations.end(), expected) == 1);
}

TEST_CASE("presentation counts and homogeneity across parameters") {
  for (int c = 3; c <= 5; ++c) {
    for (int d = 3; d <= 5; ++d) {
      Params p = Params::make(c, d);
      auto pres = cox_presentation(p);
      CAPTURE(c);
      CAPTURE(d);
      CHECK(pres.relations.size() == static_cast<std::size_t>(binom(c + d, 4)));
      auto tinf = *pres.ring->vars.index_of(kTinf);
      std::size_t with_tinf = 0;
      for (const auto& f : pres.relations) {
        if (f.support()[tinf]) ++with_tinf;
        CHECK(multidegree(f, pres.grading).kind == MultiDegree::Kind::homogeneous);
      }
      CHECK(with_tinf == static_cast<std::size_t>(binom(c, 2) * binom(d, 2)));
    }
  }
}

TEST_CASE("degenerate regimes") {
  auto p3 = cox_presentation(Params::make(2, 2));
  CHECK(p3.regime == Regime::p3);
  CHECK(p3.ring->vars.size() == 4);
  CHECK(p3.relations.empty());
  CHECK(p3.grading.degrees == IntMatrix{{1, 1, 1, 1}});
  CHECK(p3.class_group_rank == 1);

  auto c2 = cox_presentation(Params::make(2, 3));
  CHECK(c2.regime == Regime::d2);
  CHECK(c2.ring->vars.size() == 10);
  CHECK(c2.relations.size() == 5);
  CHECK(c2.class_group_rank == 2);
  for (const auto& f : c2.relations)
    CHECK(multidegree(f, c2.grading).kind == MultiDegree::Kind::homogeneous);

  auto d2 = cox_presentation(Params::make(4, 2));
  CHECK(d2.regime == Regime::c2);
  CHECK(d2.relations.size() == 15);
  CHECK(d2.grading.degrees == weight_matrices(Params::make(4, 2)).q);
}

TEST_CASE("weight matrices") {
  Params p = Params::make(3, 3);
  auto wm = weight_matrices(p);
  CHECK(wm.q.rows() == 2);
  CHECK(wm.q.cols() == 15);
  for (std::size_t j = 0; j < 15; ++j) {
    CHECK(wm.q(0, j) == 1);
    long expect = j < 3 ? 1 : (j < 12 ? 0 : -1);
    CHECK(wm.q(1, j) == expect);
    CHECK(wm.q_inf(0, j) == wm.q(0, j));
    CHECK(wm.q_inf(1, j) == wm.q(1, j));
  }
  CHECK(wm.q_inf.cols() == 16);
  CHECK(wm.q_inf.column(15) == v({0, 0, 1}));
  CHECK(wm.q_inf == cox_presentation(p).grading.degrees);
}

TEST_CASE("gale matrix") {
  for (auto [c, d] : {std::pair{3, 3}, std::pair{3, 5}, std::pair{4, 3}}) {
    Params p = Params::make(c, d);
    auto pm = gale_matrix_P(p);
    auto q = weight_matrices(p).q;
    CHECK(pm.rows() == p.n() - 2);
    CHECK(pm.cols() == p.n());
    CHECK((pm * q.transpose()).is_zero());
    CHECK(rank(pm) == p.n() - 2);
    CHECK(row_lattice_basis(pm) == kernel_basis(q));
    IntVector sum(pm.rows(), BigInt(0));
    for (std::size_t j = p.n() - p.a_minus(); j < p.n(); ++j)
      for (std::size_t i = 0; i < pm.rows(); ++i) sum[i] += pm(i, j);
    IntVector e(pm.rows(), BigInt(0));
    e.back() = 1;
    CHECK(sum == e);
  }
  auto pm = gale_matrix_P(Params::make(3, 3));
  // Bottom row: A+ = (0,0,1), A0 = (-1,0,...,0,-1), A- = (1,0,0).
  IntVector bottom = pm.row(12);
  CHECK(bottom == v({0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0}));
}

TEST_CASE("pullback and cancel") {
  Params p = Params::make(3, 3);
  auto pres = cox_presentation(p);
  auto r = pres.ring;

  auto a = pullback_and_cancel(p, {1, 2, 4, 5});
  CHECK(a.epsilon == 0);
  CHECK(a.reduced == P(r, "Tinf*T_1_2*T_4_5 - T_1_4*T_2_5 + T_1_5*T_2_4"));

  auto b = pullback_and_cancel(p, {3, 4, 5, 6});
  CHECK(b.epsilon == 0);
  CHECK(b.reduced == P(r, "T_3_4*T_5_6 - T_3_5*T_4_6 + T_3_6*T_4_5"));

  auto c = pullback_and_cancel(p, {1, 2, 3, 4});
  CHECK(c.epsilon == 1);
  CHECK(c.pulled == P(r, "Tinf*(T_1_2*T_3_4 - T_1_3*T_2_4 + T_1_4*T_2_3)"));
  CHECK(c.reduced == P(r, "T_1_2*T_3_4 - T_1_3*T_2_4 + T_1_4*T_2_3"));

  auto q4 = Params::make(4, 3);
  CHECK(pullback_and_cancel(q4, {1, 2, 3, 4}).epsilon == 2);

  CHECK_THROWS(pullback_and_cancel(p, {2, 1, 4, 5}));
  CHECK_THROWS(pullback_and_cancel(p, {1, 2, 3, 7}));
}

TEST_CASE("pullback reproduces the relations") {
  for (auto [c, d] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
    Params p = Params::make(c, d);
    std::vector<Polynomial> reduced;
    for (const auto& q : quadruples(p.m())) reduced.push_back(pullback_and_cancel(p, q).reduced);
    CHECK(same_polynomial_set(reduced, cox_presentation(p).relations));
  }
}

TEST_CASE("segre map") {
  Params p = Params::make(3, 3);
  auto sigma = segre_map(p);
  auto src = sigma.source();
  auto dst = sigma.target();
  CHECK(dst->vars.size() == 3 + 6 + 3);
  CHECK(sigma(Polynomial::variable(src, "T_1_4")) == P(dst, "S_1*S_4"));
  CHECK(sigma(Polynomial::variable(src, "T_1_2")) == P(dst, "S_1_2"));
  CHECK(sigma(Polynomial::variable(src, "T_5_6")) == P(dst, "S_5_6"));
  CHECK(sigma(P(src, "-T_1_4*T_2_5 + T_1_5*T_2_4")).is_zero());

  auto e = segre_exponent_matrix(p);
  CHECK(e.rows() == dst->vars.size());
  CHECK(e.cols() == src->vars.size());
}

TEST_CASE("proof ideals") {
  Params p = Params::make(3, 3);
  auto pi = proof_ideals(p);
  auto sigma = segre_map(p);
  for (const auto& g : pi.g) {
    CHECK(g.is_binomial_pm1());
    CHECK(sigma(g).is_zero());
  }
  CHECK(pi.g.size() + pi.h.size() == 15);
  REQUIRE(pi.sigma_h.size() == pi.sigma_h_table.size());
  for (std::size_t i = 0; i < pi.sigma_h.size(); ++i) CHECK(pi.sigma_h[i] == pi.sigma_h_table[i]);

  auto it = std::find(pi.h_quadruples.begin(), pi.h_quadruples.end(), Quadruple{1, 2, 3, 4});
  REQUIRE(it != pi.h_quadruples.end());
  auto idx = static_cast<std::size_t>(it - pi.h_quadruples.begin());
  CHECK(pi.sigma_h[idx] == P(pi.b_ring, "S_4*(S_1_2*S_3 - S_1_3*S_2 + S_1*S_2_3)"));

  auto r1 = rename_b1(p, pi);
  std::vector<Polynomial> b1;
  for (const auto& f : pi.b1) b1.push_back(r1(f));
  CHECK(same_polynomial_set(b1, plucker_relations(4)));

  auto r2 = rename_b2(p, pi);
  std::vector<Polynomial> b2;
  for (const auto& f : pi.b2) b2.push_back(r2(f));
  CHECK(same_polynomial_set(b2, plucker_relations(4)));

  CHECK_THROWS_AS(proof_ideals(Params::make(2, 3)), UnsupportedParams);
}

TEST_CASE("block ideals match Grassmannians for larger parameters") {
  Params p = Params::make(4, 3);
  auto pi = proof_ideals(p);
  auto r1 = rename_b1(p, pi);
  auto r2 = rename_b2(p, pi);
  IdealPresentation b1(r1.target(), [&] {
    std::vector<Polynomial> out;
    for (const auto& f : pi.b1) out.push_back(r1(f));
    return out;
  }());
  IdealPresentation b2(r2.target(), [&] {
    std::vector<Polynomial> out;
    for (const auto& f : pi.b2) out.push_back(r2(f));
    return out;
  }());
  CHECK(ideal_equal(b1, IdealPresentation(grassmann_ring(5), plucker_relations(5))));
  CHECK(ideal_equal(b2, IdealPresentation(grassmann_ring(4), plucker_relations(4))));
}

TEST_CASE("witness points") {
  for (auto [c, d] : {std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 2}, std::pair{5, 3}}) {
    Params p = Params::make(c, d);
    auto w = witness_points(p);
    for (const auto& r : w.residuals1) CHECK(r == 0);
    for (const auto& r : w.residuals2) CHECK(r == 0);
    CHECK(w.residuals1.size() == static_cast<std::size_t>(binom(c + d, 4)));
    CHECK(w.omega1 == RationalCone(2, {v({1, 1}), v({1, 0})}));
    CHECK(w.omega2 == RationalCone(2, {v({1, 0}), v({1, -1})}));
  }
  Params p = Params::make(3, 3);
  auto x1 = witness_points(p).x1;
  CHECK(x1.coords.size() == 2);
  CHECK(x1.coords.at({1, 2}) == 1);
  CHECK(x1.coords.at({1, 6}) == 1);
  WitnessPoint bad;
  bad.coords = {{{1, 2}, 1}, {{3, 4}, 1}};
  auto res = evaluate_relations(p, bad);
  CHECK(std::any_of(res.begin(), res.end(), [](const Rational& x) { return x != 0; }));
}

TEST_CASE("local equation") {
  Params p = Params::make(3, 3);
  CHECK(local_equation_degree(p) == v({0, 0, 0}));
  CHECK(local_equation_invariance(p));
  CHECK(local_equation_degree(p, -1) == v({1, 0, 0}));
  CHECK_FALSE(local_equation_invariance(p, -1));
  for (int c = 3; c <= 6; ++c)
    for (int d = 3; d <= 6; ++d) CHECK(local_equation_invariance(Params::make(c, d)));
}

TEST_CASE("regime names") {
  CHECK(to_string(Regime::general) == "general");
  CHECK(to_string(Regime::p3) == "p3");
}
