#include "coxpres/collineation.hpp"
#include "coxpres/polyring.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace coxpres;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Polynomial P(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

}  // namespace

TEST_CASE("variable table rejects duplicates") {
  CHECK_THROWS_AS(VariableTable({"x", "x"}), std::invalid_argument);
  VariableTable t({"a", "b"});
  CHECK(t.index_of("b") == 1u);
  CHECK_FALSE(t.index_of("c").has_value());
}

TEST_CASE("arithmetic") {
  auto r = xyz();
  CHECK(P(r, "x + y") + P(r, "-x") == P(r, "y"));
  CHECK(P(r, "x - y") * P(r, "x + y") == P(r, "x^2 - y^2"));
  CHECK((P(r, "x") - P(r, "x")).is_zero());
  CHECK(P(r, "(x+1)").pow(3) == P(r, "x^3 + 3*x^2 + 3*x + 1"));
  CHECK(P(r, "2*x") * Rational(1, 2) == P(r, "x"));
  CHECK(P(r, "x*y + 1/2").leading().coef == 1);

  auto pres = presentation_ring(Params::make(3, 3));
  auto lhs = P(pres, "T_1_3*T_2_4") * P(pres, "Tinf");
  CHECK(lhs == P(pres, "Tinf*T_1_3*T_2_4"));
  CHECK(lhs.size() == 1);
  CHECK(lhs.total_degree() == 3);
}

TEST_CASE("mismatched rings are rejected") {
  auto a = xyz();
  auto b = make_ring({"x", "y"});
  CHECK_THROWS_AS(P(a, "x") + P(b, "x"), RingMismatch);
  CHECK_THROWS_AS(P(a, "x") * P(b, "y"), RingMismatch);
}

TEST_CASE("parse and print") {
  auto r = xyz();
  for (const char* text : {"x^2*y - 3/4*z + 1", "-x", "0", "x*y*z - y^2"}) {
    Polynomial f = P(r, text);
    CHECK(P(r, to_string(f).c_str()) == f);
  }
  CHECK(to_string(P(r, "0")) == "0");
  CHECK(P(r, "2*(x - y)^2") == P(r, "2*x^2 - 4*x*y + 2*y^2"));
  CHECK_THROWS_AS(P(r, "x + w"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "(x"), ParseError);
  CHECK_THROWS_AS(P(r, "x/0"), ParseError);
}

TEST_CASE("orders") {
  auto m = [](std::vector<Exponent> e) { return Monomial(std::move(e)); };
  auto grevlex = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  // Higher index ranks higher.
  CHECK(grevlex.compare(m({0, 0, 1}), m({1, 0, 0})) > 0);
  CHECK(lex.compare(m({0, 0, 1}), m({5, 5, 0})) > 0);
  // Degree first for grevlex.
  CHECK(grevlex.compare(m({2, 0, 0}), m({0, 0, 1})) > 0);
  // Reverse lexicographic tie-break: z*x < y^2 (smaller exponent on the
  // lowest variable wins).
  CHECK(grevlex.compare(m({1, 0, 1}), m({0, 2, 0})) < 0);
  // Elimination of the first variable.
  auto elim = MonomialOrder::elimination(1);
  CHECK(elim.compare(m({1, 0, 0}), m({0, 5, 5})) > 0);
  CHECK(elim.compare(m({0, 1, 0}), m({0, 0, 1})) < 0);
  CHECK(grevlex.compare(m({1, 1, 0}), m({1, 1, 0})) == 0);
}

TEST_CASE("order properties on random monomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Exponent> e(0, 3);
  auto rand_mono = [&] {
    std::vector<Exponent> v(4);
    for (auto& x : v) x = e(rng);
    return Monomial(v);
  };
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
    for (int t = 0; t < 300; ++t) {
      Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) CHECK(order.compare(a * c, b * c) < 0);
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
      CHECK(order.compare(a * c, a) >= 0);
    }
  }
}

TEST_CASE("apply_map") {
  Params p = Params::make(3, 3);
  RingMap pi = blowup_comorphism(p);
  auto src = pi.source();
  auto dst = pi.target();
  CHECK(pi(Polynomial::variable(src, "T_1_2")) == P(dst, "Tinf*T_1_2"));
  CHECK(pi(Polynomial::variable(src, "T_1_4")) == P(dst, "T_1_4"));
  CHECK(pi(Polynomial::variable(src, "T_4_5")) == P(dst, "T_4_5"));

  RingMap sigma = segre_map(p);
  CHECK(sigma(Polynomial::variable(sigma.source(), "T_1_4")) == P(sigma.target(), "S_1*S_4"));
  CHECK(sigma(Polynomial::variable(sigma.source(), "T_1_2")) == P(sigma.target(), "S_1_2"));

  auto r = xyz();
  auto f = P(r, "x^2*y - z + 7");
  CHECK(RingMap::identity(r)(f) == f);

  auto target = make_ring({"s", "t"});
  RingMap conic(r, target, {P(target, "s^2"), P(target, "s*t"), P(target, "t^2")});
  CHECK(conic(P(r, "y^2 - x*z")).is_zero());
  CHECK_THROWS(RingMap(r, target, {P(target, "s")}));
}

TEST_CASE("apply_map is a homomorphism") {
  std::mt19937 rng(99);
  auto r = xyz();
  auto t = make_ring({"u", "v"});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) images.push_back(testing::random_polynomial(rng, t, 3, 1));
    RingMap phi(r, t, images);
    auto f = testing::random_polynomial(rng, r);
    auto g = testing::random_polynomial(rng, r);
    CHECK(phi(f * g) == phi(f) * phi(g));
    CHECK(phi(f + g) == phi(f) + phi(g));
  }
}

TEST_CASE("multidegree") {
  Params p = Params::make(3, 3);
  auto pres = cox_presentation(p);
  auto f = P(pres.ring, "Tinf*T_1_2*T_4_5 - T_1_4*T_2_5 + T_1_5*T_2_4");
  auto md = multidegree(f, pres.grading);
  REQUIRE(md.kind == MultiDegree::Kind::homogeneous);
  // Tinf (0,0,1) + T_1_2 (1,1,-1) + T_4_5 (1,-1,0); T_1_4 T_2_5 agrees.
  CHECK(md.degree == to_int_vector({2, 0, 0}));

  CHECK(multidegree(P(pres.ring, "T_1_2 + T_4_5"), pres.grading).kind ==
        MultiDegree::Kind::inhomogeneous);
  auto one = multidegree(Polynomial::constant(pres.ring, 1), pres.grading);
  REQUIRE(one.kind == MultiDegree::Kind::homogeneous);
  CHECK(one.degree == to_int_vector({0, 0, 0}));
  CHECK(multidegree(Polynomial(pres.ring), pres.grading).kind == MultiDegree::Kind::zero);
}

TEST_CASE("multidegree is additive on products") {
  auto pres = cox_presentation(Params::make(3, 4));
  for (std::size_t a = 0; a < pres.relations.size(); a += 3) {
    for (std::size_t b = 0; b < pres.relations.size(); b += 5) {
      auto da = multidegree(pres.relations[a], pres.grading);
      auto db = multidegree(pres.relations[b], pres.grading);
      auto dab = multidegree(pres.relations[a] * pres.relations[b], pres.grading);
      REQUIRE(dab.kind == MultiDegree::Kind::homogeneous);
      IntVector sum(3);
      for (int i = 0; i < 3; ++i) sum[i] = da.degree[i] + db.degree[i];
      CHECK(dab.degree == sum);
    }
  }
}

TEST_CASE("evaluate and support") {
  auto r = xyz();
  auto f = P(r, "x*y - 2*z");
  CHECK(f.evaluate({Rational(2), Rational(3), Rational(1)}) == 4);
  auto s = f.support();
  CHECK(s == std::vector<bool>{true, true, true});
  CHECK(P(r, "x - y").is_binomial_pm1());
  CHECK_FALSE(P(r, "x - 2*y").is_binomial_pm1());
  CHECK_FALSE(P(r, "x + y").is_binomial_pm1());
}
