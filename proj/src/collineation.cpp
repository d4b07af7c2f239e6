#include "coxpres/collineation.hpp"

#include <algorithm>

namespace coxpres {

namespace {

std::size_t choose2(int k) { return k < 2 ? 0 : static_cast<std::size_t>(k * (k - 1) / 2); }

std::string s_pair(int i, int j) { return "S_" + std::to_string(i) + "_" + std::to_string(j); }
std::string s_single(int k) { return "S_" + std::to_string(k); }

Polynomial var(const RingPtr& ring, const std::string& name) {
  return Polynomial::variable(ring, name);
}

}  // namespace

Params Params::make(int c, int d) {
  if (c < 2 || d < 2)
    throw UnsupportedParams("unsupported parameters: need c >= 2 and d >= 2, got c=" +
                            std::to_string(c) + " d=" + std::to_string(d));
  return Params{c, d};
}

std::size_t Params::n() const { return choose2(c + d); }
std::size_t Params::a_plus() const { return choose2(c); }
std::size_t Params::a_zero() const { return static_cast<std::size_t>(c * d); }
std::size_t Params::a_minus() const { return choose2(d); }

std::string to_string(Regime r) {
  switch (r) {
    case Regime::general: return "general";
    case Regime::c2: return "c2";
    case Regime::d2: return "d2";
    case Regime::p3: return "p3";
  }
  return "?";
}

Block block_of(const Params& p, int i, int j) {
  if (i > j) std::swap(i, j);
  if (j <= p.c) return Block::plus;
  if (i <= p.c) return Block::zero;
  return Block::minus;
}

std::vector<IndexPair> plucker_pairs(const Params& p) {
  std::vector<IndexPair> out;
  for (Block b : {Block::plus, Block::zero, Block::minus})
    for (int i = 1; i <= p.m(); ++i)
      for (int j = i + 1; j <= p.m(); ++j)
        if (block_of(p, i, j) == b) out.emplace_back(i, j);
  return out;
}

std::string plucker_name(int i, int j) {
  return "T_" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<Quadruple> quadruples(int m) {
  std::vector<Quadruple> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l) out.push_back({i, j, k, l});
  return out;
}

bool carries_tinf(const Params& p, const Quadruple& q) {
  return q[1] <= p.c && q[2] > p.c;
}

RingPtr grassmann_ring(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) names.push_back(plucker_name(i, j));
  return make_ring(std::move(names));
}

Polynomial plucker_relation(const RingPtr& ring, const Quadruple& q) {
  auto t = [&](int a, int b) { return var(ring, plucker_name(a, b)); };
  const auto [i, j, k, l] = q;
  return t(i, j) * t(k, l) - t(i, k) * t(j, l) + t(i, l) * t(j, k);
}

std::vector<Polynomial> plucker_relations(int m) {
  std::vector<Polynomial> out;
  if (m < 4) return out;
  RingPtr ring = grassmann_ring(m);
  for (const auto& q : quadruples(m)) out.push_back(plucker_relation(ring, q));
  return out;
}

RingMap map_by_name(const RingPtr& source, const RingPtr& target) {
  std::vector<Polynomial> images;
  for (const auto& name : source->vars.names()) images.push_back(var(target, name));
  return RingMap(source, target, std::move(images));
}

RingPtr plucker_space_ring(const Params& p) {
  std::vector<std::string> names;
  for (auto [i, j] : plucker_pairs(p)) names.push_back(plucker_name(i, j));
  return make_ring(std::move(names));
}

RingPtr presentation_ring(const Params& p) {
  std::vector<std::string> names;
  for (auto [i, j] : plucker_pairs(p)) names.push_back(plucker_name(i, j));
  names.emplace_back(kTinf);
  return make_ring(std::move(names));
}

WeightMatrices weight_matrices(const Params& p) {
  auto pairs = plucker_pairs(p);
  const std::size_t n = pairs.size();
  WeightMatrices w{IntMatrix(2, n), IntMatrix(3, n + 1)};
  for (std::size_t j = 0; j < n; ++j) {
    w.q(0, j) = 1;
    w.q_inf(0, j) = 1;
    switch (block_of(p, pairs[j].first, pairs[j].second)) {
      case Block::plus:
        w.q(1, j) = 1;
        w.q_inf(1, j) = 1;
        w.q_inf(2, j) = -1;
        break;
      case Block::zero:
        break;
      case Block::minus:
        w.q(1, j) = -1;
        w.q_inf(1, j) = -1;
        break;
    }
  }
  w.q_inf(2, n) = 1;
  return w;
}

IntMatrix gale_matrix_P(const Params& p) {
  const std::size_t n = p.n();
  const std::array<std::size_t, 3> sizes{p.a_plus(), p.a_zero(), p.a_minus()};
  IntMatrix out(n - 2, n);
  std::size_t row = 0, col = 0;
  for (std::size_t k : sizes) {
    for (std::size_t r = 0; r + 1 < k; ++r, ++row) {
      out(row, col + r) = 1;
      out(row, col + r + 1) = -1;
    }
    col += k;
  }
  // Bottom row (A+, A0, A-).
  const std::size_t last = n - 3;
  const std::size_t zero_begin = sizes[0], minus_begin = sizes[0] + sizes[1];
  out(last, zero_begin - 1) += 1;
  out(last, zero_begin) += -1;
  out(last, minus_begin - 1) += -1;
  out(last, minus_begin) += 1;
  return out;
}

CoxPresentation cox_presentation(const Params& p) {
  CoxPresentation pres;
  pres.params = p;
  if (p.c == 2 && p.d == 2) {
    pres.regime = Regime::p3;
    pres.ring = make_ring({"T_0", "T_1", "T_2", "T_3"});
    pres.grading.degrees = IntMatrix{{1, 1, 1, 1}};
    pres.class_group_rank = 1;
    return pres;
  }
  auto w = weight_matrices(p);
  if (!p.general()) {
    pres.regime = p.d == 2 ? Regime::c2 : Regime::d2;
    pres.ring = plucker_space_ring(p);
    for (const auto& q : quadruples(p.m()))
      pres.relations.push_back(plucker_relation(pres.ring, q));
    pres.grading.degrees = w.q;
    pres.class_group_rank = 2;
    return pres;
  }
  pres.regime = Regime::general;
  pres.ring = presentation_ring(p);
  const Polynomial tinf = var(pres.ring, kTinf);
  for (const auto& q : quadruples(p.m())) {
    const auto [i, j, k, l] = q;
    auto t = [&](int a, int b) { return var(pres.ring, plucker_name(a, b)); };
    Polynomial lead = t(i, j) * t(k, l);
    if (carries_tinf(p, q)) lead = tinf * lead;
    pres.relations.push_back(lead - t(i, k) * t(j, l) + t(i, l) * t(j, k));
  }
  pres.grading.degrees = w.q_inf;
  pres.class_group_rank = 3;
  return pres;
}

RingMap blowup_comorphism(const Params& p) {
  RingPtr src = plucker_space_ring(p);
  RingPtr dst = presentation_ring(p);
  const Polynomial tinf = var(dst, kTinf);
  std::vector<Polynomial> images;
  for (auto [i, j] : plucker_pairs(p)) {
    Polynomial t = var(dst, plucker_name(i, j));
    images.push_back(block_of(p, i, j) == Block::plus ? tinf * t : t);
  }
  return RingMap(src, dst, std::move(images));
}

PullbackResult pullback_and_cancel(const Params& p, const Quadruple& q) {
  if (!(1 <= q[0] && q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] <= p.m()))
    throw std::invalid_argument("invalid quadruple");
  RingMap phi = blowup_comorphism(p);
  PullbackResult res;
  res.pulled = phi(plucker_relation(phi.source(), q));
  const std::size_t tinf = phi.target()->vars.size() - 1;
  Exponent eps = ~Exponent{0};
  for (const auto& t : res.pulled.terms()) eps = std::min(eps, t.mono[tinf]);
  if (res.pulled.is_zero()) eps = 0;
  res.epsilon = eps;
  Monomial divisor = Monomial::variable(phi.target()->vars.size(), tinf, eps);
  std::vector<Term> terms;
  for (const auto& t : res.pulled.terms()) terms.push_back({t.coef, t.mono / divisor});
  res.reduced = Polynomial::from_terms(phi.target(), std::move(terms));
  return res;
}

RingPtr segre_target_ring(const Params& p) {
  std::vector<std::string> names;
  for (int a = 1; a <= p.c; ++a)
    for (int b = a + 1; b <= p.c; ++b) names.push_back(s_pair(a, b));
  for (int k = 1; k <= p.m(); ++k) names.push_back(s_single(k));
  for (int g = p.c + 1; g <= p.m(); ++g)
    for (int h = g + 1; h <= p.m(); ++h) names.push_back(s_pair(g, h));
  return make_ring(std::move(names));
}

RingMap segre_map(const Params& p) {
  RingPtr src = plucker_space_ring(p);
  RingPtr dst = segre_target_ring(p);
  std::vector<Polynomial> images;
  for (auto [i, j] : plucker_pairs(p)) {
    if (block_of(p, i, j) == Block::zero)
      images.push_back(var(dst, s_single(i)) * var(dst, s_single(j)));
    else
      images.push_back(var(dst, s_pair(i, j)));
  }
  return RingMap(src, dst, std::move(images));
}

IntMatrix segre_exponent_matrix(const Params& p) {
  RingMap sigma = segre_map(p);
  const std::size_t rows = sigma.target()->vars.size();
  const std::size_t cols = sigma.source()->vars.size();
  IntMatrix e(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& img = sigma.images()[j];
    const auto& mono = img.leading().mono;
    for (std::size_t r = 0; r < rows; ++r) e(r, j) = static_cast<unsigned long>(mono[r]);
  }
  return e;
}

ProofIdeals proof_ideals(const Params& p) {
  if (!p.general()) throw UnsupportedParams("proof ideals need c, d > 2");
  ProofIdeals out;
  RingMap sigma = segre_map(p);
  out.a_ring = sigma.source();
  out.b_ring = sigma.target();
  {
    std::vector<std::string> n1, n2;
    for (int a = 1; a <= p.c; ++a)
      for (int b = a + 1; b <= p.c; ++b) n1.push_back(s_pair(a, b));
    for (int k = 1; k <= p.c; ++k) n1.push_back(s_single(k));
    for (int k = p.c + 1; k <= p.m(); ++k) n2.push_back(s_single(k));
    for (int g = p.c + 1; g <= p.m(); ++g)
      for (int h = g + 1; h <= p.m(); ++h) n2.push_back(s_pair(g, h));
    out.b1_ring = make_ring(std::move(n1));
    out.b2_ring = make_ring(std::move(n2));
  }
  const RingPtr& A = out.a_ring;
  const RingPtr& B = out.b_ring;
  auto t = [&](int a, int b) { return var(A, plucker_name(a, b)); };
  auto sp = [&](const RingPtr& r, int a, int b) { return var(r, s_pair(a, b)); };
  auto ss = [&](const RingPtr& r, int k) { return var(r, s_single(k)); };
  const int c = p.c, m = p.m();

  for (const auto& q : quadruples(m)) {
    const auto [i, j, k, l] = q;
    if (carries_tinf(p, q)) {
      out.g_quadruples.push_back(q);
      out.g.push_back(-(t(i, k) * t(j, l)) + t(i, l) * t(j, k));
      continue;
    }
    out.h_quadruples.push_back(q);
    Polynomial h = plucker_relation(A, q);
    out.sigma_h.push_back(sigma(h));
    out.h.push_back(std::move(h));
    Polynomial table(B);
    if (l <= c || i > c) {
      table = sp(B, i, j) * sp(B, k, l) - sp(B, i, k) * sp(B, j, l) +
              sp(B, i, l) * sp(B, j, k);
    } else if (k <= c) {
      table = ss(B, l) * (sp(B, i, j) * ss(B, k) - sp(B, i, k) * ss(B, j) +
                          ss(B, i) * sp(B, j, k));
    } else {
      table = ss(B, i) * (ss(B, j) * sp(B, k, l) - ss(B, k) * sp(B, j, l) +
                          ss(B, l) * sp(B, j, k));
    }
    out.sigma_h_table.push_back(std::move(table));
  }

  auto families = [&](const RingPtr& r, bool first, bool second,
                      std::vector<Polynomial>& dst) {
    if (first) {
      for (const auto& q : quadruples(c)) {
        const auto [i, j, k, l] = q;
        dst.push_back(sp(r, i, j) * sp(r, k, l) - sp(r, i, k) * sp(r, j, l) +
                      sp(r, i, l) * sp(r, j, k));
      }
      for (int i = 1; i <= c; ++i)
        for (int j = i + 1; j <= c; ++j)
          for (int k = j + 1; k <= c; ++k)
            dst.push_back(sp(r, i, j) * ss(r, k) - sp(r, i, k) * ss(r, j) +
                          ss(r, i) * sp(r, j, k));
    }
    if (second) {
      for (int j = c + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k)
          for (int l = k + 1; l <= m; ++l)
            dst.push_back(ss(r, j) * sp(r, k, l) - ss(r, k) * sp(r, j, l) +
                          ss(r, l) * sp(r, j, k));
      for (const auto& q : quadruples(m)) {
        const auto [i, j, k, l] = q;
        if (i <= c) continue;
        dst.push_back(sp(r, i, j) * sp(r, k, l) - sp(r, i, k) * sp(r, j, l) +
                      sp(r, i, l) * sp(r, j, k));
      }
    }
  };
  families(B, true, true, out.b);
  families(out.b1_ring, true, false, out.b1);
  families(out.b2_ring, false, true, out.b2);
  return out;
}

RingMap rename_b1(const Params& p, const ProofIdeals& ideals) {
  RingPtr dst = grassmann_ring(p.c + 1);
  const int e = p.c + 1;
  std::vector<Polynomial> images;
  for (int a = 1; a <= p.c; ++a)
    for (int b = a + 1; b <= p.c; ++b) images.push_back(var(dst, plucker_name(a, b)));
  for (int k = 1; k <= p.c; ++k) images.push_back(var(dst, plucker_name(k, e)));
  return RingMap(ideals.b1_ring, dst, std::move(images));
}

RingMap rename_b2(const Params& p, const ProofIdeals& ideals) {
  RingPtr dst = grassmann_ring(p.d + 1);
  auto shift = [&](int x) { return x - p.c + 1; };
  std::vector<Polynomial> images;
  for (int k = p.c + 1; k <= p.m(); ++k) images.push_back(var(dst, plucker_name(1, shift(k))));
  for (int g = p.c + 1; g <= p.m(); ++g)
    for (int h = g + 1; h <= p.m(); ++h)
      images.push_back(var(dst, plucker_name(shift(g), shift(h))));
  return RingMap(ideals.b2_ring, dst, std::move(images));
}

std::vector<Rational> evaluate_relations(const Params& p, const WitnessPoint& x) {
  RingPtr ring = plucker_space_ring(p);
  auto pairs = plucker_pairs(p);
  std::vector<Rational> point(pairs.size(), Rational(0));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    auto it = x.coords.find(pairs[j]);
    if (it != x.coords.end()) point[j] = it->second;
  }
  std::vector<Rational> out;
  for (const auto& q : quadruples(p.m()))
    out.push_back(plucker_relation(ring, q).evaluate(point));
  return out;
}

RationalCone orbit_cone(const Params& p, const WitnessPoint& x) {
  auto q = weight_matrices(p).q;
  auto pairs = plucker_pairs(p);
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    auto it = x.coords.find(pairs[j]);
    if (it != x.coords.end() && sgn(it->second) != 0) gens.push_back(q.column(j));
  }
  return RationalCone(2, std::move(gens));
}

Witnesses witness_points(const Params& p) {
  Witnesses w;
  const int m = p.m();
  w.x1.coords = {{{1, 2}, Rational(1)}, {{1, m}, Rational(1)}};
  w.x2.coords = {{{1, m}, Rational(1)}, {{m - 1, m}, Rational(1)}};
  w.residuals1 = evaluate_relations(p, w.x1);
  w.residuals2 = evaluate_relations(p, w.x2);
  w.omega1 = orbit_cone(p, w.x1);
  w.omega2 = orbit_cone(p, w.x2);
  return w;
}

IntVector local_equation_degree(const Params& p, long middle_exponent) {
  auto w = weight_matrices(p);
  auto pairs = plucker_pairs(p);
  const int m = p.m();
  std::vector<long> exps(pairs.size() + 1, 0);
  auto idx = [&](int i, int j) {
    return static_cast<std::size_t>(
        std::find(pairs.begin(), pairs.end(), IndexPair{i, j}) - pairs.begin());
  };
  exps[pairs.size()] += 1;
  exps[idx(1, 2)] += 1;
  exps[idx(p.c, p.c + 1)] += middle_exponent;
  exps[idx(m - 1, m)] += 1;
  IntVector deg(3, BigInt(0));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t j = 0; j < exps.size(); ++j) deg[r] += w.q_inf(r, j) * exps[j];
  return deg;
}

bool local_equation_invariance(const Params& p, long middle_exponent) {
  auto deg = local_equation_degree(p, middle_exponent);
  return std::all_of(deg.begin(), deg.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

std::vector<IntVector> generator_degrees(const CoxPresentation& pres) {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < pres.grading.degrees.cols(); ++j)
    out.push_back(pres.grading.degrees.column(j));
  return out;
}

bool same_polynomial_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  auto key = [](const Polynomial& f) { return to_string(f); };
  auto by_key = [&](const Polynomial& x, const Polynomial& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace coxpres
