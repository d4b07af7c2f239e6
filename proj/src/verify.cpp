#include "coxpres/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace coxpres {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status: " + s);
}

bool VerificationReport::any_failed() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

bool VerificationReport::any_budget_skip() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.budget_exceeded; });
}

namespace {

struct Outcome {
  bool applicable = true;
  bool pass = false;
  std::string expected;
  std::string actual;
};

Outcome not_applicable(const std::string& why) { return {false, false, why, why}; }

Outcome compare(const std::string& expected, const std::string& actual) {
  return {true, expected == actual, expected, actual};
}

std::string join_cones(const std::vector<RationalCone>& cones) {
  std::string out;
  for (const auto& c : cones) {
    if (!out.empty()) out += ' ';
    out += "cone(";
    for (std::size_t i = 0; i < c.generators().size(); ++i) {
      if (i) out += ',';
      out += to_string(c.generators()[i]);
    }
    out += ')';
  }
  return out;
}

RationalCone cone2(std::initializer_list<std::initializer_list<long>> rays) {
  std::vector<IntVector> gens;
  for (auto r : rays) gens.push_back(to_int_vector(r));
  const std::size_t dim = gens.front().size();
  return RationalCone(dim, std::move(gens));
}

IntVector table_degree(const Params& p, int i, int j) {
  switch (block_of(p, i, j)) {
    case Block::plus: return to_int_vector({1, 1, -1});
    case Block::zero: return to_int_vector({1, 0, 0});
    case Block::minus: return to_int_vector({1, -1, 0});
  }
  return {};
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Shared lazily-built objects for one verification run.
struct Context {
  Params p;
  GroebnerOptions options;
  CoxPresentation pres;
  std::optional<IdealPresentation> ideal_i;

  const IdealPresentation& I() {
    if (!ideal_i) ideal_i.emplace(pres.ring, pres.relations);
    return *ideal_i;
  }
};

Outcome check_presentation(Context& ctx) {
  const Params& p = ctx.p;
  const auto& pres = ctx.pres;
  std::ostringstream exp, act;
  if (pres.regime == Regime::p3) {
    exp << "regime=p3 vars=4 rels=0 grading=1111";
    act << "regime=" << to_string(pres.regime) << " vars=" << pres.ring->vars.size()
        << " rels=" << pres.relations.size() << " grading=";
    for (std::size_t j = 0; j < pres.grading.degrees.cols(); ++j)
      for (std::size_t r = 0; r < pres.grading.degrees.rows(); ++r) act << pres.grading.degrees(r, j);
    return compare(exp.str(), act.str());
  }
  if (!p.general()) {
    exp << "regime=" << (p.d == 2 ? "c2" : "d2") << " vars=" << p.n()
        << " rels=" << binom(static_cast<std::size_t>(p.m()), 4) << " rank=2";
    act << "regime=" << to_string(pres.regime) << " vars=" << pres.ring->vars.size()
        << " rels=" << pres.relations.size() << " rank=" << pres.class_group_rank;
    return compare(exp.str(), act.str());
  }
  const std::size_t tinf_rels = p.a_plus() * p.a_minus();
  exp << "vars=" << p.n() + 1 << " rels=" << binom(static_cast<std::size_t>(p.m()), 4)
      << " with_tinf=" << tinf_rels << " degree_table=ok tinf_pattern=ok";

  const std::size_t tinf = pres.ring->vars.size() - 1;
  std::size_t with_tinf = 0;
  bool pattern_ok = pres.ring->vars.name(tinf) == kTinf;
  auto qs = quadruples(p.m());
  for (std::size_t r = 0; r < pres.relations.size() && r < qs.size(); ++r) {
    bool has = pres.relations[r].support()[tinf];
    with_tinf += has;
    if (has != carries_tinf(p, qs[r])) pattern_ok = false;
  }
  bool degrees_ok = pres.grading.degrees.rows() == 3 &&
                    pres.grading.degrees.cols() == pres.ring->vars.size();
  auto pairs = plucker_pairs(p);
  for (std::size_t j = 0; degrees_ok && j < pairs.size(); ++j)
    degrees_ok = pres.grading.degrees.column(j) == table_degree(p, pairs[j].first, pairs[j].second) &&
                 pres.ring->vars.name(j) == plucker_name(pairs[j].first, pairs[j].second);
  if (degrees_ok) degrees_ok = pres.grading.degrees.column(tinf) == to_int_vector({0, 0, 1});
  act << "vars=" << pres.ring->vars.size() << " rels=" << pres.relations.size()
      << " with_tinf=" << with_tinf << " degree_table=" << (degrees_ok ? "ok" : "mismatch")
      << " tinf_pattern=" << (pattern_ok ? "ok" : "mismatch");
  return compare(exp.str(), act.str());
}

Outcome check_grading(Context& ctx) {
  std::size_t inhomogeneous = 0;
  for (const auto& f : ctx.pres.relations)
    if (multidegree(f, ctx.pres.grading).kind != MultiDegree::Kind::homogeneous) ++inhomogeneous;
  return compare("inhomogeneous=0", "inhomogeneous=" + std::to_string(inhomogeneous));
}

Outcome check_gale(Context& ctx) {
  const Params& p = ctx.p;
  auto q = weight_matrices(p).q;
  auto pm = gale_matrix_P(p);
  std::ostringstream exp, act;
  exp << "PQt=0 rank=" << p.n() - 2 << " lattice=kernel(Q) last_a-_sum=e_last";
  bool zero = (pm * q.transpose()).is_zero();
  bool lattice = row_lattice_basis(pm) == kernel_basis(q);
  std::vector<std::size_t> last;
  for (std::size_t j = p.n() - p.a_minus(); j < p.n(); ++j) last.push_back(j);
  IntVector sum(pm.rows(), BigInt(0));
  for (auto j : last)
    for (std::size_t r = 0; r < pm.rows(); ++r) sum[r] += pm(r, j);
  IntVector e_last(pm.rows(), BigInt(0));
  e_last.back() = 1;
  act << "PQt=" << (zero ? "0" : "nonzero") << " rank=" << rank(pm)
      << " lattice=" << (lattice ? "kernel(Q)" : "differs")
      << " last_a-_sum=" << (sum == e_last ? "e_last" : to_string(sum));
  return compare(exp.str(), act.str());
}

Outcome check_pullback(Context& ctx) {
  const Params& p = ctx.p;
  if (!p.general()) return not_applicable("pullback applies for c,d > 2");
  std::vector<Polynomial> reduced;
  std::size_t eps_mismatch = 0;
  for (const auto& q : quadruples(p.m())) {
    auto res = pullback_and_cancel(p, q);
    unsigned expected = q[3] <= p.c ? 2u : (q[2] <= p.c ? 1u : 0u);
    if (res.epsilon != expected) ++eps_mismatch;
    reduced.push_back(res.reduced);
  }
  bool same = same_polynomial_set(reduced, ctx.pres.relations);
  return compare("eps_mismatch=0 set=I",
                 "eps_mismatch=" + std::to_string(eps_mismatch) + " set=" + (same ? "I" : "differs"));
}

Outcome check_gitfan(Context& ctx) {
  const Params& p = ctx.p;
  auto fan = git_fan(weight_matrices(p).q);
  auto w = witness_points(p);
  RationalCone l1 = cone2({{1, 1}, {1, 0}}), l2 = cone2({{1, 0}, {1, -1}});
  auto zero = [](const std::vector<Rational>& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
  };
  std::string exp = "chambers=" + join_cones({l1, l2}) + " residuals=0 omega1=" +
                    join_cones({l1}) + " omega2=" + join_cones({l2});
  std::string act = "chambers=" + join_cones(fan.chambers) +
                    " residuals=" + (zero(w.residuals1) && zero(w.residuals2) ? "0" : "nonzero") +
                    " omega1=" + join_cones({w.omega1}) + " omega2=" + join_cones({w.omega2});
  return compare(exp, act);
}

Outcome check_fan(Context& ctx) {
  const Params& p = ctx.p;
  auto q = weight_matrices(p).q;
  auto pm = gale_matrix_P(p);
  Fan sigma1 = quotient_fan(pm, q, to_int_vector({2, 1}));
  Fan sigma2 = quotient_fan(pm, q, to_int_vector({2, -1}));
  std::ostringstream exp, act;
  exp << "sigma1=" << p.a_plus() * (p.a_zero() + p.a_minus())
      << " sigma2=" << p.a_minus() * (p.a_zero() + p.a_plus()) << " simplicial=yes";
  act << "sigma1=" << sigma1.cones.size() << " sigma2=" << sigma2.cones.size()
      << " simplicial=" << (sigma1.simplicial && sigma2.simplicial ? "yes" : "no");
  if (p.general()) {
    std::vector<std::size_t> target;
    for (std::size_t j = p.n() - p.a_minus(); j < p.n(); ++j) target.push_back(j);
    IntVector ray = barycenter_direction(pm, target);
    Fan sub = stellar_subdivide(sigma1, target, ray);
    IntVector e_last(pm.rows(), BigInt(0));
    e_last.back() = 1;
    exp << " ray=e_last subdivided=" << p.a_plus() * p.a_minus() + p.a_plus() * p.a_zero() * p.a_minus();
    act << " ray=" << (ray == e_last ? "e_last" : to_string(ray)) << " subdivided=" << sub.cones.size();
  }
  return compare(exp.str(), act.str());
}

Outcome check_segre(Context& ctx) {
  const Params& p = ctx.p;
  if (!p.general()) return not_applicable("Segre structure applies for c,d > 2");
  auto ideals = proof_ideals(p);
  RingMap sigma = segre_map(p);
  std::size_t g_nonzero = 0, table_mismatch = 0;
  for (const auto& g : ideals.g)
    if (!sigma(g).is_zero()) ++g_nonzero;
  for (std::size_t i = 0; i < ideals.sigma_h.size(); ++i)
    if (!(ideals.sigma_h[i] == ideals.sigma_h_table[i])) ++table_mismatch;
  RingMap r1 = rename_b1(p, ideals), r2 = rename_b2(p, ideals);
  std::vector<Polynomial> b1, b2;
  for (const auto& f : ideals.b1) b1.push_back(r1(f));
  for (const auto& f : ideals.b2) b2.push_back(r2(f));
  bool b1_ok = same_polynomial_set(b1, plucker_relations(p.c + 1));
  bool b2_ok = same_polynomial_set(b2, plucker_relations(p.d + 1));
  std::ostringstream act;
  act << "sigma(g)!=0:" << g_nonzero << " table_mismatch:" << table_mismatch
      << " b'=" << (b1_ok ? "G(2,c+1)" : "differs") << " b''=" << (b2_ok ? "G(2,d+1)" : "differs");
  return compare("sigma(g)!=0:0 table_mismatch:0 b'=G(2,c+1) b''=G(2,d+1)", act.str());
}

Outcome check_dimension(Context& ctx) {
  const Params& p = ctx.p;
  std::ostringstream exp, act;
  if (!p.general()) {
    std::size_t expected = ctx.pres.regime == Regime::p3 ? 4 : static_cast<std::size_t>(2 * (p.m() - 2) + 1);
    exp << "dim=" << expected;
    act << "dim=" << krull_dimension(ctx.I(), ctx.options);
    return compare(exp.str(), act.str());
  }
  auto gens = ctx.pres.relations;
  gens.push_back(Polynomial::variable(ctx.pres.ring, kTinf));
  IdealPresentation j(ctx.pres.ring, gens);
  auto ideals = proof_ideals(p);
  IdealPresentation b1(ideals.b1_ring, ideals.b1), b2(ideals.b2_ring, ideals.b2);
  exp << "dimJ=" << 2 * p.m() - 3 << " dimI=" << 2 * p.m() - 2 << " dimb'=" << 2 * p.c - 1
      << " dimb''=" << 2 * p.d - 1;
  act << "dimJ=" << krull_dimension(j, ctx.options) << " dimI=" << krull_dimension(ctx.I(), ctx.options)
      << " dimb'=" << krull_dimension(b1, ctx.options) << " dimb''=" << krull_dimension(b2, ctx.options);
  return compare(exp.str(), act.str());
}

Outcome check_saturation(Context& ctx) {
  if (!ctx.p.general()) return not_applicable("saturation check applies for c,d > 2");
  Polynomial tinf = Polynomial::variable(ctx.pres.ring, kTinf);
  const auto& I = ctx.I();
  IdealPresentation sat = saturate(I, tinf, ctx.options);
  bool equal = ideal_equal(sat, I, ctx.options);
  bool member = I.contains(tinf, ctx.options);
  return compare("I:Tinf^inf=I Tinf_in_I=no",
                 std::string("I:Tinf^inf=") + (equal ? "I" : "larger") +
                     " Tinf_in_I=" + (member ? "yes" : "no"));
}

Outcome check_toric(Context& ctx) {
  const Params& p = ctx.p;
  if (!p.general()) return not_applicable("toric kernel check applies for c,d > 2");
  auto ideals = proof_ideals(p);
  IdealPresentation kernel = toric_kernel(segre_exponent_matrix(p), ideals.a_ring, ctx.options);
  IdealPresentation g(ideals.a_ring, ideals.g);
  bool binomial = std::all_of(kernel.groebner_basis(ctx.options).begin(),
                              kernel.groebner_basis(ctx.options).end(),
                              [](const Polynomial& f) { return f.is_binomial_pm1(); });
  return compare("ker(sigma)=<g> binomial=yes",
                 std::string("ker(sigma)=") + (ideal_equal(kernel, g, ctx.options) ? "<g>" : "differs") +
                     " binomial=" + (binomial ? "yes" : "no"));
}

Outcome check_mori(Context& ctx) {
  if (!ctx.p.general()) return not_applicable("Mori cones apply for c,d > 2");
  auto cones = mori_cones(generator_degrees(ctx.pres));
  IntVector w1 = to_int_vector({1, 1, -1}), w2 = to_int_vector({1, 0, 0}),
            w3 = to_int_vector({1, -1, 0}), w4 = to_int_vector({0, 0, 1});
  RationalCone eff(3, {w1, w3, w4}), mov(3, {w1, w2, w3});
  bool w2_inside = cones.effective.contains(w2, Membership::relative_interior);
  IntVector twice(3);
  for (std::size_t i = 0; i < 3; ++i) twice[i] = w1[i] + w3[i] + w4[i] - 2 * w2[i];
  bool relation = std::all_of(twice.begin(), twice.end(), [](const BigInt& x) { return sgn(x) == 0; });
  return compare("Eff=" + join_cones({eff}) + " Mov=" + join_cones({mov}) + " w2_in_Eff=yes 2w2=w1+w3+w4",
                 "Eff=" + join_cones({cones.effective}) + " Mov=" + join_cones({cones.movable}) +
                     " w2_in_Eff=" + (w2_inside ? "yes" : "no") + (relation ? " 2w2=w1+w3+w4" : " relation_broken"));
}

Outcome check_degenerate(Context& ctx) {
  const Params& p = ctx.p;
  const auto& pres = ctx.pres;
  if (p.general()) return not_applicable("degenerate regimes need c = 2 or d = 2");
  if (pres.regime == Regime::p3) {
    bool ok = pres.ring->vars.size() == 4 && pres.relations.empty() &&
              pres.grading.degrees == IntMatrix{{1, 1, 1, 1}};
    return compare("free rank-4, standard Z-grading", ok ? "free rank-4, standard Z-grading" : "differs");
  }
  RingMap rename = map_by_name(grassmann_ring(p.m()), pres.ring);
  std::vector<Polynomial> expected;
  for (const auto& f : plucker_relations(p.m())) expected.push_back(rename(f));
  bool rel_ok = same_polynomial_set(expected, pres.relations);
  bool grading_ok = pres.grading.degrees == weight_matrices(p).q;
  return compare("Pluecker ideal of G(2," + std::to_string(p.m()) + "), Q-grading",
                 std::string(rel_ok ? "Pluecker ideal of G(2," + std::to_string(p.m()) + ")" : "relations differ") +
                     (grading_ok ? ", Q-grading" : ", grading differs"));
}

Outcome check_localeq(Context& ctx) {
  const Params& p = ctx.p;
  if (!p.general()) return not_applicable("local equation applies for c,d > 2");
  auto deg = local_equation_degree(p);
  bool perturbed = local_equation_invariance(p, -1);
  return compare("deg=(0,0,0) perturbed_invariant=no",
                 "deg=" + to_string(deg) + " perturbed_invariant=" + (perturbed ? "yes" : "no"));
}

using CheckFn = Outcome (*)(Context&);

struct CheckEntry {
  const char* id;
  CheckFn fn;
  bool heavy;
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> checks{
      {"presentation", check_presentation, false},
      {"grading", check_grading, false},
      {"gale", check_gale, false},
      {"pullback", check_pullback, false},
      {"gitfan", check_gitfan, false},
      {"fan", check_fan, false},
      {"segre", check_segre, false},
      {"dimension", check_dimension, true},
      {"saturation", check_saturation, true},
      {"toric", check_toric, true},
      {"mori", check_mori, false},
      {"degenerate", check_degenerate, false},
      {"localeq", check_localeq, false},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.emplace_back(c.id);
    return out;
  }();
  return ids;
}

bool is_known_check(const std::string& id) {
  const auto& ids = all_check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_groebner_heavy(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c.heavy;
  throw std::invalid_argument("unknown check: " + id);
}

std::vector<std::string> default_checks(const Params& p) {
  const bool small = p.c <= 4 && p.d <= 4 && p.m() <= 7;
  std::vector<std::string> out;
  for (const auto& c : registry())
    if (!c.heavy || small) out.emplace_back(c.id);
  return out;
}

VerificationReport run_verification(const Params& p, const std::vector<std::string>& ids,
                                    const GroebnerOptions& options) {
  std::set<std::string> wanted;
  for (const auto& id : ids) {
    if (!is_known_check(id)) throw std::invalid_argument("unknown check: " + id);
    wanted.insert(id);
  }
  Context ctx{p, options, cox_presentation(p), std::nullopt};
  VerificationReport report;
  for (const auto& entry : registry()) {
    if (!wanted.count(entry.id)) continue;
    CheckRecord rec;
    rec.id = entry.id;
    rec.c = p.c;
    rec.d = p.d;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = entry.fn(ctx);
      rec.expected = o.expected;
      rec.actual = o.actual;
      rec.status = !o.applicable ? CheckStatus::skipped : (o.pass ? CheckStatus::pass : CheckStatus::fail);
    } catch (const BudgetExceeded& e) {
      rec.status = CheckStatus::skipped;
      rec.budget_exceeded = true;
      rec.expected = "completion within " + std::to_string(e.budget()) + " pairs";
      rec.actual = e.what();
    }
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace coxpres
