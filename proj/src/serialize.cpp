#include "coxpres/serialize.hpp"

#include <sstream>

namespace coxpres {

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json rational_to_json(const Rational& v) {
  if (v.get_den() == 1) return bigint_to_json(v.get_num());
  return Json(v.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument("expected an integer or rational string");
}

namespace {

Json vector_to_json(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(bigint_to_json(x));
  return arr;
}

IntVector vector_from_json(const Json& j) {
  IntVector out;
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

}  // namespace

Json polynomial_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) exps[f.ring()->vars.name(i)] = t.mono[i];
    terms.push_back(Json{{"coef", rational_to_json(t.coef)}, {"exponents", exps}});
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    Monomial m(ring->vars.size());
    std::vector<Exponent> exps(ring->vars.size(), 0);
    for (const auto& [name, e] : t.at("exponents").items()) {
      auto idx = ring->vars.index_of(name);
      if (!idx) throw std::invalid_argument("unknown variable in JSON: " + name);
      exps[*idx] = e.get<Exponent>();
    }
    terms.push_back({rational_from_json(t.at("coef")), Monomial(std::move(exps))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Json presentation_to_json(const CoxPresentation& pres) {
  Json j;
  j["c"] = pres.params.c;
  j["d"] = pres.params.d;
  j["regime"] = to_string(pres.regime);
  j["class_group_rank"] = pres.class_group_rank;
  j["variables"] = pres.ring->vars.names();
  Json degrees = Json::object();
  for (std::size_t v = 0; v < pres.ring->vars.size(); ++v)
    degrees[pres.ring->vars.name(v)] = vector_to_json(pres.grading.degrees.column(v));
  j["degrees"] = degrees;
  Json rels = Json::array();
  for (const auto& f : pres.relations) rels.push_back(polynomial_to_json(f));
  j["relations"] = rels;
  return j;
}

CoxPresentation presentation_from_json(const Json& j) {
  CoxPresentation pres;
  pres.params = Params{j.at("c").get<int>(), j.at("d").get<int>()};
  const auto regime = j.at("regime").get<std::string>();
  if (regime == "general") pres.regime = Regime::general;
  else if (regime == "c2") pres.regime = Regime::c2;
  else if (regime == "d2") pres.regime = Regime::d2;
  else if (regime == "p3") pres.regime = Regime::p3;
  else throw std::invalid_argument("unknown regime: " + regime);
  pres.class_group_rank = j.at("class_group_rank").get<std::size_t>();
  pres.ring = make_ring(j.at("variables").get<std::vector<std::string>>());
  const std::size_t nv = pres.ring->vars.size();
  IntMatrix deg(pres.class_group_rank, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    IntVector col = vector_from_json(j.at("degrees").at(pres.ring->vars.name(v)));
    if (col.size() != pres.class_group_rank)
      throw std::invalid_argument("degree vector length differs from class group rank");
    for (std::size_t r = 0; r < col.size(); ++r) deg(r, v) = col[r];
  }
  pres.grading.degrees = std::move(deg);
  for (const auto& rel : j.at("relations"))
    pres.relations.push_back(polynomial_from_json(rel, pres.ring));
  return pres;
}

bool operator==(const CoxPresentation& a, const CoxPresentation& b) {
  return a.params.c == b.params.c && a.params.d == b.params.d && a.regime == b.regime &&
         a.class_group_rank == b.class_group_rank && *a.ring == *b.ring &&
         a.grading.degrees == b.grading.degrees && a.relations == b.relations;
}

Json cone_to_json(const RationalCone& cone) {
  Json rays = Json::array();
  for (const auto& g : cone.generators()) rays.push_back(vector_to_json(g));
  return Json{{"dim", cone.dim()}, {"rays", rays}};
}

RationalCone cone_from_json(const Json& j) {
  std::vector<IntVector> gens;
  for (const auto& r : j.at("rays")) gens.push_back(vector_from_json(r));
  return RationalCone(j.at("dim").get<std::size_t>(), std::move(gens));
}

Json fan_to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(vector_to_json(r));
  return Json{{"dim", fan.dim}, {"rays", rays}, {"cones", fan.cones}, {"simplicial", fan.simplicial}};
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  fan.dim = j.at("dim").get<std::size_t>();
  for (const auto& r : j.at("rays")) fan.rays.push_back(vector_from_json(r));
  fan.cones = j.at("cones").get<std::vector<std::vector<std::size_t>>>();
  fan.simplicial = j.at("simplicial").get<bool>();
  return fan;
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& r : report.records) {
    checks.push_back(Json{{"id", r.id},
                          {"c", r.c},
                          {"d", r.d},
                          {"status", to_string(r.status)},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"wall_time_ms", r.wall_time_ms},
                          {"budget_exceeded", r.budget_exceeded}});
  }
  return Json{{"checks", checks}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport report;
  for (const auto& c : j.at("checks")) {
    CheckRecord r;
    r.id = c.at("id").get<std::string>();
    r.c = c.at("c").get<int>();
    r.d = c.at("d").get<int>();
    r.status = check_status_from_string(c.at("status").get<std::string>());
    r.expected = c.at("expected").get<std::string>();
    r.actual = c.at("actual").get<std::string>();
    r.wall_time_ms = c.at("wall_time_ms").get<double>();
    r.budget_exceeded = c.value("budget_exceeded", false);
    report.records.push_back(std::move(r));
  }
  return report;
}

std::string presentation_to_text(const CoxPresentation& pres) {
  std::ostringstream os;
  os << "X(2," << pres.params.c << ',' << pres.params.d << ")  regime " << to_string(pres.regime)
     << "  class group Z^" << pres.class_group_rank << '\n';
  os << "variables (" << pres.ring->vars.size() << "), with degrees:\n";
  for (std::size_t v = 0; v < pres.ring->vars.size(); ++v)
    os << "  " << pres.ring->vars.name(v) << "  " << to_string(pres.grading.degrees.column(v)) << '\n';
  os << "relations (" << pres.relations.size() << "):\n";
  for (const auto& f : pres.relations) os << "  " << to_string(f) << '\n';
  return os.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    os << '[' << to_string(r.status) << "] " << r.id << " (c=" << r.c << ", d=" << r.d << ", "
       << static_cast<long>(r.wall_time_ms) << " ms)";
    if (r.status == CheckStatus::fail)
      os << "\n    expected: " << r.expected << "\n    actual:   " << r.actual;
    else
      os << "  " << r.actual;
    os << '\n';
  }
  return os.str();
}

std::string cas_export(const CoxPresentation& pres) {
  std::ostringstream os;
  os << "// Cox ring of X(2," << pres.params.c << ',' << pres.params.d << "), regime "
     << to_string(pres.regime) << '\n';
  os << "// degrees in Z^" << pres.class_group_rank << ":\n";
  for (std::size_t v = 0; v < pres.ring->vars.size(); ++v)
    os << "//   " << pres.ring->vars.name(v) << " " << to_string(pres.grading.degrees.column(v)) << '\n';
  // Singular's dp ranks the first listed variable highest; list in reverse so
  // the order matches ours.
  os << "ring R = 0, (";
  for (std::size_t v = pres.ring->vars.size(); v-- > 0;) {
    os << pres.ring->vars.name(v);
    if (v) os << ", ";
  }
  os << "), dp;\n";
  os << "ideal I =\n";
  if (pres.relations.empty()) os << "  0";
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    os << "  " << to_string(pres.relations[i]);
    if (i + 1 < pres.relations.size()) os << ",\n";
  }
  os << ";\n";
  os << "option(redSB);\n";
  os << "ideal G = std(I);\n";
  os << "print(G);\n";
  os << "dim(G);\n";
  return os.str();
}

}  // namespace coxpres
