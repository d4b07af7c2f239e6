#pragma once

// JSON and text renderings of presentations, cones, fans and reports, plus
// the Singular script export.

#include "coxpres/collineation.hpp"
#include "coxpres/geometry.hpp"
#include "coxpres/verify.hpp"

#include <json.hpp>

#include <string>

namespace coxpres {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

/// Term list: [{"coef": c, "exponents": {name: e, ...}}, ...]
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);

Json presentation_to_json(const CoxPresentation& pres);
CoxPresentation presentation_from_json(const Json& j);
bool operator==(const CoxPresentation& a, const CoxPresentation& b);

Json cone_to_json(const RationalCone& cone);
RationalCone cone_from_json(const Json& j);

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

std::string presentation_to_text(const CoxPresentation& pres);
std::string report_to_text(const VerificationReport& report);

/// Singular script defining the ring (degree-reverse-lex) and the ideal of
/// relations, with the grading recorded in comments.
std::string cas_export(const CoxPresentation& pres);

}  // namespace coxpres
