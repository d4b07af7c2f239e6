#pragma once

// Registry of verification checks over the X(2,c,d) constructions.

#include "coxpres/collineation.hpp"
#include "coxpres/groebner.hpp"

#include <string>
#include <vector>

namespace coxpres {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckRecord {
  std::string id;
  int c = 0;
  int d = 0;
  CheckStatus status = CheckStatus::skipped;
  std::string expected;
  std::string actual;
  double wall_time_ms = 0.0;
  bool budget_exceeded = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool any_failed() const;
  bool any_budget_skip() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// All check ids in report order.
const std::vector<std::string>& all_check_ids();
bool is_groebner_heavy(const std::string& id);
bool is_known_check(const std::string& id);

/// Every check, except Groebner-heavy ones when c > 4, d > 4 or c + d > 7.
std::vector<std::string> default_checks(const Params& p);

/// Runs the selected checks; records come back in registry order whatever
/// order `ids` lists them in. Unknown ids throw std::invalid_argument.
VerificationReport run_verification(const Params& p, const std::vector<std::string>& ids,
                                    const GroebnerOptions& options = {});

}  // namespace coxpres
