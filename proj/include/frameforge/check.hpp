#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frameforge/frame.hpp"
#include "frameforge/term.hpp"

namespace frameforge {

/// Variable binding, kept sorted by name.
using Assignment = std::vector<std::pair<std::string, Element>>;

enum class CheckStatus { Exhaustive, Sampled };

const char* check_status_name(CheckStatus s);

/// Outcome of a quasi-identity check. A false verdict always carries a
/// counterexample that re-verifies by direct evaluation.
struct Verdict {
  bool holds = true;
  CheckStatus status = CheckStatus::Exhaustive;
  std::optional<Assignment> counterexample;
};

struct CheckOptions {
  std::uint64_t eval_budget = std::uint64_t(1) << 26;
  bool force_exhaustive = false;  // over budget: throw instead of sampling
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  /// Optional table for the second named operation g, used to evaluate
  /// two-operation identities against a companion function.
  const std::vector<Element>* companion = nullptr;
};

/// Bottom-up evaluation; constants are 0 and the full mask.
Element eval_term(const BooleanFrame& frame, const Term& term,
                  const Assignment& assignment,
                  const std::vector<Element>* companion = nullptr);

bool eval_atom(const BooleanFrame& frame, const Atom& atom,
               const Assignment& assignment,
               const std::vector<Element>* companion = nullptr);

/// Checks all variable assignments when 2^(atoms * vars) fits the budget,
/// otherwise falls back to seeded sampling (or throws when exhaustiveness
/// was demanded). Assignments are scanned in increasing order with the
/// first variable most significant, so a reported counterexample is the
/// least failing one.
Verdict check_quasi_identity(const BooleanFrame& frame,
                             const QuasiIdentity& q,
                             const CheckOptions& options = {});

/// Named properties: additive, monotone, normal, conormal, extensive, star.
Verdict builtin_property(const BooleanFrame& frame, const std::string& name,
                         const CheckOptions& options = {});

/// The parsed formula behind a named property.
const QuasiIdentity& property_formula(const std::string& name);

const std::vector<std::string>& property_names();

}  // namespace frameforge
