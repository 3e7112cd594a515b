#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frameforge/frame.hpp"

namespace frameforge {

/// One verified claim of the built-in regression suite.
struct ClaimResult {
  std::string id;      // e.g. "c2.simple"
  std::string anchor;  // stable claim slug, e.g. "sh-example.simple"
  int criterion = 0;   // acceptance criterion 1..8
  bool pass = false;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimResult> claims;
  std::vector<std::string> open_questions;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

/// Runs the whole suite. The seed feeds the random corpora; the default 0
/// is the reference configuration.
ClaimReport run_all_claims(std::uint64_t corpus_seed = 0);

/// The claims about the 8-element frame with HS=SH but no CEP, checked
/// against the given frame; used by mutation tests.
std::vector<ClaimResult> example_sh_claims(const BooleanFrame& frame);

}  // namespace frameforge
