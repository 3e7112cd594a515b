// Acceptance suite: runs every claim of the built-in regression set and
// prints one pass/fail line per criterion, with details for any failing
// claim. Exit status is nonzero when any claim fails.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <vector>

#include "frameforge/claims.hpp"

int main() {
  std::uint64_t seed = 0;
  if (const char* s = std::getenv("FRAMEFORGE_SEED"))
    seed = std::strtoull(s, nullptr, 10);

  const frameforge::ClaimReport report = frameforge::run_all_claims(seed);

  std::map<int, std::pair<int, int>> per_criterion;  // criterion -> (pass, total)
  for (const auto& c : report.claims) {
    auto& [pass, total] = per_criterion[c.criterion];
    ++total;
    if (c.pass) ++pass;
  }

  int failures = 0;
  for (const auto& [criterion, counts] : per_criterion) {
    const auto [pass, total] = counts;
    std::printf("criterion %d: %s (%d/%d claims)\n", criterion,
                pass == total ? "PASS" : "FAIL", pass, total);
    for (const auto& c : report.claims)
      if (c.criterion == criterion && !c.pass) {
        ++failures;
        std::printf("  FAIL %s [%s] %s\n", c.id.c_str(), c.anchor.c_str(),
                    c.detail.c_str());
      }
  }

  if (!report.open_questions.empty()) {
    std::printf("open questions:\n");
    for (const auto& q : report.open_questions)
      std::printf("  - %s\n", q.c_str());
  }

  std::printf("acceptance: %zu claims, %d failing\n", report.claims.size(),
              failures);
  return failures == 0 ? 0 : 1;
}
