#include "frameforge/clone.hpp"

#include <algorithm>
#include <map>

namespace frameforge {

namespace {

/// Shared closure driver. Stops early when the optional target table shows
/// up; the complete flag is false when the cap cut the closure.
CloneResult close_unary(const BooleanFrame& frame, std::uint64_t cap,
                        const std::string& op_name,
                        const std::vector<Element>* target,
                        std::size_t* target_index) {
  if (cap < 3)
    throw Error(Errc::ValueOutOfRange, "clone cap must be at least 3");
  const std::size_t n = frame.size();
  const Element full = frame.full();

  CloneResult result;
  std::map<std::vector<Element>, std::size_t> index;
  bool stop = false;  // cap hit or target found

  auto add = [&](std::vector<Element> table, Term term) {
    auto it = index.find(table);
    if (it != index.end()) return;
    if (result.members.size() >= cap) {
      result.complete = false;
      stop = true;
      return;
    }
    const bool hit = target && table == *target;
    index.emplace(table, result.members.size());
    result.members.push_back(UnaryTable{std::move(table), std::move(term)});
    if (hit) {
      if (target_index) *target_index = result.members.size() - 1;
      stop = true;
    }
  };

  add(std::vector<Element>(n, 0), Term::zero());
  if (!stop) add(std::vector<Element>(n, full), Term::one());
  if (!stop) {
    std::vector<Element> ident(n);
    for (Element x = 0; x < n; ++x) ident[x] = x;
    add(std::move(ident), Term::var("x"));
  }

  for (std::size_t i = 0; i < result.members.size() && !stop; ++i) {
    // copies: members may reallocate while we append
    const std::vector<Element> h = result.members[i].table;
    const Term ht = result.members[i].derivation;

    std::vector<Element> compl_table(n), post_f(n);
    for (Element x = 0; x < n; ++x) {
      compl_table[x] = full & ~h[x];
      post_f[x] = frame.f[h[x]];
    }
    add(std::move(compl_table), Term::complement(ht));
    if (stop) break;
    add(std::move(post_f), Term::apply(op_name, ht));

    for (std::size_t j = 0; j <= i && !stop; ++j) {
      std::vector<Element> meet_table(n);
      for (Element x = 0; x < n; ++x)
        meet_table[x] = result.members[j].table[x] & h[x];
      add(std::move(meet_table), Term::meet(result.members[j].derivation, ht));
    }
  }
  return result;
}

}  // namespace

CloneResult unary_clone(const BooleanFrame& frame, std::uint64_t cap,
                        const std::string& op_name) {
  return close_unary(frame, cap, op_name, nullptr, nullptr);
}

std::vector<UnaryTable> additive_members(const CloneResult& result) {
  std::vector<UnaryTable> out;
  for (const auto& member : result.members) {
    const std::size_t n = member.table.size();
    bool additive = true;
    for (Element x = 0; x < n && additive; ++x)
      for (Element y = 0; y < n; ++y)
        if (member.table[x | y] != (member.table[x] | member.table[y])) {
          additive = false;
          break;
        }
    if (additive) out.push_back(member);
  }
  return out;
}

const char* additive_equivalence_status_name(AdditiveEquivalence::Status s) {
  switch (s) {
    case AdditiveEquivalence::Status::Equivalent: return "equivalent";
    case AdditiveEquivalence::Status::NotEquivalent: return "not-equivalent";
    case AdditiveEquivalence::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

AdditiveEquivalence additive_equivalence(const BooleanFrame& frame,
                                         std::uint64_t cap) {
  AdditiveEquivalence out;
  const CloneResult clo_f = unary_clone(frame, cap, "f");
  bool capped = !clo_f.complete;
  for (const auto& g : additive_members(clo_f)) {
    BooleanFrame frame_g{"", frame.atoms, g.table};
    const CloneResult clo_g = unary_clone(frame_g, cap, "g");
    capped = capped || !clo_g.complete;
    for (const auto& member : clo_g.members)
      if (member.table == frame.f) {
        out.status = AdditiveEquivalence::Status::Equivalent;
        out.witness_g = g;
        out.f_term = member.derivation;
        return out;
      }
  }
  out.status = capped ? AdditiveEquivalence::Status::Inconclusive
                      : AdditiveEquivalence::Status::NotEquivalent;
  return out;
}

std::vector<std::string> hs_two_element_check(const BooleanFrame& frame,
                                              const StructureLimits& limits) {
  const IsoClassSet hs = hs_classes(frame, limits);
  std::vector<std::string> present;
  for (const char* name : {"two:id", "two:zero", "two:one", "two:swap"}) {
    const BooleanFrame two = builtin_frame(name);
    if (hs.contains(canonical_form(two, limits.canon_max_atoms)))
      present.emplace_back(name);
  }
  std::sort(present.begin(), present.end());
  return present;
}

const char* switching_status_name(SwitchingSearch::Status s) {
  switch (s) {
    case SwitchingSearch::Status::Found: return "found";
    case SwitchingSearch::Status::AbsentComplete: return "absent-complete";
    case SwitchingSearch::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

SwitchingSearch find_switching_term(const BooleanFrame& frame,
                                    std::uint64_t cap) {
  if (frame.atoms == 0)
    throw Error(Errc::TrivialFrame,
                "switching terms need a nontrivial frame");
  std::vector<Element> target(frame.size(), frame.full());
  target[0] = 0;
  std::size_t idx = static_cast<std::size_t>(-1);
  const CloneResult result = close_unary(frame, cap, "f", &target, &idx);
  SwitchingSearch search;
  if (idx < result.members.size() && result.members[idx].table == target) {
    search.status = SwitchingSearch::Status::Found;
    search.term = result.members[idx];
  } else if (result.complete) {
    search.status = SwitchingSearch::Status::AbsentComplete;
  } else {
    search.status = SwitchingSearch::Status::Inconclusive;
  }
  return search;
}

bool verify_discriminator(const BooleanFrame& frame,
                          const std::vector<Element>& switching_table) {
  if (switching_table.size() != frame.size())
    throw Error(Errc::LengthMismatch, "switching table has the wrong size");
  if (frame.atoms == 0) return true;  // one element: vacuous
  const Element full = frame.full();
  if (switching_table[0] != 0)
    throw Error(Errc::NotSwitching, "table does not send 0 to 0");
  for (Element x = 1; x < frame.size(); ++x)
    if (switching_table[x] != full)
      throw Error(Errc::NotSwitching,
                  "table is not constant 1 away from 0 (input " +
                      std::to_string(x) + ")");
  const std::size_t n = frame.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element d = switching_table[a ^ b];
      for (Element c = 0; c < n; ++c) {
        const Element t = (d & a) | (full & ~d & c);
        if (a != b ? t != a : t != c) return false;
      }
    }
  return true;
}

}  // namespace frameforge
