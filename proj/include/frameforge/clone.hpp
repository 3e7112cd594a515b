#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frameforge/frame.hpp"
#include "frameforge/structure.hpp"
#include "frameforge/term.hpp"

namespace frameforge {

/// A unary term operation: its value table plus the first term found that
/// derives it (a one-variable term in x).
struct UnaryTable {
  std::vector<Element> table;
  Term derivation;
};

/// The unary term clone: closure of {0, 1, x} under pointwise complement,
/// pointwise meet and post-composition with f. complete is false when the
/// member cap stopped the closure (members are truncated at the cap).
struct CloneResult {
  std::vector<UnaryTable> members;
  bool complete = true;
};

/// Worklist closure, deterministic member order. op_name labels the frame
/// operation inside derivation terms ("f" by default).
CloneResult unary_clone(const BooleanFrame& frame,
                        std::uint64_t cap = std::uint64_t(1) << 20,
                        const std::string& op_name = "f");

/// Members whose table satisfies h(x|y) = h(x)|h(y) for all pairs.
std::vector<UnaryTable> additive_members(const CloneResult& result);

/// Is f term-equivalent, over the Boolean reduct, to an additive operation
/// on the same algebra? Sound and complete via the unary clones: term
/// equivalence forces g into Clo1(A,f) and f into Clo1(A,g).
struct AdditiveEquivalence {
  enum class Status { Equivalent, NotEquivalent, Inconclusive };
  Status status = Status::Inconclusive;
  /// When equivalent: the additive witness with its defining term over f,
  /// and the term over g that defines f back.
  std::optional<UnaryTable> witness_g;
  std::optional<Term> f_term;
};

const char* additive_equivalence_status_name(AdditiveEquivalence::Status s);

AdditiveEquivalence additive_equivalence(const BooleanFrame& frame,
                                         std::uint64_t cap = std::uint64_t(1)
                                                             << 20);

/// Names of the 2-element frames (two:id, two:zero, two:one, two:swap)
/// present in hs_classes; an empty result certifies that f is not
/// term-definable from any additive (or monotone) operation.
std::vector<std::string> hs_two_element_check(
    const BooleanFrame& frame, const StructureLimits& limits = {});

/// Search for the switching table d(0)=0, d(x)=1 for x!=0 inside the unary
/// clone, with early exit.
struct SwitchingSearch {
  enum class Status { Found, AbsentComplete, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<UnaryTable> term;
};

const char* switching_status_name(SwitchingSearch::Status s);

SwitchingSearch find_switching_term(const BooleanFrame& frame,
                                    std::uint64_t cap = std::uint64_t(1)
                                                        << 20);

/// Builds t(x,y,z) = (d(x^y) & x) | (-d(x^y) & z) from a switching table
/// and verifies the discriminator case split over all triples.
bool verify_discriminator(const BooleanFrame& frame,
                          const std::vector<Element>& switching_table);

}  // namespace frameforge
