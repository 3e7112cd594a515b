#pragma once

#include <functional>
#include <vector>

#include "frameforge/frame.hpp"

namespace frameforge {

/// Congruences of a finite Boolean frame are stored as single elements:
/// the downset of a congruential element a is a congruential ideal, and in
/// a finite Boolean algebra every congruential ideal arises this way.

/// True iff x^y <= a implies f(x)^f(y) <= a for all x, y.
bool is_congruential(const BooleanFrame& frame, Element a);

/// All congruential elements, ascending. Always contains 0 and the full
/// mask, and is closed under meet.
std::vector<Element> congruence_generators(const BooleanFrame& frame);

/// The least congruential element above x^y, by fixpoint iteration:
/// a0 = x^y, a_{i+1} = a_i joined with every f(u)^f(v) for u^v <= a_i.
Element principal_congruence(const BooleanFrame& frame, Element x, Element y);

struct Quotient {
  BooleanFrame frame;
  /// ambient element -> quotient element (class of x is represented by
  /// x & ~a, compressed onto the set bits of ~a in ascending position).
  std::vector<Element> elem_map;
};

/// Quotient by the congruence generated by a congruential element.
Quotient quotient(const BooleanFrame& frame, Element a);

/// Nontrivial frame whose only congruential elements are 0 and full.
bool is_simple(const BooleanFrame& frame);

/// A partition of the element set, as block ids in restricted-growth form
/// (block_of[0] == 0, each new block id is one above the maximum so far).
struct CongruencePartition {
  std::vector<int> block_of;

  bool operator==(const CongruencePartition&) const = default;
  bool operator<(const CongruencePartition& o) const {
    return block_of < o.block_of;
  }

  std::vector<std::vector<Element>> blocks() const;
};

/// Brute-force oracle: all partitions of the element set compatible with
/// meet, complement and f. Only for frames with at most oracle_max atoms.
std::vector<CongruencePartition> partition_oracle(const BooleanFrame& frame,
                                                  int oracle_max = 3);

/// The partition induced by a congruential element (x ~ y iff x^y <= a).
CongruencePartition generator_partition(const BooleanFrame& frame, Element a);

/// Enumerates all set partitions of {0..n-1} in restricted-growth order.
void for_each_partition(int n,
                        const std::function<void(const std::vector<int>&)>& visit);

}  // namespace frameforge
