#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frameforge/congruence.hpp"
#include "frameforge/frame.hpp"

namespace frameforge {

/// A subuniverse of a Boolean frame: sorted element list containing 0 and
/// full, closed under meet, complement and f. Its minimal nonzero members
/// (the relative atoms) partition the ambient atom set.
struct Subalgebra {
  std::vector<Element> elements;

  bool operator==(const Subalgebra&) const = default;
  bool contains(Element x) const;
};

/// Canonical order for subalgebras: by size, then by element list.
bool subalgebra_less(const Subalgebra& a, const Subalgebra& b);

bool is_closed_subuniverse(const BooleanFrame& frame, const Subalgebra& sub);

/// Least subalgebra containing the generators (closure of {0} when empty).
Subalgebra generated_subalgebra(const BooleanFrame& frame,
                                const std::vector<Element>& generators);

/// Every subalgebra, via atom partitions: each partition of the atom set
/// induces the Boolean subalgebra of block unions; keep the f-closed ones.
/// Output in canonical order.
std::vector<Subalgebra> all_subalgebras(const BooleanFrame& frame,
                                        int bell_max_atoms = 9);

struct RelativeFrame {
  BooleanFrame frame;
  std::vector<Element> rel_atoms;  // ambient mask of each relative atom
  std::vector<Element> embedding;  // relative element -> ambient element

  /// Inverse of the embedding for elements of the subalgebra.
  Element index_of(Element ambient) const;
};

/// Standalone view of a subalgebra; relative atoms are ordered by their
/// least ambient atom.
RelativeFrame relative_frame(const BooleanFrame& frame, const Subalgebra& sub);

/// Lexicographically least f-table over all atom permutations.
BooleanFrame canonical_form(const BooleanFrame& frame, int canon_max_atoms = 8);

/// A set of pairwise non-isomorphic frames in canonical form, ordered by
/// (atoms, table).
struct IsoClassSet {
  std::vector<BooleanFrame> classes;

  void insert(BooleanFrame canonical);
  bool contains(const BooleanFrame& canonical) const;
  bool operator==(const IsoClassSet& o) const;
};

struct StructureLimits {
  int max_atoms = default_max_atoms();
  int bell_max_atoms = 9;
  int canon_max_atoms = 8;
};

/// Iso classes of quotients of subalgebras.
IsoClassSet hs_classes(const BooleanFrame& frame,
                       const StructureLimits& limits = {});

/// Iso classes of subalgebras of quotients.
IsoClassSet sh_classes(const BooleanFrame& frame,
                       const StructureLimits& limits = {});

struct HsShVerdict {
  bool equal = true;
  IsoClassSet hs;
  IsoClassSet sh;
  /// On failure: a canonical frame in the symmetric difference and the
  /// side ("hs-only" or "sh-only") it came from.
  std::optional<BooleanFrame> witness;
  std::string witness_side;
};

HsShVerdict hs_equals_sh(const BooleanFrame& frame,
                         const StructureLimits& limits = {});

struct FraserHornVerdict {
  bool holds = true;
  std::vector<Element> product_generators;
  std::vector<Element> expected_generators;
  /// First generator in the symmetric difference, when the check fails.
  std::optional<Element> witness;
};

/// Congruential elements of a product are exactly the pairs of factor
/// congruential elements.
FraserHornVerdict fraser_horn_check(const BooleanFrame& a,
                                    const BooleanFrame& b,
                                    int max_atoms = default_max_atoms());

}  // namespace frameforge
