#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frameforge/error.hpp"

namespace frameforge {

/// One member of a finite Boolean algebra, encoded as a bitmask over atoms:
/// bit i is set iff atom i belongs to the subset. All Boolean structure is
/// derived from the encoding (meet = AND, join = OR, complement = XOR with
/// the full mask, symmetric difference = XOR, order = mask inclusion).
using Element = std::uint32_t;

inline int default_max_atoms() { return 10; }

/// A finite Boolean algebra of 2^atoms elements together with one arbitrary
/// unary operation f, stored as a total table. Immutable after construction.
struct BooleanFrame {
  std::string name;        // optional identifier, "" = unnamed
  int atoms = 0;           // k; atoms == 0 is the one-element algebra
  std::vector<Element> f;  // size 2^atoms, entry x holds f(x)

  std::size_t size() const { return f.size(); }
  Element full() const { return static_cast<Element>(f.size() - 1); }
  Element apply(Element x) const { return f[x]; }
  Element complement(Element x) const { return full() & ~x; }
  static bool leq(Element x, Element y) { return (x & y) == x; }

  bool same_table(const BooleanFrame& o) const {
    return atoms == o.atoms && f == o.f;
  }
  bool operator==(const BooleanFrame& o) const {
    return name == o.name && atoms == o.atoms && f == o.f;
  }
};

/// A finite Kripke frame: worlds 0..worlds-1 and an accessibility relation.
struct KripkeFrame {
  int worlds = 0;
  std::vector<std::pair<int, int>> edges;

  /// succ(w) as a bitmask per world.
  std::vector<Element> successor_masks() const;
};

enum class Modality { Diamond, Box };

/// A bijection on atom indices; acts on Elements by permuting bits.
struct AtomPermutation {
  std::vector<int> images;  // atom i maps to images[i]

  Element apply(Element x) const {
    Element out = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (x & (Element(1) << i)) out |= Element(1) << images[i];
    return out;
  }
};

enum class RandomConstraint { None, Normal, Additive, Star };

/// Validates and builds a frame from an explicit table.
BooleanFrame make_frame(int atoms, std::vector<Element> table,
                        std::string name = "",
                        int max_atoms = default_max_atoms());

/// Named frames: "example1", "example-sh", "cycle:N" (N>=2),
/// "wheel:N" (N>=5), "two:FT" (FT in {id, zero, one, swap}).
BooleanFrame builtin_frame(const std::string& spec,
                           int max_atoms = default_max_atoms());

/// The additive map sending each subset to the join of its atoms' images.
BooleanFrame additive_extension(int atoms,
                                const std::vector<Element>& atom_images,
                                std::string name = "",
                                int max_atoms = default_max_atoms());

/// Wheel frame: n rim worlds related within distance 1 mod n (reflexive),
/// plus a hub related both ways to every world including itself.
KripkeFrame wheel_kripke(int n);

/// Powerset algebra of the worlds with f(X) = worlds seeing X (diamond)
/// or worlds seeing only X (box).
BooleanFrame complex_algebra(const KripkeFrame& frame, Modality modality,
                             int max_atoms = default_max_atoms());

/// Direct product; a's atoms occupy the low bits and f acts coordinatewise.
BooleanFrame product_frame(const BooleanFrame& a, const BooleanFrame& b,
                           int max_atoms = default_max_atoms());

/// Pairing of factor elements into the product encoding of product_frame.
inline Element product_pair(const BooleanFrame& a, Element x, Element y) {
  return x | (y << a.atoms);
}

/// Deterministic pseudo-random frame for the given (atoms, seed, constraint).
/// The star constraint rejection-samples until the quasi-equation
/// x^y <= z => f(x)^f(y) <= f(z) holds, within the retry budget.
BooleanFrame random_frame(int atoms, std::uint64_t seed,
                          RandomConstraint constraint,
                          int max_atoms = default_max_atoms(),
                          int star_retry_budget = 10000);

/// Exhaustive search for an atom permutation p with p(f_a(x)) = f_b(p(x));
/// empty when the frames are not isomorphic.
std::optional<AtomPermutation> is_isomorphic(const BooleanFrame& a,
                                             const BooleanFrame& b);

/// Direct check of the quasi-equation x^y <= z => f(x)^f(y) <= f(z).
/// Used by random_frame's rejection loop; the terms module re-derives the
/// same property from its parsed form.
bool satisfies_star_quasi_equation(const BooleanFrame& frame);

}  // namespace frameforge
