#pragma once

#include <cstdint>
#include <vector>

#include "frameforge/frame.hpp"

namespace frameforge {

/// The seeded frame corpus backing the oracle-equivalence, implication and
/// product suites. Contents are fully determined by the base seed.
struct Corpus {
  /// All 256 frames with two atoms (every possible f-table).
  static std::vector<BooleanFrame> all_two_atom_frames();

  /// count pseudo-random three-atom frames, seeds base+0 .. base+count-1.
  static std::vector<BooleanFrame> random_three_atom(std::uint64_t base_seed,
                                                     int count = 200);

  /// count additively extended three-atom frames.
  static std::vector<BooleanFrame> additive_three_atom(std::uint64_t base_seed,
                                                       int count = 100);

  /// Up to count two-atom frames satisfying the star quasi-equation;
  /// attempts whose rejection budget runs out are skipped.
  static std::vector<BooleanFrame> star_two_atom(std::uint64_t base_seed,
                                                 int count = 100);

  /// count seeded pairs of two-atom frames for the product suites.
  static std::vector<std::pair<BooleanFrame, BooleanFrame>> product_pairs(
      std::uint64_t base_seed, int count = 50);
};

}  // namespace frameforge
