#include "frameforge/corpus.hpp"

namespace frameforge {

std::vector<BooleanFrame> Corpus::all_two_atom_frames() {
  std::vector<BooleanFrame> out;
  out.reserve(256);
  for (unsigned code = 0; code < 256; ++code) {
    std::vector<Element> f = {
        static_cast<Element>(code & 3), static_cast<Element>((code >> 2) & 3),
        static_cast<Element>((code >> 4) & 3),
        static_cast<Element>((code >> 6) & 3)};
    out.push_back(BooleanFrame{"k2-" + std::to_string(code), 2, std::move(f)});
  }
  return out;
}

std::vector<BooleanFrame> Corpus::random_three_atom(std::uint64_t base_seed,
                                                    int count) {
  std::vector<BooleanFrame> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(random_frame(3, base_seed + static_cast<std::uint64_t>(i),
                               RandomConstraint::None));
  return out;
}

std::vector<BooleanFrame> Corpus::additive_three_atom(std::uint64_t base_seed,
                                                      int count) {
  std::vector<BooleanFrame> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(random_frame(3, base_seed + static_cast<std::uint64_t>(i),
                               RandomConstraint::Additive));
  return out;
}

std::vector<BooleanFrame> Corpus::star_two_atom(std::uint64_t base_seed,
                                                int count) {
  std::vector<BooleanFrame> out;
  for (int i = 0; i < count; ++i) {
    try {
      out.push_back(random_frame(2, base_seed + static_cast<std::uint64_t>(i),
                                 RandomConstraint::Star));
    } catch (const Error& e) {
      if (e.code() != Errc::RetryExhausted) throw;
    }
  }
  return out;
}

std::vector<std::pair<BooleanFrame, BooleanFrame>> Corpus::product_pairs(
    std::uint64_t base_seed, int count) {
  std::vector<std::pair<BooleanFrame, BooleanFrame>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = base_seed + 1000 + 2 * static_cast<std::uint64_t>(i);
    out.emplace_back(random_frame(2, s, RandomConstraint::None),
                     random_frame(2, s + 1, RandomConstraint::None));
  }
  return out;
}

}  // namespace frameforge
