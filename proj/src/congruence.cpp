#include "frameforge/congruence.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace frameforge {

namespace {

void check_element(const BooleanFrame& frame, Element a) {
  if (a >= frame.size())
    throw Error(Errc::ValueOutOfRange,
                "element " + std::to_string(a) + " is out of range");
}

}  // namespace

bool is_congruential(const BooleanFrame& frame, Element a) {
  check_element(frame, a);
  const std::size_t n = frame.size();
  for (Element x = 0; x < n; ++x) {
    const Element fx = frame.f[x];
    // y runs over x ^ d for d <= a.
    for (Element d = a;; d = (d - 1) & a) {
      if (!BooleanFrame::leq(fx ^ frame.f[x ^ d], a)) return false;
      if (d == 0) break;
    }
  }
  return true;
}

std::vector<Element> congruence_generators(const BooleanFrame& frame) {
  std::vector<Element> out;
  for (Element a = 0; a < frame.size(); ++a)
    if (is_congruential(frame, a)) out.push_back(a);
  return out;
}

Element principal_congruence(const BooleanFrame& frame, Element x, Element y) {
  check_element(frame, x);
  check_element(frame, y);
  const std::size_t n = frame.size();
  Element a = x ^ y;
  for (;;) {
    Element next = a;
    for (Element u = 0; u < n; ++u) {
      const Element fu = frame.f[u];
      for (Element d = a;; d = (d - 1) & a) {
        next |= fu ^ frame.f[u ^ d];
        if (d == 0) break;
      }
    }
    if (next == a) return a;
    a = next;
  }
}

Quotient quotient(const BooleanFrame& frame, Element a) {
  if (!is_congruential(frame, a))
    throw Error(Errc::NotCongruential,
                "element " + std::to_string(a) + " is not congruential");
  const Element rest = frame.complement(a);
  const int m = std::popcount(rest);

  // quotient atom j is the j-th set bit of ~a, ascending
  std::vector<int> positions;
  for (int i = 0; i < frame.atoms; ++i)
    if (rest & (Element(1) << i)) positions.push_back(i);

  auto compress = [&](Element x) {
    Element out = 0;
    for (int j = 0; j < m; ++j)
      if (x & (Element(1) << positions[j])) out |= Element(1) << j;
    return out;
  };

  const std::size_t qn = std::size_t(1) << m;
  std::vector<Element> qf(qn);
  for (Element q = 0; q < qn; ++q) {
    Element rep = 0;
    for (int j = 0; j < m; ++j)
      if (q & (Element(1) << j)) rep |= Element(1) << positions[j];
    qf[q] = compress(frame.f[rep] & rest);
  }

  std::vector<Element> elem_map(frame.size());
  for (Element x = 0; x < frame.size(); ++x) elem_map[x] = compress(x & rest);

  std::string name;
  if (!frame.name.empty()) name = frame.name + "/" + std::to_string(a);
  return Quotient{BooleanFrame{std::move(name), m, std::move(qf)},
                  std::move(elem_map)};
}

bool is_simple(const BooleanFrame& frame) {
  if (frame.atoms == 0)
    throw Error(Errc::TrivialFrame,
                "simplicity is only defined for nontrivial frames");
  for (Element a = 1; a < frame.full(); ++a)
    if (is_congruential(frame, a)) return false;
  return true;
}

std::vector<std::vector<Element>> CongruencePartition::blocks() const {
  int count = 0;
  for (int id : block_of) count = std::max(count, id + 1);
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(count));
  for (std::size_t x = 0; x < block_of.size(); ++x)
    out[static_cast<std::size_t>(block_of[x])].push_back(
        static_cast<Element>(x));
  return out;
}

void for_each_partition(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      visit(block_of);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      block_of[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(max_used, b));
    }
  };
  if (n == 0) {
    visit(block_of);
    return;
  }
  block_of[0] = 0;
  rec(1, 0);
}

CongruencePartition generator_partition(const BooleanFrame& frame, Element a) {
  check_element(frame, a);
  const std::size_t n = frame.size();
  std::vector<int> block_of(n, -1);
  int next = 0;
  for (Element x = 0; x < n; ++x) {
    if (block_of[x] >= 0) continue;
    const int id = next++;
    // the class of x is { x ^ d : d <= a }
    for (Element d = a;; d = (d - 1) & a) {
      block_of[x ^ d] = id;
      if (d == 0) break;
    }
  }
  return CongruencePartition{std::move(block_of)};
}

std::vector<CongruencePartition> partition_oracle(const BooleanFrame& frame,
                                                  int oracle_max) {
  if (frame.atoms > oracle_max)
    throw Error(Errc::TooLarge,
                "partition oracle is limited to " +
                    std::to_string(oracle_max) + " atoms");
  const std::size_t n = frame.size();
  const int ni = static_cast<int>(n);
  std::vector<CongruencePartition> out;
  for_each_partition(ni, [&](const std::vector<int>& block_of) {
    for (int x = 0; x < ni; ++x)
      for (int y = x + 1; y < ni; ++y) {
        if (block_of[x] != block_of[y]) continue;
        const Element ex = static_cast<Element>(x);
        const Element ey = static_cast<Element>(y);
        if (block_of[frame.complement(ex)] != block_of[frame.complement(ey)])
          return;
        if (block_of[frame.f[ex]] != block_of[frame.f[ey]]) return;
        for (Element z = 0; z < n; ++z)
          if (block_of[ex & z] != block_of[ey & z]) return;
      }
    out.push_back(CongruencePartition{block_of});
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frameforge
