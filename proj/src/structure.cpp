#include "frameforge/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace frameforge {

bool Subalgebra::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool subalgebra_less(const Subalgebra& a, const Subalgebra& b) {
  if (a.elements.size() != b.elements.size())
    return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

bool is_closed_subuniverse(const BooleanFrame& frame, const Subalgebra& sub) {
  if (sub.elements.empty() || !std::is_sorted(sub.elements.begin(),
                                              sub.elements.end()))
    return false;
  if (!sub.contains(0) || !sub.contains(frame.full())) return false;
  for (Element x : sub.elements) {
    if (x >= frame.size()) return false;
    if (!sub.contains(frame.complement(x))) return false;
    if (!sub.contains(frame.f[x])) return false;
    for (Element y : sub.elements)
      if (!sub.contains(x & y)) return false;
  }
  return true;
}

Subalgebra generated_subalgebra(const BooleanFrame& frame,
                                const std::vector<Element>& generators) {
  std::vector<char> in(frame.size(), 0);
  std::vector<Element> members;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  add(0);
  for (Element g : generators) {
    if (g >= frame.size())
      throw Error(Errc::ValueOutOfRange,
                  "generator " + std::to_string(g) + " is out of range");
    add(g);
  }
  // Closure under complement, f and pairwise meets; joins come for free.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element e = members[i];
    add(frame.complement(e));
    add(frame.f[e]);
    for (std::size_t j = 0; j <= i; ++j) add(e & members[j]);
  }
  std::sort(members.begin(), members.end());
  return Subalgebra{std::move(members)};
}

std::vector<Subalgebra> all_subalgebras(const BooleanFrame& frame,
                                        int bell_max_atoms) {
  if (frame.atoms > bell_max_atoms)
    throw Error(Errc::TooLarge,
                "subalgebra enumeration is limited to " +
                    std::to_string(bell_max_atoms) + " atoms");
  std::vector<Subalgebra> out;
  for_each_partition(frame.atoms, [&](const std::vector<int>& block_of) {
    int m = 0;
    for (int id : block_of) m = std::max(m, id + 1);
    std::vector<Element> block(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < frame.atoms; ++i)
      block[static_cast<std::size_t>(block_of[i])] |= Element(1) << i;

    std::vector<Element> elems(std::size_t(1) << m, 0);
    for (std::size_t s = 0; s < elems.size(); ++s) {
      Element u = 0;
      for (int j = 0; j < m; ++j)
        if (s & (std::size_t(1) << j)) u |= block[static_cast<std::size_t>(j)];
      elems[s] = u;
    }
    for (Element u : elems) {
      const Element fu = frame.f[u];
      for (Element b : block) {
        const Element inter = fu & b;
        if (inter != 0 && inter != b) return;  // f(u) is not a block union
      }
    }
    std::sort(elems.begin(), elems.end());
    out.push_back(Subalgebra{std::move(elems)});
  });
  std::sort(out.begin(), out.end(), subalgebra_less);
  return out;
}

Element RelativeFrame::index_of(Element ambient) const {
  Element out = 0;
  for (std::size_t j = 0; j < rel_atoms.size(); ++j)
    if (BooleanFrame::leq(rel_atoms[j], ambient)) out |= Element(1) << j;
  return out;
}

RelativeFrame relative_frame(const BooleanFrame& frame, const Subalgebra& sub) {
  if (!is_closed_subuniverse(frame, sub))
    throw Error(Errc::NotClosed, "element set is not a closed subuniverse");

  std::vector<Element> atoms;
  for (Element x : sub.elements) {
    if (x == 0) continue;
    bool minimal = true;
    for (Element y : sub.elements) {
      if (y == 0 || y == x) continue;
      if (BooleanFrame::leq(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(x);
  }
  std::sort(atoms.begin(), atoms.end(), [](Element a, Element b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });

  const int m = static_cast<int>(atoms.size());
  const std::size_t n = std::size_t(1) << m;
  std::vector<Element> embedding(n, 0);
  for (Element r = 0; r < n; ++r)
    for (int j = 0; j < m; ++j)
      if (r & (Element(1) << j)) embedding[r] |= atoms[static_cast<std::size_t>(j)];

  RelativeFrame rel;
  rel.rel_atoms = atoms;
  rel.embedding = embedding;
  std::vector<Element> f(n);
  for (Element r = 0; r < n; ++r) {
    const Element image = frame.f[embedding[r]];
    Element idx = 0;
    for (int j = 0; j < m; ++j)
      if (BooleanFrame::leq(atoms[static_cast<std::size_t>(j)], image))
        idx |= Element(1) << j;
    if (embedding[idx] != image)
      throw Error(Errc::NotClosed, "f leaves the subuniverse");
    f[r] = idx;
  }
  rel.frame = BooleanFrame{"", m, std::move(f)};
  return rel;
}

BooleanFrame canonical_form(const BooleanFrame& frame, int canon_max_atoms) {
  if (frame.atoms > canon_max_atoms)
    throw Error(Errc::TooLarge,
                "canonicalization is limited to " +
                    std::to_string(canon_max_atoms) + " atoms");
  const std::size_t n = frame.size();
  std::vector<int> perm(static_cast<std::size_t>(frame.atoms));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best = frame.f;
  std::vector<Element> phi(n), table(n);
  do {
    phi[0] = 0;
    for (Element x = 1; x < n; ++x) {
      const int low = std::countr_zero(x);
      phi[x] = phi[x & (x - 1)] | (Element(1) << perm[low]);
    }
    for (Element x = 0; x < n; ++x) table[phi[x]] = phi[frame.f[x]];
    if (table < best) best = table;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BooleanFrame{"", frame.atoms, std::move(best)};
}

void IsoClassSet::insert(BooleanFrame canonical) {
  canonical.name.clear();
  auto cmp = [](const BooleanFrame& a, const BooleanFrame& b) {
    if (a.atoms != b.atoms) return a.atoms < b.atoms;
    return a.f < b.f;
  };
  auto it = std::lower_bound(classes.begin(), classes.end(), canonical, cmp);
  if (it != classes.end() && it->same_table(canonical)) return;
  classes.insert(it, std::move(canonical));
}

bool IsoClassSet::contains(const BooleanFrame& canonical) const {
  auto cmp = [](const BooleanFrame& a, const BooleanFrame& b) {
    if (a.atoms != b.atoms) return a.atoms < b.atoms;
    return a.f < b.f;
  };
  auto it = std::lower_bound(classes.begin(), classes.end(), canonical, cmp);
  return it != classes.end() && it->same_table(canonical);
}

bool IsoClassSet::operator==(const IsoClassSet& o) const {
  if (classes.size() != o.classes.size()) return false;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!classes[i].same_table(o.classes[i])) return false;
  return true;
}

IsoClassSet hs_classes(const BooleanFrame& frame,
                       const StructureLimits& limits) {
  IsoClassSet out;
  for (const auto& sub : all_subalgebras(frame, limits.bell_max_atoms)) {
    const auto rel = relative_frame(frame, sub);
    for (Element a : congruence_generators(rel.frame)) {
      auto q = quotient(rel.frame, a);
      out.insert(canonical_form(q.frame, limits.canon_max_atoms));
    }
  }
  return out;
}

IsoClassSet sh_classes(const BooleanFrame& frame,
                       const StructureLimits& limits) {
  IsoClassSet out;
  for (Element a : congruence_generators(frame)) {
    auto q = quotient(frame, a);
    for (const auto& sub : all_subalgebras(q.frame, limits.bell_max_atoms)) {
      const auto rel = relative_frame(q.frame, sub);
      out.insert(canonical_form(rel.frame, limits.canon_max_atoms));
    }
  }
  return out;
}

HsShVerdict hs_equals_sh(const BooleanFrame& frame,
                         const StructureLimits& limits) {
  HsShVerdict v;
  v.hs = hs_classes(frame, limits);
  v.sh = sh_classes(frame, limits);
  v.equal = v.hs == v.sh;
  if (!v.equal) {
    for (const auto& c : v.hs.classes)
      if (!v.sh.contains(c)) {
        v.witness = c;
        v.witness_side = "hs-only";
        return v;
      }
    for (const auto& c : v.sh.classes)
      if (!v.hs.contains(c)) {
        v.witness = c;
        v.witness_side = "sh-only";
        return v;
      }
  }
  return v;
}

FraserHornVerdict fraser_horn_check(const BooleanFrame& a,
                                    const BooleanFrame& b, int max_atoms) {
  const BooleanFrame prod = product_frame(a, b, max_atoms);
  FraserHornVerdict v;
  v.product_generators = congruence_generators(prod);
  for (Element u : congruence_generators(a))
    for (Element w : congruence_generators(b))
      v.expected_generators.push_back(product_pair(a, u, w));
  std::sort(v.expected_generators.begin(), v.expected_generators.end());
  v.holds = v.product_generators == v.expected_generators;
  if (!v.holds) {
    for (Element g : v.product_generators)
      if (!std::binary_search(v.expected_generators.begin(),
                              v.expected_generators.end(), g)) {
        v.witness = g;
        break;
      }
    if (!v.witness)
      for (Element g : v.expected_generators)
        if (!std::binary_search(v.product_generators.begin(),
                                v.product_generators.end(), g)) {
          v.witness = g;
          break;
        }
  }
  return v;
}

}  // namespace frameforge
