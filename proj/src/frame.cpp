#include "frameforge/frame.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace frameforge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownSpec: return "UnknownSpec";
    case Errc::RetryExhausted: return "RetryExhausted";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::UnknownOperation: return "UnknownOperation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotCongruential: return "NotCongruential";
    case Errc::NotClosed: return "NotClosed";
    case Errc::TrivialFrame: return "TrivialFrame";
    case Errc::NotSwitching: return "NotSwitching";
  }
  return "Unknown";
}

namespace {

void check_atoms(int atoms, int max_atoms) {
  if (atoms < 0)
    throw Error(Errc::ValueOutOfRange, "atom count must be non-negative");
  if (atoms > max_atoms)
    throw Error(Errc::TooLarge, "atom count " + std::to_string(atoms) +
                                    " exceeds the cap of " +
                                    std::to_string(max_atoms));
}

}  // namespace

std::vector<Element> KripkeFrame::successor_masks() const {
  std::vector<Element> succ(static_cast<std::size_t>(worlds), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= worlds || v < 0 || v >= worlds)
      throw Error(Errc::ValueOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") leaves the world set");
    succ[u] |= Element(1) << v;
  }
  return succ;
}

BooleanFrame make_frame(int atoms, std::vector<Element> table,
                        std::string name, int max_atoms) {
  check_atoms(atoms, max_atoms);
  const std::size_t n = std::size_t(1) << atoms;
  if (table.size() != n)
    throw Error(Errc::LengthMismatch,
                "table has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (table[i] >= n)
      throw Error(Errc::ValueOutOfRange,
                  "table entry at index " + std::to_string(i) + " is " +
                      std::to_string(table[i]) + ", must be below " +
                      std::to_string(n));
  return BooleanFrame{std::move(name), atoms, std::move(table)};
}

BooleanFrame builtin_frame(const std::string& spec, int max_atoms) {
  if (spec == "example1") {
    // f fixes everything except f({1,3}) = {1,2,3}; atoms 1,2,3 are bits 0..2.
    std::vector<Element> f(8);
    for (Element x = 0; x < 8; ++x) f[x] = x;
    f[5] = 7;
    return make_frame(3, std::move(f), "example1", max_atoms);
  }
  if (spec == "example-sh") {
    // Atoms a,b,c are bits 0..2; f(b)=1, f(1)=0, f(c)=0, everything else fixed.
    std::vector<Element> f(8);
    for (Element x = 0; x < 8; ++x) f[x] = x;
    f[2] = 7;
    f[7] = 0;
    f[4] = 0;
    return make_frame(3, std::move(f), "example-sh", max_atoms);
  }
  auto parse_count = [&](std::size_t prefix_len) {
    const std::string num = spec.substr(prefix_len);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::UnknownSpec, "unknown builtin frame '" + spec + "'");
    return std::stoi(num);
  };
  if (spec.rfind("cycle:", 0) == 0) {
    const int n = parse_count(6);
    if (n < 2)
      throw Error(Errc::UnknownSpec, "cycle:N requires N >= 2");
    check_atoms(n, max_atoms);
    // 0 -> top -> {n-1} -> ... -> {0} -> 0, identity elsewhere.
    const std::size_t sz = std::size_t(1) << n;
    std::vector<Element> f(sz);
    for (Element x = 0; x < sz; ++x) f[x] = x;
    f[0] = static_cast<Element>(sz - 1);
    f[sz - 1] = Element(1) << (n - 1);
    for (int i = n - 1; i >= 1; --i) f[Element(1) << i] = Element(1) << (i - 1);
    f[1] = 0;
    return make_frame(n, std::move(f), spec, max_atoms);
  }
  if (spec.rfind("wheel:", 0) == 0) {
    const int n = parse_count(6);
    if (n < 5)
      throw Error(Errc::UnknownSpec, "wheel:N requires N >= 5");
    BooleanFrame frame = complex_algebra(wheel_kripke(n), Modality::Diamond,
                                         max_atoms);
    frame.name = spec;
    return frame;
  }
  if (spec.rfind("two:", 0) == 0) {
    const std::string kind = spec.substr(4);
    std::vector<Element> f;
    if (kind == "id") f = {0, 1};
    else if (kind == "zero") f = {0, 0};
    else if (kind == "one") f = {1, 1};
    else if (kind == "swap") f = {1, 0};
    else throw Error(Errc::UnknownSpec, "unknown builtin frame '" + spec + "'");
    return make_frame(1, std::move(f), spec, max_atoms);
  }
  throw Error(Errc::UnknownSpec, "unknown builtin frame '" + spec + "'");
}

BooleanFrame additive_extension(int atoms,
                                const std::vector<Element>& atom_images,
                                std::string name, int max_atoms) {
  check_atoms(atoms, max_atoms);
  if (atom_images.size() != static_cast<std::size_t>(atoms))
    throw Error(Errc::LengthMismatch,
                "expected one image per atom, got " +
                    std::to_string(atom_images.size()));
  const std::size_t n = std::size_t(1) << atoms;
  for (int i = 0; i < atoms; ++i)
    if (atom_images[i] >= n)
      throw Error(Errc::ValueOutOfRange,
                  "atom image at index " + std::to_string(i) +
                      " is out of range");
  std::vector<Element> f(n, 0);
  for (Element x = 0; x < n; ++x)
    for (int i = 0; i < atoms; ++i)
      if (x & (Element(1) << i)) f[x] |= atom_images[i];
  return BooleanFrame{std::move(name), atoms, std::move(f)};
}

KripkeFrame wheel_kripke(int n) {
  if (n < 5) throw Error(Errc::UnknownSpec, "wheel frames need n >= 5");
  KripkeFrame frame;
  frame.worlds = n + 1;  // rim 0..n-1, hub at index n
  const int hub = n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int d = ((x - y) % n + n) % n;
      if (d <= 1 || d == n - 1) frame.edges.emplace_back(x, y);
    }
  frame.edges.emplace_back(hub, hub);
  for (int x = 0; x < n; ++x) {
    frame.edges.emplace_back(hub, x);
    frame.edges.emplace_back(x, hub);
  }
  return frame;
}

BooleanFrame complex_algebra(const KripkeFrame& frame, Modality modality,
                             int max_atoms) {
  check_atoms(frame.worlds, max_atoms);
  const auto succ = frame.successor_masks();
  const std::size_t n = std::size_t(1) << frame.worlds;
  std::vector<Element> f(n, 0);
  for (Element x = 0; x < n; ++x) {
    Element out = 0;
    for (int w = 0; w < frame.worlds; ++w) {
      const bool in = modality == Modality::Diamond
                          ? (succ[w] & x) != 0
                          : (succ[w] & ~x & static_cast<Element>(n - 1)) == 0;
      if (in) out |= Element(1) << w;
    }
    f[x] = out;
  }
  return BooleanFrame{"", frame.worlds, std::move(f)};
}

BooleanFrame product_frame(const BooleanFrame& a, const BooleanFrame& b,
                           int max_atoms) {
  check_atoms(a.atoms + b.atoms, max_atoms);
  const std::size_t n = std::size_t(1) << (a.atoms + b.atoms);
  std::vector<Element> f(n);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y)
      f[product_pair(a, x, y)] = product_pair(a, a.f[x], b.f[y]);
  std::string name;
  if (!a.name.empty() && !b.name.empty()) name = a.name + "*" + b.name;
  return BooleanFrame{std::move(name), a.atoms + b.atoms, std::move(f)};
}

bool satisfies_star_quasi_equation(const BooleanFrame& frame) {
  const Element full = frame.full();
  const std::size_t n = frame.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      const Element d = x ^ y;
      const Element fd = frame.f[x] ^ frame.f[y];
      // z ranges over the supersets of x^y.
      const Element rest = full & ~d;
      for (Element s = rest;; s = (s - 1) & rest) {
        if (!BooleanFrame::leq(fd, frame.f[d | s])) return false;
        if (s == 0) break;
      }
    }
  return true;
}

BooleanFrame random_frame(int atoms, std::uint64_t seed,
                          RandomConstraint constraint, int max_atoms,
                          int star_retry_budget) {
  check_atoms(atoms, max_atoms);
  const std::size_t n = std::size_t(1) << atoms;
  const Element full = static_cast<Element>(n - 1);
  // Values are drawn as engine() & full: the range is a power of two, so the
  // draw is uniform and reproducible across standard libraries.
  std::mt19937_64 engine(seed);
  auto draw = [&]() { return static_cast<Element>(engine() & full); };

  auto draw_table = [&]() {
    std::vector<Element> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = draw();
    return f;
  };

  switch (constraint) {
    case RandomConstraint::None:
      return BooleanFrame{"", atoms, draw_table()};
    case RandomConstraint::Normal: {
      auto f = draw_table();
      f[0] = 0;
      return BooleanFrame{"", atoms, std::move(f)};
    }
    case RandomConstraint::Additive: {
      std::vector<Element> images(static_cast<std::size_t>(atoms));
      for (auto& img : images) img = draw();
      return additive_extension(atoms, images, "", max_atoms);
    }
    case RandomConstraint::Star: {
      for (int attempt = 0; attempt < star_retry_budget; ++attempt) {
        BooleanFrame candidate{"", atoms, draw_table()};
        if (satisfies_star_quasi_equation(candidate)) return candidate;
      }
      throw Error(Errc::RetryExhausted,
                  "no frame satisfying the star quasi-equation within " +
                      std::to_string(star_retry_budget) + " draws");
    }
  }
  throw Error(Errc::UnknownSpec, "unhandled constraint");
}

std::optional<AtomPermutation> is_isomorphic(const BooleanFrame& a,
                                             const BooleanFrame& b) {
  if (a.atoms != b.atoms) return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(a.atoms));
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t n = a.size();
  std::vector<Element> phi(n);
  do {
    phi[0] = 0;
    for (Element x = 1; x < n; ++x) {
      const int low = std::countr_zero(x);
      phi[x] = phi[x & (x - 1)] | (Element(1) << perm[low]);
    }
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = phi[a.f[x]] == b.f[phi[x]];
    if (ok) return AtomPermutation{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace frameforge
