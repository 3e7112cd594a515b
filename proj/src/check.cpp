#include "frameforge/check.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace frameforge {

const char* check_status_name(CheckStatus s) {
  return s == CheckStatus::Exhaustive ? "exhaustive" : "sampled";
}

namespace {

Element lookup(const Assignment& assignment, const std::string& name) {
  auto it = std::lower_bound(
      assignment.begin(), assignment.end(), name,
      [](const auto& entry, const std::string& n) { return entry.first < n; });
  if (it == assignment.end() || it->first != name)
    throw Error(Errc::UnboundVariable, "variable '" + name + "' is unbound");
  return it->second;
}

Element eval(const BooleanFrame& fr, const Term& t, const Assignment& asg,
             const std::vector<Element>* companion) {
  switch (t.kind) {
    case Term::Kind::Var: return lookup(asg, t.name);
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return fr.full();
    case Term::Kind::Compl:
      return fr.complement(eval(fr, t.args[0], asg, companion));
    case Term::Kind::Apply: {
      const Element v = eval(fr, t.args[0], asg, companion);
      if (t.name == "f") return fr.f[v];
      if (companion == nullptr)
        throw Error(Errc::UnknownOperation,
                    "operation 'g' needs a companion table");
      return (*companion)[v];
    }
    case Term::Kind::Meet:
      return eval(fr, t.args[0], asg, companion) &
             eval(fr, t.args[1], asg, companion);
    case Term::Kind::Join:
      return eval(fr, t.args[0], asg, companion) |
             eval(fr, t.args[1], asg, companion);
    case Term::Kind::SymDiff:
      return eval(fr, t.args[0], asg, companion) ^
             eval(fr, t.args[1], asg, companion);
    case Term::Kind::Imp:
      return fr.complement(eval(fr, t.args[0], asg, companion)) |
             eval(fr, t.args[1], asg, companion);
  }
  throw Error(Errc::UnknownOperation, "unhandled term kind");
}

bool atom_holds(const BooleanFrame& fr, const Atom& a, const Assignment& asg,
                const std::vector<Element>* companion) {
  const Element l = eval(fr, a.lhs, asg, companion);
  const Element r = eval(fr, a.rhs, asg, companion);
  return a.rel == Rel::Eq ? l == r : BooleanFrame::leq(l, r);
}

bool assignment_fails(const BooleanFrame& fr, const QuasiIdentity& q,
                      const Assignment& asg,
                      const std::vector<Element>* companion) {
  for (const auto& p : q.premises)
    if (!atom_holds(fr, p, asg, companion)) return false;
  return !atom_holds(fr, q.conclusion, asg, companion);
}

}  // namespace

Element eval_term(const BooleanFrame& frame, const Term& term,
                  const Assignment& assignment,
                  const std::vector<Element>* companion) {
  Assignment sorted = assignment;
  std::sort(sorted.begin(), sorted.end());
  return eval(frame, term, sorted, companion);
}

bool eval_atom(const BooleanFrame& frame, const Atom& atom,
               const Assignment& assignment,
               const std::vector<Element>* companion) {
  Assignment sorted = assignment;
  std::sort(sorted.begin(), sorted.end());
  return atom_holds(frame, atom, sorted, companion);
}

Verdict check_quasi_identity(const BooleanFrame& frame,
                             const QuasiIdentity& q,
                             const CheckOptions& options) {
  const auto vars = q.variables();
  const int k = frame.atoms;
  const std::size_t v = vars.size();
  const Element full = frame.full();

  Assignment asg;
  asg.reserve(v);
  for (const auto& name : vars) asg.emplace_back(name, 0);

  const int exponent = k * static_cast<int>(v);
  const bool in_budget =
      exponent < 64 && (std::uint64_t(1) << exponent) <= options.eval_budget;

  if (in_budget) {
    const std::uint64_t total = std::uint64_t(1) << exponent;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      for (std::size_t j = 0; j < v; ++j)
        asg[j].second =
            static_cast<Element>(idx >> (k * (v - 1 - j))) & full;
      if (assignment_fails(frame, q, asg, options.companion))
        return Verdict{false, CheckStatus::Exhaustive, asg};
    }
    return Verdict{true, CheckStatus::Exhaustive, std::nullopt};
  }

  if (options.force_exhaustive)
    throw Error(Errc::BudgetExceeded,
                "exhaustive check needs 2^" + std::to_string(exponent) +
                    " evaluations, over the budget of " +
                    std::to_string(options.eval_budget));

  std::mt19937_64 engine(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    for (std::size_t j = 0; j < v; ++j)
      asg[j].second = static_cast<Element>(engine() & full);
    if (assignment_fails(frame, q, asg, options.companion))
      return Verdict{false, CheckStatus::Sampled, asg};
  }
  return Verdict{true, CheckStatus::Sampled, std::nullopt};
}

const QuasiIdentity& property_formula(const std::string& name) {
  static const std::map<std::string, QuasiIdentity> formulas = [] {
    std::map<std::string, QuasiIdentity> m;
    m["additive"] = parse_quasi_identity("f(x | y) = f(x) | f(y)");
    m["monotone"] = parse_quasi_identity("x <= y => f(x) <= f(y)");
    m["normal"] = parse_quasi_identity("f(0) = 0");
    m["conormal"] = parse_quasi_identity("f(1) = 1");
    m["extensive"] = parse_quasi_identity("x <= f(x)");
    m["star"] = parse_quasi_identity("x ^ y <= z => f(x) ^ f(y) <= f(z)");
    return m;
  }();
  auto it = formulas.find(name);
  if (it == formulas.end())
    throw Error(Errc::UnknownSpec, "unknown property '" + name + "'");
  return it->second;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "additive", "monotone", "normal", "conormal", "extensive", "star"};
  return names;
}

Verdict builtin_property(const BooleanFrame& frame, const std::string& name,
                         const CheckOptions& options) {
  return check_quasi_identity(frame, property_formula(name), options);
}

}  // namespace frameforge
