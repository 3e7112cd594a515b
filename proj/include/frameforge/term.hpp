#pragma once

#include <string>
#include <vector>

#include "frameforge/error.hpp"

namespace frameforge {

/// Abstract syntax for frame terms: variables, the constants 0 and 1,
/// complement, the named unary operations f and g, and the binary Boolean
/// connectives meet, join, symmetric difference and implication.
struct Term {
  enum class Kind { Var, Zero, One, Compl, Apply, Meet, Join, SymDiff, Imp };

  Kind kind = Kind::Zero;
  std::string name;        // Var: variable name; Apply: "f" or "g"
  std::vector<Term> args;  // Compl/Apply: one child; binary kinds: two

  bool operator==(const Term& o) const {
    return kind == o.kind && name == o.name && args == o.args;
  }

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term zero() { return {Kind::Zero, "", {}}; }
  static Term one() { return {Kind::One, "", {}}; }
  static Term complement(Term t) { return {Kind::Compl, "", {std::move(t)}}; }
  static Term apply(std::string op, Term t) {
    return {Kind::Apply, std::move(op), {std::move(t)}};
  }
  static Term meet(Term a, Term b) {
    return {Kind::Meet, "", {std::move(a), std::move(b)}};
  }
  static Term join(Term a, Term b) {
    return {Kind::Join, "", {std::move(a), std::move(b)}};
  }
  static Term symdiff(Term a, Term b) {
    return {Kind::SymDiff, "", {std::move(a), std::move(b)}};
  }
  static Term imp(Term a, Term b) {
    return {Kind::Imp, "", {std::move(a), std::move(b)}};
  }
};

enum class Rel { Eq, Leq };

/// One equation or inequality between two terms.
struct Atom {
  Term lhs;
  Rel rel = Rel::Eq;
  Term rhs;

  bool operator==(const Atom&) const = default;
};

/// A universal Horn condition: premises imply the conclusion. An empty
/// premise list is a plain identity.
struct QuasiIdentity {
  std::vector<Atom> premises;
  Atom conclusion;

  bool operator==(const QuasiIdentity&) const = default;

  /// Sorted, de-duplicated variable names over all atoms.
  std::vector<std::string> variables() const;
};

/// Parses the DSL. Grammar, loosest to tightest binding:
///   quasi := atom ("&&" atom)* "=>" atom | atom
///   atom  := term ("=" | "<=") term
///   term  := join ("->" term)?            (right associative)
///   join  := xor ("|" xor)*
///   xor   := meet ("^" meet)*
///   meet  := unary ("&" unary)*
///   unary := "-" unary | "0" | "1" | ident | ("f"|"g") "(" term ")"
///         |  "(" term ")"
/// Identifiers are [a-zA-Z][a-zA-Z0-9_]*; "f" and "g" are reserved for the
/// unary operations; "#" starts a line comment. Errors carry line/column
/// and the expected-token set.
QuasiIdentity parse_quasi_identity(const std::string& text);

/// Single term, same lexical rules.
Term parse_term(const std::string& text);

/// Minimal-parenthesis rendering; parse(print(q)) == q.
std::string to_string(const Term& term);
std::string to_string(const Atom& atom);
std::string to_string(const QuasiIdentity& q);

}  // namespace frameforge
