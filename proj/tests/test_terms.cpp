#include <doctest.h>

#include <random>

#include "frameforge/check.hpp"
#include "frameforge/frame.hpp"
#include "frameforge/term.hpp"

using namespace frameforge;

namespace {

// seeded AST generator for round-trip checks
Term random_term(std::mt19937_64& rng, int depth) {
  const char* vars[] = {"x", "y", "z", "w"};
  const int pick = depth <= 0 ? static_cast<int>(rng() % 3)
                              : static_cast<int>(rng() % 9);
  switch (pick) {
    case 0: return Term::zero();
    case 1: return Term::one();
    case 2: return Term::var(vars[rng() % 4]);
    case 3: return Term::complement(random_term(rng, depth - 1));
    case 4:
      return Term::apply(rng() % 2 ? "f" : "g", random_term(rng, depth - 1));
    case 5:
      return Term::meet(random_term(rng, depth - 1),
                        random_term(rng, depth - 1));
    case 6:
      return Term::join(random_term(rng, depth - 1),
                        random_term(rng, depth - 1));
    case 7:
      return Term::symdiff(random_term(rng, depth - 1),
                           random_term(rng, depth - 1));
    default:
      return Term::imp(random_term(rng, depth - 1),
                       random_term(rng, depth - 1));
  }
}

QuasiIdentity random_quasi(std::mt19937_64& rng) {
  auto atom = [&] {
    return Atom{random_term(rng, 3), rng() % 2 ? Rel::Eq : Rel::Leq,
                random_term(rng, 3)};
  };
  QuasiIdentity q;
  const int premises = static_cast<int>(rng() % 3);
  for (int i = 0; i < premises; ++i) q.premises.push_back(atom());
  q.conclusion = atom();
  return q;
}

}  // namespace

TEST_CASE("parsing the pinned formulas") {
  const QuasiIdentity star =
      parse_quasi_identity("x ^ y <= z => f(x) ^ f(y) <= f(z)");
  CHECK(star.premises.size() == 1);
  CHECK(star.variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(to_string(star) == "x ^ y <= z => f(x) ^ f(y) <= f(z)");

  const QuasiIdentity additive =
      parse_quasi_identity("f(x | y) = f(x) | f(y)");
  CHECK(additive.premises.empty());
  CHECK(additive.variables() == std::vector<std::string>{"x", "y"});

  // # comments and newlines are whitespace
  CHECK(parse_quasi_identity("# premise\nx <= y\n  => f(x) <= f(y)") ==
        property_formula("monotone"));
}

TEST_CASE("syntax errors carry positions and expectations") {
  try {
    parse_quasi_identity("x <= => y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
    CHECK(!e.expected().empty());
  }
  try {
    parse_quasi_identity("# comment line\nx = y && z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  for (const char* bad :
       {"f(", "x ? y = z", "(x | y = z", "f x = y", "x = y extra", "h(x) = x",
        "f = x", "1 2", "x < y"})
    CHECK_THROWS_AS(parse_quasi_identity(bad), ParseError);
}

TEST_CASE("print-then-parse is the identity on random ASTs") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 500; ++round) {
    const QuasiIdentity q = random_quasi(rng);
    CHECK(parse_quasi_identity(to_string(q)) == q);
  }
}

TEST_CASE("term evaluation") {
  const BooleanFrame ex1 = builtin_frame("example1");
  const BooleanFrame g = additive_extension(3, {2, 0, 1});

  CHECK(eval_term(ex1, parse_term("f(x)"), {{"x", 5}}) == 7);
  CHECK(eval_term(ex1, parse_term("-0"), {}) == 7);
  CHECK(eval_term(ex1, parse_term("x -> y"), {{"x", 5}, {"y", 1}}) ==
        (ex1.complement(5) | 1));

  const Term two_op = parse_term("x | (g(x) & g(g(x)))");
  CHECK(eval_term(ex1, two_op, {{"x", 5}}, &g.f) == 7);

  try {
    eval_term(ex1, parse_term("x | y"), {{"x", 1}});
    FAIL("expected UnboundVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnboundVariable);
  }
  try {
    eval_term(ex1, parse_term("g(x)"), {{"x", 1}});
    FAIL("expected UnknownOperation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownOperation);
  }
}

TEST_CASE("quasi-identity checking on the worked frames") {
  const BooleanFrame ex1 = builtin_frame("example1");

  // additivity fails, least counterexample x={1}, y={3}
  const Verdict add = builtin_property(ex1, "additive");
  REQUIRE_FALSE(add.holds);
  REQUIRE(add.counterexample.has_value());
  CHECK(*add.counterexample == Assignment{{"x", 1}, {"y", 4}});
  CHECK(eval_atom(ex1, property_formula("additive").conclusion,
                  *add.counterexample) == false);

  // the star quasi-identity is refuted on this frame; the least failing
  // assignment is x=1, y=5, z=4 and it re-verifies by direct evaluation
  const Verdict star = builtin_property(ex1, "star");
  REQUIRE_FALSE(star.holds);
  REQUIRE(star.counterexample.has_value());
  CHECK(*star.counterexample == Assignment{{"x", 1}, {"y", 5}, {"z", 4}});
  const QuasiIdentity& sq = property_formula("star");
  CHECK(eval_atom(ex1, sq.premises[0], *star.counterexample));
  CHECK_FALSE(eval_atom(ex1, sq.conclusion, *star.counterexample));

  CHECK(builtin_property(ex1, "extensive").holds);
  CHECK_FALSE(builtin_property(builtin_frame("cycle:3"), "normal").holds);
  CHECK(builtin_property(builtin_frame("wheel:5"), "additive").holds);

  // two-operation identity against the additive companion
  const BooleanFrame g = additive_extension(3, {2, 0, 1});
  CheckOptions opts;
  opts.companion = &g.f;
  CHECK(check_quasi_identity(ex1,
                             parse_quasi_identity(
                                 "f(x) = x | (g(x) & g(g(x)))"),
                             opts)
            .holds);
}

TEST_CASE("every check holds on the trivial frame") {
  const BooleanFrame one = make_frame(0, {0});
  for (const auto& name : property_names())
    CHECK(builtin_property(one, name).holds);
  CHECK(check_quasi_identity(one, parse_quasi_identity("f(x) = -x")).holds);
}

TEST_CASE("evaluation budget and sampling") {
  const BooleanFrame wheel = builtin_frame("wheel:5");

  CheckOptions tiny;
  tiny.eval_budget = 16;
  tiny.force_exhaustive = true;
  try {
    check_quasi_identity(wheel, property_formula("star"), tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }

  CheckOptions sampling;
  sampling.eval_budget = 16;
  sampling.samples = 2000;
  const Verdict v =
      check_quasi_identity(wheel, property_formula("monotone"), sampling);
  CHECK(v.status == CheckStatus::Sampled);
  CHECK(v.holds);

  // a sampled counterexample still re-verifies
  const Verdict bad = check_quasi_identity(
      builtin_frame("cycle:3"), property_formula("additive"), sampling);
  CHECK(bad.status == CheckStatus::Sampled);
  if (!bad.holds) {
    REQUIRE(bad.counterexample.has_value());
    CHECK_FALSE(eval_atom(builtin_frame("cycle:3"),
                          property_formula("additive").conclusion,
                          *bad.counterexample));
  }
}

TEST_CASE("additive implies star implies monotone on the two-atom corpus") {
  for (unsigned code = 0; code < 256; ++code) {
    const BooleanFrame frame{
        "", 2, {static_cast<Element>(code & 3),
                static_cast<Element>((code >> 2) & 3),
                static_cast<Element>((code >> 4) & 3),
                static_cast<Element>((code >> 6) & 3)}};
    const bool additive = builtin_property(frame, "additive").holds;
    const bool star = builtin_property(frame, "star").holds;
    const bool monotone = builtin_property(frame, "monotone").holds;
    if (additive) CHECK(star);
    if (star) CHECK(monotone);
  }
}
