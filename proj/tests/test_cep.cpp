#include <doctest.h>

#include "frameforge/cep.hpp"
#include "frameforge/check.hpp"
#include "frameforge/corpus.hpp"

using namespace frameforge;

TEST_CASE("restricting congruences to subalgebras") {
  const BooleanFrame sh = builtin_frame("example-sh");
  const Subalgebra a2{{0, 3, 4, 7}};

  CHECK(restrict_congruence(sh, 7, a2) == 7);
  CHECK(restrict_congruence(sh, 0, a2) == 0);

  try {
    restrict_congruence(sh, 4, a2);
    FAIL("expected NotCongruential");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCongruential);
  }
  try {
    restrict_congruence(sh, 7, Subalgebra{{0, 3}});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotClosed);
  }
}

TEST_CASE("cep on the worked frames") {
  const BooleanFrame ex1 = builtin_frame("example1");
  const BooleanFrame sh = builtin_frame("example-sh");

  for (CepMethod m :
       {CepMethod::Direct, CepMethod::TwoGenerated, CepMethod::Pcep}) {
    CHECK(cep_by_method(ex1, m).holds);

    const CepVerdict v = cep_by_method(sh, m);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->sub.elements == std::vector<Element>{0, 3, 4, 7});
    CHECK(v.witness->generator == 3);
  }
}

TEST_CASE("a failure witness re-verifies against every ambient congruence") {
  const BooleanFrame sh = builtin_frame("example-sh");
  const CepVerdict v = cep_direct(sh);
  REQUIRE(v.witness.has_value());
  for (Element a : congruence_generators(sh))
    CHECK(restrict_congruence(sh, a, v.witness->sub) != v.witness->generator);
}

TEST_CASE("cep of trivial and large frames") {
  const BooleanFrame one = make_frame(0, {0});
  CHECK(cep_direct(one).holds);
  CHECK(cep_two_generated(one).holds);
  CHECK(pcep(one).holds);

  CHECK(cep_direct(builtin_frame("wheel:5")).holds);
}

TEST_CASE("the three deciders agree across the corpus") {
  for (const auto& frame : Corpus::all_two_atom_frames()) {
    const bool d = cep_direct(frame).holds;
    CHECK(d == cep_two_generated(frame).holds);
    CHECK(d == pcep(frame).holds);
  }
  for (const auto& frame : Corpus::random_three_atom(31337, 40)) {
    const bool d = cep_direct(frame).holds;
    CHECK(d == cep_two_generated(frame).holds);
    CHECK(d == pcep(frame).holds);
  }
}

TEST_CASE("star frames have the cep") {
  for (const auto& frame : Corpus::star_two_atom(60, 40)) {
    CHECK(builtin_property(frame, "star").holds);
    CHECK(cep_direct(frame).holds);
  }
}
