#include <doctest.h>

#include <algorithm>
#include <bit>

#include "frameforge/congruence.hpp"
#include "frameforge/corpus.hpp"

using namespace frameforge;

TEST_CASE("is_congruential") {
  const BooleanFrame ex1 = builtin_frame("example1");
  const BooleanFrame sh = builtin_frame("example-sh");

  for (const BooleanFrame* f : {&ex1, &sh}) {
    CHECK(is_congruential(*f, 0));
    CHECK(is_congruential(*f, f->full()));
  }
  CHECK_FALSE(is_congruential(sh, 4));  // x=2, y=6: f(2)^f(6) = 1, not below 4
  CHECK(is_congruential(ex1, 2));
  CHECK_THROWS_AS(is_congruential(ex1, 8), Error);
}

TEST_CASE("congruence generators of the worked frames") {
  CHECK(congruence_generators(builtin_frame("example-sh")) ==
        std::vector<Element>{0, 7});
  CHECK(congruence_generators(builtin_frame("two:id")) ==
        std::vector<Element>{0, 1});
  CHECK(congruence_generators(builtin_frame("cycle:2")) ==
        std::vector<Element>{0, 2, 3});
  CHECK(congruence_generators(builtin_frame("example1")) ==
        std::vector<Element>{0, 2, 3, 6, 7});
}

TEST_CASE("congruential elements are closed under meet") {
  for (const auto& frame : Corpus::random_three_atom(77, 40)) {
    const auto gens = congruence_generators(frame);
    for (Element a : gens)
      for (Element b : gens)
        CHECK(std::binary_search(gens.begin(), gens.end(), a & b));
  }
}

TEST_CASE("principal congruences") {
  const BooleanFrame ex1 = builtin_frame("example1");
  const BooleanFrame sh = builtin_frame("example-sh");

  CHECK(principal_congruence(ex1, 3, 3) == 0);
  CHECK(principal_congruence(sh, 0, 3) == 7);
  CHECK(principal_congruence(ex1, 0, 2) == 2);

  for (const auto& frame : Corpus::random_three_atom(123, 25)) {
    const auto gens = congruence_generators(frame);
    for (Element x = 0; x < frame.size(); ++x)
      for (Element y = 0; y < frame.size(); ++y) {
        const Element a = principal_congruence(frame, x, y);
        // reduction to the zero-based form
        CHECK(a == principal_congruence(frame, x ^ y, 0));
        // the fixpoint is congruential and least above x^y
        CHECK(std::binary_search(gens.begin(), gens.end(), a));
        Element least = frame.full();
        for (Element c : gens)
          if (BooleanFrame::leq(x ^ y, c)) {
            least = c;
            break;  // gens ascend, first hit is the meet-least
          }
        CHECK(a == least);
      }
  }
}

TEST_CASE("join of principal congruences is principal") {
  for (const auto& frame : Corpus::random_three_atom(321, 15)) {
    for (Element x = 0; x < frame.size(); ++x)
      for (Element y = 0; y < frame.size(); ++y) {
        const Element jx = principal_congruence(frame, x, 0);
        const Element jy = principal_congruence(frame, y, 0);
        CHECK(principal_congruence(frame, jx | jy, 0) ==
              principal_congruence(frame, x | y, 0));
      }
  }
}

TEST_CASE("quotients") {
  const BooleanFrame ex1 = builtin_frame("example1");

  const Quotient identity = quotient(ex1, 0);
  CHECK(identity.frame.same_table(ex1));
  for (Element x = 0; x < ex1.size(); ++x) CHECK(identity.elem_map[x] == x);

  const Quotient total = quotient(ex1, ex1.full());
  CHECK(total.frame.atoms == 0);
  CHECK(total.frame.f == std::vector<Element>{0});

  // the 4-element subframe with f = [0,1,0,0], collapsed by generator 1
  const BooleanFrame a2{"", 2, {0, 1, 0, 0}};
  const Quotient q = quotient(a2, 1);
  CHECK(q.frame.f == std::vector<Element>{0, 0});  // two:zero
  CHECK(q.elem_map == std::vector<Element>{0, 0, 1, 1});

  try {
    quotient(ex1, 1);
    FAIL("expected NotCongruential");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCongruential);
  }
}

TEST_CASE("quotient maps are homomorphisms with popcount many atoms") {
  for (const auto& frame : Corpus::random_three_atom(9, 20)) {
    for (Element a : congruence_generators(frame)) {
      const Quotient q = quotient(frame, a);
      CHECK(q.frame.atoms == std::popcount(frame.complement(a)));
      for (Element x = 0; x < frame.size(); ++x) {
        CHECK(q.elem_map[frame.f[x]] == q.frame.f[q.elem_map[x]]);
        CHECK(q.elem_map[frame.complement(x)] ==
              q.frame.complement(q.elem_map[x]));
        for (Element y = 0; y < frame.size(); ++y)
          CHECK(q.elem_map[x & y] == (q.elem_map[x] & q.elem_map[y]));
      }
    }
  }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(builtin_frame("example-sh")));
  CHECK(is_simple(builtin_frame("cycle:3")));
  CHECK_FALSE(is_simple(builtin_frame("example1")));
  CHECK_FALSE(is_simple(builtin_frame("cycle:2")));
  try {
    is_simple(make_frame(0, {0}));
    FAIL("expected TrivialFrame");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TrivialFrame);
  }
}

TEST_CASE("partition oracle") {
  CHECK(partition_oracle(builtin_frame("two:id")).size() == 2);
  CHECK(partition_oracle(builtin_frame("example-sh")).size() == 2);

  const auto cycle2 = partition_oracle(builtin_frame("cycle:2"));
  CHECK(cycle2.size() == 3);
  // {{0,2},{1,3}} is the proper congruence
  const CongruencePartition expected{{0, 1, 0, 1}};
  CHECK(std::find(cycle2.begin(), cycle2.end(), expected) != cycle2.end());

  try {
    partition_oracle(builtin_frame("cycle:4"));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("generators and compatible partitions are in bijection") {
  auto check_frame = [](const BooleanFrame& frame) {
    std::vector<CongruencePartition> induced;
    for (Element a : congruence_generators(frame))
      induced.push_back(generator_partition(frame, a));
    std::sort(induced.begin(), induced.end());
    CHECK(induced == partition_oracle(frame));
  };
  check_frame(builtin_frame("example1"));
  check_frame(builtin_frame("example-sh"));
  check_frame(builtin_frame("cycle:2"));
  for (const auto& frame : Corpus::random_three_atom(2024, 20))
    check_frame(frame);
}
