#include <doctest.h>

#include <random>

#include "frameforge/check.hpp"
#include "frameforge/frame.hpp"

using namespace frameforge;

namespace {

Element rand_elem(std::mt19937_64& rng, const BooleanFrame& f) {
  return static_cast<Element>(rng() & f.full());
}

}  // namespace

TEST_CASE("make_frame validates its table") {
  const BooleanFrame trivial = make_frame(0, {0});
  CHECK(trivial.size() == 1);
  CHECK(trivial.full() == 0);

  std::vector<Element> t(8);
  for (Element x = 0; x < 8; ++x) t[x] = x;
  t[5] = 7;
  const BooleanFrame ex1 = make_frame(3, t);
  CHECK(ex1.same_table(builtin_frame("example1")));

  CHECK_THROWS_WITH_AS(make_frame(2, {0, 1, 2, 5}),
                       doctest::Contains("index 3"), Error);
  try {
    make_frame(2, {0, 1, 2});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
  try {
    make_frame(11, std::vector<Element>(2048, 0));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("builtin frames have the pinned tables") {
  CHECK(builtin_frame("example1").f ==
        std::vector<Element>{0, 1, 2, 3, 4, 7, 6, 7});
  CHECK(builtin_frame("example-sh").f ==
        std::vector<Element>{0, 1, 7, 3, 0, 5, 6, 0});
  CHECK(builtin_frame("cycle:3").f ==
        std::vector<Element>{7, 0, 1, 3, 2, 5, 6, 4});
  CHECK(builtin_frame("cycle:2").f == std::vector<Element>{3, 0, 1, 2});
  CHECK(builtin_frame("two:id").f == std::vector<Element>{0, 1});
  CHECK(builtin_frame("two:zero").f == std::vector<Element>{0, 0});
  CHECK(builtin_frame("two:one").f == std::vector<Element>{1, 1});
  CHECK(builtin_frame("two:swap").f == std::vector<Element>{1, 0});

  for (const char* bad : {"nope", "cycle:1", "wheel:4", "two:flip", "cycle:x"})
    CHECK_THROWS_AS(builtin_frame(bad), Error);
  try {
    builtin_frame("wheel:12");  // 13 atoms over the default cap
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("additive extension joins atom images") {
  const BooleanFrame g = additive_extension(3, {2, 0, 1});
  CHECK(g.f == std::vector<Element>{0, 2, 0, 2, 1, 3, 1, 3});
  CHECK(g.f[5] == 3);

  CHECK(additive_extension(2, {1, 2}).f == std::vector<Element>{0, 1, 2, 3});
  CHECK(additive_extension(1, {0}).f == std::vector<Element>{0, 0});

  // always additive, by construction
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const BooleanFrame h = random_frame(3, rng(), RandomConstraint::Additive);
    CHECK(builtin_property(h, "additive").holds);
  }

  CHECK_THROWS_AS(additive_extension(2, {1}), Error);
  CHECK_THROWS_AS(additive_extension(1, {4}), Error);
}

TEST_CASE("complex algebras of small Kripke frames") {
  KripkeFrame empty;
  empty.worlds = 2;
  const BooleanFrame none = complex_algebra(empty, Modality::Diamond);
  for (Element x = 0; x < none.size(); ++x) CHECK(none.f[x] == 0);

  KripkeFrame loop;
  loop.worlds = 1;
  loop.edges = {{0, 0}};
  CHECK(complex_algebra(loop, Modality::Diamond).f ==
        std::vector<Element>{0, 1});

  const BooleanFrame wheel = builtin_frame("wheel:5");
  CHECK(wheel.size() == 64);
  CHECK(wheel.f[Element(1) << 5] == 63);  // every world sees the hub

  const BooleanFrame boxed =
      complex_algebra(wheel_kripke(5), Modality::Box);
  CHECK(builtin_property(boxed, "conormal").holds);

  KripkeFrame bad;
  bad.worlds = 1;
  bad.edges = {{0, 3}};
  CHECK_THROWS_AS(complex_algebra(bad, Modality::Diamond), Error);
}

TEST_CASE("products pair elements with the left factor in the low bits") {
  const BooleanFrame two_id = builtin_frame("two:id");
  const BooleanFrame prod = product_frame(two_id, two_id);
  CHECK(prod.f == std::vector<Element>{0, 1, 2, 3});

  const BooleanFrame mixed =
      product_frame(builtin_frame("example1"), builtin_frame("two:zero"));
  CHECK(mixed.atoms == 4);
  CHECK(mixed.f[5] == 7);
  CHECK(mixed.f[5 + 8] == 7);  // (5, 1) -> (7, 0)

  const BooleanFrame trivial = make_frame(0, {0});
  const BooleanFrame ex1 = builtin_frame("example1");
  CHECK(is_isomorphic(product_frame(trivial, ex1), ex1).has_value());

  CHECK_THROWS_AS(
      product_frame(builtin_frame("wheel:5"), builtin_frame("wheel:5")),
      Error);
}

TEST_CASE("random frames are deterministic and honor constraints") {
  CHECK(random_frame(2, 7, RandomConstraint::None)
            .same_table(random_frame(2, 7, RandomConstraint::None)));
  CHECK(random_frame(3, 1, RandomConstraint::Additive)
            .same_table(random_frame(3, 1, RandomConstraint::Additive)));

  CHECK(builtin_property(random_frame(3, 1, RandomConstraint::Additive),
                         "additive")
            .holds);
  CHECK(random_frame(2, 5, RandomConstraint::Normal).f[0] == 0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BooleanFrame star = random_frame(2, seed, RandomConstraint::Star);
    CHECK(satisfies_star_quasi_equation(star));
    CHECK(builtin_property(star, "star").holds);
  }
}

TEST_CASE("direct star scan agrees with the parsed property") {
  // dual routes on all 256 two-atom frames
  for (unsigned code = 0; code < 256; ++code) {
    const BooleanFrame frame{
        "", 2, {static_cast<Element>(code & 3),
                static_cast<Element>((code >> 2) & 3),
                static_cast<Element>((code >> 4) & 3),
                static_cast<Element>((code >> 6) & 3)}};
    CHECK(satisfies_star_quasi_equation(frame) ==
          builtin_property(frame, "star").holds);
  }
}

TEST_CASE("isomorphism search returns verified witnesses") {
  const BooleanFrame ex1 = builtin_frame("example1");
  const auto self = is_isomorphic(ex1, ex1);
  REQUIRE(self.has_value());
  CHECK(self->images == std::vector<int>{0, 1, 2});

  CHECK_FALSE(is_isomorphic(builtin_frame("two:zero"), builtin_frame("two:id"))
                  .has_value());
  CHECK_FALSE(
      is_isomorphic(builtin_frame("two:id"), builtin_frame("example1"))
          .has_value());

  std::mt19937_64 rng(23);
  for (int round = 0; round < 25; ++round) {
    const BooleanFrame a = random_frame(3, rng(), RandomConstraint::None);
    // permute atoms by hand and demand a verified witness back
    std::vector<int> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const AtomPermutation p{perm};
    std::vector<Element> table(a.size());
    for (Element x = 0; x < a.size(); ++x) table[p.apply(x)] = p.apply(a.f[x]);
    const BooleanFrame b{"", 3, table};

    const auto witness = is_isomorphic(a, b);
    REQUIRE(witness.has_value());
    for (Element x = 0; x < a.size(); ++x)
      CHECK(witness->apply(a.f[x]) == b.f[witness->apply(x)]);

    const auto back = is_isomorphic(b, a);
    REQUIRE(back.has_value());
  }
}

TEST_CASE("boolean identities hold for the bitmask encoding") {
  std::mt19937_64 rng(5);
  const BooleanFrame frame = random_frame(4, 99, RandomConstraint::None);
  for (int round = 0; round < 200; ++round) {
    const Element x = rand_elem(rng, frame);
    const Element y = rand_elem(rng, frame);
    const Element cx = frame.complement(x);
    const Element cy = frame.complement(y);
    CHECK((x ^ y) == ((x & cy) | (cx & y)));
    CHECK(BooleanFrame::leq(x, y) == ((x & y) == x));
    CHECK(frame.complement(x & y) == (cx | cy));
    CHECK(frame.complement(x | y) == (cx & cy));
  }
}
