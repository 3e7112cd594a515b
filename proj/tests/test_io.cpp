#include <doctest.h>

#include "frameforge/claims.hpp"
#include "frameforge/json_io.hpp"

using namespace frameforge;

TEST_CASE("frame json round-trips") {
  for (const char* spec :
       {"example1", "example-sh", "cycle:2", "two:swap", "wheel:5"}) {
    const BooleanFrame frame = builtin_frame(spec);
    CHECK(frame_from_json(frame_to_json(frame)) == frame);
  }
  const BooleanFrame unnamed = random_frame(3, 4, RandomConstraint::None);
  CHECK(frame_from_json(frame_to_json(unnamed)) == unnamed);
  CHECK_FALSE(frame_to_json(unnamed).contains("name"));
}

TEST_CASE("kripke json is accepted wherever a frame is") {
  const Json loop = {{"worlds", 1}, {"edges", {{0, 0}}}};
  CHECK(frame_from_json(loop).f == std::vector<Element>{0, 1});

  const Json boxed = {{"worlds", 1}, {"edges", Json::array()},
                      {"modality", "box"}};
  CHECK(frame_from_json(boxed).f == std::vector<Element>{1, 1});

  CHECK_THROWS_AS(
      frame_from_json({{"worlds", 2}, {"modality", "square"}}), Error);
  CHECK_THROWS_AS(frame_from_json({{"worlds", 1}, {"edges", {{0, 5}}}}),
                  Error);
}

TEST_CASE("malformed frame files point at the offender") {
  try {
    frame_from_json({{"atoms", 2}, {"f", {0, 1, 2}}});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
  try {
    frame_from_json({{"atoms", 2}, {"f", {0, 1, 2, 5}}});
    FAIL("expected ValueOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ValueOutOfRange);
    CHECK(std::string(e.what()).find("index 3") != std::string::npos);
  }
}

TEST_CASE("reports serialize deterministically with the fixed key order") {
  auto build = [] {
    Report r;
    r.command = "check";
    r.params = Json::object();
    r.params["builtin"] = {"example1"};
    r.frame = frame_to_json(builtin_frame("example1"));
    Json w = Json::object();
    w["assignment"] = assignment_to_json({{"x", 1}, {"y", 4}});
    r.checks.push_back(CheckEntry{"additive", "", false, "exhaustive", w});
    return r.to_json().dump(2);
  };
  const std::string once = build();
  CHECK(once == build());

  const Json j = Json::parse(once);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "params", "frame",
                                         "checks", "open_questions",
                                         "elapsed_ms"});
  std::vector<std::string> check_keys;
  for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it)
    check_keys.push_back(it.key());
  CHECK(check_keys == std::vector<std::string>{"name", "anchor", "holds",
                                               "status", "witness"});
}

TEST_CASE("corrupting the sh example is detected by its claim set") {
  BooleanFrame corrupted = builtin_frame("example-sh");
  corrupted.f[2] = 2;  // drop the arrow into the top element
  int failures = 0;
  for (const auto& c : example_sh_claims(corrupted))
    if (!c.pass) ++failures;
  CHECK(failures > 0);
}
