#pragma once

#include <string>

#include <json.hpp>

#include "frameforge/check.hpp"
#include "frameforge/frame.hpp"

namespace frameforge {

/// Reports and frame files use insertion-ordered JSON so that identical
/// invocations serialize byte-identically.
using Json = nlohmann::ordered_json;

Json frame_to_json(const BooleanFrame& frame);

/// Accepts a frame object ({"atoms":…, "f":[…]}) or a Kripke object
/// ({"worlds":…, "edges":[[u,v],…], "modality":…}), which is turned into
/// its complex algebra.
BooleanFrame frame_from_json(const Json& j,
                             int max_atoms = default_max_atoms());

BooleanFrame load_frame_file(const std::string& path,
                             int max_atoms = default_max_atoms());

Json assignment_to_json(const Assignment& assignment);

/// One entry of a report's check list.
struct CheckEntry {
  std::string name;
  std::string anchor;  // stable claim id; "" for ad-hoc checks
  bool holds = true;
  std::string status = "exhaustive";  // exhaustive | sampled | inconclusive
  Json witness;                       // null when there is nothing to show

  Json to_json() const;
};

/// The report emitted by every CLI command. Serialization is deterministic:
/// fixed key order, sorted sets, and elapsed_ms pinned to 0 unless timing
/// was requested.
struct Report {
  std::string command;
  Json params = Json::object();
  Json frame;  // frame JSON or null
  std::vector<CheckEntry> checks;
  std::vector<std::string> open_questions;
  std::int64_t elapsed_ms = 0;

  Json to_json() const;
  std::string to_text() const;
  bool all_hold() const;
};

}  // namespace frameforge
