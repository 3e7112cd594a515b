#include "frameforge/json_io.hpp"

#include <fstream>
#include <sstream>

namespace frameforge {

Json frame_to_json(const BooleanFrame& frame) {
  Json j = Json::object();
  if (!frame.name.empty()) j["name"] = frame.name;
  j["atoms"] = frame.atoms;
  j["f"] = frame.f;
  return j;
}

BooleanFrame frame_from_json(const Json& j, int max_atoms) {
  if (!j.is_object())
    throw Error(Errc::ValueOutOfRange, "frame JSON must be an object");
  if (j.contains("worlds")) {
    KripkeFrame kripke;
    kripke.worlds = j.at("worlds").get<int>();
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
          throw Error(Errc::ValueOutOfRange,
                      "each edge must be a [from, to] pair");
        kripke.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    Modality modality = Modality::Diamond;
    if (j.contains("modality")) {
      const std::string m = j.at("modality").get<std::string>();
      if (m == "diamond") modality = Modality::Diamond;
      else if (m == "box") modality = Modality::Box;
      else
        throw Error(Errc::UnknownSpec, "unknown modality '" + m + "'");
    }
    BooleanFrame frame = complex_algebra(kripke, modality, max_atoms);
    if (j.contains("name")) frame.name = j.at("name").get<std::string>();
    return frame;
  }
  if (!j.contains("atoms") || !j.contains("f"))
    throw Error(Errc::ValueOutOfRange,
                "frame JSON needs \"atoms\" and \"f\" (or \"worlds\")");
  const int atoms = j.at("atoms").get<int>();
  std::vector<Element> table;
  for (const auto& v : j.at("f")) {
    if (!v.is_number_unsigned())
      throw Error(Errc::ValueOutOfRange,
                  "table entry at index " + std::to_string(table.size()) +
                      " is not a non-negative integer");
    table.push_back(v.get<Element>());
  }
  std::string name;
  if (j.contains("name")) name = j.at("name").get<std::string>();
  return make_frame(atoms, std::move(table), std::move(name), max_atoms);
}

BooleanFrame load_frame_file(const std::string& path, int max_atoms) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::UnknownSpec, "cannot open frame file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SyntaxError,
                "invalid JSON in '" + path + "': " + e.what());
  }
  return frame_from_json(j, max_atoms);
}

Json assignment_to_json(const Assignment& assignment) {
  Json j = Json::object();
  for (const auto& [name, value] : assignment) j[name] = value;
  return j;
}

Json CheckEntry::to_json() const {
  Json j = Json::object();
  j["name"] = name;
  j["anchor"] = anchor;
  j["holds"] = holds;
  j["status"] = status;
  j["witness"] = witness.is_null() ? Json() : witness;
  return j;
}

Json Report::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["params"] = params;
  j["frame"] = frame.is_null() ? Json() : frame;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(c.to_json());
  j["checks"] = cs;
  j["open_questions"] = open_questions;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  if (!params.empty()) out << "params: " << params.dump() << "\n";
  if (!frame.is_null()) {
    out << "frame:";
    if (frame.contains("name")) out << " " << frame["name"].get<std::string>();
    if (frame.contains("atoms")) out << " (atoms=" << frame["atoms"] << ")";
    out << "\n";
  }
  for (const auto& c : checks) {
    out << "check " << c.name << ": " << (c.holds ? "HOLDS" : "FAILS") << " ["
        << c.status << "]";
    if (!c.witness.is_null()) out << " witness " << c.witness.dump();
    out << "\n";
  }
  for (const auto& q : open_questions) out << "open question: " << q << "\n";
  out << "elapsed_ms: " << elapsed_ms << "\n";
  return out.str();
}

bool Report::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

}  // namespace frameforge
