#include "ptangle/diagram_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ptangle/errors.hpp"

namespace ptangle {

namespace {

int number(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw ValidationError("bad port name '" + std::string(whole) + "'");
  return v;
}

int integer_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() > 100000)
    throw ValidationError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<int>();
}

}  // namespace

Port parse_port(std::string_view name) {
  auto dot = name.find('.');
  if (dot == std::string_view::npos) throw ValidationError("bad port name '" + std::string(name) + "'");
  std::string_view owner = name.substr(0, dot), slot = name.substr(dot + 1);
  auto positive = [&](std::string_view digits) {
    int v = number(digits, name);
    if (v < 1) throw ValidationError("port '" + std::string(name) + "': holes and boundary slots count from 1");
    return v;
  };
  if (owner == "outer") return Port::outer(positive(slot));
  if (owner.substr(0, 4) == "hole") return Port::hole(positive(owner.substr(4)), positive(slot));
  if (owner.substr(0, 1) == "x") return Port::crossing(number(owner.substr(1), name), number(slot, name));
  throw ValidationError("bad port name '" + std::string(name) + "'");
}

TangleDiagram parse_diagram_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed diagram JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ValidationError("diagram file must hold one JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "outer" && key != "holes" && key != "crossings" && key != "arcs" && key != "free_loops")
      throw ValidationError("unknown field '" + key + "' in diagram file");
  if (!j.contains("outer") || !j.contains("arcs")) throw ValidationError("diagram file needs 'outer' and 'arcs'");

  int outer = integer_field(j, "outer");
  int crossings = j.contains("crossings") ? integer_field(j, "crossings") : 0;
  int loops = j.contains("free_loops") ? integer_field(j, "free_loops") : 0;
  std::vector<int> holes;
  if (j.contains("holes")) {
    if (!j["holes"].is_array()) throw ValidationError("'holes' must be an array of point counts");
    for (const auto& h : j["holes"]) {
      if (!h.is_number_integer() || h.get<long>() <= 0 || h.get<long>() > 100000)
        throw ValidationError("hole point counts must be positive integers");
      holes.push_back(h.get<int>());
    }
  }
  if (!j["arcs"].is_array()) throw ValidationError("'arcs' must be an array of port pairs");
  std::vector<std::pair<Port, Port>> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      throw ValidationError("each arc must be a pair of port names");
    arcs.emplace_back(parse_port(a[0].get<std::string>()), parse_port(a[1].get<std::string>()));
  }
  return TangleDiagram(outer, holes, crossings, arcs, loops);
}

TangleDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open diagram file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram_json(ss.str());
}

std::string diagram_to_json(const TangleDiagram& d) {
  nlohmann::ordered_json j;
  j["outer"] = d.outer_points();
  j["holes"] = d.hole_points();
  j["crossings"] = d.crossings();
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : d.arcs()) arcs.push_back({port_name(a), port_name(b)});
  j["arcs"] = arcs;
  j["free_loops"] = d.free_loops();
  return j.dump();
}

}  // namespace ptangle
