#pragma once

#include <string>
#include <string_view>

#include "ptangle/diagram.hpp"

namespace ptangle {

// Raw diagram files are one JSON object:
//   {"outer": 4, "holes": [4], "crossings": 2,
//    "arcs": [["outer.1", "x0.0"], ["hole1.2", "x1.3"], ...], "free_loops": 0}
// "holes", "crossings" and "free_loops" may be omitted (empty / 0). Other keys are rejected.
TangleDiagram parse_diagram_json(std::string_view text);
TangleDiagram read_diagram_file(const std::string& path);
std::string diagram_to_json(const TangleDiagram& d);

// "outer.K", "hole<i>.K" or "x<j>.S".
Port parse_port(std::string_view name);

}  // namespace ptangle
