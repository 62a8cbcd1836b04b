#pragma once

#include <string>
#include <string_view>

#include "symbreak/graph.hpp"

namespace symbreak {

// graph6 text format: header byte 63+n for n <= 62 (or '~' followed by three
// 6-bit bytes up to the supported maximum), then the upper triangle in
// column-major order packed into 6-bit groups, each offset by 63.
std::string write_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

// Plain edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace symbreak
