#pragma once

#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Exhaustive non-isomorphic enumeration by canonical-form deduplication.
// Supported up to kEnumerationCap vertices.
inline constexpr int kEnumerationCap = 7;

std::vector<Graph> enumerate_all_graphs(int n);        // exactly n vertices
std::vector<Graph> enumerate_connected_graphs(int n);  // exactly n vertices
std::vector<Graph> connected_graphs_up_to(int n);      // orders 1..n

}  // namespace symbreak
