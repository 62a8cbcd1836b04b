#pragma once

#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Total vertex labeling with labels 1..label_count.
struct Labeling {
  std::vector<int> labels;  // indexed by vertex id
  int label_count = 0;

  int distinct_used() const;
  void validate(const Graph& host) const;
};

// Total edge labeling. `edges` is the host's canonical sorted edge list and
// `labels` runs parallel to it.
struct EdgeLabeling {
  std::vector<Edge> edges;
  std::vector<int> labels;
  int label_count = 0;

  int distinct_used() const;
  void validate(const Graph& host) const;
};

}  // namespace symbreak
