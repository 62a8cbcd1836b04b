#pragma once

#include <optional>

#include "symbreak/automorphism.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/labeling.hpp"

namespace symbreak {

struct SolverOptions {
  AutOptions aut;
  int label_cap = 64;
  double time_budget_s = 60.0;
};

// True iff no non-identity automorphism preserves every vertex label.
bool is_distinguishing(const Graph& g, const Labeling& L, const AutGroup& group);
bool is_distinguishing(const Graph& g, const Labeling& L, SolverOptions opts = {});

// True iff no non-identity automorphism preserves every edge label.
// Rejects edgeless graphs.
bool is_distinguishing_edges(const Graph& g, const EdgeLabeling& L, const AutGroup& group);
bool is_distinguishing_edges(const Graph& g, const EdgeLabeling& L, SolverOptions opts = {});

// Lexicographically smallest distinguishing labeling with at most d labels,
// restricted to label sequences in first-use order (any labeling is
// equivalent to exactly one such sequence by renaming labels).
std::optional<Labeling> find_labeling(const Graph& g, const AutGroup& group, int d,
                                      SolverOptions opts = {});
std::optional<Labeling> find_labeling(const Graph& g, int d, SolverOptions opts = {});

// Edge analogue. Returns nullopt either when no labeling with d labels works
// or when some non-identity automorphism fixes every edge (in which case no
// labeling of any size works).
std::optional<EdgeLabeling> find_edge_labeling(const Graph& g, const AutGroup& group, int d,
                                               SolverOptions opts = {});
std::optional<EdgeLabeling> find_edge_labeling(const Graph& g, int d, SolverOptions opts = {});

struct NumberResult {
  int value = 0;
  Labeling witness;
};

NumberResult distinguishing_number(const Graph& g, const AutGroup& group, SolverOptions opts = {});
NumberResult distinguishing_number(const Graph& g, SolverOptions opts = {});

// value empty means no distinguishing edge labeling of any size exists
// (some non-identity automorphism fixes every edge, e.g. for K_2).
struct IndexResult {
  std::optional<int> value;
  std::optional<EdgeLabeling> witness;
  bool not_defined() const { return !value.has_value(); }
};

IndexResult distinguishing_index(const Graph& g, const AutGroup& group, SolverOptions opts = {});
IndexResult distinguishing_index(const Graph& g, SolverOptions opts = {});

}  // namespace symbreak
