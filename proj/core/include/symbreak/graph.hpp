#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/errors.hpp"

namespace symbreak {

using Edge = std::pair<int, int>;

// A set of vertex ids of some host graph, stored as a bitmask.
// Bit v set means vertex v is a member. Host order is at most 64.
using VertexSet = std::uint64_t;

std::vector<int> set_members(VertexSet s);
VertexSet set_of(std::span<const int> members);

// Immutable undirected simple graph on vertices 0..n-1.
// Adjacency is kept as one bitmask row per vertex; rows are symmetric and
// irreflexive by construction.
class Graph {
public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges are collapsed,
  // out-of-range ids and self-loops are rejected.
  static Graph build(int n, std::span<const Edge> edges, std::string name = "");
  static Graph build(int n, std::initializer_list<Edge> edges, std::string name = "");

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const;
  std::uint64_t row(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  // All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  std::vector<int> degree_sequence() const;  // sorted ascending
  bool connected() const;

  VertexSet full_set() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

  void check_vertex(int v) const;

private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::string name_;
};

// Join of two graphs plus the side each vertex came from.
// Left vertices keep their ids, right vertex j becomes left_order + j.
enum class Side { Left, Right };

struct JoinGraph {
  Graph graph;
  int left_order = 0;
  int right_order = 0;

  Side side_of(int v) const { return v < left_order ? Side::Left : Side::Right; }
  VertexSet left_set() const;
  VertexSet right_set() const;
  Graph left_graph() const;
  Graph right_graph() const;
};

JoinGraph join(const Graph& g1, const Graph& g2);

// All vertices not adjacent to v, including v itself.
VertexSet non_neighborhood(const Graph& g, int v);

// Induced subgraph on a nonempty vertex set; back_map[i] is the original id
// of the new vertex i. Members are renumbered in increasing id order.
struct InducedGraph {
  Graph graph;
  std::vector<int> back_map;
};

InducedGraph induced_with_map(const Graph& g, VertexSet s);
Graph induced(const Graph& g, VertexSet s);

int min_degree(const Graph& g);

// Exact Hamiltonian path decision by dynamic programming over
// (visited set, endpoint) states. Throws CapExceeded above the vertex cap.
bool has_hamiltonian_path(const Graph& g, int vertex_cap = 20);

// Standard generators.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int p, int q);
Graph complete_multipartite(std::span<const int> parts);
Graph star(int n);        // K_{1,n}, n+1 vertices
Graph friendship(int n);  // K_1 joined with n disjoint edges
Graph matching(int n);    // n disjoint edges, 2n vertices
Graph cartesian_product(const Graph& g, const Graph& h);

// Canonical form: a byte string equal for two graphs iff they are isomorphic.
std::string canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace symbreak
