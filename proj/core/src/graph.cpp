#include "symbreak/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace symbreak {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet set_of(std::span<const int> members) {
  VertexSet s = 0;
  for (int v : members) s |= std::uint64_t{1} << v;
  return s;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
}

Graph Graph::build(int n, std::span<const Edge> edges, std::string name) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " exceeds supported maximum " +
                     std::to_string(kMaxOrder));
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), 0);
  g.name_ = std::move(name);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v)
      throw InputError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") is not allowed");
    g.adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::build(int n, std::initializer_list<Edge> edges, std::string name) {
  return build(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name));
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<size_t>(u)] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[static_cast<size_t>(v)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

VertexSet Graph::full_set() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

VertexSet JoinGraph::left_set() const {
  return left_order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << left_order) - 1;
}

VertexSet JoinGraph::right_set() const {
  return graph.full_set() & ~left_set();
}

Graph JoinGraph::left_graph() const { return induced(graph, left_set()); }
Graph JoinGraph::right_graph() const { return induced(graph, right_set()); }

JoinGraph join(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0) throw InputError("join of an empty graph");
  const int n = g1.order();
  const int m = g2.order();
  if (n + m > Graph::kMaxOrder)
    throw InputError("join order " + std::to_string(n + m) + " exceeds supported maximum");
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(n + u, n + v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) edges.emplace_back(u, n + v);
  JoinGraph jg;
  jg.graph = Graph::build(n + m, edges);
  jg.left_order = n;
  jg.right_order = m;
  return jg;
}

VertexSet non_neighborhood(const Graph& g, int v) {
  g.check_vertex(v);
  return g.full_set() & ~g.row(v);
}

InducedGraph induced_with_map(const Graph& g, VertexSet s) {
  s &= g.full_set();
  if (s == 0) throw InputError("induced subgraph of an empty vertex set");
  InducedGraph out;
  out.back_map = set_members(s);
  const int k = static_cast<int>(out.back_map.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(out.back_map[static_cast<size_t>(i)], out.back_map[static_cast<size_t>(j)]))
        edges.emplace_back(i, j);
  out.graph = Graph::build(k, edges);
  return out;
}

Graph induced(const Graph& g, VertexSet s) { return induced_with_map(g, s).graph; }

int min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("min_degree of the empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool has_hamiltonian_path(const Graph& g, int vertex_cap) {
  const int n = g.order();
  if (n > vertex_cap)
    throw CapExceeded("Hamiltonian path decision not supported above " +
                      std::to_string(vertex_cap) + " vertices (got " + std::to_string(n) + ")");
  if (n == 0) return false;
  if (n == 1) return true;
  // reach[mask] = set of endpoints of paths visiting exactly `mask`
  const size_t size = size_t{1} << n;
  std::vector<std::uint64_t> reach(size, 0);
  for (int v = 0; v < n; ++v) reach[size_t{1} << v] = std::uint64_t{1} << v;
  const std::uint64_t full = (size_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t ends = reach[mask];
    if (!ends) continue;
    if (mask == full) return true;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint64_t nexts = g.row(v) & ~mask;
      while (nexts) {
        int w = std::countr_zero(nexts);
        nexts &= nexts - 1;
        reach[mask | (std::uint64_t{1} << w)] |= std::uint64_t{1} << w;
      }
    }
  }
  return false;
}

Graph path(int n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e, "P" + std::to_string(n));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::build(n, e, "C" + std::to_string(n));
}

Graph complete(int n) {
  if (n < 1) throw InputError("complete graph needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e, "K" + std::to_string(n));
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw InputError("complete bipartite parts must be nonempty");
  std::vector<int> parts{p, q};
  return complete_multipartite(parts).renamed("K" + std::to_string(p) + "," + std::to_string(q));
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw InputError("complete multipartite needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw InputError("complete multipartite parts must be nonempty");
    n += p;
  }
  std::vector<Edge> e;
  int offset = 0;
  std::vector<std::pair<int, int>> ranges;
  for (int p : parts) {
    ranges.emplace_back(offset, offset + p);
    offset += p;
  }
  for (size_t a = 0; a < ranges.size(); ++a)
    for (size_t b = a + 1; b < ranges.size(); ++b)
      for (int u = ranges[a].first; u < ranges[a].second; ++u)
        for (int v = ranges[b].first; v < ranges[b].second; ++v) e.emplace_back(u, v);
  return Graph::build(n, e);
}

Graph star(int n) {
  if (n < 1) throw InputError("star needs at least 1 leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  return Graph::build(n + 1, e, "K1," + std::to_string(n));
}

Graph friendship(int n) {
  if (n < 1) throw InputError("friendship graph needs at least 1 triangle");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    int a = 1 + 2 * i, b = 2 + 2 * i;
    e.emplace_back(0, a);
    e.emplace_back(0, b);
    e.emplace_back(a, b);
  }
  return Graph::build(2 * n + 1, e, "F" + std::to_string(n));
}

Graph matching(int n) {
  if (n < 1) throw InputError("matching needs at least 1 edge");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Graph::build(2 * n, e, std::to_string(n) + "K2");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int gn = g.order(), hn = h.order();
  if (gn == 0 || hn == 0) throw InputError("cartesian product of an empty graph");
  if (gn * hn > Graph::kMaxOrder)
    throw InputError("cartesian product order exceeds supported maximum");
  auto id = [hn](int a, int b) { return a * hn + b; };
  std::vector<Edge> e;
  for (int a = 0; a < gn; ++a)
    for (auto [u, v] : h.edges()) e.emplace_back(id(a, u), id(a, v));
  for (int b = 0; b < hn; ++b)
    for (auto [u, v] : g.edges()) e.emplace_back(id(u, b), id(v, b));
  return Graph::build(gn * hn, e);
}

}  // namespace symbreak
