#include "symbreak/corpus.hpp"

#include <unordered_set>

namespace symbreak {

namespace {

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1) throw InputError("enumeration needs at least 1 vertex");
  if (n > kEnumerationCap)
    throw InputError("internal enumeration capped at " + std::to_string(kEnumerationCap) +
                     " vertices; provide a graph list file instead");
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const int m = static_cast<int>(slots.size());
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::vector<Edge> edges;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    edges.clear();
    for (int b = 0; b < m; ++b)
      if ((mask >> b) & 1) edges.push_back(slots[static_cast<size_t>(b)]);
    Graph g = Graph::build(n, edges);
    if (connected_only && !g.connected()) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_all_graphs(int n) { return enumerate_graphs(n, false); }

std::vector<Graph> enumerate_connected_graphs(int n) { return enumerate_graphs(n, true); }

std::vector<Graph> connected_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto batch = enumerate_connected_graphs(k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace symbreak
