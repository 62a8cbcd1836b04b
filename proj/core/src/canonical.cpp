#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {
namespace {

// Equitable refinement. Starting colors must be isomorphism-invariant;
// new color ids are assigned by sorted (old color, neighbor color multiset)
// signatures so the refined coloring is again invariant.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(colors[static_cast<size_t>(v)]);
      std::vector<int> nb;
      auto row = g.row(v);
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        nb.push_back(colors[static_cast<size_t>(u)]);
      }
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      sigs[static_cast<size_t>(v)] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    int color = -1;
    const std::vector<int>* prev = nullptr;
    for (const auto& [sig, v] : sorted) {
      if (!prev || sig != *prev) {
        ++color;
        prev = &sig;
      }
      next[static_cast<size_t>(v)] = color;
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

int color_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::string encode_under(const Graph& g, const std::vector<int>& position) {
  const int n = g.order();
  std::vector<int> at(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) at[static_cast<size_t>(position[static_cast<size_t>(v)])] = v;
  std::string out;
  out.push_back(static_cast<char>(n));
  int acc = 0, bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (g.adjacent(at[static_cast<size_t>(i)], at[static_cast<size_t>(j)]) ? 1 : 0);
      if (++bits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>(acc << (8 - bits)));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_position;
  bool have_best = false;
  UnionFind orbits;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()), orbits(graph.order()) {}

  void leaf(const std::vector<int>& colors) {
    std::string enc = encode_under(g, colors);
    if (!have_best || enc < best) {
      best = std::move(enc);
      best_position = colors;
      have_best = true;
      return;
    }
    if (enc == best) {
      // Two labelings with equal encodings compose to an automorphism;
      // merging its orbits lets sibling branches be skipped.
      std::vector<int> at(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) at[static_cast<size_t>(best_position[static_cast<size_t>(v)])] = v;
      for (int v = 0; v < n; ++v)
        orbits.unite(v, at[static_cast<size_t>(colors[static_cast<size_t>(v)])]);
    }
  }

  void run(const std::vector<int>& colors) {
    if (color_count(colors) == n) {
      leaf(colors);
      return;
    }
    // Target: the smallest non-singleton cell, lowest color id on ties.
    std::vector<int> cell_size(static_cast<size_t>(color_count(colors)), 0);
    for (int c : colors) ++cell_size[static_cast<size_t>(c)];
    int target = -1;
    for (int c = 0; c < color_count(colors); ++c) {
      if (cell_size[static_cast<size_t>(c)] < 2) continue;
      if (target < 0 || cell_size[static_cast<size_t>(c)] < cell_size[static_cast<size_t>(target)])
        target = c;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<size_t>(v)] != target) continue;
      bool skip = false;
      for (int u : tried)
        if (orbits.find(u) == orbits.find(v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      std::vector<int> split(static_cast<size_t>(n));
      for (int w = 0; w < n; ++w)
        split[static_cast<size_t>(w)] =
            2 * colors[static_cast<size_t>(w)] + (colors[static_cast<size_t>(w)] == target && w != v ? 1 : 0);
      run(refine_colors(g, std::move(split)));
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() == 0) return std::string(1, '\0');
  CanonSearch search(g);
  search.run(refine_colors(g, std::vector<int>(static_cast<size_t>(g.order()), 0)));
  return search.best;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace symbreak
