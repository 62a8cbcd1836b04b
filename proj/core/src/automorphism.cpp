#include "symbreak/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace symbreak {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (image[static_cast<size_t>(v)] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.resize(image.size());
  for (int v = 0; v < size(); ++v) inv.image[static_cast<size_t>(image[static_cast<size_t>(v)])] = v;
  return inv;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.image.resize(image.size());
  for (int v = 0; v < size(); ++v)
    out.image[static_cast<size_t>(v)] = next.image[static_cast<size_t>(image[static_cast<size_t>(v)])];
  return out;
}

void Permutation::validate() const {
  std::uint64_t seen = 0;
  for (int v : image) {
    if (v < 0 || v >= size()) throw InputError("permutation image out of range");
    if ((seen >> v) & 1) throw InputError("permutation is not injective");
    seen |= std::uint64_t{1} << v;
  }
}

AutGroup::AutGroup(int degree, std::vector<std::uint8_t> flat) : n_(degree), flat_(std::move(flat)) {}

Permutation AutGroup::element(std::size_t i) const {
  Permutation p;
  auto row = images(i);
  p.image.assign(row.begin(), row.end());
  return p;
}

namespace {

// Equitable coloring used as the enumeration pruning invariant: iterate
// (color, sorted neighbor colors) signatures to a fixpoint.
std::vector<int> equitable_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> colors(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs;
    sigs.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{colors[static_cast<size_t>(v)]};
      auto row = g.row(v);
      std::vector<int> nb;
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        nb.push_back(colors[static_cast<size_t>(u)]);
      }
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      sigs.emplace_back(std::move(sig), v);
    }
    auto sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    int c = -1;
    const std::vector<int>* prev = nullptr;
    for (const auto& [sig, v] : sorted) {
      if (!prev || sig != *prev) {
        ++c;
        prev = &sig;
      }
      next[static_cast<size_t>(v)] = c;
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

struct EnumState {
  const Graph& g;
  int n;
  std::uint64_t element_cap;
  const std::vector<int>& colors;
  std::vector<std::uint64_t> color_mask;  // candidate pool per color
  std::vector<std::uint8_t> image;
  std::uint64_t used = 0;  // images already taken
  std::vector<std::uint8_t> flat;

  void dfs(int v) {
    if (v == n) {
      if (flat.size() / static_cast<size_t>(n) >= element_cap)
        throw CapExceeded("automorphism group exceeds element cap " +
                          std::to_string(element_cap));
      flat.insert(flat.end(), image.begin(), image.end());
      return;
    }
    // Required adjacency of the image of v toward already placed images.
    std::uint64_t required = 0;
    auto row = g.row(v);
    for (int u = 0; u < v; ++u)
      if ((row >> u) & 1) required |= std::uint64_t{1} << image[static_cast<size_t>(u)];
    std::uint64_t cands = color_mask[static_cast<size_t>(colors[static_cast<size_t>(v)])] & ~used;
    while (cands) {
      int c = std::countr_zero(cands);
      cands &= cands - 1;
      if ((g.row(c) & used) != required) continue;
      image[static_cast<size_t>(v)] = static_cast<std::uint8_t>(c);
      used |= std::uint64_t{1} << c;
      dfs(v + 1);
      used &= ~(std::uint64_t{1} << c);
    }
  }
};

}  // namespace

AutGroup automorphisms(const Graph& g, AutOptions opts) {
  const int n = g.order();
  if (n > opts.vertex_cap)
    throw CapExceeded("automorphism enumeration capped at " + std::to_string(opts.vertex_cap) +
                      " vertices (got " + std::to_string(n) + ")");
  if (n == 0) return AutGroup(0, {});
  auto colors = equitable_colors(g);
  EnumState st{g, n, opts.element_cap, colors, {}, {}, 0, {}};
  int nc = *std::max_element(colors.begin(), colors.end()) + 1;
  st.color_mask.assign(static_cast<size_t>(nc), 0);
  for (int v = 0; v < n; ++v)
    st.color_mask[static_cast<size_t>(colors[static_cast<size_t>(v)])] |= std::uint64_t{1} << v;
  st.image.resize(static_cast<size_t>(n));
  st.dfs(0);
  return AutGroup(n, std::move(st.flat));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw InputError("permutation size does not match graph order");
  p.validate();
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t mapped = 0;
    auto row = g.row(v);
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      mapped |= std::uint64_t{1} << p(u);
    }
    if (mapped != g.row(p(v))) return false;
  }
  return true;
}

std::vector<std::vector<int>> orbits(const AutGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (std::size_t i = 1; i < group.order(); ++i) {
    auto row = group.images(i);
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(row[static_cast<size_t>(v)]);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<int>> orbits(const Graph& g, AutOptions opts) {
  return orbits(automorphisms(g, opts));
}

Edge edge_action(const Graph& g, const Permutation& p, Edge e) {
  if (!g.adjacent(e.first, e.second))
    throw InputError("edge_action: (" + std::to_string(e.first) + ", " +
                     std::to_string(e.second) + ") is not an edge");
  int a = p(e.first), b = p(e.second);
  return {std::min(a, b), std::max(a, b)};
}

bool preserves_vertex_labeling(const Permutation& p, const Labeling& L) {
  if (static_cast<size_t>(p.size()) != L.labels.size())
    throw InputError("labeling does not cover the permutation domain");
  for (int v = 0; v < p.size(); ++v)
    if (L.labels[static_cast<size_t>(p(v))] != L.labels[static_cast<size_t>(v)]) return false;
  return true;
}

bool preserves_edge_labeling(const Permutation& p, const EdgeLabeling& L) {
  if (L.edges.size() != L.labels.size()) throw InputError("edge labeling is not total");
  std::map<Edge, int> index;
  for (size_t i = 0; i < L.edges.size(); ++i) index[L.edges[i]] = static_cast<int>(i);
  for (size_t i = 0; i < L.edges.size(); ++i) {
    auto [u, v] = L.edges[i];
    int a = p(u), b = p(v);
    auto it = index.find({std::min(a, b), std::max(a, b)});
    if (it == index.end()) throw InputError("permutation does not preserve the edge set");
    if (L.labels[static_cast<size_t>(it->second)] != L.labels[i]) return false;
  }
  return true;
}

}  // namespace symbreak
