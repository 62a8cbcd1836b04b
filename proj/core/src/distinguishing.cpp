#include "symbreak/distinguishing.hpp"

#include <algorithm>
#include <chrono>

// The two solvers share one search scheme. Items (vertices or edges) are
// labeled one at a time in a fixed order; the state tracks which non-identity
// automorphisms are still consistent with the labeled prefix ("survivors").
//
// An automorphism dies at step k when it maps item k onto an already labeled
// item with a different label (in either direction). Two sound cuts:
//
//   * label sequences are restricted to first-use order: item 0 takes label 1
//     and a label may only exceed the current maximum by one (renaming labels
//     never changes whether a labeling is distinguishing);
//   * when a survivor moves no item beyond the labeled prefix, it survives to
//     every completion, so the whole subtree is abandoned ("doomed");
//   * when no survivors remain, every completion is distinguishing and the
//     all-ones tail is the smallest one.
//
// Labels are tried in increasing order, so the first witness found is the
// lexicographically smallest one in the restricted space.

namespace symbreak {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  std::uint64_t counter = 0;

  explicit Deadline(double seconds)
      : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds))) {}

  void tick(const char* what) {
    if ((++counter & 0xFFF) == 0 && Clock::now() > end)
      throw CapExceeded(std::string(what) + ": time budget exceeded");
  }
};

// Per-element item permutation access, specialized for vertex and edge modes.
struct VertexItems {
  const std::uint8_t* fwd;  // group-flat forward images, one row per element
  const std::uint8_t* inv;
  int n;

  int item_count() const { return n; }
  int forward(size_t e, int item) const { return fwd[e * static_cast<size_t>(n) + static_cast<size_t>(item)]; }
  int backward(size_t e, int item) const { return inv[e * static_cast<size_t>(n) + static_cast<size_t>(item)]; }
};

struct EdgeItems {
  const std::uint8_t* fwd;
  const std::uint8_t* inv;
  int n;
  const std::vector<Edge>* edges;
  const std::vector<int>* edge_index;  // n*n lookup, -1 for non-edges

  int item_count() const { return static_cast<int>(edges->size()); }
  int lookup(int a, int b) const { return (*edge_index)[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)]; }
  int forward(size_t e, int item) const {
    auto [u, v] = (*edges)[static_cast<size_t>(item)];
    const std::uint8_t* row = fwd + e * static_cast<size_t>(n);
    return lookup(row[u], row[v]);
  }
  int backward(size_t e, int item) const {
    auto [u, v] = (*edges)[static_cast<size_t>(item)];
    const std::uint8_t* row = inv + e * static_cast<size_t>(n);
    return lookup(row[u], row[v]);
  }
};

template <class Items>
struct Search {
  Items items;
  const int* max_moved;  // per element: largest item it moves, -1 if none
  int min_moved = 0;     // smallest max_moved over all elements
  int m = 0;             // number of items
  int d = 0;             // label budget
  std::vector<int> labels;
  std::vector<std::vector<std::uint32_t>> pool;       // per-depth survivor storage
  std::vector<const std::vector<std::uint32_t>*> cur;  // effective survivor list
  Deadline deadline;

  Search(Items it, const std::vector<int>& moved, int labels_allowed, double budget)
      : items(it),
        max_moved(moved.data()),
        m(it.item_count()),
        d(labels_allowed),
        deadline(budget) {
    min_moved = m;
    for (int v : moved) min_moved = std::min(min_moved, v);
    labels.assign(static_cast<size_t>(m), 0);
    pool.resize(static_cast<size_t>(m) + 1);
    cur.resize(static_cast<size_t>(m) + 1, nullptr);
  }

  // Labels item k with lab; writes survivors into pool[k+1].
  // Returns false when the subtree is doomed by a fully-labeled survivor.
  bool filter(int k, int lab, int max_used) {
    const auto& parent = *cur[static_cast<size_t>(k)];
    // While every assigned label is 1 no constraint can fail, so nothing is
    // filtered and the doom check reduces to the precomputed minimum.
    if (lab == 1 && max_used <= 1) {
      if (min_moved <= k) return false;
      cur[static_cast<size_t>(k) + 1] = cur[static_cast<size_t>(k)];
      return true;
    }
    auto& child = pool[static_cast<size_t>(k) + 1];
    child.clear();
    for (std::uint32_t e : parent) {
      deadline.tick("labeling search");
      int f = items.forward(e, k);
      if (f < k && labels[static_cast<size_t>(f)] != lab) continue;
      int b = items.backward(e, k);
      if (b < k && labels[static_cast<size_t>(b)] != lab) continue;
      if (max_moved[e] <= k) return false;  // survives every completion
      child.push_back(e);
    }
    cur[static_cast<size_t>(k) + 1] =
        child.size() == parent.size() ? cur[static_cast<size_t>(k)] : &child;
    return true;
  }

  bool dfs(int k, int max_used) {
    if (cur[static_cast<size_t>(k)]->empty()) {
      std::fill(labels.begin() + k, labels.end(), 1);
      return true;
    }
    if (k == m) return false;
    int top = std::min(max_used + 1, d);
    for (int lab = 1; lab <= top; ++lab) {
      labels[static_cast<size_t>(k)] = lab;
      if (!filter(k, lab, max_used)) continue;
      if (dfs(k + 1, std::max(max_used, lab))) return true;
    }
    labels[static_cast<size_t>(k)] = 0;
    return false;
  }

  std::optional<std::vector<int>> run(const std::vector<std::uint32_t>& root) {
    cur[0] = &root;
    if (m == 0) return root.empty() ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    if (!dfs(0, 0)) return std::nullopt;
    return labels;
  }
};

struct GroupFlats {
  size_t count = 0;  // non-identity elements
  std::vector<std::uint8_t> fwd, inv;
  std::vector<std::uint32_t> all;  // 0..count-1

  GroupFlats(const AutGroup& group) {
    const int n = group.degree();
    count = group.order() - 1;
    fwd.resize(count * static_cast<size_t>(n));
    inv.resize(count * static_cast<size_t>(n));
    for (size_t i = 0; i < count; ++i) {
      auto row = group.images(i + 1);  // skip identity
      std::uint8_t* f = fwd.data() + i * static_cast<size_t>(n);
      std::uint8_t* b = inv.data() + i * static_cast<size_t>(n);
      for (int v = 0; v < n; ++v) {
        f[v] = row[static_cast<size_t>(v)];
        b[row[static_cast<size_t>(v)]] = static_cast<std::uint8_t>(v);
      }
    }
    all.resize(count);
    for (size_t i = 0; i < count; ++i) all[i] = static_cast<std::uint32_t>(i);
  }
};

std::vector<int> vertex_max_moved(const GroupFlats& flats, int n) {
  std::vector<int> out(flats.count, -1);
  for (size_t e = 0; e < flats.count; ++e) {
    const std::uint8_t* row = flats.fwd.data() + e * static_cast<size_t>(n);
    for (int v = n - 1; v >= 0; --v)
      if (row[v] != v) {
        out[e] = v;
        break;
      }
  }
  return out;
}

std::vector<int> edge_max_moved(const GroupFlats& flats, int n, const std::vector<Edge>& edges,
                                const std::vector<int>& edge_index) {
  std::vector<int> out(flats.count, -1);
  for (size_t e = 0; e < flats.count; ++e) {
    const std::uint8_t* row = flats.fwd.data() + e * static_cast<size_t>(n);
    for (int i = static_cast<int>(edges.size()) - 1; i >= 0; --i) {
      auto [u, v] = edges[static_cast<size_t>(i)];
      if (edge_index[static_cast<size_t>(row[u]) * static_cast<size_t>(n) + row[v]] != i) {
        out[e] = i;
        break;
      }
    }
  }
  return out;
}

std::vector<int> build_edge_index(const Graph& g, const std::vector<Edge>& edges) {
  const int n = g.order();
  std::vector<int> index(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    index[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] = static_cast<int>(i);
    index[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] = static_cast<int>(i);
  }
  return index;
}

}  // namespace

bool is_distinguishing(const Graph& g, const Labeling& L, const AutGroup& group) {
  L.validate(g);
  for (size_t i = 1; i < group.order(); ++i) {
    auto row = group.images(i);
    bool preserved = true;
    for (int v = 0; v < g.order() && preserved; ++v)
      preserved = L.labels[row[static_cast<size_t>(v)]] == L.labels[static_cast<size_t>(v)];
    if (preserved) return false;
  }
  return true;
}

bool is_distinguishing(const Graph& g, const Labeling& L, SolverOptions opts) {
  return is_distinguishing(g, L, automorphisms(g, opts.aut));
}

bool is_distinguishing_edges(const Graph& g, const EdgeLabeling& L, const AutGroup& group) {
  if (g.edge_count() == 0) throw InputError("edge labeling check on an edgeless graph");
  L.validate(g);
  auto edges = g.edges();
  auto index = build_edge_index(g, edges);
  const int n = g.order();
  for (size_t i = 1; i < group.order(); ++i) {
    auto row = group.images(i);
    bool preserved = true;
    for (size_t k = 0; k < edges.size() && preserved; ++k) {
      auto [u, v] = edges[k];
      int img = index[static_cast<size_t>(row[static_cast<size_t>(u)]) * static_cast<size_t>(n) +
                      row[static_cast<size_t>(v)]];
      preserved = L.labels[static_cast<size_t>(img)] == L.labels[k];
    }
    if (preserved) return false;
  }
  return true;
}

bool is_distinguishing_edges(const Graph& g, const EdgeLabeling& L, SolverOptions opts) {
  return is_distinguishing_edges(g, L, automorphisms(g, opts.aut));
}

namespace {

std::optional<Labeling> vertex_search(const GroupFlats& flats, const std::vector<int>& moved,
                                      int n, int d, double budget) {
  VertexItems items{flats.fwd.data(), flats.inv.data(), n};
  Search<VertexItems> search(items, moved, d, budget);
  auto labels = search.run(flats.all);
  if (!labels) return std::nullopt;
  return Labeling{std::move(*labels), d};
}

std::optional<EdgeLabeling> edge_search(const GroupFlats& flats, const std::vector<int>& moved,
                                        int n, const std::vector<Edge>& edges,
                                        const std::vector<int>& index, int d, double budget) {
  EdgeItems items{flats.fwd.data(), flats.inv.data(), n, &edges, &index};
  Search<EdgeItems> search(items, moved, d, budget);
  auto labels = search.run(flats.all);
  if (!labels) return std::nullopt;
  return EdgeLabeling{edges, std::move(*labels), d};
}

}  // namespace

std::optional<Labeling> find_labeling(const Graph& g, const AutGroup& group, int d,
                                      SolverOptions opts) {
  if (d < 1) throw InputError("label budget must be at least 1");
  GroupFlats flats(group);
  return vertex_search(flats, vertex_max_moved(flats, g.order()), g.order(), d,
                       opts.time_budget_s);
}

std::optional<Labeling> find_labeling(const Graph& g, int d, SolverOptions opts) {
  return find_labeling(g, automorphisms(g, opts.aut), d, opts);
}

std::optional<EdgeLabeling> find_edge_labeling(const Graph& g, const AutGroup& group, int d,
                                               SolverOptions opts) {
  if (d < 1) throw InputError("label budget must be at least 1");
  auto edges = g.edges();
  auto index = build_edge_index(g, edges);
  GroupFlats flats(group);
  auto moved = edge_max_moved(flats, g.order(), edges, index);
  // An automorphism moving no edge survives every edge labeling.
  for (size_t e = 0; e < flats.count; ++e)
    if (moved[e] < 0) return std::nullopt;
  return edge_search(flats, moved, g.order(), edges, index, d, opts.time_budget_s);
}

std::optional<EdgeLabeling> find_edge_labeling(const Graph& g, int d, SolverOptions opts) {
  return find_edge_labeling(g, automorphisms(g, opts.aut), d, opts);
}

NumberResult distinguishing_number(const Graph& g, const AutGroup& group, SolverOptions opts) {
  GroupFlats flats(group);
  auto moved = vertex_max_moved(flats, g.order());
  for (int d = 1; d <= g.order(); ++d) {
    if (d > opts.label_cap) throw CapExceeded("label cap exceeded in distinguishing_number");
    if (auto witness = vertex_search(flats, moved, g.order(), d, opts.time_budget_s))
      return {d, std::move(*witness)};
  }
  throw Error("internal: no distinguishing labeling up to n labels");
}

NumberResult distinguishing_number(const Graph& g, SolverOptions opts) {
  return distinguishing_number(g, automorphisms(g, opts.aut), opts);
}

IndexResult distinguishing_index(const Graph& g, const AutGroup& group, SolverOptions opts) {
  const int m = g.edge_count();
  auto edges = g.edges();
  auto index = build_edge_index(g, edges);
  GroupFlats flats(group);
  auto moved = edge_max_moved(flats, g.order(), edges, index);
  // A non-identity automorphism fixing every edge preserves every edge
  // labeling, so no distinguishing labeling of any size exists.
  for (size_t e = 0; e < flats.count; ++e)
    if (moved[e] < 0) return {std::nullopt, std::nullopt};
  for (int d = 1; d <= std::max(1, m); ++d) {
    if (d > opts.label_cap) throw CapExceeded("label cap exceeded in distinguishing_index");
    if (auto witness = edge_search(flats, moved, g.order(), edges, index, d, opts.time_budget_s))
      return {d, std::move(*witness)};
  }
  throw Error("internal: no distinguishing edge labeling up to m labels");
}

IndexResult distinguishing_index(const Graph& g, SolverOptions opts) {
  return distinguishing_index(g, automorphisms(g, opts.aut), opts);
}

}  // namespace symbreak
