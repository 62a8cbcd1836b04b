#include "symbreak/join_partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "symbreak/bounds.hpp"

namespace symbreak {

namespace {

std::vector<std::vector<int>> side_classes(const Graph& g, const std::vector<int>& side_vertices) {
  const size_t k = side_vertices.size();
  std::vector<VertexSet> nb(k);
  for (size_t i = 0; i < k; ++i) nb[i] = non_neighborhood(g, side_vertices[i]);
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (nb[i] & nb[j]) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
      }
  std::map<int, std::vector<int>> comps;
  for (size_t i = 0; i < k; ++i) comps[find(static_cast<int>(i))].push_back(side_vertices[i]);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

SidePartition side_partition(const JoinGraph& jg) {
  SidePartition sp;
  sp.A = side_classes(jg.graph, set_members(jg.left_set()));
  sp.B = side_classes(jg.graph, set_members(jg.right_set()));
  return sp;
}

IsoClasses iso_classes(const JoinGraph& jg, const SidePartition& sp) {
  auto group_side = [&](const std::vector<std::vector<int>>& classes) {
    std::map<std::pair<int, std::string>, std::vector<int>> by_type;
    for (size_t i = 0; i < classes.size(); ++i) {
      Graph sub = induced(jg.graph, set_of(classes[i]));
      by_type[{sub.order(), canonical_form(sub)}].push_back(static_cast<int>(i));
    }
    std::vector<IsoGroup> out;
    for (auto& [key, members] : by_type)
      out.push_back(IsoGroup{std::move(members), key.second, key.first});
    return out;
  };
  return IsoClasses{group_side(sp.A), group_side(sp.B)};
}

int GammaStructure::a_multiplicity(const GammaClass& c) const {
  return c.a_group ? static_cast<int>(groups.A[static_cast<size_t>(*c.a_group)].members.size()) : 0;
}

int GammaStructure::b_multiplicity(const GammaClass& c) const {
  return c.b_group ? static_cast<int>(groups.B[static_cast<size_t>(*c.b_group)].members.size()) : 0;
}

GammaStructure gamma_partition([[maybe_unused]] const JoinGraph& jg, const SidePartition& sp,
                               const IsoClasses& ic) {
  GammaStructure gs;
  gs.side = sp;
  gs.groups = ic;

  auto support_of = [&](const IsoGroup* ag, const IsoGroup* bg) {
    std::vector<int> support;
    if (ag)
      for (int ci : ag->members)
        support.insert(support.end(), sp.A[static_cast<size_t>(ci)].begin(),
                       sp.A[static_cast<size_t>(ci)].end());
    if (bg)
      for (int ci : bg->members)
        support.insert(support.end(), sp.B[static_cast<size_t>(ci)].begin(),
                       sp.B[static_cast<size_t>(ci)].end());
    std::sort(support.begin(), support.end());
    return support;
  };

  std::vector<bool> b_used(ic.B.size(), false);
  std::vector<GammaClass> merged, left_only, right_only;
  for (size_t ai = 0; ai < ic.A.size(); ++ai) {
    int match = -1;
    for (size_t bi = 0; bi < ic.B.size(); ++bi)
      if (!b_used[bi] && ic.B[bi].canon == ic.A[ai].canon) {
        match = static_cast<int>(bi);
        break;
      }
    if (match >= 0) {
      b_used[static_cast<size_t>(match)] = true;
      merged.push_back(GammaClass{GammaTag::Merged, static_cast<int>(ai), match,
                                  support_of(&ic.A[ai], &ic.B[static_cast<size_t>(match)])});
    } else {
      left_only.push_back(
          GammaClass{GammaTag::LeftOnly, static_cast<int>(ai), std::nullopt,
                     support_of(&ic.A[ai], nullptr)});
    }
  }
  for (size_t bi = 0; bi < ic.B.size(); ++bi)
    if (!b_used[bi])
      right_only.push_back(GammaClass{GammaTag::RightOnly, std::nullopt, static_cast<int>(bi),
                                      support_of(nullptr, &ic.B[bi])});

  gs.q = static_cast<int>(merged.size());
  gs.classes = std::move(merged);
  gs.classes.insert(gs.classes.end(), left_only.begin(), left_only.end());
  gs.classes.insert(gs.classes.end(), right_only.begin(), right_only.end());

  if (gs.q > 0) {
    int max_a = 0, max_b = 0;
    for (int i = 0; i < gs.q; ++i) {
      max_a = std::max(max_a, gs.a_multiplicity(gs.classes[static_cast<size_t>(i)]));
      max_b = std::max(max_b, gs.b_multiplicity(gs.classes[static_cast<size_t>(i)]));
    }
    gs.z = std::min(max_a, max_b);
  }
  return gs;
}

GammaStructure gamma_structure(const JoinGraph& jg) {
  auto sp = side_partition(jg);
  auto ic = iso_classes(jg, sp);
  return gamma_partition(jg, sp, ic);
}

std::vector<InducedGraph> gamma_prime(const JoinGraph& jg, const GammaStructure& gs) {
  std::vector<InducedGraph> out;
  out.reserve(gs.classes.size());
  for (const auto& cls : gs.classes) out.push_back(induced_with_map(jg.graph, set_of(cls.support)));
  return out;
}

namespace {

// One changed label per merged-class member, distinct within each class.
// The changed vertex is the smallest id of the member, matching the
// deterministic witness ordering elsewhere.
void apply_bumps(Labeling& lab, const GammaStructure& gs, bool bump_left, int base) {
  for (int i = 0; i < gs.q; ++i) {
    const auto& cls = gs.classes[static_cast<size_t>(i)];
    const IsoGroup& grp = bump_left ? gs.groups.A[static_cast<size_t>(*cls.a_group)]
                                    : gs.groups.B[static_cast<size_t>(*cls.b_group)];
    const auto& classes = bump_left ? gs.side.A : gs.side.B;
    int member_index = 0;
    for (int ci : grp.members) {
      ++member_index;
      int v = classes[static_cast<size_t>(ci)].front();
      lab.labels[static_cast<size_t>(v)] = base + member_index;
    }
  }
}

}  // namespace

Labeling construct_join_vertex_labeling(const Graph& g1, const Graph& g2, SolverOptions opts) {
  JoinGraph jg = join(g1, g2);
  GammaStructure gs = gamma_structure(jg);

  auto r1 = distinguishing_number(g1, opts);
  auto r2 = distinguishing_number(g2, opts);
  const int d = std::max(r1.value, r2.value);

  Labeling lab;
  lab.labels.resize(static_cast<size_t>(jg.graph.order()));
  for (int v = 0; v < g1.order(); ++v)
    lab.labels[static_cast<size_t>(v)] = r1.witness.labels[static_cast<size_t>(v)];
  for (int v = 0; v < g2.order(); ++v)
    lab.labels[static_cast<size_t>(g1.order() + v)] = r2.witness.labels[static_cast<size_t>(v)];
  lab.label_count = d;

  if (gs.q > 0) {
    int max_a = 0, max_b = 0;
    for (int i = 0; i < gs.q; ++i) {
      max_a = std::max(max_a, gs.a_multiplicity(gs.classes[static_cast<size_t>(i)]));
      max_b = std::max(max_b, gs.b_multiplicity(gs.classes[static_cast<size_t>(i)]));
    }
    const bool bump_left = max_a <= max_b;
    apply_bumps(lab, gs, bump_left, d);
    lab.label_count = d + *gs.z;
  }

  if (!is_distinguishing(jg.graph, lab, opts))
    throw InvariantViolation("join labeling construction failed verification");
  return lab;
}

Labeling construct_self_join_labeling(const Graph& g, SolverOptions opts) {
  return construct_join_vertex_labeling(g, g, opts);
}

EdgeLabeling construct_gamma_edge_labeling(const JoinGraph& jg, const GammaStructure& gs,
                                           SolverOptions opts) {
  auto gps = gamma_prime(jg, gs);
  auto host_edges = jg.graph.edges();
  std::map<Edge, size_t> index;
  for (size_t i = 0; i < host_edges.size(); ++i) index[host_edges[i]] = i;

  EdgeLabeling lab;
  lab.edges = host_edges;
  lab.labels.assign(host_edges.size(), 1);
  std::string undefined;
  std::vector<IndexResult> results;
  for (size_t i = 0; i < gps.size(); ++i) {
    results.push_back(distinguishing_index(gps[i].graph, opts));
    if (results.back().not_defined())
      undefined += (undefined.empty() ? "" : ", ") + std::to_string(i + 1);
  }
  if (!undefined.empty())
    throw Inapplicable("class graph(s) " + undefined +
                       " have no distinguishing edge labeling");
  int used = 1;
  for (size_t i = 0; i < gps.size(); ++i) {
    const auto& part = gps[i];
    const auto& res = results[i];
    used = std::max(used, *res.value);
    const auto& wit = *res.witness;
    for (size_t e = 0; e < wit.edges.size(); ++e) {
      int u = part.back_map[static_cast<size_t>(wit.edges[e].first)];
      int v = part.back_map[static_cast<size_t>(wit.edges[e].second)];
      lab.labels[index.at({std::min(u, v), std::max(u, v)})] = wit.labels[e];
    }
  }
  lab.label_count = used;
  if (!is_distinguishing_edges(jg.graph, lab, opts))
    throw InvariantViolation("class edge labeling construction failed verification");
  return lab;
}

std::optional<IntInterval> bipartite_index_bound(int a, int b, SolverOptions opts) {
  if (a < 1 || b < 1) throw InputError("complete bipartite parts must be nonempty");
  if (a == 1 && b == 1) return std::nullopt;  // no labeling breaks the K_2 swap
  if (a + b <= opts.aut.vertex_cap) {
    try {
      auto res = distinguishing_index(complete_bipartite(a, b), opts);
      if (res.not_defined()) return std::nullopt;
      return IntInterval{*res.value, *res.value};
    } catch (const CapExceeded&) {
      // group too large to enumerate; fall through to the formula
    }
  }
  if (a == b) return std::nullopt;  // formula identification not applied here
  auto res = imrich(std::min(a, b), std::max(a, b));
  return res.value;
}

std::vector<BipartiteCover> enumerate_covers([[maybe_unused]] const JoinGraph& jg,
                                             const GammaStructure& gs, SolverOptions opts) {
  const int c = static_cast<int>(gs.classes.size());
  if (c < 2) throw Inapplicable("cover enumeration needs at least two classes");
  std::vector<std::pair<int, int>> all_pairs;
  for (int s = 0; s < c; ++s)
    for (int t = s + 1; t < c; ++t) all_pairs.emplace_back(s, t);
  const int np = static_cast<int>(all_pairs.size());
  if (np > 20) throw CapExceeded("too many classes for cover enumeration");

  std::vector<std::vector<std::pair<int, int>>> covers;
  std::vector<std::uint32_t> cover_masks;
  for (std::uint32_t mask = 1; mask < (1u << np); ++mask) {
    std::uint64_t covered = 0;
    for (int p = 0; p < np; ++p)
      if ((mask >> p) & 1)
        covered |= (std::uint64_t{1} << all_pairs[static_cast<size_t>(p)].first) |
                   (std::uint64_t{1} << all_pairs[static_cast<size_t>(p)].second);
    if (std::popcount(covered) != c) continue;
    cover_masks.push_back(mask);
  }
  // Keep every cover while the class count is small; otherwise restrict to
  // inclusion-minimal covers (a superset can only raise the maximum) plus
  // the full pair set as a fallback for undefined pairs.
  std::vector<std::uint32_t> kept;
  if (c <= 4) {
    kept = cover_masks;
  } else {
    for (auto m : cover_masks) {
      bool minimal = true;
      for (auto other : cover_masks)
        if (other != m && (other & m) == other) {
          minimal = false;
          break;
        }
      if (minimal) kept.push_back(m);
    }
    kept.push_back((1u << np) - 1);
  }
  std::sort(kept.begin(), kept.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<BipartiteCover> out;
  for (auto mask : kept) {
    BipartiteCover cover;
    for (int p = 0; p < np; ++p)
      if ((mask >> p) & 1) cover.pairs.push_back(all_pairs[static_cast<size_t>(p)]);
    std::optional<IntInterval> eps = IntInterval{0, 0};
    for (auto [s, t] : cover.pairs) {
      int a = static_cast<int>(gs.classes[static_cast<size_t>(s)].support.size());
      int b = static_cast<int>(gs.classes[static_cast<size_t>(t)].support.size());
      auto val = bipartite_index_bound(a, b, opts);
      if (!val) {
        eps.reset();
        cover.note = "pair K_{" + std::to_string(a) + "," + std::to_string(b) +
                     "} has no usable distinguishing index";
        break;
      }
      eps->lo = std::max(eps->lo, val->lo);
      eps->hi = std::max(eps->hi, val->hi);
    }
    cover.epsilon = eps;
    out.push_back(std::move(cover));
  }
  return out;
}

EdgeLabeling cover_edge_labeling(const JoinGraph& jg, const GammaStructure& gs,
                                 const BipartiteCover& cover, SolverOptions opts) {
  if (!cover.epsilon) throw Inapplicable("cover has no usable distinguishing index");
  auto host_edges = jg.graph.edges();
  std::map<Edge, size_t> index;
  for (size_t i = 0; i < host_edges.size(); ++i) index[host_edges[i]] = i;

  EdgeLabeling lab;
  lab.edges = host_edges;
  lab.labels.assign(host_edges.size(), 1);
  int used = 1;
  for (auto [s, t] : cover.pairs) {
    const auto& sup_a = gs.classes[static_cast<size_t>(s)].support;
    const auto& sup_b = gs.classes[static_cast<size_t>(t)].support;
    const int a = static_cast<int>(sup_a.size());
    const int b = static_cast<int>(sup_b.size());
    auto res = distinguishing_index(complete_bipartite(a, b), opts);
    if (res.not_defined())
      throw Inapplicable("cover pair K_{" + std::to_string(a) + "," + std::to_string(b) +
                         "} has no distinguishing edge labeling");
    used = std::max(used, *res.value);
    for (size_t e = 0; e < res.witness->edges.size(); ++e) {
      auto [u, v] = res.witness->edges[e];  // u in 0..a-1, v in a..a+b-1
      int ju = sup_a[static_cast<size_t>(u)];
      int jv = sup_b[static_cast<size_t>(v - a)];
      lab.labels[index.at({std::min(ju, jv), std::max(ju, jv)})] =
          res.witness->labels[e];
    }
  }
  lab.label_count = used;
  if (!is_distinguishing_edges(jg.graph, lab, opts))
    throw InvariantViolation("cover edge labeling construction failed verification");
  return lab;
}

LambdaBounds lambda_bounds(const JoinGraph& jg, const GammaStructure& gs, SolverOptions opts) {
  LambdaBounds out;
  try {
    int best = 1;
    bool all_defined = true;
    for (const auto& part : gamma_prime(jg, gs)) {
      auto res = distinguishing_index(part.graph, opts);
      if (res.not_defined()) {
        all_defined = false;
        break;
      }
      best = std::max(best, *res.value);
    }
    if (all_defined) {
      out.lambda1 = best;
      out.lambda1_status = LambdaStatus::Present;
    } else {
      out.lambda1_status = LambdaStatus::NotDefinedMember;
    }
  } catch (const CapExceeded&) {
    out.lambda1_status = LambdaStatus::CapExceeded;
  }

  if (gs.classes.size() < 2) {
    out.lambda2_status = LambdaStatus::SingleClass;
    return out;
  }
  try {
    std::optional<IntInterval> best;
    for (const auto& cover : enumerate_covers(jg, gs, opts)) {
      if (!cover.epsilon) continue;
      if (!best) {
        best = cover.epsilon;
      } else {
        best->lo = std::min(best->lo, cover.epsilon->lo);
        best->hi = std::min(best->hi, cover.epsilon->hi);
      }
    }
    if (best) {
      out.lambda2 = best;
      out.lambda2_status = LambdaStatus::Present;
    } else {
      out.lambda2_status = LambdaStatus::NoValidCover;
    }
  } catch (const CapExceeded&) {
    out.lambda2_status = LambdaStatus::CapExceeded;
  }
  return out;
}

LambdaBounds lambda_bounds(const JoinGraph& jg, SolverOptions opts) {
  return lambda_bounds(jg, gamma_structure(jg), opts);
}

bool classes_permuted_by_group([[maybe_unused]] const JoinGraph& jg, const SidePartition& sp,
                               const AutGroup& group) {
  std::set<VertexSet> class_masks;
  std::vector<VertexSet> masks;
  for (const auto& cls : sp.A) masks.push_back(set_of(cls));
  for (const auto& cls : sp.B) masks.push_back(set_of(cls));
  for (auto m : masks) class_masks.insert(m);
  for (size_t i = 1; i < group.order(); ++i) {
    auto row = group.images(i);
    for (auto mask : masks) {
      VertexSet image = 0;
      auto rest = mask;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        image |= std::uint64_t{1} << row[static_cast<size_t>(v)];
      }
      if (!class_masks.count(image)) return false;
    }
  }
  return true;
}

bool mapped_classes_isomorphic(const JoinGraph& jg, const SidePartition& sp,
                               const AutGroup& group) {
  std::vector<VertexSet> masks;
  for (const auto& cls : sp.A) masks.push_back(set_of(cls));
  for (const auto& cls : sp.B) masks.push_back(set_of(cls));
  std::map<VertexSet, std::string> canon;
  for (auto m : masks) canon[m] = canonical_form(induced(jg.graph, m));
  for (size_t i = 1; i < group.order(); ++i) {
    auto row = group.images(i);
    for (auto mask : masks) {
      VertexSet image = 0;
      auto rest = mask;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        image |= std::uint64_t{1} << row[static_cast<size_t>(v)];
      }
      auto it = canon.find(image);
      if (it == canon.end()) return false;        // image is not a class
      if (it->second != canon.at(mask)) return false;  // class types differ
    }
  }
  return true;
}

bool gamma_restriction_property(const JoinGraph& jg, const GammaStructure& gs,
                                const AutGroup& group) {
  auto gps = gamma_prime(jg, gs);
  for (size_t ci = 0; ci < gs.classes.size(); ++ci) {
    const auto& support = gs.classes[ci].support;
    VertexSet mask = set_of(support);
    std::vector<int> pos(static_cast<size_t>(jg.graph.order()), -1);
    for (size_t i = 0; i < support.size(); ++i) pos[static_cast<size_t>(support[i])] = static_cast<int>(i);
    for (size_t e = 1; e < group.order(); ++e) {
      auto row = group.images(e);
      VertexSet image = 0;
      for (int v : support) image |= std::uint64_t{1} << row[static_cast<size_t>(v)];
      if (image != mask) return false;  // support must be fixed setwise
      Permutation restriction;
      restriction.image.resize(support.size());
      for (size_t i = 0; i < support.size(); ++i)
        restriction.image[i] = pos[static_cast<size_t>(row[static_cast<size_t>(support[i])])];
      if (!is_automorphism(gps[ci].graph, restriction)) return false;
    }
  }
  return true;
}

}  // namespace symbreak
