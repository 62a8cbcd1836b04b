#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symbreak/distinguishing.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// Classes of the non-neighborhood closure partition of a join, one list per
// side. Two vertices share a class exactly when their non-neighborhoods are
// linked by a chain of pairwise-intersecting non-neighborhoods. Classes are
// ordered by smallest contained vertex and use join vertex ids throughout.
struct SidePartition {
  std::vector<std::vector<int>> A;
  std::vector<std::vector<int>> B;
};

SidePartition side_partition(const JoinGraph& jg);

// Grouping of the induced class subgraphs of one side by isomorphism type.
struct IsoGroup {
  std::vector<int> members;  // class indices into SidePartition::A or ::B
  std::string canon;         // shared canonical form of the member subgraphs
  int member_order = 0;      // vertex count of each member
};

struct IsoClasses {
  std::vector<IsoGroup> A;  // groups ordered by (member_order, canon)
  std::vector<IsoGroup> B;
};

IsoClasses iso_classes(const JoinGraph& jg, const SidePartition& sp);

enum class GammaTag { Merged, LeftOnly, RightOnly };

struct GammaClass {
  GammaTag tag = GammaTag::Merged;
  std::optional<int> a_group;  // index into IsoClasses::A
  std::optional<int> b_group;
  std::vector<int> support;    // sorted union of member vertex sets
};

// Cross-side merge of the per-side isomorphism groups. Merged classes come
// first; the extra-label budget z is the smaller of the two sides' largest
// merged multiplicities, defined only when at least one class merged.
struct GammaStructure {
  SidePartition side;
  IsoClasses groups;
  std::vector<GammaClass> classes;
  int q = 0;
  std::optional<int> z;

  int a_multiplicity(const GammaClass& c) const;  // 0 when no left members
  int b_multiplicity(const GammaClass& c) const;
};

GammaStructure gamma_partition(const JoinGraph& jg, const SidePartition& sp,
                               const IsoClasses& ic);
GammaStructure gamma_structure(const JoinGraph& jg);  // all three steps

// Induced subgraph of the join on each class support (members plus the join
// edges internal to the support).
std::vector<InducedGraph> gamma_prime(const JoinGraph& jg, const GammaStructure& gs);

// Distinguishing vertex labeling of g1+g2 built from distinguishing labelings
// of the sides plus one changed label per merged-class member on the side
// with the smaller merged multiplicity (ties choose the left side). Uses at
// most max{D(g1), D(g2)} + z labels and is verified before returning.
Labeling construct_join_vertex_labeling(const Graph& g1, const Graph& g2,
                                        SolverOptions opts = {});

// Same construction applied to g+g; uses at most D(g) + max multiplicity
// labels.
Labeling construct_self_join_labeling(const Graph& g, SolverOptions opts = {});

// Distinguishing edge labeling that labels every class graph distinguishingly
// and all cross-class edges 1. Throws Inapplicable when some class graph has
// no distinguishing edge labeling.
EdgeLabeling construct_gamma_edge_labeling(const JoinGraph& jg, const GammaStructure& gs,
                                           SolverOptions opts = {});

struct IntInterval {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
};

// A set of class-index pairs covering every class; epsilon is the largest
// distinguishing index among the complete bipartite graphs spanned by the
// paired supports. epsilon is absent when some pair has no defined index or
// cannot be evaluated under the configured caps.
struct BipartiteCover {
  std::vector<std::pair<int, int>> pairs;  // class indices, first < second
  std::optional<IntInterval> epsilon;
  std::string note;  // why epsilon is absent, when it is
};

std::vector<BipartiteCover> enumerate_covers(const JoinGraph& jg, const GammaStructure& gs,
                                             SolverOptions opts = {});

// Labels each chosen complete bipartite edge set with an exact distinguishing
// edge labeling and the remaining edges 1; verified before returning.
EdgeLabeling cover_edge_labeling(const JoinGraph& jg, const GammaStructure& gs,
                                 const BipartiteCover& cover, SolverOptions opts = {});

enum class LambdaStatus {
  Present,
  NotDefinedMember,  // some class graph has no distinguishing edge labeling
  SingleClass,       // no valid cover exists
  NoValidCover,
  CapExceeded,
};

struct LambdaBounds {
  std::optional<int> lambda1;
  LambdaStatus lambda1_status = LambdaStatus::Present;
  std::optional<IntInterval> lambda2;
  LambdaStatus lambda2_status = LambdaStatus::Present;
};

LambdaBounds lambda_bounds(const JoinGraph& jg, const GammaStructure& gs,
                           SolverOptions opts = {});
LambdaBounds lambda_bounds(const JoinGraph& jg, SolverOptions opts = {});

// Exact-or-formula distinguishing index of K_{a,b}: solver result when the
// group fits the caps, otherwise the complete-product formula (a != b only).
// nullopt when undefined (a = b = 1) or not evaluable under the caps.
std::optional<IntInterval> bipartite_index_bound(int a, int b, SolverOptions opts = {});

// Structural properties of the partition under the full automorphism group,
// checked exhaustively. Used by the theorem-verification sweeps.
bool classes_permuted_by_group(const JoinGraph& jg, const SidePartition& sp,
                               const AutGroup& group);
bool mapped_classes_isomorphic(const JoinGraph& jg, const SidePartition& sp,
                               const AutGroup& group);
bool gamma_restriction_property(const JoinGraph& jg, const GammaStructure& gs,
                                const AutGroup& group);

}  // namespace symbreak
