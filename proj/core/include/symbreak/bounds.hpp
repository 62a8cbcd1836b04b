#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symbreak/join_partition.hpp"

namespace symbreak {

// One theorem evaluated on one input. `ok` reports whether the claimed
// relation held whenever both bound and exact value are available.
struct TheoremEntry {
  std::string theorem;
  bool applicable = true;
  std::string note;
  std::optional<int> lower;            // lower bound, when the statement has one
  std::optional<IntInterval> bound;    // upper bound or interval
  std::optional<int> exact;
  std::optional<bool> tight;           // exact equals the upper bound
  bool ok = true;
};

// max{D(G1), D(G2)} <= D(G1+G2) <= D(G1) + D(G2); stated for connected
// inputs. Disconnected inputs are still evaluated but marked inapplicable.
TheoremEntry check_sandwich(const Graph& g1, const Graph& g2, SolverOptions opts = {});

// D(G1+G2) = max when no class merges across sides, otherwise <= max + z.
// Requires non-isomorphic sides; isomorphic input is marked inapplicable.
TheoremEntry djoin_bound(const Graph& g1, const Graph& g2, SolverOptions opts = {});

// D(G) <= D(G+G) <= D(G) + max multiplicity among the class groups.
TheoremEntry self_join_bound(const Graph& g, SolverOptions opts = {});

// D'(G+H) <= D'(K_{n,m}) + 1 from the spanning complete bipartite subgraph.
// Throws Inapplicable for n = m = 1.
IntInterval spanning_index_bound(int n, int m, SolverOptions opts = {});

// 4 <= n <= m <= 2n forces D'(G+H) <= 2 (orders may be given in either
// order).
bool order_ratio_applicable(int n, int m);
TheoremEntry order_ratio_bound(int n, int m);

// min{delta(G)+m, delta(H)+n} >= (n+m-1)/2 with n+m >= 7 forces
// D'(G+H) <= 2.
TheoremEntry min_degree_bound(const Graph& g, const Graph& h, SolverOptions opts = {});

// D' of the k-fold self join is 2, except K_2+K_2 which is 3.
TheoremEntry iterated_self_join(const Graph& g, int k, SolverOptions opts = {});

// Distinguishing number of K_k box K_n: with d the integer satisfying
// (d-1)^k < n <= d^k, the value is d or d+1 depending on the position of n
// relative to d^k - ceil(log_d k); one boundary value is left unresolved.
struct ImrichResult {
  int k = 0;
  int n = 0;
  int d = 0;
  IntInterval value;
  bool boundary = false;
};

ImrichResult imrich(int k, int n);

// Distinguishing index of the friendship graph F_n via the closed form
// ceil(a^(1/3)/3 + 1/(3a^(1/3)) + 1/3), a = 1 + 27n + 3 sqrt(81 n^2 + 6n).
// The expression is the real root of x^3 - x^2 - 2n, so near-integer
// arguments are re-evaluated at higher precision and certified exactly.
int friendship_index_formula(int n);

struct BoundReport {
  int n1 = 0, n2 = 0;
  int delta1 = 0, delta2 = 0;
  bool isomorphic_sides = false;
  int q = 0;
  std::optional<int> z;
  std::optional<int> lambda1;
  std::optional<IntInterval> lambda2;
  std::optional<int> exact_number;        // D(G1+G2)
  std::optional<int> exact_index;         // D'(G1+G2); absent when undefined
  bool index_defined = true;
  std::vector<TheoremEntry> entries;
  bool violation = false;
};

struct ReportOptions {
  SolverOptions solver;
  bool compute_exact = true;  // attach exact values when caps allow
};

BoundReport full_report(const Graph& g1, const Graph& g2, ReportOptions opts = {});

}  // namespace symbreak
