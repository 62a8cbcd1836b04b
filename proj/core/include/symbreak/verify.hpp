#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/bounds.hpp"
#include "symbreak/corpus.hpp"

namespace symbreak {

struct VerifyOptions {
  SolverOptions solver;
  int threads = 0;  // 0 = default_thread_count()
};

struct VerifyEntry {
  std::string instance;
  std::string property;
  bool pass = true;
  bool skipped = false;
  std::string detail;
  double wall_ms = 0.0;  // per-instance, shared across one instance's properties
};

struct VerifyReport {
  std::string theorem;
  std::string range;
  std::vector<VerifyEntry> entries;
  int checked = 0;
  int failed = 0;
  int skipped = 0;
  bool pass = true;  // no failures among checked instances
};

// Range grammar: "corpus<=N" (or the one-character variant of <=), or
// comma-separated "name=v" / "name=lo..hi" assignments with names n, m, k.
struct VerifyRange {
  std::optional<int> corpus_order;
  std::map<std::string, std::pair<int, int>> params;

  std::pair<int, int> get(const std::string& name, std::pair<int, int> fallback) const;
};

VerifyRange parse_range(const std::string& text);

const std::vector<std::string>& verify_theorem_ids();

VerifyReport verify_theorem(const std::string& theorem, const std::string& range,
                            VerifyOptions opts = {});

// Property selection for the combined per-pair sweep. Shared per-pair data
// (automorphism group, exact values, class structure) is computed once.
struct PairProperties {
  bool sandwich = false;
  bool djoin = false;
  bool lemma22 = false;
  bool cor23 = false;
  bool restriction = false;
  bool traceable = false;
  bool spanning = false;
  bool orderratio = false;
  bool mindegree = false;
  bool thmd1 = false;
  bool thmd2 = false;

  bool needs_index() const {
    return traceable || spanning || orderratio || mindegree || thmd1 || thmd2;
  }
  bool needs_lambda() const { return thmd1 || thmd2; }
};

std::vector<VerifyEntry> sweep_pairs(const std::vector<Graph>& corpus,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                     const PairProperties& props, VerifyOptions opts = {});

}  // namespace symbreak
