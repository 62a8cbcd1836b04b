#pragma once

#include <json.hpp>

#include "symbreak/bounds.hpp"
#include "symbreak/join_partition.hpp"

namespace symbreak {

using Json = nlohmann::ordered_json;

// Witness schemas: {"labels":[...]} vertex-indexed and
// {"edge_labels":[[u,v,label],...]} in canonical edge order.
Json labeling_json(const Labeling& L);
Labeling labeling_from_json(const Json& j, const Graph& host);
Json edge_labeling_json(const EdgeLabeling& L);
EdgeLabeling edge_labeling_from_json(const Json& j, const Graph& host);

Json interval_json(const IntInterval& v);  // int when exact, [lo, hi] otherwise

// Class-structure certificate:
// {"A":[[ids]],"B":[[ids]],"gamma":[{"members":[...],"tag":...}],
//  "q":int,"z":int|null,"lambda1":int|null,"lambda2":int|[lo,hi]|null,
//  "witness":{...}|null}
Json certificate_json(const JoinGraph& jg, const GammaStructure& gs, const LambdaBounds& lam,
                      const Json& witness);

Json theorem_entry_json(const TheoremEntry& e);
Json bound_report_json(const BoundReport& rep);

}  // namespace symbreak
