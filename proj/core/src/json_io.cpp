#include <map>
#include "symbreak/json_io.hpp"

#include <algorithm>

namespace symbreak {

Json labeling_json(const Labeling& L) {
  Json j;
  j["labels"] = L.labels;
  return j;
}

Labeling labeling_from_json(const Json& j, const Graph& host) {
  Labeling L;
  L.labels = j.at("labels").get<std::vector<int>>();
  L.label_count = L.labels.empty() ? 1 : *std::max_element(L.labels.begin(), L.labels.end());
  L.validate(host);
  return L;
}

Json edge_labeling_json(const EdgeLabeling& L) {
  Json arr = Json::array();
  for (size_t i = 0; i < L.edges.size(); ++i)
    arr.push_back({L.edges[i].first, L.edges[i].second, L.labels[i]});
  Json j;
  j["edge_labels"] = std::move(arr);
  return j;
}

EdgeLabeling edge_labeling_from_json(const Json& j, const Graph& host) {
  EdgeLabeling L;
  L.edges = host.edges();
  L.labels.assign(L.edges.size(), 0);
  std::map<Edge, size_t> index;
  for (size_t i = 0; i < L.edges.size(); ++i) index[L.edges[i]] = i;
  for (const auto& row : j.at("edge_labels")) {
    int u = row.at(0).get<int>(), v = row.at(1).get<int>(), lab = row.at(2).get<int>();
    auto it = index.find({std::min(u, v), std::max(u, v)});
    if (it == index.end())
      throw InputError("edge labeling mentions non-edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
    L.labels[it->second] = lab;
  }
  for (int lab : L.labels)
    if (lab == 0) throw InputError("edge labeling is not total");
  L.label_count = L.labels.empty() ? 1 : *std::max_element(L.labels.begin(), L.labels.end());
  L.validate(host);
  return L;
}

Json interval_json(const IntInterval& v) {
  if (v.exact()) return Json(v.lo);
  return Json::array({v.lo, v.hi});
}

namespace {

const char* tag_name(GammaTag t) {
  switch (t) {
    case GammaTag::Merged: return "merged";
    case GammaTag::LeftOnly: return "left_only";
    default: return "right_only";
  }
}

}  // namespace

Json certificate_json(const JoinGraph& jg, const GammaStructure& gs, const LambdaBounds& lam,
                      const Json& witness) {
  Json j;
  j["left_order"] = jg.left_order;
  j["right_order"] = jg.right_order;
  j["A"] = gs.side.A;
  j["B"] = gs.side.B;
  Json gamma = Json::array();
  for (const auto& cls : gs.classes) {
    Json c;
    c["tag"] = tag_name(cls.tag);
    Json members = Json::array();
    if (cls.a_group)
      for (int ci : gs.groups.A[static_cast<size_t>(*cls.a_group)].members)
        members.push_back({{"side", "left"}, {"vertices", gs.side.A[static_cast<size_t>(ci)]}});
    if (cls.b_group)
      for (int ci : gs.groups.B[static_cast<size_t>(*cls.b_group)].members)
        members.push_back({{"side", "right"}, {"vertices", gs.side.B[static_cast<size_t>(ci)]}});
    c["members"] = std::move(members);
    c["support"] = cls.support;
    gamma.push_back(std::move(c));
  }
  j["gamma"] = std::move(gamma);
  j["q"] = gs.q;
  j["z"] = gs.z ? Json(*gs.z) : Json(nullptr);
  j["lambda1"] = lam.lambda1 ? Json(*lam.lambda1) : Json(nullptr);
  j["lambda2"] = lam.lambda2 ? interval_json(*lam.lambda2) : Json(nullptr);
  j["witness"] = witness;
  return j;
}

Json theorem_entry_json(const TheoremEntry& e) {
  Json j;
  j["theorem"] = e.theorem;
  j["applicable"] = e.applicable;
  if (!e.note.empty()) j["note"] = e.note;
  if (e.lower) j["lower"] = *e.lower;
  j["bound"] = e.bound ? interval_json(*e.bound) : Json(nullptr);
  j["exact"] = e.exact ? Json(*e.exact) : Json(nullptr);
  j["tight"] = e.tight ? Json(*e.tight) : Json(nullptr);
  j["ok"] = e.ok;
  return j;
}

Json bound_report_json(const BoundReport& rep) {
  Json j;
  j["n1"] = rep.n1;
  j["n2"] = rep.n2;
  j["delta1"] = rep.delta1;
  j["delta2"] = rep.delta2;
  j["isomorphic_sides"] = rep.isomorphic_sides;
  j["q"] = rep.q;
  j["z"] = rep.z ? Json(*rep.z) : Json(nullptr);
  j["lambda1"] = rep.lambda1 ? Json(*rep.lambda1) : Json(nullptr);
  j["lambda2"] = rep.lambda2 ? interval_json(*rep.lambda2) : Json(nullptr);
  j["exact_number"] = rep.exact_number ? Json(*rep.exact_number) : Json(nullptr);
  if (!rep.index_defined) j["exact_index"] = "not_defined";
  else j["exact_index"] = rep.exact_index ? Json(*rep.exact_index) : Json(nullptr);
  Json entries = Json::array();
  for (const auto& e : rep.entries) entries.push_back(theorem_entry_json(e));
  j["entries"] = std::move(entries);
  j["violation"] = rep.violation;
  return j;
}

}  // namespace symbreak
