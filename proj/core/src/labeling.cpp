#include "symbreak/labeling.hpp"

#include <algorithm>
#include <set>

namespace symbreak {

int Labeling::distinct_used() const {
  std::set<int> s(labels.begin(), labels.end());
  return static_cast<int>(s.size());
}

void Labeling::validate(const Graph& host) const {
  if (static_cast<int>(labels.size()) != host.order())
    throw InputError("labeling is not total on the vertex set");
  if (label_count < 1) throw InputError("labeling needs at least one label");
  for (int l : labels)
    if (l < 1 || l > label_count)
      throw InputError("vertex label " + std::to_string(l) + " outside 1.." +
                       std::to_string(label_count));
}

int EdgeLabeling::distinct_used() const {
  std::set<int> s(labels.begin(), labels.end());
  return static_cast<int>(s.size());
}

void EdgeLabeling::validate(const Graph& host) const {
  if (edges != host.edges()) throw InputError("edge labeling does not match the host edge list");
  if (labels.size() != edges.size()) throw InputError("edge labeling is not total");
  if (label_count < 1) throw InputError("edge labeling needs at least one label");
  for (int l : labels)
    if (l < 1 || l > label_count)
      throw InputError("edge label " + std::to_string(l) + " outside 1.." +
                       std::to_string(label_count));
}

}  // namespace symbreak
