#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/labeling.hpp"

namespace symbreak {

// Bijection on 0..n-1.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(image.size()); }
  int operator()(int v) const { return image[static_cast<size_t>(v)]; }
  bool is_identity() const;
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;  // apply *this, then next
  void validate() const;                            // throws if not a bijection
};

struct AutOptions {
  int vertex_cap = 16;                   // enumeration refuses larger graphs
  std::uint64_t element_cap = 50'000'000;  // and groups with more elements
};

// Explicit list of all automorphisms, identity first, in lexicographic order
// of image tuples. Stored flat, one byte per image entry.
class AutGroup {
public:
  AutGroup(int degree, std::vector<std::uint8_t> flat);

  int degree() const { return n_; }
  std::size_t order() const { return n_ == 0 ? 1 : flat_.size() / static_cast<size_t>(n_); }
  bool trivial() const { return order() == 1; }
  std::span<const std::uint8_t> images(std::size_t i) const {
    return {flat_.data() + i * static_cast<size_t>(n_), static_cast<size_t>(n_)};
  }
  Permutation element(std::size_t i) const;

private:
  int n_;
  std::vector<std::uint8_t> flat_;
};

// Exhaustive enumeration, pruned by equitable-partition colors.
AutGroup automorphisms(const Graph& g, AutOptions opts = {});

bool is_automorphism(const Graph& g, const Permutation& p);

// Vertex orbits under the full group, each sorted, ordered by smallest member.
std::vector<std::vector<int>> orbits(const Graph& g, AutOptions opts = {});
std::vector<std::vector<int>> orbits(const AutGroup& group);

// Image of an edge under a permutation, normalized to (min, max).
// Checks that e is an edge of g.
Edge edge_action(const Graph& g, const Permutation& p, Edge e);

bool preserves_vertex_labeling(const Permutation& p, const Labeling& L);
bool preserves_edge_labeling(const Permutation& p, const EdgeLabeling& L);

}  // namespace symbreak
