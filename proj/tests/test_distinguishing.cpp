#include <doctest.h>

#include "oracles.hpp"
#include "symbreak/corpus.hpp"
#include "symbreak/distinguishing.hpp"

using namespace symbreak;

TEST_CASE("vertex labeling checks") {
  auto c5 = cycle(5);
  Labeling distinct{{1, 2, 3, 4, 5}, 5};
  CHECK(is_distinguishing(c5, distinct));
  Labeling same{{1, 1}, 1};
  CHECK_FALSE(is_distinguishing(complete(2), same));
  Labeling two{{1, 2, 2, 1, 1}, 2};
  CHECK_FALSE(is_distinguishing(c5, two));  // no 2-labeling works on C_5
}

TEST_CASE("distinguishing numbers from the catalog") {
  CHECK(distinguishing_number(path(5)).value == 2);
  CHECK(distinguishing_number(cycle(4)).value == 3);
  CHECK(distinguishing_number(complete(5)).value == 5);
  CHECK(distinguishing_number(complete_bipartite(2, 3)).value == 3);
  CHECK(distinguishing_number(complete_bipartite(3, 3)).value == 4);
}

TEST_CASE("witnesses verify and are minimal") {
  for (const auto& g : connected_graphs_up_to(5)) {
    auto group = automorphisms(g);
    auto res = distinguishing_number(g, group);
    CHECK(is_distinguishing(g, res.witness, group));
    CHECK(res.witness.distinct_used() == res.value);
    if (res.value > 1) CHECK_FALSE(find_labeling(g, group, res.value - 1).has_value());
  }
}

TEST_CASE("edge labeling checks") {
  auto p4 = path(4);
  EdgeLabeling distinct{p4.edges(), {1, 2, 3}, 3};
  CHECK(is_distinguishing_edges(p4, distinct));
  auto k2 = complete(2);
  EdgeLabeling single{k2.edges(), {1}, 1};
  CHECK_FALSE(is_distinguishing_edges(k2, single));
  CHECK_FALSE(find_edge_labeling(complete(4), 2).has_value());
  EdgeLabeling empty{{}, {}, 1};
  CHECK_THROWS_AS(is_distinguishing_edges(Graph::build(3, {}), empty), InputError);
}

TEST_CASE("distinguishing index values and undefined cases") {
  CHECK(distinguishing_index(path(5)).value == 2);
  CHECK(distinguishing_index(complete(4)).value == 3);
  CHECK(distinguishing_index(complete(2)).not_defined());
  CHECK(distinguishing_index(matching(2)).not_defined());
  CHECK(distinguishing_index(Graph::build(2, {})).not_defined());
  CHECK(distinguishing_index(friendship(3)).value == 3);   // brute force: no 2-labeling works
  CHECK(distinguishing_index(friendship(2)).value == 2);
  CHECK(distinguishing_index(complete(1)).value == 1);     // trivial group, empty labeling
  CHECK(distinguishing_index(star(4)).value == 4);         // leaves force distinct labels
}

TEST_CASE("find_labeling decision behaviour") {
  CHECK(find_labeling(cycle(6), 2).has_value());
  CHECK_FALSE(find_labeling(cycle(5), 2).has_value());
  for (std::uint64_t seed : {41, 42}) {
    auto g = oracle::random_graph(6, seed);
    auto wit = find_labeling(g, g.order());
    REQUIRE(wit.has_value());
    CHECK(is_distinguishing(g, *wit));
  }
}

TEST_CASE("asymmetric iff one label suffices, full symmetry iff n labels needed") {
  // n labels are needed exactly when every vertex pair can be swapped,
  // i.e. for the complete graph and its complement
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_all_graphs(n)) {
      auto group = automorphisms(g);
      auto res = distinguishing_number(g, group);
      CHECK((res.value == 1) == group.trivial());
      CHECK((res.value == n) == (g.edge_count() == n * (n - 1) / 2 || g.edge_count() == 0));
    }
  }
  // on connected graphs the criterion reads: n labels iff complete
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n))
      CHECK((distinguishing_number(g).value == n) == (g.edge_count() == n * (n - 1) / 2));
}

TEST_CASE("pruned solvers match naive enumeration up to 5 vertices") {
  // the full 6-vertex sweep runs in the acceptance suite
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_all_graphs(n)) {
      CHECK(distinguishing_number(g).value == oracle::naive_distinguishing_number(g));
      auto pruned = distinguishing_index(g);
      auto naive = oracle::naive_distinguishing_index(g);
      CHECK(pruned.value == naive);
      if (pruned.witness && g.edge_count() > 0)
        CHECK(is_distinguishing_edges(g, *pruned.witness));
    }
  }
}

TEST_CASE("bipartite index equals product number for small unequal parts") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k + 1; n <= 4; ++n)
      CHECK(*distinguishing_index(complete_bipartite(k, n)).value ==
            distinguishing_number(cartesian_product(complete(k), complete(n))).value);
}

TEST_CASE("solver caps") {
  SolverOptions tiny;
  tiny.time_budget_s = 0.0;
  CHECK_THROWS_AS(distinguishing_number(complete(9), tiny), CapExceeded);
  CHECK_THROWS_AS(distinguishing_number(complete(17)), CapExceeded);
}
