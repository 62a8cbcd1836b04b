// Acceptance suite: one check per criterion, one printed line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/json_io.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;

namespace {

using Clock = std::chrono::steady_clock;

SolverOptions solver_opts() {
  SolverOptions opts;
  opts.time_budget_s = 600.0;
  return opts;
}

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
  void info(const std::string& what) {
    detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

bool criterion1(Checker& c) {
  auto opts = solver_opts();
  for (int n = 2; n <= 8; ++n)
    c.expect(distinguishing_number(path(n), opts).value == 2,
             "D(P" + std::to_string(n) + ") != 2");
  for (int n = 3; n <= 5; ++n)
    c.expect(distinguishing_number(cycle(n), opts).value == 3,
             "D(C" + std::to_string(n) + ") != 3");
  for (int n = 6; n <= 9; ++n)
    c.expect(distinguishing_number(cycle(n), opts).value == 2,
             "D(C" + std::to_string(n) + ") != 2");
  for (int n = 1; n <= 6; ++n)
    c.expect(distinguishing_number(complete(n), opts).value == n,
             "D(K" + std::to_string(n) + ") != n");
  c.expect(distinguishing_number(complete_bipartite(2, 3), opts).value == 3, "D(K_{2,3}) != 3");
  c.expect(distinguishing_number(complete_bipartite(3, 3), opts).value == 4, "D(K_{3,3}) != 4");
  return c.ok;
}

bool criterion2(Checker& c) {
  auto opts = solver_opts();
  auto jg = join(complete_bipartite(3, 2), complete_bipartite(3, 1));
  auto gs = gamma_structure(jg);
  int d = distinguishing_number(jg.graph, opts).value;
  c.expect(d == 4, "D(K_{3,2}+K_{3,1}) = " + std::to_string(d) + " != 4");
  c.expect(gs.q == 1, "q != 1");
  c.expect(gs.classes.size() == 3, "class count != 3");
  c.expect(gs.z == 1, "z != 1");
  c.info("D=4, q=1, classes=3, z=1");
  return c.ok;
}

bool criterion3(Checker& c) {
  auto opts = solver_opts();
  auto jg = join(star(3), star(3));
  int d = distinguishing_number(jg.graph, opts).value;
  c.expect(d == 4, "D(K_{1,3}+K_{1,3}) = " + std::to_string(d) + " != 4");
  auto lab = construct_self_join_labeling(star(3), opts);
  c.expect(lab.label_count <= 4, "construction used more than 4 labels");
  c.expect(is_distinguishing(jg.graph, lab, opts), "constructed labeling not distinguishing");
  c.info("D=4, construction uses " + std::to_string(lab.label_count) + " labels");
  return c.ok;
}

bool criterion4(Checker& c) {
  auto opts = solver_opts();
  auto k4 = join(complete(2), complete(2));
  auto r = distinguishing_index(k4.graph, opts);
  c.expect(r.value == 3, "D'(K_2+K_2) != 3");
  int swept = 0;
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      auto jg = join(g, g);
      auto res = distinguishing_index(jg.graph, opts);
      ++swept;
      if (!(res.value && *res.value == 2)) {
        c.expect(false, "D'(G+G) != 2 for " + write_graph6(g));
        return c.ok;
      }
    }
  }
  c.info("D'(K_2+K_2)=3 and D'(G+G)=2 on all " + std::to_string(swept) + " graphs");
  return c.ok;
}

bool criterion5(Checker& c) {
  auto opts = solver_opts();
  bool lambda2_exceeds_2 = false;
  for (int n = 2; n <= 5; ++n) {
    for (int m = n + 1; m <= 5; ++m) {
      auto tag = "P" + std::to_string(n) + "+P" + std::to_string(m);
      auto jg = join(path(n), path(m));
      auto gs = gamma_structure(jg);
      auto res = distinguishing_index(jg.graph, opts);
      c.expect(res.value && *res.value == 2, tag + ": D' != 2");
      auto lam = lambda_bounds(jg, gs, opts);
      c.expect(lam.lambda1 && *lam.lambda1 == 2,
               tag + ": lambda1 " +
                   (lam.lambda1 ? "= " + std::to_string(*lam.lambda1) : "undefined") + " != 2");
      if (gs.classes.size() == 2 && lam.lambda2 && lam.lambda2->lo > 2) lambda2_exceeds_2 = true;
    }
  }
  c.expect(lambda2_exceeds_2, "no pair has a unique cover with epsilon > 2");
  if (!c.ok)
    c.info(
        "note: lambda1 is undefined whenever a class graph has no distinguishing edge "
        "labeling; short paths produce K_2 / 2K_1 class graphs");
  return c.ok;
}

bool criterion6(Checker& c) {
  auto opts = solver_opts();
  auto jg = join(friendship(2), friendship(3));
  auto gs = gamma_structure(jg);
  bool inapplicable = false;
  try {
    construct_gamma_edge_labeling(jg, gs, opts);
  } catch (const Inapplicable&) {
    inapplicable = true;
  }
  c.expect(inapplicable, "class edge labeling unexpectedly applicable");
  auto lam = lambda_bounds(jg, gs, opts);
  c.expect(lam.lambda2.has_value(), "lambda2 absent");
  if (!lam.lambda2) return c.ok;
  try {
    auto res = distinguishing_index(jg.graph, opts);
    c.expect(res.value && *res.value <= lam.lambda2->hi, "exact D' above lambda2");
    c.info("lambda2=" + std::to_string(lam.lambda2->hi) + ", exact D'=" +
           (res.value ? std::to_string(*res.value) : "undefined"));
  } catch (const CapExceeded&) {
    // budget-limited fallback: the cover construction must verify
    auto covers = enumerate_covers(jg, gs, opts);
    bool verified = false;
    for (const auto& cover : covers) {
      if (!cover.epsilon || cover.epsilon->hi != lam.lambda2->hi) continue;
      auto lab = cover_edge_labeling(jg, gs, cover, opts);
      verified = lab.label_count <= lam.lambda2->hi;
      break;
    }
    c.expect(verified, "cover labeling fallback failed");
    c.info("exact search over budget; cover labeling verified at lambda2");
  }
  return c.ok;
}

bool criterion7(Checker& c) {
  auto opts = solver_opts();
  for (int k = 2; k <= 6; ++k) {
    for (int n = k + 1; k + n <= 8; ++n) {
      auto res = imrich(k, n);
      auto exact = distinguishing_index(complete_bipartite(k, n), opts);
      auto tag = "K_{" + std::to_string(k) + "," + std::to_string(n) + "}";
      if (!exact.value) {
        c.expect(false, tag + ": exact index undefined");
        continue;
      }
      if (res.boundary) {
        c.expect(res.value.lo <= *exact.value && *exact.value <= res.value.hi,
                 tag + ": exact outside boundary interval");
      } else {
        c.expect(res.value.lo == *exact.value,
                 tag + ": formula " + std::to_string(res.value.lo) + " != exact " +
                     std::to_string(*exact.value));
      }
    }
  }
  return c.ok;
}

bool criterion8(Checker& c) {
  auto opts = solver_opts();
  for (int n : {2, 3}) {
    int formula = friendship_index_formula(n);
    auto exact = distinguishing_index(friendship(n), opts);
    c.expect(exact.value && formula == *exact.value,
             "F" + std::to_string(n) + ": formula " + std::to_string(formula) + " != exact " +
                 (exact.value ? std::to_string(*exact.value) : "undefined"));
  }
  c.info("F2: 2, F3: 3");
  return c.ok;
}

bool criterion9(Checker& c) {
  VerifyOptions vopts;
  vopts.solver = solver_opts();

  PairProperties props;
  props.sandwich = props.djoin = props.lemma22 = props.cor23 = props.restriction =
      props.traceable = true;

  auto corpus5 = connected_graphs_up_to(5);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < corpus5.size(); ++i)
    for (size_t j = i; j < corpus5.size(); ++j) pairs.emplace_back(i, j);
  auto entries = sweep_pairs(corpus5, pairs, props, vopts);

  auto corpus6 = connected_graphs_up_to(6);
  std::vector<std::pair<size_t, size_t>> at6;
  for (size_t i = 0; i < corpus6.size(); ++i)
    for (size_t j = i; j < corpus6.size(); ++j)
      if (std::max(corpus6[i].order(), corpus6[j].order()) == 6) at6.emplace_back(i, j);
  // deterministic 100-pair sample
  std::mt19937_64 rng(0x5EEDBA5EULL);
  std::vector<std::pair<size_t, size_t>> sample;
  for (int pick = 0; pick < 100 && !at6.empty(); ++pick) {
    size_t at = static_cast<size_t>(rng() % at6.size());
    sample.push_back(at6[at]);
    at6.erase(at6.begin() + static_cast<std::ptrdiff_t>(at));
  }
  auto entries6 = sweep_pairs(corpus6, sample, props, vopts);
  entries.insert(entries.end(), entries6.begin(), entries6.end());

  int checked = 0, skipped = 0;
  for (const auto& e : entries) {
    if (e.skipped) {
      ++skipped;
      continue;
    }
    ++checked;
    if (!e.pass) c.expect(false, e.instance + " " + e.property + ": " + e.detail);
  }
  c.info(std::to_string(checked) + " checks over " + std::to_string(pairs.size()) + "+" +
         std::to_string(sample.size()) + " pairs, " + std::to_string(skipped) + " skipped");
  return c.ok;
}

bool criterion10(Checker& c) {
  auto opts = solver_opts();
  int count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_all_graphs(n)) {
      ++count;
      int fast = distinguishing_number(g, opts).value;
      int naive = oracle::naive_distinguishing_number(g);
      if (fast != naive) {
        c.expect(false, write_graph6(g) + ": number " + std::to_string(fast) + " vs naive " +
                            std::to_string(naive));
        return c.ok;
      }
      auto fast_idx = distinguishing_index(g, opts);
      auto naive_idx = oracle::naive_distinguishing_index(g);
      if (fast_idx.value != naive_idx) {
        c.expect(false, write_graph6(g) + ": index disagreement");
        return c.ok;
      }
    }
  }
  c.info("agreement on all " + std::to_string(count) + " graphs");
  return c.ok;
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    std::function<bool(Checker&)> run;
  };
  const std::vector<Item> criteria = {
      {1, "golden catalog", criterion1},
      {2, "sharp join of unbalanced complete bipartite graphs", criterion2},
      {3, "self join of the 3-star", criterion3},
      {4, "iterated self-join indices", criterion4},
      {5, "path joins: exact index and both bounds", criterion5},
      {6, "friendship join: cover bound beats the class bound", criterion6},
      {7, "complete product formula cross-check", criterion7},
      {8, "friendship index formula", criterion8},
      {9, "property suites on the pair corpus", criterion9},
      {10, "oracle equivalence of the pruned solvers", criterion10},
  };

  int failures = 0;
  for (const auto& item : criteria) {
    auto start = Clock::now();
    Checker c;
    bool ok = false;
    try {
      ok = item.run(c);
    } catch (const std::exception& e) {
      c.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << item.id << " (" << item.name << "): " << (ok ? "PASS" : "FAIL");
    if (c.detail.tellp() > 0) line << " [" << c.detail.str() << "]";
    line << " (" << std::fixed << std::setprecision(1) << secs << "s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
