#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "symbreak/json_io.hpp"

#ifndef SYMBREAK_CLI_PATH
#error "SYMBREAK_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SYMBREAK_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST_CASE("gen emits graph6") {
  auto res = run_cli("gen path 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "DhC\n");
  CHECK(run_cli("gen friendship 2").exit_code == 0);
  CHECK(run_cli("gen join star:3 star:3").exit_code == 0);
  CHECK(run_cli("gen nosuch 3").exit_code == 2);
}

TEST_CASE("compute values and exit codes") {
  auto num = run_cli("compute --what number cycle:5");
  CHECK(num.exit_code == 0);
  auto j = Json::parse(num.out);
  CHECK(j["value"] == 3);
  CHECK(j["witness"]["labels"].size() == 5);

  auto idx = run_cli("compute --what index complete:4");
  CHECK(Json::parse(idx.out)["value"] == 3);

  auto undef = run_cli("compute --what index complete:2");
  CHECK(Json::parse(undef.out)["value"] == "not_defined");

  auto aut = run_cli("compute --what aut path:3");
  CHECK(Json::parse(aut.out)["value"] == 2);

  CHECK(run_cli("compute --what number 'bad###'").exit_code == 2);
  CHECK(run_cli("compute --what aut complete:30").exit_code == 3);
}

TEST_CASE("partition certificate on the friendship pair") {
  auto res = run_cli("partition friendship:2 friendship:3");
  CHECK(res.exit_code == 0);
  auto j = Json::parse(res.out);
  CHECK(j["q"] == 1);
  CHECK(j["z"] == 1);
  CHECK(j["lambda1"].is_null());
  CHECK(j["lambda2"] == 3);
}

TEST_CASE("partition on short paths") {
  auto res = run_cli("partition path:3 path:4");
  CHECK(res.exit_code == 0);
  auto j = Json::parse(res.out);
  CHECK(j["q"] == 0);
  CHECK(j["z"].is_null());
  CHECK(j["A"].size() == 2);
}

TEST_CASE("bounds report") {
  auto res = run_cli("bounds complete_bipartite:3,2 complete_bipartite:3,1");
  CHECK(res.exit_code == 0);
  auto j = Json::parse(res.out);
  CHECK(j["violation"] == false);
  CHECK(j["exact_number"] == 4);
  CHECK(j["q"] == 1);
}

TEST_CASE("verify manifest") {
  auto res = run_cli("verify --theorem iterated --range n=2..3,k=2");
  CHECK(res.exit_code == 0);
  auto j = Json::parse(res.out);
  CHECK(j["pass"] == true);
  CHECK(j["theorem"] == "iterated");
  CHECK(j["entries"].size() == 3);
  CHECK(run_cli("verify --theorem nosuch").exit_code == 2);
}

TEST_CASE("corpus csv is deterministic with a fixed header") {
  auto a = run_cli("corpus --max-order 3");
  auto b = run_cli("corpus --max-order 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("g1,g2,n1,n2,d1,d2,d_join,q,z,sandwich_lo,sandwich_hi,upper_bound,tight\n",
                    0) == 0);
  // 4 connected graphs up to order 3 -> 10 unordered pairs
  int lines = 0;
  for (char c : a.out) lines += c == '\n';
  CHECK(lines == 11);
  CHECK(run_cli("corpus --max-order 9").exit_code == 2);
}

TEST_CASE("emitted witnesses reverify when parsed back") {
  auto res = run_cli("compute --what index friendship:2");
  REQUIRE(res.exit_code == 0);
  auto j = Json::parse(res.out);
  REQUIRE(j["value"] == 2);
  // reconstruct through the library path
  auto g = symbreak::friendship(2);
  auto lab = symbreak::edge_labeling_from_json(j["witness"], g);
  CHECK(symbreak::is_distinguishing_edges(g, lab));

  auto part = run_cli("partition star:3 star:3");
  REQUIRE(part.exit_code == 0);
  auto pj = Json::parse(part.out);
  REQUIRE_FALSE(pj["witness"].is_null());
  auto jg = symbreak::join(symbreak::star(3), symbreak::star(3));
  auto vlab = symbreak::labeling_from_json(pj["witness"], jg.graph);
  CHECK(symbreak::is_distinguishing(jg.graph, vlab));
}

TEST_CASE("timings flag adds the runtime field") {
  auto with = Json::parse(run_cli("compute --what number path:4 --timings").out);
  CHECK(with.contains("runtime_ms"));
  auto without = Json::parse(run_cli("compute --what number path:4").out);
  CHECK_FALSE(without.contains("runtime_ms"));
}
