#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "symbreak/graph6.hpp"
#include "symbreak/json_io.hpp"
#include "symbreak/pool.hpp"
#include "symbreak/verify.hpp"

namespace sb = symbreak;
using sb::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// graph input: graph6 literal, @file (graph6 or edge list), or a family spec
// like "friendship:3", "join(path:3,star:2)", "cartesian(complete:2,cycle:4)".

std::vector<int> parse_int_args(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw sb::InputError("empty family parameter in '" + text + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

sb::Graph family_graph(const std::string& name, const std::vector<int>& args);

sb::Graph resolve_spec(const std::string& spec);

std::pair<std::string, std::string> split_composite(const std::string& inner) {
  int depth = 0;
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == ',' && depth == 0)
      return {inner.substr(0, i), inner.substr(i + 1)};
  }
  throw sb::InputError("composite family needs two comma-separated specs: " + inner);
}

sb::Graph family_graph(const std::string& name, const std::vector<int>& args) {
  auto want = [&](size_t k) {
    if (args.size() != k)
      throw sb::InputError("family '" + name + "' expects " + std::to_string(k) +
                           " parameter(s)");
  };
  if (name == "path") { want(1); return sb::path(args[0]); }
  if (name == "cycle") { want(1); return sb::cycle(args[0]); }
  if (name == "complete") { want(1); return sb::complete(args[0]); }
  if (name == "complete_bipartite") { want(2); return sb::complete_bipartite(args[0], args[1]); }
  if (name == "complete_multipartite") {
    if (args.empty()) throw sb::InputError("complete_multipartite needs parts");
    return sb::complete_multipartite(args);
  }
  if (name == "star") { want(1); return sb::star(args[0]); }
  if (name == "friendship") { want(1); return sb::friendship(args[0]); }
  if (name == "matching") { want(1); return sb::matching(args[0]); }
  throw sb::InputError("unknown family '" + name + "'");
}

sb::Graph resolve_spec(const std::string& spec) {
  if (spec.rfind("join(", 0) == 0 && spec.back() == ')') {
    auto [a, b] = split_composite(spec.substr(5, spec.size() - 6));
    return sb::join(resolve_spec(a), resolve_spec(b)).graph;
  }
  if (spec.rfind("cartesian(", 0) == 0 && spec.back() == ')') {
    auto [a, b] = split_composite(spec.substr(10, spec.size() - 11));
    return sb::cartesian_product(resolve_spec(a), resolve_spec(b));
  }
  size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    return family_graph(spec.substr(0, colon), parse_int_args(spec.substr(colon + 1)));
  }
  return sb::parse_graph6(spec);
}

sb::Graph parse_file_content(const std::string& content) {
  std::istringstream in(content);
  std::string first;
  std::getline(in, first);
  // an edge-list header is two integers; anything else is graph6
  std::istringstream probe(first);
  long long n, m;
  std::string rest;
  if (probe >> n >> m && !(probe >> rest)) return sb::parse_edge_list(content);
  return sb::parse_graph6(first);
}

sb::Graph resolve_graph_input(const std::string& input) {
  if (input.empty()) throw sb::InputError("empty graph input");
  if (input[0] == '@') {
    std::ifstream in(input.substr(1));
    if (!in) throw sb::InputError("cannot open graph file '" + input.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_file_content(buf.str());
  }
  return resolve_spec(input);
}

std::uint64_t fnv64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct CommonOpts {
  int aut_cap = 16;
  int label_cap = 64;
  double time_budget = 60.0;
  int threads = 0;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--aut-cap", c.aut_cap, "vertex cap for automorphism enumeration");
  cmd->add_option("--label-cap", c.label_cap, "cap on labels tried by the exact solvers");
  cmd->add_option("--time-budget", c.time_budget, "seconds per exact solver call");
  cmd->add_option("--threads", c.threads, "worker threads (default SYMBREAK_THREADS or cores)");
  cmd->add_flag("--timings", c.timings, "include wall-clock fields in the output");
}

sb::SolverOptions solver_options(const CommonOpts& c) {
  sb::SolverOptions opts;
  opts.aut.vertex_cap = c.aut_cap;
  opts.label_cap = c.label_cap;
  opts.time_budget_s = c.time_budget;
  return opts;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------

int run_gen(const std::string& family, const std::vector<std::string>& params) {
  if (family == "join" || family == "cartesian") {
    if (params.size() != 2)
      throw sb::InputError(family + " expects two graph specs, e.g. star:3 star:3");
    sb::Graph g = family == "join"
                      ? sb::join(resolve_spec(params[0]), resolve_spec(params[1])).graph
                      : sb::cartesian_product(resolve_spec(params[0]), resolve_spec(params[1]));
    std::cout << sb::write_graph6(g) << "\n";
    return 0;
  }
  std::vector<int> args;
  for (const auto& p : params) args.push_back(std::stoi(p));
  std::cout << sb::write_graph6(family_graph(family, args)) << "\n";
  return 0;
}

int run_compute(const std::string& what, const std::string& input, const CommonOpts& copts) {
  auto t0 = std::chrono::steady_clock::now();
  sb::Graph g = resolve_graph_input(input);
  auto opts = solver_options(copts);
  Json out;
  if (what == "number") {
    auto res = sb::distinguishing_number(g, opts);
    out["value"] = res.value;
    out["witness"] = sb::labeling_json(res.witness);
  } else if (what == "index") {
    auto res = sb::distinguishing_index(g, opts);
    if (res.not_defined()) {
      out["value"] = "not_defined";
      out["witness"] = nullptr;
    } else {
      out["value"] = *res.value;
      out["witness"] = sb::edge_labeling_json(*res.witness);
    }
  } else if (what == "aut") {
    auto group = sb::automorphisms(g, opts.aut);
    out["value"] = group.order();
    out["orbits"] = sb::orbits(group);
    out["witness"] = nullptr;
  } else {
    throw sb::InputError("--what must be number, index, or aut");
  }
  if (copts.timings) out["runtime_ms"] = ms_since(t0);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_partition(const std::string& in1, const std::string& in2, const CommonOpts& copts) {
  sb::Graph g1 = resolve_graph_input(in1);
  sb::Graph g2 = resolve_graph_input(in2);
  auto opts = solver_options(copts);
  sb::JoinGraph jg = sb::join(g1, g2);
  auto gs = sb::gamma_structure(jg);
  auto lam = sb::lambda_bounds(jg, gs, opts);
  Json witness;
  try {
    witness = sb::labeling_json(sb::construct_join_vertex_labeling(g1, g2, opts));
  } catch (const sb::Error&) {
    witness = nullptr;
  }
  std::cout << sb::certificate_json(jg, gs, lam, witness).dump(2) << "\n";
  return 0;
}

int run_bounds(const std::string& in1, const std::string& in2, bool exact,
               const CommonOpts& copts) {
  sb::Graph g1 = resolve_graph_input(in1);
  sb::Graph g2 = resolve_graph_input(in2);
  sb::ReportOptions ropts;
  ropts.solver = solver_options(copts);
  ropts.compute_exact = exact;
  auto rep = sb::full_report(g1, g2, ropts);
  std::cout << sb::bound_report_json(rep).dump(2) << "\n";
  return rep.violation ? 1 : 0;
}

int run_verify(const std::string& theorem, const std::string& range,
               const std::string& manifest_path, const CommonOpts& copts) {
  auto t0 = std::chrono::steady_clock::now();
  sb::VerifyOptions vopts;
  vopts.solver = solver_options(copts);
  vopts.threads = copts.threads;
  auto rep = sb::verify_theorem(theorem, range, vopts);

  Json j;
  j["tool"] = "symbreak";
  j["version"] = kVersion;
  j["theorem"] = rep.theorem;
  j["range"] = rep.range;
  j["input_digest"] = hex64(fnv64(rep.theorem + "|" + rep.range));
  j["caps"] = {{"aut_cap", copts.aut_cap},
               {"label_cap", copts.label_cap},
               {"time_budget_s", copts.time_budget}};
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json je;
    je["instance"] = e.instance;
    je["property"] = e.property;
    je["status"] = e.skipped ? "skip" : (e.pass ? "pass" : "fail");
    if (!e.detail.empty()) je["detail"] = e.detail;
    if (copts.timings) je["wall_ms"] = e.wall_ms;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["checked"] = rep.checked;
  j["failed"] = rep.failed;
  j["skipped"] = rep.skipped;
  j["pass"] = rep.pass;
  if (copts.timings) j["wall_ms"] = ms_since(t0);

  std::string text = j.dump(2) + "\n";
  if (!manifest_path.empty()) {
    std::ofstream out(manifest_path);
    if (!out) throw sb::InputError("cannot write manifest '" + manifest_path + "'");
    out << text;
  }
  std::cout << text;
  return rep.pass ? 0 : 1;
}

int run_corpus(int max_order, const std::string& file, const CommonOpts& copts) {
  std::vector<sb::Graph> graphs;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw sb::InputError("cannot open corpus file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto g = sb::parse_graph6(line);
      if (g.order() <= max_order) graphs.push_back(std::move(g));
    }
  } else {
    if (max_order > sb::kEnumerationCap)
      throw sb::InputError("max order " + std::to_string(max_order) +
                           " needs a corpus file (internal enumeration stops at " +
                           std::to_string(sb::kEnumerationCap) + ")");
    graphs = sb::connected_graphs_up_to(max_order);
  }
  auto opts = solver_options(copts);

  std::vector<int> dvals(graphs.size());
  sb::parallel_for(graphs.size(), copts.threads, [&](size_t i) {
    dvals[i] = sb::distinguishing_number(graphs[i], opts).value;
  });

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i; j < graphs.size(); ++j) pairs.emplace_back(i, j);

  struct Row {
    std::string text;
    bool violation = false;
  };
  std::vector<Row> rows(pairs.size());
  sb::parallel_for(pairs.size(), copts.threads, [&](size_t pi) {
    auto [i, j] = pairs[pi];
    const auto& g1 = graphs[i];
    const auto& g2 = graphs[j];
    sb::JoinGraph jg = sb::join(g1, g2);
    auto gs = sb::gamma_structure(jg);
    const int base = std::max(dvals[i], dvals[j]);
    const bool iso = sb::are_isomorphic(g1, g2);
    int max_mult = 0;
    for (const auto& grp : gs.groups.A)
      max_mult = std::max(max_mult, static_cast<int>(grp.members.size()));
    int upper = iso ? dvals[i] + max_mult : (gs.q == 0 ? base : base + *gs.z);
    std::ostringstream row;
    row << sb::write_graph6(g1) << ',' << sb::write_graph6(g2) << ',' << g1.order() << ','
        << g2.order() << ',' << dvals[i] << ',' << dvals[j] << ',';
    try {
      int dj = sb::distinguishing_number(jg.graph, opts).value;
      row << dj << ',' << gs.q << ',' << (gs.z ? std::to_string(*gs.z) : "") << ',' << base
          << ',' << dvals[i] + dvals[j] << ',' << upper << ',' << (dj == upper ? 1 : 0);
      rows[pi].violation = !(base <= dj && dj <= dvals[i] + dvals[j] && dj <= upper);
    } catch (const sb::CapExceeded&) {
      // pairs past the caps keep their structural columns, value cells empty
      row << ',' << gs.q << ',' << (gs.z ? std::to_string(*gs.z) : "") << ',' << base << ','
          << dvals[i] + dvals[j] << ',' << upper << ',';
    }
    rows[pi].text = row.str();
  });

  std::cout << "g1,g2,n1,n2,d1,d2,d_join,q,z,sandwich_lo,sandwich_hi,upper_bound,tight\n";
  bool violation = false;
  for (const auto& row : rows) {
    std::cout << row.text << "\n";
    violation |= row.violation;
  }
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distinguishing numbers and indices of graph joins"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOpts copts;

  auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
  std::string gen_family;
  std::vector<std::string> gen_params;
  gen->add_option("family", gen_family,
                  "path|cycle|complete|complete_bipartite|complete_multipartite|star|"
                  "friendship|matching|join|cartesian")
      ->required();
  gen->add_option("params", gen_params, "family parameters");

  auto* compute = app.add_subcommand("compute", "exact value with verified witness");
  std::string compute_what, compute_input;
  compute->add_option("--what", compute_what, "number|index|aut")->required();
  compute->add_option("graph", compute_input, "graph6, @file, or family spec")->required();
  add_common(compute, copts);

  auto* partition = app.add_subcommand("partition", "class-structure certificate of a join");
  std::string part_g1, part_g2;
  partition->add_option("g1", part_g1, "left graph")->required();
  partition->add_option("g2", part_g2, "right graph")->required();
  add_common(partition, copts);

  auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound on a join");
  std::string bounds_g1, bounds_g2;
  bool bounds_exact = true;
  bounds->add_option("g1", bounds_g1, "left graph")->required();
  bounds->add_option("g2", bounds_g2, "right graph")->required();
  bounds->add_flag("--exact,!--no-exact", bounds_exact, "attach exact values (default on)");
  add_common(bounds, copts);

  auto* verify = app.add_subcommand("verify", "sweep one theorem over a parameter range");
  std::string verify_theorem_id, verify_range, verify_manifest;
  verify->add_option("--theorem", verify_theorem_id, "theorem id")->required();
  verify->add_option("--range", verify_range, "e.g. corpus<=4 or n=2..5,k=2");
  verify->add_option("--manifest", verify_manifest, "also write the run manifest to a file");
  add_common(verify, copts);

  auto* corpus = app.add_subcommand("corpus", "CSV over all pairs of connected graphs");
  int corpus_max_order = 4;
  std::string corpus_file;
  corpus->add_option("--max-order", corpus_max_order, "largest graph order")->required();
  corpus->add_option("--file", corpus_file, "graph6 list file (one per line)");
  add_common(corpus, copts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_family, gen_params);
    if (compute->parsed()) return run_compute(compute_what, compute_input, copts);
    if (partition->parsed()) return run_partition(part_g1, part_g2, copts);
    if (bounds->parsed()) return run_bounds(bounds_g1, bounds_g2, bounds_exact, copts);
    if (verify->parsed())
      return run_verify(verify_theorem_id, verify_range, verify_manifest, copts);
    if (corpus->parsed()) return run_corpus(corpus_max_order, corpus_file, copts);
  } catch (const sb::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const sb::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const sb::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sb::Inapplicable& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
