// dsr: solver CLI for optimization-variant dominating set reconfiguration.
//
// Exit codes: 0 = yes-instance (or command succeeded), 1 = no-instance (or
// sequence invalid), 2 = bad input, 3 = state-search cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsr/io.hpp"
#include "dsr/kernel.hpp"
#include "dsr/preprocess.hpp"
#include "dsr/reductions.hpp"
#include "dsr/solve.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw dsr::ParseError("cannot write file: " + path);
  f << content;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

std::string set_to_string(const dsr::VertexSet& s) {
  std::string out;
  for (int v : s.to_vector()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const std::string& instance_path, const std::string& strategy_name,
              const std::string& evidence_path, const std::string& witness_path, int cap) {
  dsr::Instance inst = dsr::parse_instance_file(instance_path).to_instance();

  dsr::SolveOptions options;
  options.cap = cap;
  if (strategy_name == "auto")
    options.strategy = dsr::Strategy::Auto;
  else if (strategy_name == "oracle")
    options.strategy = dsr::Strategy::Oracle;
  else if (strategy_name == "fpt-ds")
    options.strategy = dsr::Strategy::FptDs;
  else if (strategy_name == "fpt-vc")
    options.strategy = dsr::Strategy::FptVc;
  else if (strategy_name == "class")
    options.strategy = dsr::Strategy::Class;
  else
    throw dsr::ParseError("unknown strategy " + strategy_name);
  if (!evidence_path.empty())
    options.evidence = dsr::ClassEvidence{dsr::parse_interval_model_file(evidence_path)};

  dsr::SolveReport report = dsr::solve(inst, options);
  std::cerr << "strategy: " << report.strategy_used << "\n";
  if (report.solution.verdict == dsr::Verdict::No) {
    std::cout << "no\n";
    return kExitNo;
  }
  std::cout << "yes\n";
  std::string target = set_to_string(*report.solution.target);
  std::cout << "target" << (target.empty() ? "" : " " + target) << "\n";
  if (!witness_path.empty()) {
    if (report.solution.witness)
      write_text_file(witness_path, dsr::sequence_to_string(*report.solution.witness));
    else
      std::cerr << "note: this strategy proves reachability without a move list; "
                   "no witness written\n";
  }
  return kExitYes;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& instance_path, const std::string& sequence_path) {
  dsr::Instance inst = dsr::parse_instance_file(instance_path).to_instance();
  dsr::TarSequence seq = dsr::parse_sequence_file(sequence_path);
  auto result = dsr::validate_sequence(inst.graph, inst.k, inst.start, seq);
  if (result.ok) {
    std::string final_set = set_to_string(result.final_set);
    std::cout << "valid\n";
    std::cout << "final" << (final_set.empty() ? "" : " " + final_set) << "\n";
    return kExitYes;
  }
  std::string kind = result.error == dsr::SequenceError::IllegalMove    ? "illegal move"
                     : result.error == dsr::SequenceError::SizeExceeded ? "size exceeded"
                                                                        : "not dominating";
  std::cout << "invalid\n";
  std::cerr << kind << " at step " << result.step;
  if (result.vertex >= 0) std::cerr << " (vertex " << result.vertex + 1 << ")";
  std::cerr << ": " << result.message << "\n";
  return kExitNo;
}

// ---------------------------------------------------------------------------
// gen

// All sampling goes through the raw engine so that a seed pins the output.
int rand_below(std::mt19937& rng, int bound) {
  return bound <= 1 ? 0 : static_cast<int>(rng() % static_cast<std::uint32_t>(bound));
}

bool rand_chance(std::mt19937& rng, double p) {
  return (rng() >> 8) < p * 16777216.0;
}

dsr::Graph gen_random_connected(std::mt19937& rng, int n, double p) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    dsr::Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rand_chance(rng, p)) g.add_edge(u, v);
    if (dsr::is_connected(g)) return g;
  }
  throw dsr::ParseError("could not sample a connected graph; raise --p");
}

dsr::Graph gen_random_tree(std::mt19937& rng, int n) {
  dsr::Graph g(n);
  if (n <= 1) return g;
  // Decode a random Pruefer sequence.
  std::vector<int> code(n - 2);
  for (int& c : code) c = rand_below(rng, n);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (deg[leaf] == 1) {
        g.add_edge(leaf, c);
        --deg[leaf];
        --deg[c];
        break;
      }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) (a == -1 ? a : b) = v;
  g.add_edge(a, b);
  return g;
}

dsr::Graph gen_random_split(std::mt19937& rng, int na, int nb, double p) {
  dsr::Graph g(na + nb);
  for (int u = 0; u < na; ++u)
    for (int v = u + 1; v < na; ++v) g.add_edge(u, v);
  for (int b = 0; b < nb; ++b) {
    int attached = 0;
    for (int a = 0; a < na; ++a)
      if (rand_chance(rng, p)) {
        g.add_edge(na + b, a);
        ++attached;
      }
    if (attached == 0 && na > 0) g.add_edge(na + b, rand_below(rng, na));
  }
  return g;
}

int cmd_gen(const std::string& family, int n, double p, int na, int nb, unsigned seed,
            std::optional<int> k_opt, std::optional<int> s_opt, const std::string& input_path,
            const std::string& out_path) {
  std::mt19937 rng(seed);
  dsr::Graph g;
  if (family == "random") {
    g = gen_random_connected(rng, n, p);
  } else if (family == "tree") {
    g = gen_random_tree(rng, n);
  } else if (family == "split") {
    g = gen_random_split(rng, na, nb, p);
  } else if (family == "from-ds") {
    if (input_path.empty())
      throw dsr::ParseError("from-ds needs an instance file for its graph");
    g = dsr::parse_instance_file(input_path).graph;
  } else {
    throw dsr::ParseError("unknown family " + family);
  }

  dsr::VertexSet d =
      family == "from-ds" ? dsr::VertexSet::full(g.n()) : dsr::greedy_dominating_set(g);
  // The from-ds construction is pinned to (G, |V|, s, V).
  int k = family == "from-ds" ? g.n() : k_opt.value_or(d.size() + 1);
  int s = s_opt.value_or(std::max(d.size() - 1, 0));
  if (d.size() > k)
    throw dsr::ParseError("requested k smaller than the generated start set (" +
                          std::to_string(d.size()) + ")");
  emit(dsr::instance_to_string(dsr::ProblemKind::Dsr, g, k, s, d), out_path);
  return kExitYes;
}

// ---------------------------------------------------------------------------
// kernelize

int cmd_kernelize(const std::string& instance_path, const std::string& out_path,
                  const std::string& log_path) {
  dsr::Instance inst = dsr::parse_instance_file(instance_path).to_instance();
  std::string log;
  auto log_line = [&](const json& j) { log += j.dump() + "\n"; };

  dsr::Classification cls = dsr::classify(inst);
  for (const dsr::Move& m : cls.prefix)
    log_line({{"type", "prefix"},
              {"move", m.kind == dsr::MoveKind::Add ? "add" : "remove"},
              {"vertex", m.vertex + 1}});

  if (cls.kind != dsr::ClassifyKind::Proceed) {
    log_line({{"type", "classify"},
              {"result",
               cls.kind == dsr::ClassifyKind::AlreadySolution ? "already-solution" : "no-solution"}});
    std::cerr << "instance is trivial; emitting it unchanged\n";
    emit(dsr::instance_to_string(dsr::ProblemKind::Dsr, inst.graph, inst.k, inst.s, inst.start),
         out_path);
    if (!log_path.empty()) write_text_file(log_path, log);
    return kExitYes;
  }
  log_line({{"type", "classify"}, {"result", "proceed"}});

  dsr::Kernel ker = dsr::reduce_r1(*cls.instance);
  for (const dsr::Move& m : ker.prefix)
    log_line({{"type", "prefix"},
              {"move", m.kind == dsr::MoveKind::Add ? "add" : "remove"},
              {"vertex", m.vertex + 1}});
  for (auto [vr, vl] : ker.removed_log)
    log_line({{"type", "r1"}, {"removed", vr + 1}, {"kept", vl + 1}});
  for (int i = 0; i < static_cast<int>(ker.to_original.size()); ++i)
    log_line({{"type", "map"}, {"kernel", i + 1}, {"original", ker.to_original[i] + 1}});

  emit(dsr::instance_to_string(dsr::ProblemKind::Dsr, ker.instance.graph, ker.instance.k,
                               ker.instance.s, ker.instance.start),
       out_path);
  if (!log_path.empty()) write_text_file(log_path, log);
  return kExitYes;
}

// ---------------------------------------------------------------------------
// reduce

json names_to_json(const std::map<int, std::string>& names) {
  json j = json::object();
  for (auto& [v, name] : names) j[std::to_string(v + 1)] = name;
  return j;
}

int cmd_reduce(const std::string& what, const std::string& input_path,
               const std::string& out_path, const std::string& map_path, int k_prime) {
  dsr::ParsedInstance parsed = dsr::parse_instance_file(input_path);
  std::string instance_text;
  json name_map;

  if (what == "split" || what == "gadget") {
    dsr::VcrInstance src = parsed.to_vcr_instance();
    if (what == "split") {
      dsr::SplitReduction red = dsr::vcr_to_split(src);
      instance_text = dsr::instance_to_string(dsr::ProblemKind::Dsr, red.instance.graph,
                                              red.instance.k, red.instance.s, red.instance.start);
      name_map = names_to_json(red.vertex_names);
    } else {
      dsr::GadgetReduction red = dsr::vcr_to_gadget(src);
      instance_text = dsr::instance_to_string(dsr::ProblemKind::Dsr, red.instance.graph,
                                              red.instance.k, red.instance.s, red.instance.start);
      name_map = names_to_json(red.vertex_names);
    }
  } else if (what == "bipartite") {
    dsr::Instance src = parsed.to_instance();
    auto [a, b] = [&]() -> std::pair<dsr::VertexSet, dsr::VertexSet> {
      // Degree-threshold split partition, preferring start vertices for the
      // clique side among equal degrees, verified afterwards.
      int n = src.graph.n();
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[v] = v;
      auto try_partition = [&](bool prefer_start) -> std::optional<std::pair<dsr::VertexSet, dsr::VertexSet>> {
        std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
          if (src.graph.degree(u) != src.graph.degree(v))
            return src.graph.degree(u) > src.graph.degree(v);
          if (prefer_start && src.start.contains(u) != src.start.contains(v))
            return src.start.contains(u);
          return u < v;
        });
        int size_a = 0;
        for (int i = 0; i < n; ++i)
          if (src.graph.degree(order[i]) >= i) size_a = i + 1;
        dsr::VertexSet ca(n), cb(n);
        for (int i = 0; i < n; ++i) (i < size_a ? ca : cb).add(order[i]);
        for (int i = 0; i < size_a; ++i)
          for (int j = i + 1; j < size_a; ++j)
            if (!src.graph.has_edge(order[i], order[j])) return std::nullopt;
        for (auto [u, v] : src.graph.edges())
          if (cb.contains(u) && cb.contains(v)) return std::nullopt;
        return std::make_pair(ca, cb);
      };
      auto part = try_partition(true);
      if (!part) part = try_partition(false);
      if (!part) throw dsr::ParseError("input graph is not a split graph");
      return *part;
    }();
    dsr::BipartiteReduction red = dsr::split_to_bipartite(src, a, b);
    instance_text = dsr::instance_to_string(dsr::ProblemKind::Dsr, red.instance.graph,
                                            red.instance.k, red.instance.s, red.instance.start);
    name_map = names_to_json(red.vertex_names);
  } else if (what == "w2") {
    dsr::W2Reduction red = dsr::ds_to_optdsr_w2(parsed.graph, k_prime);
    instance_text = dsr::instance_to_string(dsr::ProblemKind::Dsr, red.instance.graph,
                                            red.instance.k, red.instance.s, red.instance.start);
    name_map = names_to_json(red.vertex_names);
  } else {
    throw dsr::ParseError("unknown reduction " + what);
  }

  emit(instance_text, out_path);
  if (!map_path.empty()) write_text_file(map_path, name_map.dump(2) + "\n");
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating set reconfiguration solver"};
  app.require_subcommand(1);

  std::string instance_path, sequence_path, strategy = "auto", evidence_path, witness_path;
  std::string out_path, log_path, map_path, input_path, family, reduction;
  int cap = dsr::kDefaultOracleCap;
  int n = 10, na = 4, nb = 6, k_prime = 1;
  double p = 0.3;
  unsigned seed = 1;
  std::optional<int> k_opt, s_opt;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", instance_path, "instance file")->required();
  solve_cmd->add_option("--strategy", strategy, "auto|oracle|fpt-ds|fpt-vc|class")
      ->check(CLI::IsMember({"auto", "oracle", "fpt-ds", "fpt-vc", "class"}));
  solve_cmd->add_option("--evidence", evidence_path, "interval model file for the class solver");
  solve_cmd->add_option("--witness", witness_path, "write the witness sequence here");
  solve_cmd->add_option("--cap", cap, "state-search vertex cap");

  auto* validate_cmd = app.add_subcommand("validate", "check a move sequence against an instance");
  validate_cmd->add_option("instance", instance_path, "instance file")->required();
  validate_cmd->add_option("sequence", sequence_path, "sequence file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("family", family, "random|tree|split|from-ds")
      ->required()
      ->check(CLI::IsMember({"random", "tree", "split", "from-ds"}));
  gen_cmd->add_option("--n", n, "vertex count");
  gen_cmd->add_option("--p", p, "edge probability / attachment probability");
  gen_cmd->add_option("--na", na, "split: clique size");
  gen_cmd->add_option("--nb", nb, "split: independent-set size");
  gen_cmd->add_option("--seed", seed, "rng seed");
  gen_cmd->add_option("--k", k_opt, "size bound (default |D|+1)");
  gen_cmd->add_option("--s", s_opt, "target size (default |D|-1)");
  gen_cmd->add_option("--input", input_path, "from-ds: instance file providing the graph");
  gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* kernelize_cmd = app.add_subcommand("kernelize", "emit the reduced instance");
  kernelize_cmd->add_option("instance", instance_path, "instance file")->required();
  kernelize_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  kernelize_cmd->add_option("--log", log_path, "JSON-lines log of moves, removals, and the id map");

  auto* reduce_cmd = app.add_subcommand("reduce", "transform an instance");
  reduce_cmd->add_option("reduction", reduction, "split|gadget|bipartite|w2")
      ->required()
      ->check(CLI::IsMember({"split", "gadget", "bipartite", "w2"}));
  reduce_cmd->add_option("--input", input_path, "source instance file")->required();
  reduce_cmd->add_option("--kprime", k_prime, "w2: dominating-set size bound");
  reduce_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  reduce_cmd->add_option("--map", map_path, "write the new-vertex name map (JSON) here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;  // usage problems count as bad input
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(instance_path, strategy, evidence_path, witness_path, cap);
    if (validate_cmd->parsed()) return cmd_validate(instance_path, sequence_path);
    if (gen_cmd->parsed())
      return cmd_gen(family, n, p, na, nb, seed, k_opt, s_opt, input_path, out_path);
    if (kernelize_cmd->parsed()) return cmd_kernelize(instance_path, out_path, log_path);
    if (reduce_cmd->parsed())
      return cmd_reduce(reduction, input_path, out_path, map_path, k_prime);
  } catch (const dsr::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const dsr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const dsr::NotACographError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
