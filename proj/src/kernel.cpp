#include "dsr/kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "dsr/preprocess.hpp"

namespace dsr {

VertexSet domination_core(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> cn(n, VertexSet(n));
  for (int v = 0; v < n; ++v) cn[v] = closed_neighborhood(g, v);

  VertexSet core = VertexSet::full(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : core.to_vector()) {
      for (int u : core.to_vector()) {
        if (u == v) continue;
        if (!cn[u].is_subset_of(cn[v])) continue;
        if (cn[u] == cn[v] && u > v) continue;  // keep the smaller id of a tie
        core.remove(v);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return core;
}

std::pair<VertexSet, TarSequence> clean_start(const Instance& inst, int v_r, int v_l,
                                              const VertexSet& core) {
  const Graph& g = inst.graph;
  if (v_r == v_l) throw std::invalid_argument("clean_start: vertices must differ");
  if (core.contains(v_r) || core.contains(v_l))
    throw std::invalid_argument("clean_start: both vertices must lie outside the core");
  if (!inst.start.contains(v_r))
    throw std::invalid_argument("clean_start: v_r is not in the start set");
  if (!(g.neighbors(v_r) & core).is_subset_of(g.neighbors(v_l) & core))
    throw std::invalid_argument("clean_start: core-neighborhood containment does not hold");

  VertexSet d = inst.start;
  TarSequence moves;
  if (!d.contains(v_l)) {
    if (d.size() >= inst.k)
      throw std::invalid_argument("clean_start: start set already at k, cannot add");
    moves.push_back({MoveKind::Add, v_l});
    d.add(v_l);
  }
  moves.push_back({MoveKind::Remove, v_r});
  d.remove(v_r);
  return {d, moves};
}

Kernel reduce_r1(const Instance& inst) {
  const Graph& g = inst.graph;
  int n = g.n();
  int start_size = inst.start.size();
  if (!(inst.s < start_size && start_size < inst.k))
    throw std::invalid_argument("reduce_r1: requires s < |start| < k (classify first)");

  VertexSet core = domination_core(g);
  // Core-neighborhoods never change: deleted vertices lie outside the core.
  std::vector<VertexSet> core_nb(n, VertexSet(n));
  for (int v = 0; v < n; ++v) core_nb[v] = g.neighbors(v) & core;

  VertexSet present = VertexSet::full(n);
  VertexSet d = inst.start;
  TarSequence prefix;
  std::vector<std::pair<int, int>> removed_log;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int vr : present.to_vector()) {
      if (core.contains(vr)) continue;
      for (int vl : present.to_vector()) {
        if (vl == vr || core.contains(vl)) continue;
        if (!core_nb[vr].is_subset_of(core_nb[vl])) continue;
        if (core_nb[vr] == core_nb[vl] && vl > vr) continue;  // keep one representative
        if (d.contains(vr)) {
          auto [d2, moves] = clean_start(Instance(g, inst.k, inst.s, d), vr, vl, core);
          d = d2;
          prefix.insert(prefix.end(), moves.begin(), moves.end());
        }
        present.remove(vr);
        removed_log.emplace_back(vr, vl);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }

  std::vector<int> keep = present.to_vector();
  Graph gk = induced_subgraph(g, keep);
  VertexSet dk(gk.n());
  VertexSet kernel_core(gk.n());
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (d.contains(keep[i])) dk.add(i);
    if (core.contains(keep[i])) kernel_core.add(i);
  }
  return Kernel{Instance(std::move(gk), inst.k, inst.s, std::move(dk)),
                std::move(keep),
                std::move(prefix),
                std::move(removed_log),
                std::move(core),
                std::move(kernel_core)};
}

namespace {
bool ds_branch(const Graph& g, const VertexSet& undominated, int budget) {
  if (undominated.empty()) return true;
  if (budget == 0) return false;
  int v = undominated.first();
  // Any qualifying set must dominate v, so it contains someone from N[v].
  for (int u : closed_neighborhood(g, v).to_vector())
    if (ds_branch(g, undominated - closed_neighborhood(g, u), budget - 1)) return true;
  return false;
}
}  // namespace

bool exists_small_ds(const Graph& g, int s) {
  if (s < 0) return false;
  return ds_branch(g, VertexSet::full(g.n()), std::min(s, g.n()));
}

Solution fpt_ds_solve(const Instance& inst, int cap) {
  Classification cls = classify(inst);
  Solution sol;
  if (cls.kind == ClassifyKind::NoSolution) {
    sol.verdict = Verdict::No;
    return sol;
  }
  if (cls.kind == ClassifyKind::AlreadySolution) {
    sol.verdict = Verdict::Yes;
    sol.target = cls.target;
    sol.witness = cls.prefix;
    return sol;
  }

  const Instance& cur = *cls.instance;
  if (!exists_small_ds(cur.graph, cur.s)) {
    sol.verdict = Verdict::No;
    return sol;
  }

  Kernel ker = reduce_r1(cur);
  Solution sub = oracle_solve(ker.instance, cap);
  if (sub.verdict == Verdict::No) {
    sol.verdict = Verdict::No;
    return sol;
  }

  TarSequence witness = cls.prefix;
  witness.insert(witness.end(), ker.prefix.begin(), ker.prefix.end());
  for (const Move& m : *sub.witness) witness.push_back({m.kind, ker.to_original[m.vertex]});
  VertexSet target(inst.graph.n());
  for (int v : sub.target->to_vector()) target.add(ker.to_original[v]);

  auto check = validate_sequence(inst.graph, inst.k, inst.start, witness);
  if (!check.ok || check.final_set != target)
    throw std::logic_error("kernel witness failed to lift: " + check.message);

  sol.verdict = Verdict::Yes;
  sol.target = std::move(target);
  sol.witness = std::move(witness);
  return sol;
}

}  // namespace dsr
