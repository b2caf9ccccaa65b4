#include "dsr/vc_fpt.hpp"

#include <stdexcept>

#include "dsr/preprocess.hpp"

namespace dsr {

VertexSet SpecialNeighborMap::targets(int universe) const {
  VertexSet out(universe);
  for (auto [v, t] : assignment) out.add(t);
  return out;
}

SpecialNeighborMap special_neighbors(const Graph& g, const VertexSet& cover,
                                     const VertexSet& dom) {
  SpecialNeighborMap m;
  for (int v : (cover - dom).to_vector()) {
    VertexSet dominators = closed_neighborhood(g, v) & dom;
    int t = dominators.first();
    if (t == -1) throw std::invalid_argument("special_neighbors: set does not dominate " +
                                             std::to_string(v));
    m.assignment.emplace(v, t);
  }
  return m;
}

Solution fpt_vc_solve(const Instance& inst, int cap) {
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
  const Graph& g = cur.graph;
  VertexSet cover = min_vertex_cover(g);
  int tau = cover.size();
  if (cur.s <= tau) return fpt_ds_solve(inst, cap);

  // tau < s: rewrite the start set. Independent-set vertices that are not
  // chosen dominators can always leave, possibly after pulling in a cover
  // neighbor; chosen dominators and isolated vertices stay.
  SpecialNeighborMap special = special_neighbors(g, cover, cur.start);
  VertexSet d = cur.start;
  TarSequence moves;
  bool applied = true;
  while (applied) {
    applied = false;
    VertexSet chosen = special.targets(g.n());
    for (int v = 0; v < g.n(); ++v) {
      if (cover.contains(v) || !d.contains(v)) continue;
      if (chosen.contains(v) || g.degree(v) == 0) continue;
      if ((g.neighbors(v) & d).empty()) {
        // Dominated only by itself: pull in its smallest cover neighbor first.
        int u = (g.neighbors(v) & cover).first();
        if (u == -1) throw std::logic_error("non-isolated independent vertex without cover neighbor");
        moves.push_back({MoveKind::Add, u});
        d.add(u);
        special.assignment.erase(u);  // u no longer needs a dominator of its own
      }
      moves.push_back({MoveKind::Remove, v});
      d.remove(v);
      applied = true;
      break;
    }
  }

  if (d.size() > cur.s) {
    // Only possible through isolated vertices; fall back for an exact verdict.
    return fpt_ds_solve(inst, cap);
  }

  TarSequence witness = cls.prefix;
  witness.insert(witness.end(), moves.begin(), moves.end());
  auto check = validate_sequence(inst.graph, inst.k, inst.start, witness);
  if (!check.ok || check.final_set != d)
    throw std::logic_error("vertex-cover rewrite produced an invalid witness: " + check.message);

  sol.verdict = Verdict::Yes;
  sol.target = std::move(d);
  sol.witness = std::move(witness);
  return sol;
}

}  // namespace dsr
