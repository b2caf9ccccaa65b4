#include "dsr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>

namespace dsr {

CapExceededError::CapExceededError(int n_in, int cap_in)
    : std::runtime_error("graph has " + std::to_string(n_in) +
                         " vertices, above the state-search cap of " + std::to_string(cap_in)),
      n(n_in),
      cap(cap_in) {}

VcrInstance::VcrInstance(Graph g, int k_in, int s_in, VertexSet start_in)
    : graph(std::move(g)), k(k_in), s(s_in), start(std::move(start_in)) {
  if (k < 0 || s < 0) throw std::invalid_argument("vcr instance: k and s must be nonnegative");
  if (start.universe() != graph.n())
    throw std::invalid_argument("vcr instance: start set universe does not match graph");
  if (!is_vertex_cover(graph, start))
    throw std::invalid_argument("vcr instance: start set is not a vertex cover");
  if (start.size() > k) throw std::invalid_argument("vcr instance: |start| exceeds k");
}

namespace {

constexpr int kMaskLimit = 62;

struct StateSpace {
  int n = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> cn;  // closed neighborhoods, dominating-set mode
  std::vector<std::pair<int, int>> edges;
  bool vc_mode = false;

  bool valid(std::uint64_t s) const {
    if (vc_mode) {
      for (auto [u, v] : edges)
        if (!((s >> u) & 1) && !((s >> v) & 1)) return false;
      return true;
    }
    std::uint64_t covered = 0;
    std::uint64_t rest = s;
    while (rest) {
      covered |= cn[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    return covered == full;
  }
};

StateSpace make_space(const Graph& g, bool vc_mode, int cap) {
  if (g.n() > cap) throw CapExceededError(g.n(), cap);
  if (g.n() > kMaskLimit) throw CapExceededError(g.n(), kMaskLimit);
  StateSpace sp;
  sp.n = g.n();
  sp.full = sp.n == 0 ? 0 : ((std::uint64_t{1} << sp.n) - 1);
  sp.vc_mode = vc_mode;
  if (vc_mode) {
    sp.edges = g.edges();
  } else {
    sp.cn.resize(sp.n);
    for (int v = 0; v < sp.n; ++v) sp.cn[v] = closed_neighborhood(g, v).mask();
  }
  return sp;
}

struct BfsResult {
  bool found = false;
  std::uint64_t target = 0;
  TarSequence witness;
  std::vector<std::uint64_t> visited;
};

// FIFO search from `start`; neighbors generated by toggling vertices in
// ascending order. Additions only need the size bound (supersets of a valid
// set stay valid); removals are re-checked against the predicate.
BfsResult tar_bfs(const StateSpace& sp, int k, int s, std::uint64_t start, bool stop_at_target,
                  bool collect_visited) {
  BfsResult out;
  std::unordered_map<std::uint64_t, std::uint64_t> parent;
  std::deque<std::uint64_t> queue;
  parent.emplace(start, start);
  queue.push_back(start);

  while (!queue.empty()) {
    std::uint64_t cur = queue.front();
    queue.pop_front();
    if (collect_visited) out.visited.push_back(cur);
    if (stop_at_target && std::popcount(cur) <= s) {
      out.found = true;
      out.target = cur;
      std::vector<std::uint64_t> chain{cur};
      while (chain.back() != start) chain.push_back(parent.at(chain.back()));
      std::reverse(chain.begin(), chain.end());
      for (size_t i = 1; i < chain.size(); ++i) {
        std::uint64_t diff = chain[i - 1] ^ chain[i];
        int v = std::countr_zero(diff);
        out.witness.push_back({(chain[i] & diff) ? MoveKind::Add : MoveKind::Remove, v});
      }
      return out;
    }
    int size = std::popcount(cur);
    for (int v = 0; v < sp.n; ++v) {
      std::uint64_t next = cur ^ (std::uint64_t{1} << v);
      bool removal = (cur >> v) & 1;
      if (!removal && size + 1 > k) continue;
      if (parent.contains(next)) continue;
      if (removal && !sp.valid(next)) continue;
      parent.emplace(next, cur);
      queue.push_back(next);
    }
  }
  return out;
}

std::vector<VertexSet> to_sets(int n, std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(VertexSet::from_mask(n, m));
  return out;
}

}  // namespace

Solution oracle_solve(const Instance& inst, int cap) {
  StateSpace sp = make_space(inst.graph, false, cap);
  BfsResult res = tar_bfs(sp, inst.k, inst.s, inst.start.mask(), true, false);
  Solution sol;
  if (!res.found) {
    sol.verdict = Verdict::No;
    return sol;
  }
  sol.verdict = Verdict::Yes;
  sol.target = VertexSet::from_mask(inst.graph.n(), res.target);
  sol.witness = std::move(res.witness);
  auto check = validate_sequence(inst.graph, inst.k, inst.start, *sol.witness);
  if (!check.ok || check.final_set != *sol.target)
    throw std::logic_error("oracle produced an invalid witness: " + check.message);
  return sol;
}

std::vector<VertexSet> reachable_sets(const Instance& inst, int cap) {
  StateSpace sp = make_space(inst.graph, false, cap);
  BfsResult res = tar_bfs(sp, inst.k, -1, inst.start.mask(), false, true);
  return to_sets(inst.graph.n(), std::move(res.visited));
}

Solution vcr_oracle_solve(const VcrInstance& inst, int cap) {
  StateSpace sp = make_space(inst.graph, true, cap);
  BfsResult res = tar_bfs(sp, inst.k, inst.s, inst.start.mask(), true, false);
  Solution sol;
  if (!res.found) {
    sol.verdict = Verdict::No;
    return sol;
  }
  sol.verdict = Verdict::Yes;
  sol.target = VertexSet::from_mask(inst.graph.n(), res.target);
  sol.witness = std::move(res.witness);
  VertexSet replay = inst.start;
  for (const Move& m : *sol.witness) {
    replay = apply_move(replay, m);
    if (replay.size() > inst.k || !is_vertex_cover(inst.graph, replay))
      throw std::logic_error("vcr oracle produced an invalid witness");
  }
  if (replay != *sol.target) throw std::logic_error("vcr oracle witness misses its target");
  return sol;
}

std::vector<VertexSet> vcr_reachable_sets(const VcrInstance& inst, int cap) {
  StateSpace sp = make_space(inst.graph, true, cap);
  BfsResult res = tar_bfs(sp, inst.k, -1, inst.start.mask(), false, true);
  return to_sets(inst.graph.n(), std::move(res.visited));
}

}  // namespace dsr
