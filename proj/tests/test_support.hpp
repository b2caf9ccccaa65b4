#ifndef DSR_TEST_SUPPORT_HPP
#define DSR_TEST_SUPPORT_HPP

// Brute-force reference oracles and instance generators. Everything here
// works from the raw edge list with plain bitmask arithmetic, independent of
// the library's own neighborhood and search code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "dsr/class_solvers.hpp"
#include "dsr/graph.hpp"
#include "dsr/tar.hpp"

namespace testsupport {

using std::uint64_t;

// Closed neighborhoods as masks, derived from the edge list only.
inline std::vector<uint64_t> closed_masks(const dsr::Graph& g) {
  std::vector<uint64_t> cn(g.n());
  for (int v = 0; v < g.n(); ++v) cn[v] = uint64_t{1} << v;
  for (auto [u, v] : g.edges()) {
    cn[u] |= uint64_t{1} << v;
    cn[v] |= uint64_t{1} << u;
  }
  return cn;
}

inline uint64_t full_mask(int n) { return n == 0 ? 0 : (uint64_t{1} << n) - 1; }

inline bool mask_dominating(const std::vector<uint64_t>& cn, int n, uint64_t s) {
  uint64_t covered = 0;
  uint64_t rest = s;
  while (rest) {
    covered |= cn[std::countr_zero(rest)];
    rest &= rest - 1;
  }
  return covered == full_mask(n);
}

inline bool mask_vertex_cover(const dsr::Graph& g, uint64_t s) {
  for (auto [u, v] : g.edges())
    if (!((s >> u) & 1) && !((s >> v) & 1)) return false;
  return true;
}

inline int brute_gamma(const dsr::Graph& g) {
  auto cn = closed_masks(g);
  int best = g.n();
  for (uint64_t s = 0; s < (uint64_t{1} << g.n()); ++s)
    if (mask_dominating(cn, g.n(), s)) best = std::min(best, std::popcount(s));
  return best;
}

inline std::vector<uint64_t> all_dominating_masks(const dsr::Graph& g) {
  auto cn = closed_masks(g);
  std::vector<uint64_t> out;
  for (uint64_t s = 0; s < (uint64_t{1} << g.n()); ++s)
    if (mask_dominating(cn, g.n(), s)) out.push_back(s);
  return out;
}

// Definitional reachability: breadth-first search over every subset, moving
// between valid states differing in one vertex, sizes capped by k.
inline std::set<uint64_t> brute_reachable(const dsr::Graph& g, int k, uint64_t start,
                                          bool vc_mode) {
  auto cn = closed_masks(g);
  auto valid = [&](uint64_t s) {
    if (std::popcount(s) > k) return false;
    return vc_mode ? mask_vertex_cover(g, s) : mask_dominating(cn, g.n(), s);
  };
  std::set<uint64_t> seen;
  if (!valid(start)) return seen;
  std::deque<uint64_t> queue{start};
  seen.insert(start);
  while (!queue.empty()) {
    uint64_t cur = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.n(); ++v) {
      uint64_t next = cur ^ (uint64_t{1} << v);
      if (seen.contains(next) || !valid(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return seen;
}

// Shortest number of moves from start to any valid state of size <= s, or -1.
inline int brute_distance_to_small(const dsr::Graph& g, int k, int s, uint64_t start,
                                   bool vc_mode) {
  auto cn = closed_masks(g);
  auto valid = [&](uint64_t st) {
    if (std::popcount(st) > k) return false;
    return vc_mode ? mask_vertex_cover(g, st) : mask_dominating(cn, g.n(), st);
  };
  if (!valid(start)) return -1;
  std::set<uint64_t> seen{start};
  std::deque<std::pair<uint64_t, int>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [cur, dist] = queue.front();
    queue.pop_front();
    if (std::popcount(cur) <= s) return dist;
    for (int v = 0; v < g.n(); ++v) {
      uint64_t next = cur ^ (uint64_t{1} << v);
      if (seen.contains(next) || !valid(next)) continue;
      seen.insert(next);
      queue.push_back({next, dist + 1});
    }
  }
  return -1;
}

inline bool brute_optdsr_yes(const dsr::Graph& g, int k, int s, uint64_t start) {
  for (uint64_t st : brute_reachable(g, k, start, false))
    if (std::popcount(st) <= s) return true;
  return false;
}

inline bool brute_optvcr_yes(const dsr::Graph& g, int k, int s, uint64_t start) {
  for (uint64_t st : brute_reachable(g, k, start, true))
    if (std::popcount(st) <= s) return true;
  return false;
}

// Every labeled graph on n vertices, edge masks in increasing order.
inline std::vector<dsr::Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<dsr::Graph> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    dsr::Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

// --- seeded generators -----------------------------------------------------

inline int rand_below(std::mt19937& rng, int bound) {
  return bound <= 1 ? 0 : static_cast<int>(rng() % static_cast<std::uint32_t>(bound));
}

inline bool rand_chance(std::mt19937& rng, double p) {
  return (rng() >> 8) < p * 16777216.0;
}

inline dsr::Graph random_graph(std::mt19937& rng, int n, double p) {
  dsr::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rand_chance(rng, p)) g.add_edge(u, v);
  return g;
}

inline dsr::Graph random_tree(std::mt19937& rng, int n) {
  dsr::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, rand_below(rng, v));
  return g;
}

inline dsr::Graph random_forest(std::mt19937& rng, int n, double keep) {
  dsr::Graph g(n);
  for (int v = 1; v < n; ++v)
    if (rand_chance(rng, keep)) g.add_edge(v, rand_below(rng, v));
  return g;
}

inline dsr::Cotree random_cotree(std::mt19937& rng, int n) {
  // Random recursive partition with alternating-ish union/join labels.
  dsr::Cotree t;
  t.n = n;
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::function<int(std::vector<int>, bool)> build = [&](std::vector<int> part,
                                                         bool join) -> int {
    if (part.size() == 1) {
      t.nodes.push_back({dsr::Cotree::NodeKind::Leaf, part[0], {}});
      return static_cast<int>(t.nodes.size()) - 1;
    }
    // Split into 2..min(4, size) nonempty groups.
    int groups = 2 + rand_below(rng, std::min<int>(3, static_cast<int>(part.size()) - 1));
    std::vector<std::vector<int>> parts(groups);
    for (size_t i = 0; i < part.size(); ++i)
      parts[i < static_cast<size_t>(groups) ? i : rand_below(rng, groups)].push_back(part[i]);
    std::vector<int> children;
    for (auto& sub : parts)
      if (!sub.empty()) children.push_back(build(sub, !join));
    if (children.size() == 1) return children[0];
    t.nodes.push_back({join ? dsr::Cotree::NodeKind::Join : dsr::Cotree::NodeKind::Union, -1,
                       std::move(children)});
    return static_cast<int>(t.nodes.size()) - 1;
  };
  if (n > 0) t.root = build(ids, rng() & 1);
  return t;
}

inline dsr::IntervalModel random_interval_model(std::mt19937& rng, int n) {
  dsr::IntervalModel m;
  for (int i = 0; i < n; ++i) {
    long long l = rand_below(rng, 3 * n + 1);
    long long r = l + rand_below(rng, n + 2);
    m.intervals.emplace_back(l, r);
  }
  return m;
}

// A random dominating set: start from everything, drop removable vertices in
// random order, then re-add a few random vertices.
inline dsr::VertexSet random_dominating_set(std::mt19937& rng, const dsr::Graph& g) {
  auto cn = closed_masks(g);
  int n = g.n();
  uint64_t d = full_mask(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rand_below(rng, i + 1)]);
  for (int v : order) {
    uint64_t without = d & ~(uint64_t{1} << v);
    if (mask_dominating(cn, n, without)) d = without;
  }
  for (int v = 0; v < n; ++v)
    if (rand_chance(rng, 0.15)) d |= uint64_t{1} << v;
  return dsr::VertexSet::from_mask(n, d);
}

}  // namespace testsupport

#endif  // DSR_TEST_SUPPORT_HPP
