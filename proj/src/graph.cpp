#include "dsr/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace dsr {

namespace {
constexpr std::uint64_t kOne = 1;
int word_count(int n) { return (n + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.add(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int w = 0; w + 1 < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
  if (!s.words_.empty()) {
    int rem = universe - 64 * (static_cast<int>(s.words_.size()) - 1);
    s.words_.back() = rem == 64 ? ~0ULL : (kOne << rem) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (universe > 0) {
    std::uint64_t valid = universe == 64 ? ~0ULL : (kOne << universe) - 1;
    if (mask & ~valid) throw std::out_of_range("from_mask: bits outside universe");
    s.words_[0] = mask;
  } else if (mask != 0) {
    throw std::out_of_range("from_mask: bits outside universe");
  }
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(n_));
}

void VertexSet::check_same(const VertexSet& o) const {
  if (n_ != o.n_) throw std::logic_error("vertex sets over different universes");
}

int VertexSet::size() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::contains(int v) const {
  check(v);
  return (words_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::add(int v) {
  check(v);
  words_[v >> 6] |= kOne << (v & 63);
}

void VertexSet::remove(int v) {
  check(v);
  words_[v >> 6] &= ~(kOne << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool VertexSet::operator<(const VertexSet& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (size_t i = words_.size(); i-- > 0;)
    if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same(o);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(o);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

int VertexSet::first() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (n_ > 64) throw std::logic_error("mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of size " +
                            std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[u].add(v);
  adj_[v].add(u);
  auto e = std::minmax(u, v);
  std::pair<int, int> p{e.first, e.second};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), p), p);
}

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  return u != v && adj_[u].contains(v);
}

int Graph::degree(int v) const {
  check(v);
  return adj_[v].size();
}

const VertexSet& Graph::neighbors(int v) const {
  check(v);
  return adj_[v];
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.add(v);
  return s;
}

VertexSet closed_neighborhood_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::logic_error("vertex set universe does not match graph");
  VertexSet out(g.n());
  for (int v : s.to_vector()) {
    out |= g.neighbors(v);
    out.add(v);
  }
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  return closed_neighborhood_set(g, s) == VertexSet::full(g.n());
}

VertexSet private_neighbors(const Graph& g, const VertexSet& d, int v) {
  if (!d.contains(v)) throw std::invalid_argument("private_neighbors: vertex not in the set");
  VertexSet out(g.n());
  for (int u : closed_neighborhood(g, v).to_vector()) {
    VertexSet dominators = closed_neighborhood(g, u) & d;
    if (dominators.size() == 1 && dominators.contains(v)) out.add(u);
  }
  return out;
}

bool is_minimal(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) throw std::invalid_argument("is_minimal: set is not dominating");
  for (int v : d.to_vector())
    if (private_neighbors(g, d, v).empty()) return false;
  return true;
}

Degeneracy degeneracy(const Graph& g) {
  int n = g.n();
  Degeneracy out;
  if (n == 0) return out;
  std::vector<int> deg(n);
  std::vector<std::set<int>> buckets(n);
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    buckets[deg[v]].insert(v);
  }
  std::vector<char> removed(n, 0);
  int cursor = 0;
  for (int round = 0; round < n; ++round) {
    while (buckets[cursor].empty()) ++cursor;
    int v = *buckets[cursor].begin();
    buckets[cursor].erase(buckets[cursor].begin());
    removed[v] = 1;
    out.d = std::max(out.d, deg[v]);
    out.ordering.push_back(v);
    for (int u : g.neighbors(v).to_vector()) {
      if (removed[u]) continue;
      buckets[deg[u]].erase(u);
      --deg[u];
      buckets[deg[u]].insert(u);
    }
    cursor = std::max(0, cursor - 1);
  }
  return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::logic_error("vertex set universe does not match graph");
  for (auto [u, v] : g.edges())
    if (!s.contains(u) && !s.contains(v)) return false;
  return true;
}

namespace {

void vc_branch(const Graph& g, VertexSet active, VertexSet cover, int cover_size, VertexSet& best,
               int& best_size) {
  for (;;) {
    if (cover_size >= best_size) return;
    // Drop degree-0 vertices, resolve degree-1 vertices by taking the neighbor.
    bool changed = false;
    bool any_edge = false;
    for (int v : active.to_vector()) {
      if (!active.contains(v)) continue;  // may have been removed this pass
      VertexSet nb = g.neighbors(v) & active;
      int dv = nb.size();
      if (dv == 0) {
        active.remove(v);
        continue;
      }
      any_edge = true;
      if (dv == 1) {
        int u = nb.first();
        cover.add(u);
        ++cover_size;
        active.remove(u);
        active.remove(v);
        changed = true;
        if (cover_size >= best_size) return;
      }
    }
    if (!any_edge) {
      if (cover_size < best_size) {
        best = cover;
        best_size = cover_size;
      }
      return;
    }
    if (changed) continue;

    int vmax = -1, dmax = -1;
    for (int v : active.to_vector()) {
      int dv = (g.neighbors(v) & active).size();
      if (dv > dmax) {
        dmax = dv;
        vmax = v;
      }
    }
    // Either vmax is in the cover, or all of its active neighbors are.
    {
      VertexSet a2 = active;
      a2.remove(vmax);
      VertexSet c2 = cover;
      c2.add(vmax);
      vc_branch(g, a2, c2, cover_size + 1, best, best_size);
    }
    {
      VertexSet nb = g.neighbors(vmax) & active;
      VertexSet a2 = active - nb;
      a2.remove(vmax);
      vc_branch(g, a2, cover | nb, cover_size + nb.size(), best, best_size);
    }
    return;
  }
}

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
  VertexSet best = VertexSet::full(g.n());
  int best_size = g.n() + 1;  // never keep the trivial bound when strictly beatable
  vc_branch(g, VertexSet::full(g.n()), VertexSet(g.n()), 0, best, best_size);
  return best;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Graph sub(static_cast<int>(keep.size()));
  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (pos[keep[i]] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    pos[keep[i]] = i;
  }
  for (auto [u, v] : g.edges())
    if (pos[u] != -1 && pos[v] != -1) sub.add_edge(pos[u], pos[v]);
  return sub;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v).to_vector())
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return g.edge_count() == g.n() - static_cast<int>(comps.size());
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int start = 0; start < g.n(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v).to_vector()) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet greedy_dominating_set(const Graph& g) {
  VertexSet d(g.n());
  VertexSet undominated = VertexSet::full(g.n());
  while (!undominated.empty()) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < g.n(); ++v) {
      int gain = (closed_neighborhood(g, v) & undominated).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    d.add(best);
    undominated -= closed_neighborhood(g, best);
  }
  return d;
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) out.add(v);
  return out;
}

}  // namespace dsr
