#include "dsr/class_solvers.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "dsr/preprocess.hpp"

namespace dsr {

Graph cotree_to_graph(const Cotree& t) {
  Graph g(t.n);
  std::vector<std::vector<int>> leaves(t.nodes.size());
  std::vector<char> visited(t.nodes.size(), 0);
  std::function<void(int)> collect = [&](int idx) {
    if (idx < 0 || idx >= static_cast<int>(t.nodes.size()))
      throw std::invalid_argument("cotree child index out of range");
    if (visited[idx]) throw std::invalid_argument("cotree node used twice");
    visited[idx] = 1;
    const auto& node = t.nodes[idx];
    if (node.kind == Cotree::NodeKind::Leaf) {
      if (node.vertex < 0 || node.vertex >= t.n)
        throw std::invalid_argument("cotree leaf outside vertex range");
      leaves[idx] = {node.vertex};
      return;
    }
    if (node.children.size() < 2)
      throw std::invalid_argument("cotree internal node needs at least two children");
    for (int c : node.children) {
      collect(c);
      leaves[idx].insert(leaves[idx].end(), leaves[c].begin(), leaves[c].end());
    }
    if (node.kind == Cotree::NodeKind::Join) {
      for (size_t a = 0; a + 1 < node.children.size(); ++a)
        for (size_t b = a + 1; b < node.children.size(); ++b)
          for (int u : leaves[node.children[a]])
            for (int v : leaves[node.children[b]]) g.add_edge(u, v);
    }
  };
  if (t.n > 0) {
    if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size()))
      throw std::invalid_argument("cotree has no valid root");
    collect(t.root);
    std::vector<int> all = leaves[t.root];
    std::sort(all.begin(), all.end());
    for (int i = 0; i < t.n; ++i)
      if (i >= static_cast<int>(all.size()) || all[i] != i)
        throw std::invalid_argument("cotree leaves do not cover vertices exactly once");
  }
  return g;
}

namespace {

int build_cotree_rec(const Graph& g, const std::vector<int>& vertices, Cotree& t) {
  if (vertices.size() == 1) {
    t.nodes.push_back({Cotree::NodeKind::Leaf, vertices[0], {}});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  Graph sub = induced_subgraph(g, vertices);
  auto comps = connected_components(sub);
  Cotree::NodeKind kind;
  if (comps.size() > 1) {
    kind = Cotree::NodeKind::Union;
  } else {
    comps = connected_components(complement(sub));
    if (comps.size() <= 1) throw NotACographError();
    kind = Cotree::NodeKind::Join;
  }
  std::vector<int> children;
  for (const auto& comp : comps) {
    std::vector<int> part;
    for (int i : comp) part.push_back(vertices[i]);
    children.push_back(build_cotree_rec(g, part, t));
  }
  t.nodes.push_back({kind, -1, std::move(children)});
  return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace

Cotree build_cotree(const Graph& g) {
  Cotree t;
  t.n = g.n();
  if (g.n() == 0) return t;
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  t.root = build_cotree_rec(g, all, t);
  return t;
}

Graph interval_to_graph(const IntervalModel& m) {
  int n = static_cast<int>(m.intervals.size());
  Graph g(n);
  for (int v = 0; v < n; ++v)
    if (m.intervals[v].first > m.intervals[v].second)
      throw std::invalid_argument("interval with left endpoint after right endpoint");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      auto [lu, ru] = m.intervals[u];
      auto [lv, rv] = m.intervals[v];
      if (std::max(lu, lv) <= std::min(ru, rv)) g.add_edge(u, v);
    }
  return g;
}

VertexSet canonical_ds_tree(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("canonical_ds_tree: graph is not a forest");
  int n = g.n();
  VertexSet d(n);
  VertexSet dominated(n);
  std::vector<int> parent(n, -1);

  for (const auto& comp : connected_components(g)) {
    int root = comp[0];
    // BFS from the smallest-id root; reverse visit order is depth-descending.
    std::vector<int> order;
    std::queue<int> q;
    std::vector<char> seen(n, 0);
    q.push(root);
    seen[root] = 1;
    parent[root] = root;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int u : g.neighbors(v).to_vector())
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          q.push(u);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      if (dominated.contains(v)) continue;
      int p = parent[v];  // the root adopts itself
      if (!d.contains(p)) {
        d.add(p);
        dominated |= closed_neighborhood(g, p);
      }
    }
  }
  return d;
}

VertexSet canonical_ds_interval(const IntervalModel& m) {
  int n = static_cast<int>(m.intervals.size());
  for (int v = 0; v < n; ++v)
    if (m.intervals[v].first > m.intervals[v].second)
      throw std::invalid_argument("interval with left endpoint after right endpoint");
  auto intersect = [&](int u, int v) {
    return std::max(m.intervals[u].first, m.intervals[v].first) <=
           std::min(m.intervals[u].second, m.intervals[v].second);
  };
  VertexSet d(n);
  std::vector<char> dominated(n, 0);
  for (;;) {
    // Leftmost-ending interval not yet dominated.
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (dominated[u]) continue;
      if (v == -1 || m.intervals[u].second < m.intervals[v].second) v = u;
    }
    if (v == -1) break;
    // Its intersecting interval reaching furthest right (may be v itself).
    int pick = -1;
    for (int u = 0; u < n; ++u) {
      if (!intersect(u, v) && u != v) continue;
      if (pick == -1 || m.intervals[u].second > m.intervals[pick].second) pick = u;
    }
    d.add(pick);
    for (int u = 0; u < n; ++u)
      if (u == pick || intersect(u, pick)) dominated[u] = 1;
  }
  return d;
}

namespace {

void cograph_canonical_rec(const Graph& g, const Cotree& t,
                           const std::vector<std::vector<int>>& leaves, int idx, VertexSet& out) {
  const auto& node = t.nodes[idx];
  if (node.kind == Cotree::NodeKind::Leaf) {
    out.add(node.vertex);
    return;
  }
  if (node.kind == Cotree::NodeKind::Union) {
    for (int c : node.children) cograph_canonical_rec(g, t, leaves, c, out);
    return;
  }
  // Join: one universal vertex when available, otherwise a cross pair.
  const std::vector<int>& all = leaves[idx];
  VertexSet members(g.n());
  for (int v : all) members.add(v);
  int universal = -1;
  for (int v : all) {
    VertexSet rest = members;
    rest.remove(v);
    if (rest.is_subset_of(g.neighbors(v))) {
      universal = v;
      break;
    }
  }
  if (universal != -1) {
    out.add(universal);
    return;
  }
  int a = *std::min_element(all.begin(), all.end());
  int child_of_a = -1;
  for (int c : node.children)
    if (std::find(leaves[c].begin(), leaves[c].end(), a) != leaves[c].end()) child_of_a = c;
  int b = -1;
  for (int v : all) {
    bool in_a_child =
        std::find(leaves[child_of_a].begin(), leaves[child_of_a].end(), v) != leaves[child_of_a].end();
    if (!in_a_child && (b == -1 || v < b)) b = v;
  }
  out.add(a);
  out.add(b);
}

}  // namespace

VertexSet canonical_ds_cograph(const Cotree& t) {
  Graph g = cotree_to_graph(t);
  VertexSet out(g.n());
  if (t.n == 0) return out;
  std::vector<std::vector<int>> leaves(t.nodes.size());
  std::function<void(int)> collect = [&](int idx) {
    const auto& node = t.nodes[idx];
    if (node.kind == Cotree::NodeKind::Leaf) {
      leaves[idx] = {node.vertex};
      return;
    }
    for (int c : node.children) {
      collect(c);
      leaves[idx].insert(leaves[idx].end(), leaves[c].begin(), leaves[c].end());
    }
  };
  collect(t.root);
  cograph_canonical_rec(g, t, leaves, t.root, out);
  return out;
}

Solution class_solve(const Instance& inst, const ClassEvidence& evidence) {
  // Evidence must describe exactly the instance graph.
  if (std::holds_alternative<ForestEvidence>(evidence)) {
    if (!is_forest(inst.graph))
      throw std::invalid_argument("class_solve: graph is not a forest");
  } else if (const Cotree* t = std::get_if<Cotree>(&evidence)) {
    if (cotree_to_graph(*t) != inst.graph)
      throw std::invalid_argument("class_solve: cotree does not evaluate to the graph");
  } else {
    const IntervalModel& m = std::get<IntervalModel>(evidence);
    if (interval_to_graph(m) != inst.graph)
      throw std::invalid_argument("class_solve: interval model does not match the graph");
  }

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

  VertexSet canonical(inst.graph.n());
  if (std::holds_alternative<ForestEvidence>(evidence)) {
    canonical = canonical_ds_tree(inst.graph);
  } else if (const Cotree* t = std::get_if<Cotree>(&evidence)) {
    canonical = canonical_ds_cograph(*t);
  } else {
    canonical = canonical_ds_interval(std::get<IntervalModel>(evidence));
  }

  if (canonical.size() <= inst.s) {
    sol.verdict = Verdict::Yes;
    sol.target = std::move(canonical);
    // Reachability is guaranteed (k >= |D| + 1 here), no move list constructed.
  } else {
    sol.verdict = Verdict::No;
  }
  return sol;
}

}  // namespace dsr
