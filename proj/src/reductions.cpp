#include "dsr/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dsr {

namespace {
std::string one_indexed(int v) { return std::to_string(v + 1); }
}  // namespace

SplitReduction vcr_to_split(const VcrInstance& src) {
  int n = src.graph.n();
  int m = src.graph.edge_count();
  if (n >= 1 && src.start.empty())
    throw std::invalid_argument(
        "vcr_to_split: empty start cover cannot dominate the clique side");

  Graph g(n + m);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);

  GadgetMap gadgets;
  std::map<int, std::string> names;
  const auto& edges = src.graph.edges();
  for (int i = 0; i < m; ++i) {
    int w = n + i;
    g.add_edge(w, edges[i].first);
    g.add_edge(w, edges[i].second);
    gadgets.edge_of[w] = edges[i];
    names[w] = "w(" + one_indexed(edges[i].first) + "," + one_indexed(edges[i].second) + ")";
  }

  VertexSet a(n + m), b(n + m), d(n + m);
  for (int v = 0; v < n; ++v) a.add(v);
  for (int w = n; w < n + m; ++w) b.add(w);
  for (int v : src.start.to_vector()) d.add(v);

  return SplitReduction{Instance(std::move(g), src.k, src.s, std::move(d)), std::move(a),
                        std::move(b), std::move(gadgets), std::move(names)};
}

GadgetReduction vcr_to_gadget(const VcrInstance& src) {
  int n = src.graph.n();
  int m = src.graph.edge_count();
  // Isolated vertices outside the cover would stay undominated. Note that the
  // verdict correspondence needs an isolated-free source either way: an
  // isolated vertex may leave a vertex cover but never a dominating set.
  for (int v = 0; v < n; ++v)
    if (src.graph.degree(v) == 0 && !src.start.contains(v))
      throw std::invalid_argument(
          "vcr_to_gadget: isolated source vertex outside the cover stays undominated");

  Graph g(n + m);
  for (auto [u, v] : src.graph.edges()) g.add_edge(u, v);

  GadgetMap gadgets;
  std::map<int, std::string> names;
  const auto& edges = src.graph.edges();
  for (int i = 0; i < m; ++i) {
    int w = n + i;
    g.add_edge(w, edges[i].first);
    g.add_edge(w, edges[i].second);
    gadgets.edge_of[w] = edges[i];
    names[w] = "t(" + one_indexed(edges[i].first) + "," + one_indexed(edges[i].second) + ")";
  }

  VertexSet d(n + m);
  for (int v : src.start.to_vector()) d.add(v);

  return GadgetReduction{Instance(std::move(g), src.k, src.s, std::move(d)), std::move(gadgets),
                         std::move(names)};
}

BipartiteReduction split_to_bipartite(const Instance& src, const VertexSet& clique_part,
                                      const VertexSet& independent_part) {
  const Graph& gs = src.graph;
  int n = gs.n();
  if (clique_part.universe() != n || independent_part.universe() != n)
    throw std::invalid_argument("split_to_bipartite: partition universe mismatch");
  if ((clique_part & independent_part).size() != 0 ||
      (clique_part | independent_part) != VertexSet::full(n))
    throw std::invalid_argument("split_to_bipartite: parts must partition the vertices");
  auto a = clique_part.to_vector();
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!gs.has_edge(a[i], a[j]))
        throw std::invalid_argument("split_to_bipartite: clique part is not a clique");
  for (auto [u, v] : gs.edges())
    if (independent_part.contains(u) && independent_part.contains(v))
      throw std::invalid_argument("split_to_bipartite: independent part has an internal edge");
  if (!src.start.is_subset_of(clique_part))
    throw std::invalid_argument("split_to_bipartite: start set must lie inside the clique part");

  int x = n, y = n + 1;
  Graph g(n + 2);
  for (auto [u, v] : gs.edges())
    if (!clique_part.contains(u) || !clique_part.contains(v)) g.add_edge(u, v);
  g.add_edge(x, y);
  for (int v : a) g.add_edge(y, v);

  VertexSet d(n + 2);
  for (int v : src.start.to_vector()) d.add(v);
  d.add(y);

  std::map<int, std::string> names{{x, "x"}, {y, "y"}};
  return BipartiteReduction{Instance(std::move(g), src.k + 1, src.s + 1, std::move(d)), x, y,
                            std::move(names)};
}

W2Reduction ds_to_optdsr_w2(const Graph& src, int k_prime) {
  if (k_prime < 1) throw std::invalid_argument("ds_to_optdsr_w2: k' must be at least 1");
  int n = src.n();
  if (n < 1) throw std::invalid_argument("ds_to_optdsr_w2: source graph must be nonempty");

  // Block j occupies ids [j*(n+1), (j+1)*(n+1)): the source copy first, then
  // the block's universal vertex.
  int block = n + 1;
  auto copy_id = [&](int j, int v) { return j * block + v; };
  auto universal_id = [&](int j) { return j * block + n; };

  Graph g((k_prime + 1) * block);
  std::map<int, std::string> names;
  for (int j = 0; j <= k_prime; ++j) {
    for (auto [u, v] : src.edges()) g.add_edge(copy_id(j, u), copy_id(j, v));
    for (int v = 0; v < n; ++v) g.add_edge(universal_id(j), copy_id(j, v));
    for (int v = 0; v < n; ++v)
      names[copy_id(j, v)] = j == 0 ? "v" + one_indexed(v)
                                    : "v" + std::to_string(j) + "," + one_indexed(v);
    names[universal_id(j)] = j == 0 ? "v0" : "v" + std::to_string(j) + ",0";
  }
  // Each source vertex absorbs the closed neighborhood of each of its copies.
  for (int j = 1; j <= k_prime; ++j)
    for (int v = 0; v < n; ++v) {
      g.add_edge(copy_id(0, v), copy_id(j, v));
      g.add_edge(copy_id(0, v), universal_id(j));
      for (int u : src.neighbors(v).to_vector()) g.add_edge(copy_id(0, v), copy_id(j, u));
    }

  VertexSet d(g.n());
  for (int j = 0; j <= k_prime; ++j) d.add(universal_id(j));
  return W2Reduction{Instance(std::move(g), 2 * k_prime + 1, k_prime, std::move(d)),
                     std::move(names)};
}

TarSequence project_sequence_gadget(const Instance& reduced, const TarSequence& seq,
                                    const GadgetMap& gadgets) {
  auto check = validate_sequence(reduced.graph, reduced.k, reduced.start, seq);
  if (!check.ok)
    throw std::invalid_argument("project_sequence_gadget: sequence invalid: " + check.message);

  auto project = [&](const VertexSet& s) {
    VertexSet out = s;
    for (auto [w, edge] : gadgets.edge_of) {
      if (!out.contains(w)) continue;
      out.remove(w);
      out.add(std::min(edge.first, edge.second));
    }
    return out;
  };

  // Projected states differ by at most one vertex; splice out revisits so the
  // remaining walk is a simple path.
  std::vector<VertexSet> path{project(reduced.start)};
  std::map<VertexSet, size_t> position{{path[0], 0}};
  VertexSet cur = reduced.start;
  for (const Move& m : seq) {
    cur = apply_move(cur, m);
    VertexSet p = project(cur);
    if (p == path.back()) continue;
    auto it = position.find(p);
    if (it != position.end()) {
      while (path.size() > it->second + 1) {
        position.erase(path.back());
        path.pop_back();
      }
      continue;
    }
    position.emplace(p, path.size());
    path.push_back(std::move(p));
  }

  TarSequence out;
  for (size_t i = 1; i < path.size(); ++i) {
    VertexSet added = path[i] - path[i - 1];
    VertexSet removed = path[i - 1] - path[i];
    if (added.size() + removed.size() != 1)
      throw std::logic_error("projection produced a non-unit step");
    if (!added.empty())
      out.push_back({MoveKind::Add, added.first()});
    else
      out.push_back({MoveKind::Remove, removed.first()});
  }
  return out;
}

}  // namespace dsr
