#ifndef DSR_GRAPH_HPP
#define DSR_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace dsr {

// Subset of the vertices 0..n-1 of an associated graph, stored as a bit vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int v) const;
  void add(int v);
  void remove(int v);
  void clear();

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }
  bool operator<(const VertexSet& o) const;  // by universe, then word value
  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  // Smallest member, or -1 when empty.
  int first() const;
  std::vector<int> to_vector() const;
  // Only valid while universe() <= 64.
  std::uint64_t mask() const;

 private:
  void check(int v) const;
  void check_same(const VertexSet& o) const;
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph over dense vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Adding an existing edge is a no-op; self-loops are rejected.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const VertexSet& neighbors(int v) const;
  // Canonical (u < v) pairs in lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void check(int v) const;
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<int, int>> edges_;
};

VertexSet closed_neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood_set(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

// All u in N[v] dominated only by v within d; requires v in d.
VertexSet private_neighbors(const Graph& g, const VertexSet& d, int v);
// Requires d dominating; true iff every member has a private neighbor.
bool is_minimal(const Graph& g, const VertexSet& d);

struct Degeneracy {
  int d = 0;
  std::vector<int> ordering;  // peel order; each vertex has <= d later neighbors
};
Degeneracy degeneracy(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
// Exact minimum vertex cover: degree-0/1 simplification plus binary
// branching on a maximum-degree vertex. Deterministic output.
VertexSet min_vertex_cover(const Graph& g);

// Helpers shared across modules.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph complement(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);
VertexSet greedy_dominating_set(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

}  // namespace dsr

#endif  // DSR_GRAPH_HPP
