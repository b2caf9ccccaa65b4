#ifndef DSR_CLASS_SOLVERS_HPP
#define DSR_CLASS_SOLVERS_HPP

#include <stdexcept>
#include <variant>
#include <vector>

#include "dsr/tar.hpp"

namespace dsr {

struct NotACographError : std::runtime_error {
  NotACographError() : std::runtime_error("graph is not a cograph") {}
};

// Rooted tree whose internal nodes combine children by disjoint union or
// complete join; leaves carry vertices of the represented graph.
struct Cotree {
  enum class NodeKind { Leaf, Union, Join };
  struct Node {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;             // leaves only
    std::vector<int> children;   // internal nodes only
  };
  std::vector<Node> nodes;
  int root = -1;
  int n = 0;  // vertex count of the represented graph
};

Graph cotree_to_graph(const Cotree& t);
// Recursive split on connected components of the graph and of its complement.
Cotree build_cotree(const Graph& g);

// Closed intervals with integer endpoints, one per vertex.
struct IntervalModel {
  std::vector<std::pair<long long, long long>> intervals;
};

Graph interval_to_graph(const IntervalModel& m);

// Deterministic minimum dominating sets intended to be reachable from any
// dominating set D under the size-(|D|+1) rule.
VertexSet canonical_ds_tree(const Graph& g);          // requires a forest
VertexSet canonical_ds_cograph(const Cotree& t);
VertexSet canonical_ds_interval(const IntervalModel& m);

struct ForestEvidence {};
using ClassEvidence = std::variant<ForestEvidence, Cotree, IntervalModel>;

// Classify, then compare the canonical set's size against s. Yields no
// witness on the canonical path; reachability holds because k >= |D| + 1
// after classification. Throws when the evidence does not match the graph.
Solution class_solve(const Instance& inst, const ClassEvidence& evidence);

}  // namespace dsr

#endif  // DSR_CLASS_SOLVERS_HPP
