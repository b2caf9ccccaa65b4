#ifndef DSR_REDUCTIONS_HPP
#define DSR_REDUCTIONS_HPP

#include <map>
#include <string>
#include <utility>

#include "dsr/oracle.hpp"
#include "dsr/tar.hpp"

namespace dsr {

// New vertices a reduction introduced, each tied to the source edge it stands
// for. Replacements during sequence projection use the smaller endpoint.
struct GadgetMap {
  std::map<int, std::pair<int, int>> edge_of;
};

struct SplitReduction {
  Instance instance;
  VertexSet clique_part;       // the source vertices, now a clique
  VertexSet independent_part;  // one vertex per source edge
  GadgetMap gadgets;
  std::map<int, std::string> vertex_names;  // new vertices, 1-indexed labels
};

// Vertex-cover reconfiguration -> split-graph instance: make the source
// vertex set a clique and hang one vertex per source edge off its endpoints.
// Same k, s, and start set. The start cover must be nonempty for nonempty
// sources, otherwise it cannot dominate the clique.
SplitReduction vcr_to_split(const VcrInstance& src);

struct GadgetReduction {
  Instance instance;
  GadgetMap gadgets;
  std::map<int, std::string> vertex_names;
};

// Vertex-cover reconfiguration -> triangle gadgets: keep the source graph and
// add one vertex per edge adjacent to both endpoints. Same k, s, start set.
// Isolated source vertices outside the cover make the start non-dominating
// and are rejected.
GadgetReduction vcr_to_gadget(const VcrInstance& src);

struct BipartiteReduction {
  Instance instance;
  int x_vertex = -1;
  int y_vertex = -1;
  std::map<int, std::string> vertex_names;
};

// Split instance (clique A, independent B, start inside A) -> bipartite
// instance: drop the intra-A edges, add the edge x-y and join y to all of A.
// k and s grow by one; y joins the start set.
BipartiteReduction split_to_bipartite(const Instance& src, const VertexSet& clique_part,
                                      const VertexSet& independent_part);

struct W2Reduction {
  Instance instance;
  std::map<int, std::string> vertex_names;
};

// Dominating-set instance (G', k') -> reconfiguration instance with k' + 1
// blocks, each the source plus a universal vertex; every source vertex also
// absorbs the closed neighborhoods of its copies. k = 2k' + 1, s = k', and
// the start set collects the universal vertices.
W2Reduction ds_to_optdsr_w2(const Graph& g, int k_prime);

// Rewrites a sequence on a reduced instance into one touching no gadget
// vertex: each state swaps gadget vertices for the smaller endpoint of their
// defining edge, and revisited states are spliced out. The result is valid on
// the same instance and ends at a set no larger than the original final set.
TarSequence project_sequence_gadget(const Instance& reduced, const TarSequence& seq,
                                    const GadgetMap& gadgets);

}  // namespace dsr

#endif  // DSR_REDUCTIONS_HPP
