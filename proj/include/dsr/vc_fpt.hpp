#ifndef DSR_VC_FPT_HPP
#define DSR_VC_FPT_HPP

#include <map>

#include "dsr/kernel.hpp"
#include "dsr/tar.hpp"

namespace dsr {

// For each cover vertex outside the dominating set, a chosen dominator.
struct SpecialNeighborMap {
  std::map<int, int> assignment;
  // The set of chosen dominators (image of the map).
  VertexSet targets(int universe) const;
};

// Assigns every v in cover \ dom its smallest-id dominator from N[v] ∩ dom.
// Total because dom is dominating.
SpecialNeighborMap special_neighbors(const Graph& g, const VertexSet& cover,
                                     const VertexSet& dom);

// Vertex-cover parameterized solver. After classification it computes a
// minimum vertex cover X. With s <= |X| it delegates to fpt_ds_solve; with
// |X| < s it shrinks the start set by two rewrite rules on independent-set
// vertices until only chosen dominators and isolated vertices remain.
Solution fpt_vc_solve(const Instance& inst, int cap = kDefaultOracleCap);

}  // namespace dsr

#endif  // DSR_VC_FPT_HPP
