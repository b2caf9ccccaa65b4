#ifndef DSR_KERNEL_HPP
#define DSR_KERNEL_HPP

#include <utility>
#include <vector>

#include "dsr/oracle.hpp"
#include "dsr/tar.hpp"

namespace dsr {

// Reduced instance plus the data needed to map kernel witnesses back to the
// original graph. The kernel graph is relabeled to dense ids; to_original[i]
// is the source vertex behind kernel vertex i.
struct Kernel {
  Instance instance;
  std::vector<int> to_original;
  TarSequence prefix;                            // original ids; start -> kernel start viewed in G
  std::vector<std::pair<int, int>> removed_log;  // (removed, kept) pairs, original ids
  VertexSet core;                                // original ids; never touched by removals
  VertexSet kernel_core;                         // the same set in kernel ids
};

// A set C such that any subset D dominates G iff C is inside N[D]. Computed
// by iterated elimination: drop v from the candidate core while some other
// candidate u has N[u] contained in N[v]; on equal neighborhoods the larger
// id goes.
VertexSet domination_core(const Graph& g);

// Rewrites the start set so that v_r leaves it: [Remove v_r] when v_l is
// already present, [Add v_l, Remove v_r] otherwise. Requires v_r, v_l outside
// the core with N(v_r) ∩ core ⊆ N(v_l) ∩ core, and room below k for the add.
std::pair<VertexSet, TarSequence> clean_start(const Instance& inst, int v_r, int v_l,
                                              const VertexSet& core);

// Exhaustively deletes out-of-core vertices whose core-neighborhood is
// contained in another out-of-core vertex's, cleaning the start set first
// when needed. Requires s < |start| < k.
Kernel reduce_r1(const Instance& inst);

// True iff G has a dominating set of size at most s (depth-s branching on the
// closed neighborhood of the smallest undominated vertex).
bool exists_small_ds(const Graph& g, int s);

// Full pipeline: classify, existence gate, kernelize, solve the kernel by
// state search, lift the witness back through the prefix.
Solution fpt_ds_solve(const Instance& inst, int cap = kDefaultOracleCap);

}  // namespace dsr

#endif  // DSR_KERNEL_HPP
