#ifndef DSR_PREPROCESS_HPP
#define DSR_PREPROCESS_HPP

#include <optional>

#include "dsr/tar.hpp"

namespace dsr {

enum class ClassifyKind { AlreadySolution, NoSolution, Proceed };

// Triviality classification. `prefix` holds any removal moves performed along
// the way; it validates on the original instance and ends at `target` (for
// AlreadySolution) or at `instance->start` (for Proceed).
struct Classification {
  ClassifyKind kind = ClassifyKind::NoSolution;
  std::optional<VertexSet> target;    // AlreadySolution
  std::optional<Instance> instance;   // Proceed; guarantees s < |start| < k
  TarSequence prefix;
};

// Normalizes an instance to s < |D| < k, or resolves it outright:
//  - |D| <= s           -> the start set already qualifies;
//  - |D| = k, D minimal -> nothing can move, no solution;
//  - |D| = k, not minimal -> drop the smallest-id vertex without a private
//    neighbor and classify again.
Classification classify(const Instance& inst);

// (G, |V|, s, V): solvable iff G has a dominating set of size <= s.
Instance instance_from_dominating_set_problem(const Graph& g, int s);

}  // namespace dsr

#endif  // DSR_PREPROCESS_HPP
