#ifndef DSR_ORACLE_HPP
#define DSR_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "dsr/tar.hpp"

namespace dsr {

inline constexpr int kDefaultOracleCap = 20;

// The explicit state-space search refuses graphs above the configured cap.
struct CapExceededError : std::runtime_error {
  int n;
  int cap;
  CapExceededError(int n_in, int cap_in);
};

// Reconfiguration instance for vertex covers under the same move rule.
struct VcrInstance {
  Graph graph;
  int k = 0;
  int s = 0;
  VertexSet start;

  VcrInstance(Graph g, int k, int s, VertexSet start);
};

// Exact solver: breadth-first search over all dominating sets of size <= k,
// adjacent when they differ in exactly one vertex. Returns the first set of
// size <= s reached, with a shortest witness. Definitionally exact.
Solution oracle_solve(const Instance& inst, int cap = kDefaultOracleCap);

// Every dominating set reachable from the start under the size-k rule,
// in increasing bit-vector order. The instance's s is ignored.
std::vector<VertexSet> reachable_sets(const Instance& inst, int cap = kDefaultOracleCap);

// The same search over vertex covers.
Solution vcr_oracle_solve(const VcrInstance& inst, int cap = kDefaultOracleCap);
std::vector<VertexSet> vcr_reachable_sets(const VcrInstance& inst, int cap = kDefaultOracleCap);

}  // namespace dsr

#endif  // DSR_ORACLE_HPP
