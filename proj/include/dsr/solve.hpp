#ifndef DSR_SOLVE_HPP
#define DSR_SOLVE_HPP

#include <optional>
#include <string>

#include "dsr/class_solvers.hpp"
#include "dsr/oracle.hpp"

namespace dsr {

enum class Strategy { Auto, Oracle, FptDs, FptVc, Class };

struct SolveOptions {
  Strategy strategy = Strategy::Auto;
  int cap = kDefaultOracleCap;
  std::optional<ClassEvidence> evidence;
};

struct SolveReport {
  Solution solution;
  std::string strategy_used;
};

// Strategy dispatch. Auto classifies first, then picks: the class solver when
// evidence is given or the graph is a forest; the exact search when the graph
// fits under the cap; otherwise the vertex-cover solver when tau < s, and the
// kernelizing solver when not.
SolveReport solve(const Instance& inst, const SolveOptions& options);

}  // namespace dsr

#endif  // DSR_SOLVE_HPP
