#include "dsr/preprocess.hpp"

#include <stdexcept>
#include <utility>

namespace dsr {

Classification classify(const Instance& inst) {
  Classification out;
  VertexSet d = inst.start;

  for (;;) {
    int size = d.size();
    if (!(inst.s < size && size <= inst.k)) {
      // |D| <= k always holds here, so the violated inequality means |D| <= s.
      out.kind = ClassifyKind::AlreadySolution;
      out.target = d;
      return out;
    }
    if (size == inst.k) {
      int removable = -1;
      for (int v : d.to_vector()) {
        if (private_neighbors(inst.graph, d, v).empty()) {
          removable = v;
          break;
        }
      }
      if (removable == -1) {
        out.kind = ClassifyKind::NoSolution;
        out.target.reset();
        return out;
      }
      out.prefix.push_back({MoveKind::Remove, removable});
      d.remove(removable);
      continue;
    }
    out.kind = ClassifyKind::Proceed;
    out.instance = Instance(inst.graph, inst.k, inst.s, d);
    return out;
  }
}

Instance instance_from_dominating_set_problem(const Graph& g, int s) {
  return Instance(g, g.n(), s, VertexSet::full(g.n()));
}

}  // namespace dsr
