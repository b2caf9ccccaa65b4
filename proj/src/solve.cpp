#include "dsr/solve.hpp"

#include <stdexcept>

#include "dsr/kernel.hpp"
#include "dsr/preprocess.hpp"
#include "dsr/vc_fpt.hpp"

namespace dsr {

namespace {

SolveReport run_class(const Instance& inst, const SolveOptions& options) {
  if (options.evidence)
    return {class_solve(inst, *options.evidence), "class"};
  if (is_forest(inst.graph))
    return {class_solve(inst, ClassEvidence{ForestEvidence{}}), "class(forest)"};
  Cotree t = build_cotree(inst.graph);  // throws NotACographError when hopeless
  return {class_solve(inst, ClassEvidence{std::move(t)}), "class(cograph)"};
}

}  // namespace

SolveReport solve(const Instance& inst, const SolveOptions& options) {
  switch (options.strategy) {
    case Strategy::Oracle:
      return {oracle_solve(inst, options.cap), "oracle"};
    case Strategy::FptDs:
      return {fpt_ds_solve(inst, options.cap), "fpt-ds"};
    case Strategy::FptVc:
      return {fpt_vc_solve(inst, options.cap), "fpt-vc"};
    case Strategy::Class:
      return run_class(inst, options);
    case Strategy::Auto:
      break;
  }

  Classification cls = classify(inst);
  if (cls.kind == ClassifyKind::NoSolution) return {Solution{Verdict::No, {}, {}}, "classify"};
  if (cls.kind == ClassifyKind::AlreadySolution)
    return {Solution{Verdict::Yes, cls.target, cls.prefix}, "classify"};

  if (options.evidence) return {class_solve(inst, *options.evidence), "class"};
  if (is_forest(inst.graph))
    return {class_solve(inst, ClassEvidence{ForestEvidence{}}), "class(forest)"};
  if (inst.graph.n() <= options.cap) return {oracle_solve(inst, options.cap), "oracle"};

  int tau = min_vertex_cover(inst.graph).size();
  if (tau < cls.instance->s) return {fpt_vc_solve(inst, options.cap), "fpt-vc"};
  return {fpt_ds_solve(inst, options.cap), "fpt-ds"};
}

}  // namespace dsr
