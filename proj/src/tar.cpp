#include "dsr/tar.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsr {

Instance::Instance(Graph g, int k_in, int s_in, VertexSet start_in)
    : graph(std::move(g)), k(k_in), s(s_in), start(std::move(start_in)) {
  if (k < 0 || s < 0) throw std::invalid_argument("instance: k and s must be nonnegative");
  if (start.universe() != graph.n())
    throw std::invalid_argument("instance: start set universe does not match graph");
  if (!is_dominating(graph, start))
    throw std::invalid_argument("instance: start set is not dominating");
  if (start.size() > k) throw std::invalid_argument("instance: |start| exceeds k");
}

VertexSet apply_move(const VertexSet& s, Move m) {
  VertexSet out = s;
  if (m.kind == MoveKind::Add) {
    if (s.contains(m.vertex))
      throw std::invalid_argument("apply_move: adding vertex already present");
    out.add(m.vertex);
  } else {
    if (!s.contains(m.vertex)) throw std::invalid_argument("apply_move: removing absent vertex");
    out.remove(m.vertex);
  }
  return out;
}

namespace {
ValidationResult fail(SequenceError err, int step, int vertex, std::string msg) {
  ValidationResult r;
  r.ok = false;
  r.error = err;
  r.step = step;
  r.vertex = vertex;
  r.message = std::move(msg);
  return r;
}
}  // namespace

ValidationResult validate_sequence(const Graph& g, int k, const VertexSet& start,
                                   const TarSequence& seq) {
  if (start.universe() != g.n())
    return fail(SequenceError::IllegalMove, -1, -1, "start set universe does not match graph");
  if (start.size() > k)
    return fail(SequenceError::SizeExceeded, -1, -1, "start set larger than k");
  if (!is_dominating(g, start))
    return fail(SequenceError::NotDominating, -1, -1, "start set is not dominating");

  VertexSet cur = start;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    const Move& m = seq[i];
    if (m.vertex < 0 || m.vertex >= g.n())
      return fail(SequenceError::IllegalMove, i, m.vertex, "vertex outside graph");
    if (m.kind == MoveKind::Add && cur.contains(m.vertex))
      return fail(SequenceError::IllegalMove, i, m.vertex, "adding vertex already present");
    if (m.kind == MoveKind::Remove && !cur.contains(m.vertex))
      return fail(SequenceError::IllegalMove, i, m.vertex, "removing absent vertex");
    cur = apply_move(cur, m);
    if (cur.size() > k)
      return fail(SequenceError::SizeExceeded, i, m.vertex, "set size exceeds k");
    if (!is_dominating(g, cur))
      return fail(SequenceError::NotDominating, i, m.vertex, "set is not dominating");
  }

  ValidationResult r;
  r.ok = true;
  r.error = SequenceError::None;
  r.step = -1;
  r.final_set = cur;
  return r;
}

TarSequence reversed(const TarSequence& seq) {
  TarSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    out.push_back({it->kind == MoveKind::Add ? MoveKind::Remove : MoveKind::Add, it->vertex});
  return out;
}

}  // namespace dsr
