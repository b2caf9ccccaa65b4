#ifndef DSR_TAR_HPP
#define DSR_TAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

enum class MoveKind { Add, Remove };

struct Move {
  MoveKind kind;
  int vertex;
  bool operator==(const Move&) const = default;
};

// Ordered list of single-vertex moves; a reconfiguration witness.
using TarSequence = std::vector<Move>;

// An instance (G, k, s, D): find a dominating set of size <= s reachable
// from D while every intermediate set stays dominating with size <= k.
struct Instance {
  Graph graph;
  int k = 0;
  int s = 0;
  VertexSet start;

  Instance(Graph g, int k, int s, VertexSet start);
};

enum class Verdict { Yes, No };

struct Solution {
  Verdict verdict = Verdict::No;
  std::optional<VertexSet> target;
  std::optional<TarSequence> witness;
};

// Applies one move; adding a present vertex or removing an absent one throws.
VertexSet apply_move(const VertexSet& s, Move m);

enum class SequenceError { None, IllegalMove, SizeExceeded, NotDominating };

struct ValidationResult {
  bool ok = false;
  SequenceError error = SequenceError::None;
  int step = -1;   // index of the offending move; -1 refers to the start state
  int vertex = -1; // vertex of the offending move, when applicable
  VertexSet final_set;
  std::string message;
};

// Replays seq from start and checks that every state (including start and the
// final set) is a dominating set of size <= k and that each move is legal.
ValidationResult validate_sequence(const Graph& g, int k, const VertexSet& start,
                                   const TarSequence& seq);

// The reverse walk: order flipped, adds and removes swapped.
TarSequence reversed(const TarSequence& seq);

}  // namespace dsr

#endif  // DSR_TAR_HPP
