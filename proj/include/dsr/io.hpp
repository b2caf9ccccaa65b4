#ifndef DSR_IO_HPP
#define DSR_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dsr/class_solvers.hpp"
#include "dsr/oracle.hpp"
#include "dsr/tar.hpp"

namespace dsr {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance file, 1-indexed vertices, LF line endings, `#` comment lines:
//   p dsr <n> <m> <k> <s>
//   e <u> <v>          (m lines)
//   d <v1> <v2> ...    (one line; may list no vertices)
// The `p vcr` header marks a vertex-cover reconfiguration instance.
enum class ProblemKind { Dsr, Vcr };

struct ParsedInstance {
  ProblemKind kind = ProblemKind::Dsr;
  Graph graph;
  int k = 0;
  int s = 0;
  VertexSet start;

  Instance to_instance() const;        // requires kind == Dsr
  VcrInstance to_vcr_instance() const; // requires kind == Vcr
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_file(const std::string& path);
void write_instance(std::ostream& out, ProblemKind kind, const Graph& g, int k, int s,
                    const VertexSet& start);
std::string instance_to_string(ProblemKind kind, const Graph& g, int k, int s,
                               const VertexSet& start);

// Sequence file: one move per line, `+ <v>` or `- <v>`, 1-indexed.
TarSequence parse_sequence(std::istream& in);
TarSequence parse_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const TarSequence& seq);
std::string sequence_to_string(const TarSequence& seq);

// Interval model file: one line per vertex, `<id> <left> <right>`, 1-indexed
// ids forming exactly 1..n.
IntervalModel parse_interval_model(std::istream& in);
IntervalModel parse_interval_model_file(const std::string& path);
void write_interval_model(std::ostream& out, const IntervalModel& m);
std::string interval_model_to_string(const IntervalModel& m);

}  // namespace dsr

#endif  // DSR_IO_HPP
