#include "dsr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace dsr {

namespace {

// Non-comment, non-blank lines in order, with line numbers for diagnostics.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_vertex(int line, const std::string& tok, int n) {
  int v;
  try {
    size_t pos;
    v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
  } catch (...) {
    parse_fail(line, "expected a vertex id, got '" + tok + "'");
  }
  if (v < 1 || v > n) parse_fail(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file: " + path);
  return f;
}

}  // namespace

Instance ParsedInstance::to_instance() const {
  if (kind != ProblemKind::Dsr)
    throw ParseError("expected a dominating-set instance (p dsr), got p vcr");
  try {
    return Instance(graph, k, s, start);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

VcrInstance ParsedInstance::to_vcr_instance() const {
  if (kind != ProblemKind::Vcr)
    throw ParseError("expected a vertex-cover instance (p vcr), got p dsr");
  try {
    return VcrInstance(graph, k, s, start);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ParsedInstance parse_instance(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty instance file");

  ParsedInstance out;
  size_t idx = 0;
  {
    auto [no, line] = lines[idx++];
    std::istringstream ss(line);
    std::string p, kind;
    int n, m;
    if (!(ss >> p >> kind >> n >> m >> out.k >> out.s) || p != "p")
      parse_fail(no, "expected header 'p dsr|vcr <n> <m> <k> <s>'");
    std::string rest;
    if (ss >> rest) parse_fail(no, "trailing tokens after header");
    if (kind == "dsr")
      out.kind = ProblemKind::Dsr;
    else if (kind == "vcr")
      out.kind = ProblemKind::Vcr;
    else
      parse_fail(no, "unknown problem kind '" + kind + "'");
    if (n < 0 || m < 0 || out.k < 0 || out.s < 0) parse_fail(no, "negative header field");
    out.graph = Graph(n);
    out.start = VertexSet(n);
    for (int i = 0; i < m; ++i) {
      if (idx >= lines.size()) throw ParseError("unexpected end of file: expected an edge line");
      auto [eno, eline] = lines[idx++];
      std::istringstream es(eline);
      std::string tag, us, vs;
      if (!(es >> tag >> us >> vs) || tag != "e") parse_fail(eno, "expected 'e <u> <v>'");
      if (es >> rest) parse_fail(eno, "trailing tokens after edge");
      int u = parse_vertex(eno, us, n);
      int v = parse_vertex(eno, vs, n);
      if (u == v) parse_fail(eno, "self-loop");
      out.graph.add_edge(u, v);
    }
  }
  if (idx >= lines.size()) throw ParseError("unexpected end of file: expected the 'd' line");
  {
    auto [no, line] = lines[idx++];
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag != "d") parse_fail(no, "expected 'd <v1> <v2> ...'");
    std::string tok;
    while (ss >> tok) out.start.add(parse_vertex(no, tok, out.graph.n()));
  }
  if (idx < lines.size()) parse_fail(lines[idx].first, "unexpected content after the 'd' line");
  return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
  auto f = open_file(path);
  return parse_instance(f);
}

void write_instance(std::ostream& out, ProblemKind kind, const Graph& g, int k, int s,
                    const VertexSet& start) {
  out << "p " << (kind == ProblemKind::Dsr ? "dsr" : "vcr") << ' ' << g.n() << ' '
      << g.edge_count() << ' ' << k << ' ' << s << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  out << 'd';
  for (int v : start.to_vector()) out << ' ' << v + 1;
  out << '\n';
}

std::string instance_to_string(ProblemKind kind, const Graph& g, int k, int s,
                               const VertexSet& start) {
  std::ostringstream ss;
  write_instance(ss, kind, g, k, s, start);
  return ss.str();
}

TarSequence parse_sequence(std::istream& in) {
  TarSequence seq;
  for (auto [no, line] : content_lines(in)) {
    std::istringstream ss(line);
    std::string op, tok, rest;
    if (!(ss >> op >> tok) || (op != "+" && op != "-"))
      parse_fail(no, "expected '+ <v>' or '- <v>'");
    if (ss >> rest) parse_fail(no, "trailing tokens after move");
    int v;
    try {
      size_t pos;
      v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument("");
    } catch (...) {
      parse_fail(no, "expected a positive vertex id, got '" + tok + "'");
    }
    seq.push_back({op == "+" ? MoveKind::Add : MoveKind::Remove, v - 1});
  }
  return seq;
}

TarSequence parse_sequence_file(const std::string& path) {
  auto f = open_file(path);
  return parse_sequence(f);
}

void write_sequence(std::ostream& out, const TarSequence& seq) {
  for (const Move& m : seq)
    out << (m.kind == MoveKind::Add ? '+' : '-') << ' ' << m.vertex + 1 << '\n';
}

std::string sequence_to_string(const TarSequence& seq) {
  std::ostringstream ss;
  write_sequence(ss, seq);
  return ss.str();
}

IntervalModel parse_interval_model(std::istream& in) {
  auto lines = content_lines(in);
  int n = static_cast<int>(lines.size());
  IntervalModel m;
  m.intervals.assign(n, {0, 0});
  std::vector<char> seen(n, 0);
  for (auto [no, line] : lines) {
    std::istringstream ss(line);
    long long id, left, right;
    std::string rest;
    if (!(ss >> id >> left >> right)) parse_fail(no, "expected '<id> <left> <right>'");
    if (ss >> rest) parse_fail(no, "trailing tokens after interval");
    if (id < 1 || id > n)
      parse_fail(no, "interval id out of range 1.." + std::to_string(n));
    if (seen[id - 1]) parse_fail(no, "duplicate interval id " + std::to_string(id));
    if (left > right) parse_fail(no, "left endpoint after right endpoint");
    seen[id - 1] = 1;
    m.intervals[id - 1] = {left, right};
  }
  return m;
}

IntervalModel parse_interval_model_file(const std::string& path) {
  auto f = open_file(path);
  return parse_interval_model(f);
}

void write_interval_model(std::ostream& out, const IntervalModel& m) {
  for (size_t i = 0; i < m.intervals.size(); ++i)
    out << i + 1 << ' ' << m.intervals[i].first << ' ' << m.intervals[i].second << '\n';
}

std::string interval_model_to_string(const IntervalModel& m) {
  std::ostringstream ss;
  write_interval_model(ss, m);
  return ss.str();
}

}  // namespace dsr
