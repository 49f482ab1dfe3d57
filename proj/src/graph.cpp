#include "ramsey/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ramsey/error.hpp"

namespace ramsey {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::NeighborShapeViolated: return "NeighborShapeViolated";
    case ErrorKind::BNotEligible: return "BNotEligible";
    case ErrorKind::InvalidStep: return "InvalidStep";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::SurplusExceedsOrder: return "SurplusExceedsOrder";
    case ErrorKind::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::MissingComponentValue: return "MissingComponentValue";
    case ErrorKind::BelowThreshold: return "BelowThreshold";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

Mask to_mask(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorKind::LabelOutOfRange,
                "vertex " + std::to_string(v) + " not in [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u));
  const auto w = static_cast<std::size_t>(words_);
  bits_[static_cast<std::size_t>(u) * w + static_cast<std::size_t>(v / 64)] |= bit(v % 64);
  bits_[static_cast<std::size_t>(v) * w + static_cast<std::size_t>(u / 64)] |= bit(u % 64);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  const auto w = static_cast<std::size_t>(words_);
  bits_[static_cast<std::size_t>(u) * w + static_cast<std::size_t>(v / 64)] &= ~bit(v % 64);
  bits_[static_cast<std::size_t>(v) * w + static_cast<std::size_t>(u / 64)] &= ~bit(u % 64);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto w = static_cast<std::size_t>(words_);
  return (bits_[static_cast<std::size_t>(u) * w + static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  const auto w = static_cast<std::size_t>(words_);
  for (std::size_t k = 0; k < w; ++k) d += popcount(bits_[static_cast<std::size_t>(v) * w + k]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  const auto w = static_cast<std::size_t>(words_);
  for (std::size_t k = 0; k < w; ++k)
    for_each_bit(bits_[static_cast<std::size_t>(v) * w + k],
                 [&](Vertex b) { out.push_back(static_cast<Vertex>(k * 64) + b); });
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : bits_) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error(ErrorKind::Malformed,
                "line " + std::to_string(line_no) + ": not an integer '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && tokens(lines[first]).empty()) ++first;
  if (first == lines.size()) throw Error(ErrorKind::Malformed, "missing vertex count");
  const auto head = tokens(lines[first]);
  if (head.size() != 1) throw Error(ErrorKind::Malformed, "first line must hold the vertex count");
  const long n = parse_int(head[0], first + 1);
  if (n < 1) throw Error(ErrorKind::Malformed, "vertex count must be >= 1");
  Graph g(static_cast<int>(n));
  for (std::size_t k = first + 1; k < lines.size(); ++k) {
    const auto toks = tokens(lines[k]);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw Error(ErrorKind::Malformed, "line " + std::to_string(k + 1) + ": expected two labels");
    const long u = parse_int(toks[0], k + 1);
    const long v = parse_int(toks[1], k + 1);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::LabelOutOfRange, "line " + std::to_string(k + 1));
    if (u == v) throw Error(ErrorKind::SelfLoop, "line " + std::to_string(k + 1));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

const char* to_string(Color c) { return c == Color::Red ? "RED" : "BLUE"; }

TwoColoring::TwoColoring(int n) : red_(n) {}

TwoColoring TwoColoring::all(int n, Color c) {
  return c == Color::Red ? TwoColoring::from_red_graph(complete_graph(n)) : TwoColoring(n);
}

TwoColoring TwoColoring::from_bits(int n, std::uint64_t bits) {
  if (pair_count(n) > 64) throw Error(ErrorKind::InvalidArgument, "too many pairs for a 64-bit index");
  TwoColoring c(n);
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if ((bits >> k) & 1U) c.red_.add_edge(i, j);
  return c;
}

TwoColoring TwoColoring::from_red_graph(Graph red) {
  TwoColoring c;
  c.red_ = std::move(red);
  return c;
}

Color TwoColoring::color(Vertex i, Vertex j) const {
  if (i == j || i < 0 || j < 0 || i >= order() || j >= order())
    throw Error(ErrorKind::LabelOutOfRange, "not a pair of K_N");
  return red_.has_edge(i, j) ? Color::Red : Color::Blue;
}

void TwoColoring::set(Vertex i, Vertex j, Color c) {
  if (c == Color::Red)
    red_.add_edge(i, j);
  else
    red_.remove_edge(i, j);
}

Graph color_subgraph(const TwoColoring& c, Color which) {
  if (which == Color::Red) return c.red();
  Graph g(c.order());
  for (Vertex i = 0; i < c.order(); ++i)
    for (Vertex j = i + 1; j < c.order(); ++j)
      if (!c.red().has_edge(i, j)) g.add_edge(i, j);
  return g;
}

std::string write_coloring(const TwoColoring& c) {
  const int n = c.order();
  std::string s = std::to_string(n) + "\n";
  s.reserve(s.size() + pair_count(n) + 1);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) s.push_back(c.red().has_edge(i, j) ? 'R' : 'B');
  s.push_back('\n');
  return s;
}

TwoColoring parse_coloring(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || tokens(lines[0]).size() != 1)
    throw Error(ErrorKind::Malformed, "coloring: first line must hold N");
  const long n = parse_int(tokens(lines[0])[0], 1);
  if (n < 1) throw Error(ErrorKind::Malformed, "coloring: N must be >= 1");
  std::string_view body = lines.size() > 1 ? lines[1] : std::string_view{};
  const auto want = pair_count(static_cast<int>(n));
  if (body.size() != want)
    throw Error(ErrorKind::Malformed, "coloring: expected " + std::to_string(want) +
                                          " colour characters, got " + std::to_string(body.size()));
  for (std::size_t k = 2; k < lines.size(); ++k)
    if (!tokens(lines[k]).empty()) throw Error(ErrorKind::Malformed, "coloring: trailing content");
  TwoColoring c(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k) {
      if (body[k] == 'R')
        c.set(i, j, Color::Red);
      else if (body[k] != 'B')
        throw Error(ErrorKind::Malformed, "coloring: character must be R or B");
    }
  return c;
}

bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (static_cast<int>(e.image.size()) != pattern.order()) return false;
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  for (Vertex h : e.image) {
    if (h < 0 || h >= host.order() || used[static_cast<std::size_t>(h)]) return false;
    used[static_cast<std::size_t>(h)] = 1;
  }
  for (auto [u, v] : pattern.edges())
    if (!host.has_edge(e.image[static_cast<std::size_t>(u)], e.image[static_cast<std::size_t>(v)]))
      return false;
  return true;
}

}  // namespace ramsey
