#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = int;
using Mask = std::uint64_t;

/// Largest order handled by the single-word bit-mask fast path.
inline constexpr int kWordVertices = 64;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

inline Vertex lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for every set bit v of m in ascending order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

std::vector<Vertex> to_vertices(Mask m);
Mask to_mask(const std::vector<Vertex>& vs);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency rows are bit sets of ceil(n/64) words each. Orders up to 64 use a
/// single word per row, which the search code reads directly through row();
/// larger orders keep working through the generic accessors.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  bool fits_word() const { return n_ <= kWordVertices; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t edge_count() const;
  /// All edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Single-word adjacency row; requires fits_word().
  Mask row(Vertex v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<Mask> bits_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
/// Disjoint union; vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Subgraph induced on `keep` (ascending), relabeled 0..k-1 in that order.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

/// Parses the edge-list document: first line n >= 1, then one "u v" pair per line.
Graph parse_graph(std::string_view text);
/// Canonical edge-list serialization (edges ascending, trailing newline).
std::string write_graph(const Graph& g);

enum class Color : std::uint8_t { Red, Blue };

const char* to_string(Color c);

/// Position of the unordered pair {i, j} in the flat pair order of K_n.
constexpr std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  const auto ii = static_cast<std::size_t>(i);
  return ii * static_cast<std::size_t>(n) - ii * (ii + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

constexpr std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
}

/// Red/blue colouring of the edges of K_N.
class TwoColoring {
 public:
  /// All-blue colouring of K_n.
  explicit TwoColoring(int n = 0);

  static TwoColoring all(int n, Color c);
  /// Bit k of `bits` colours pair k; 1 means red. Requires pair_count(n) <= 64.
  static TwoColoring from_bits(int n, std::uint64_t bits);
  /// Colours every edge of `red` red and the rest blue.
  static TwoColoring from_red_graph(Graph red);

  int order() const { return red_.order(); }
  Color color(Vertex i, Vertex j) const;
  void set(Vertex i, Vertex j, Color c);

  const Graph& red() const { return red_; }

  /// Colour-class row restricted to 0..N-1; requires N <= 64.
  Mask row(Color c, Vertex v) const {
    const Mask r = red_.row(v);
    return c == Color::Red ? r : (~r & low_bits(order()) & ~bit(v));
  }

  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

 private:
  Graph red_;
};

/// Spanning subgraph of K_N whose edges carry colour `which`.
Graph color_subgraph(const TwoColoring& c, Color which);

/// Coloring file: line 1 "N", line 2 C(N,2) characters over {R,B} in pair order.
std::string write_coloring(const TwoColoring& c);
TwoColoring parse_coloring(std::string_view text);

/// Injective map from pattern vertices to host vertices.
struct Embedding {
  std::vector<Vertex> image;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff `e` is total and injective on the pattern and maps every pattern edge
/// onto a host edge.
bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

}  // namespace ramsey
