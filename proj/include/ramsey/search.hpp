#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// One colour class of a colouring as single-word rows. Requires N <= 64.
struct HostRows {
  int n = 0;
  std::array<Mask, kWordVertices> row{};

  HostRows() = default;
  HostRows(const TwoColoring& c, Color side);
  explicit HostRows(const Graph& g);

  Mask all() const { return low_bits(n); }
};

/// Complete backtracking search for an injective homomorphism of `pattern` into
/// the host restricted to `allowed`. Pattern vertices are visited component by
/// component (largest first) in BFS order from a maximum-degree root; host
/// candidates are tried in ascending label order.
std::optional<Embedding> find_embedding(const Graph& pattern, const HostRows& host, Mask allowed);

/// Vertex-disjoint cliques of the requested sizes inside `allowed`, returned in
/// the order of `sizes`. Complete.
std::optional<std::vector<std::vector<Vertex>>> find_disjoint_cliques(const HostRows& host,
                                                                     const std::vector<int>& sizes,
                                                                     Mask allowed);

std::optional<Embedding> embed_red_forest(const TwoColoring& c, const ForestSpec& f);
std::optional<Embedding> embed_red_graph(const TwoColoring& c, const Graph& pattern);
/// Embedding of h.graph() into the blue graph.
std::optional<Embedding> find_blue_cliques(const TwoColoring& c, const CliqueUnion& h);

struct Witness {
  Color side = Color::Red;
  /// Red: pattern is the red graph (forest components laid out consecutively).
  /// Blue: pattern is CliqueUnion::graph().
  Embedding embedding;
  std::vector<std::string> trace;
};

/// Ground-truth oracle: red pattern first, then the blue clique union.
std::optional<Witness> search_witness(const TwoColoring& c, const Graph& red_pattern,
                                      const CliqueUnion& h);
std::optional<Witness> search_witness(const TwoColoring& c, const ForestSpec& f,
                                      const CliqueUnion& h);

/// Checks the witness against the pattern of its side.
bool verify_witness(const TwoColoring& c, const Graph& red_pattern, const CliqueUnion& h,
                    const Witness& w);

/// "RED"|"BLUE", then "p -> h" lines, then "# trace:" and annotated lines.
std::string write_witness(const Witness& w);

}  // namespace ramsey
