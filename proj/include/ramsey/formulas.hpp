#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

/// Disjoint union of complete graphs, sizes kept in descending order.
class CliqueUnion {
 public:
  explicit CliqueUnion(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  std::size_t components() const { return sizes_.size(); }
  int order() const;
  /// The pattern graph: cliques laid out consecutively in sizes() order.
  Graph graph() const;
  std::string to_string() const;

  friend bool operator==(const CliqueUnion&, const CliqueUnion&) = default;

 private:
  std::vector<int> sizes_;
};

/// "K3+K2", "2K4", "K5"; a count prefix repeats a term.
CliqueUnion parse_clique_union(std::string_view spec);

struct ChromaticData {
  int chi;
  int surplus;
};

ChromaticData chromatic_data(const CliqueUnion& h);

/// A forest given by its tree components.
class ForestSpec {
 public:
  explicit ForestSpec(std::vector<Tree> components);

  const std::vector<Tree>& components() const { return components_; }
  /// Component orders present (the set I), ascending.
  std::vector<int> orders() const;
  /// Number of components of order i (k_i).
  int count_of_order(int i) const;
  /// Largest component order, n(F).
  int max_order() const;
  int total_order() const;
  /// Sum of i * k_i over the orders i >= j.
  int mass_from(int j) const;
  /// All components laid out consecutively, in component order.
  Graph graph() const;

 private:
  std::vector<Tree> components_;
};

/// Loads a tree from an edge-list file; used for "tree:<file>" terms.
using TreeLoader = std::function<Tree(const std::string& path)>;

Tree load_tree_file(const std::string& path);

/// Parses a single tree term: "P5", "star:5" (star on 5 vertices), "tree:<file>".
Tree parse_tree_spec(std::string_view term, const TreeLoader& loader = load_tree_file);
/// '+'-joined tree terms; "2P3" repeats a term. Non-tree terms such as "K4" are
/// refused with UnsupportedTarget.
ForestSpec parse_forest_spec(std::string_view spec, const TreeLoader& loader = load_tree_file);

/// (vG-1)(chi-1)+s; throws SurplusExceedsOrder when vG < s.
int burr_lower(int order, const CliqueUnion& h);

struct LowerBound {
  int p;
  int argmax;  // largest maximising order j0
};

/// p = max_{j in I} {(j-1)(chi-2) + sum_{i>=j} i k_i} + s - 1.
LowerBound gj_lower_p(const ForestSpec& f, const CliqueUnion& h);

/// max_{j in I} {value(j) + sum_{i>=j} i k_i - j}, where value(j) bounds R(F_p, H)
/// over the components of order j.
int union_upper(const ForestSpec& f, const std::map<int, int>& component_value);

/// R(F_i, H) - (v(F_i)-1)(chi-1) - s; zero exactly for H-good components.
int beta(int component_value, int order, const CliqueUnion& h);

/// The exact Ramsey number for supported (forest, clique union) pairs:
/// one clique, or two cliques with every component of order >= 3.
int ramsey_value(const ForestSpec& f, const CliqueUnion& h);

/// Goodness value R(T, h) of one tree against a supported target.
int tree_value(int order, const CliqueUnion& h);

/// Throws unless ramsey_value(f, h) is defined.
void check_supported(const ForestSpec& f, const CliqueUnion& h);

}  // namespace ramsey
