#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Connected acyclic graph on vertices 0..n-1, n >= 1.
class Tree {
 public:
  /// Validates connectivity and the n-1 edge count; throws Error(Malformed).
  explicit Tree(Graph g);

  int order() const { return g_.order(); }
  const Graph& graph() const { return g_; }

  int degree(Vertex v) const { return g_.degree(v); }
  bool is_leaf(Vertex v) const { return g_.degree(v) == 1; }
  std::vector<Vertex> neighbors(Vertex v) const { return g_.neighbors(v); }
  std::vector<Vertex> leaves() const;
  /// Only meaningful for leaves.
  Vertex leaf_neighbor(Vertex leaf) const;
  bool is_path() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph g_;
};

Tree path_tree(int n);
/// K_{1,n-1} centred at 0.
Tree star_tree(int n);
/// Decodes a Prüfer sequence over labels 0..n-1 (length n-2) into a tree on n vertices.
Tree tree_from_pruefer(const std::vector<Vertex>& seq);

/// A subtree relabeled compactly, with the map back to the parent tree's labels.
struct SubTree {
  Tree tree;
  std::vector<Vertex> to_parent;
};

/// The subtree induced on all vertices except `removed`; it must stay connected.
SubTree remove_vertices(const Tree& t, const std::vector<Vertex>& removed);

enum class OpKind { Stretch, Expand };

/// One rewriting step. The new vertex reuses the label of the deleted leaf.
struct OpStep {
  OpKind kind = OpKind::Stretch;
  Vertex anchor = 0;   // leaf a for a stretch, vertex u for an expand
  Vertex deleted = 0;  // leaf b

  friend bool operator==(const OpStep&, const OpStep&) = default;
};

using Plan = std::vector<OpStep>;

/// Deletes leaf b and hangs a new vertex (labelled b) on the leaf a.
Tree stretch(const Tree& t, Vertex a, Vertex b);
/// Deletes leaf b outside N[u] and hangs a new vertex (labelled b) on u, where u has
/// degree 2..n-2 and exactly one non-leaf neighbour.
Tree expand(const Tree& t, Vertex u, Vertex b);
Tree apply_step(const Tree& t, const OpStep& step);
/// Throws InvalidStepError carrying the index of the first failing step.
Tree apply_plan(const Tree& t, const Plan& p);

/// Lexicographically least vertex sequence among all longest paths.
std::vector<Vertex> longest_path(const Tree& t);

/// Stretch-only plan turning t into a path.
Plan plan_to_path(const Tree& t);
/// Plan that turns the canonical path 0-1-...-(n-1) into a tree isomorphic to target.
Plan plan_from_path(const Tree& target);
/// plan_to_path(src) followed by plan_from_path(dst) relabelled onto the resulting path.
Plan plan_between(const Tree& src, const Tree& dst);

/// Isomorphism-invariant encoding, rooted at the centre(s).
std::string canonical_form(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);
/// An explicit isomorphism a -> b (image[v] is the vertex of b matched to v of a).
std::optional<std::vector<Vertex>> tree_isomorphism(const Tree& a, const Tree& b);

/// One representative per isomorphism class of trees on n vertices, in order of
/// first appearance among Prüfer sequences.
std::vector<Tree> nonisomorphic_trees(int n);

/// Plan text: one step per line, "S a b" or "E u b".
std::string write_plan(const Plan& p);
Plan parse_plan(std::string_view text);

}  // namespace ramsey
