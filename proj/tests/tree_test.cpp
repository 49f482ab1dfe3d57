#include <doctest.h>

#include <functional>
#include <set>

#include "ramsey/error.hpp"
#include "ramsey/tree.hpp"

using namespace ramsey;

namespace {

Tree tree_of(const char* text) { return Tree(parse_graph(text)); }

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

/// Every labelled tree on n vertices, via Prüfer sequences.
std::vector<Tree> labelled_trees(int n) {
  if (n == 1) return {Tree(Graph(1))};
  if (n == 2) return {path_tree(2)};
  std::vector<Tree> out;
  std::vector<Vertex> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    out.push_back(tree_from_pruefer(seq));
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("Tree validates its graph") {
  CHECK(error_of([] { tree_of("4\n0 1\n2 3"); }) == ErrorKind::Malformed);
  CHECK(error_of([] { tree_of("3\n0 1\n1 2\n0 2"); }) == ErrorKind::Malformed);
  CHECK(tree_of("1\n").order() == 1);
}

TEST_CASE("stretch examples") {
  CHECK(is_isomorphic(stretch(path_tree(3), 0, 2), path_tree(3)));

  const Tree s = stretch(star_tree(4), 1, 3);
  CHECK(s.graph().has_edge(1, 3));
  CHECK(s.graph().has_edge(0, 1));
  CHECK(s.graph().has_edge(0, 2));
  CHECK(is_isomorphic(s, path_tree(4)));

  CHECK(is_isomorphic(stretch(path_tree(4), 0, 3), path_tree(4)));
}

TEST_CASE("stretch preconditions") {
  CHECK(error_of([] { stretch(path_tree(4), 1, 3); }) == ErrorKind::NotALeaf);
  CHECK(error_of([] { stretch(path_tree(4), 0, 2); }) == ErrorKind::NotALeaf);
  CHECK(error_of([] { stretch(path_tree(4), 0, 0); }) == ErrorKind::SameVertex);
  CHECK(error_of([] { stretch(path_tree(2), 0, 1); }) == ErrorKind::TooSmall);
  CHECK(error_of([] { stretch(path_tree(4), 0, 9); }) == ErrorKind::LabelOutOfRange);
}

TEST_CASE("expand examples") {
  const Tree k13 = expand(path_tree(4), 1, 3);
  CHECK(k13.degree(1) == 3);
  CHECK(is_isomorphic(k13, star_tree(4)));

  // Spider: centre 0 with leaves 1, 2 and a path 0-3-4-5.
  const Tree spider = tree_of("6\n0 1\n0 2\n0 3\n3 4\n4 5");
  const Tree grown = expand(spider, 0, 5);
  CHECK(grown.degree(0) == 4);
  CHECK(grown.order() == 6);

  CHECK(error_of([] { expand(path_tree(4), 1, 0); }) == ErrorKind::BNotEligible);
}

TEST_CASE("expand preconditions") {
  CHECK(error_of([] { expand(path_tree(3), 1, 2); }) == ErrorKind::TooSmall);
  // Centre of a star has degree n-1.
  CHECK(error_of([] { expand(star_tree(5), 0, 4); }) == ErrorKind::DegreeOutOfRange);
  // Vertex 2 of P_6 has two non-leaf neighbours.
  CHECK(error_of([] { expand(path_tree(6), 2, 5); }) == ErrorKind::NeighborShapeViolated);
  CHECK(error_of([] { expand(path_tree(5), 1, 3); }) == ErrorKind::BNotEligible);
}

TEST_CASE("plan_to_path") {
  CHECK(plan_to_path(path_tree(6)).empty());
  CHECK(plan_to_path(star_tree(4)).size() == 1);
  const Tree spider = tree_of("5\n0 1\n0 2\n0 3\n3 4");
  CHECK(plan_to_path(spider).size() == 1);

  for (int n = 3; n <= 8; ++n)
    for (const auto& t : nonisomorphic_trees(n)) {
      const Plan p = plan_to_path(t);
      for (const auto& s : p) CHECK(s.kind == OpKind::Stretch);
      const Tree r = apply_plan(t, p);
      CHECK(r.leaves().size() == 2);
    }
}

TEST_CASE("plan_from_path") {
  CHECK(plan_from_path(path_tree(7)).empty());
  const Plan star = plan_from_path(star_tree(4));
  REQUIRE(star.size() == 1);
  CHECK(star[0].kind == OpKind::Expand);
  CHECK(star[0].anchor == 1);

  const Tree double_star = tree_of("6\n0 1\n0 2\n0 3\n1 4\n1 5");
  CHECK(is_isomorphic(apply_plan(path_tree(6), plan_from_path(double_star)), double_star));
}

TEST_CASE("plan_between examples") {
  CHECK(plan_between(path_tree(5), path_tree(5)).empty());
  const Plan p = plan_between(path_tree(4), star_tree(4));
  REQUIRE(p.size() == 1);
  CHECK(p[0].kind == OpKind::Expand);
  const Plan q = plan_between(star_tree(5), path_tree(5));
  CHECK(q.size() == 2);
  for (const auto& s : q) CHECK(s.kind == OpKind::Stretch);
  CHECK(error_of([] { plan_between(path_tree(4), path_tree(5)); }) == ErrorKind::OrderMismatch);
}

TEST_CASE("apply_plan") {
  CHECK(apply_plan(star_tree(5), {}) == star_tree(5));
  CHECK(is_isomorphic(apply_plan(path_tree(4), {{OpKind::Expand, 1, 3}}), star_tree(4)));
  try {
    apply_plan(path_tree(3), {{OpKind::Stretch, 0, 2}, {OpKind::Expand, 1, 2}});
    FAIL("expected InvalidStep");
  } catch (const InvalidStepError& e) {
    CHECK(e.kind() == ErrorKind::InvalidStep);
    CHECK(e.index() == 1);
  }
}

TEST_CASE("plan_between turns every tree into every other, n = 3..8") {
  for (int n = 3; n <= 8; ++n) {
    const auto trees = nonisomorphic_trees(n);
    for (const auto& a : trees)
      for (const auto& b : trees) {
        const Plan p = plan_between(a, b);
        Tree cur = a;
        for (const auto& step : p) {
          if (step.kind == OpKind::Expand) {
            const int d = cur.degree(step.anchor);
            CHECK(d >= 2);
            CHECK(d <= n - 2);
          }
          cur = apply_step(cur, step);
        }
        CHECK(is_isomorphic(cur, b));
      }
  }
}

TEST_CASE("canonical forms") {
  const Tree p4 = tree_of("4\n2 0\n0 3\n3 1");
  CHECK(is_isomorphic(p4, path_tree(4)));
  CHECK_FALSE(is_isomorphic(path_tree(4), star_tree(4)));
  CHECK(canonical_form(p4) == canonical_form(path_tree(4)));
}

TEST_CASE("canonical form buckets match unlabelled tree counts") {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> forms;
    for (const auto& t : labelled_trees(n)) forms.insert(canonical_form(t));
    CHECK(forms.size() == counts[static_cast<std::size_t>(n - 1)]);
    CHECK(nonisomorphic_trees(n).size() == counts[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("tree_isomorphism gives an explicit map") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& a : labelled_trees(n)) {
      for (const auto& b : nonisomorphic_trees(n)) {
        const auto iso = tree_isomorphism(a, b);
        CHECK(iso.has_value() == is_isomorphic(a, b));
        if (iso) CHECK(verify_embedding(a.graph(), b.graph(), Embedding{*iso}));
      }
    }
}

TEST_CASE("longest_path is the least longest path") {
  CHECK(longest_path(path_tree(5)) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(longest_path(star_tree(4)) == std::vector<Vertex>{1, 0, 2});
}

TEST_CASE("plan text round-trips") {
  const Plan p{{OpKind::Stretch, 3, 4}, {OpKind::Expand, 1, 5}};
  CHECK(write_plan(p) == "S 3 4\nE 1 5\n");
  CHECK(parse_plan(write_plan(p)) == p);
  CHECK_THROWS_AS(parse_plan("X 1 2\n"), Error);
}

TEST_CASE("remove_vertices keeps a map to the parent labels") {
  const auto sub = remove_vertices(path_tree(5), {0, 4});
  CHECK(sub.tree.order() == 3);
  CHECK(sub.to_parent == std::vector<Vertex>{1, 2, 3});
  CHECK(is_isomorphic(sub.tree, path_tree(3)));
}
