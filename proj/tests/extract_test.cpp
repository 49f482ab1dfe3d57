#include <doctest.h>

#include "ramsey/campaign.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/error.hpp"
#include "ramsey/extract.hpp"

using namespace ramsey;

namespace {

int threshold_2km(int n, int m) { return (n - 1) * (m - 1) + 2; }

}  // namespace

TEST_CASE("chvatal_extract on monochromatic colorings") {
  for (int n = 2; n <= 6; ++n) {
    const Tree t = path_tree(n);
    const auto w = chvatal_extract(TwoColoring::all(n, Color::Red), t, 2);
    CHECK(w.side == Color::Red);
    CHECK(verify_embedding(t.graph(), complete_graph(n), w.embedding));
    for (int m = 2; m <= 4; ++m) {
      const int big = (n - 1) * (m - 1) + 1;
      const auto b = chvatal_extract(TwoColoring::all(big, Color::Blue), t, m);
      CHECK(b.side == Color::Blue);
      CHECK(b.embedding.image.size() == static_cast<std::size_t>(m));
    }
  }
}

TEST_CASE("chvatal_extract refuses small hosts") {
  CHECK_THROWS_AS(chvatal_extract(TwoColoring(6), path_tree(4), 3), Error);
}

TEST_CASE("chvatal_extract is sound on random colorings") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : nonisomorphic_trees(n))
      for (int m = 2; m <= 4; ++m) {
        const int size = (n - 1) * (m - 1) + 1;
        const CliqueUnion h({m});
        for (std::uint64_t trial = 0; trial < 60; ++trial) {
          const auto c = sample_coloring(size, 21, trial);
          const auto w = chvatal_extract(c, t, m);
          CHECK(verify_witness(c, t.graph(), h, w));
        }
      }
}

TEST_CASE("path_2km_extract") {
  auto w = path_2km_extract(TwoColoring::all(4, Color::Red), 3, 2);
  CHECK(w.side == Color::Red);
  w = path_2km_extract(TwoColoring::all(4, Color::Blue), 3, 2);
  CHECK(w.side == Color::Blue);

  const CliqueUnion h({2, 2});
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const auto c = TwoColoring::from_bits(4, bits);
    CHECK(verify_witness(c, path_graph(3), h, path_2km_extract(c, 3, 2)));
  }
  for (int n = 3; n <= 7; ++n)
    for (int m = 2; m <= 4; ++m) {
      const CliqueUnion hm({m, m});
      for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const auto c = sample_coloring(threshold_2km(n, m), 5, trial);
        CHECK(verify_witness(c, path_graph(n), hm, path_2km_extract(c, n, m)));
      }
    }
}

TEST_CASE("step extractors on monochromatic colorings") {
  const Tree p4 = path_tree(4);
  const OpStep expand_step{OpKind::Expand, 1, 3};
  const Tree k13 = apply_step(p4, expand_step);
  for (int m = 2; m <= 3; ++m) {
    const int size = threshold_2km(4, m);
    auto w = expand_step_extract(TwoColoring::all(size, Color::Red), p4, expand_step, m);
    CHECK(w.side == Color::Red);
    CHECK(verify_embedding(k13.graph(), complete_graph(size), w.embedding));
    w = expand_step_extract(TwoColoring::all(size, Color::Blue), p4, expand_step, m);
    CHECK(w.side == Color::Blue);
  }
  const Tree spider = Tree(parse_graph("5\n0 1\n0 2\n0 3\n3 4"));
  const OpStep stretch_step{OpKind::Stretch, 1, 4};
  auto w = stretch_step_extract(TwoColoring::all(10, Color::Red), spider, stretch_step, 3);
  CHECK(w.side == Color::Red);
  w = stretch_step_extract(TwoColoring::all(10, Color::Blue), spider, stretch_step, 3);
  CHECK(w.side == Color::Blue);
  CHECK_THROWS_AS(stretch_step_extract(TwoColoring::all(10, Color::Red), spider, expand_step, 3), Error);
}

TEST_CASE("step extractors are sound along every construction plan") {
  for (int n = 4; n <= 6; ++n)
    for (const auto& target : nonisomorphic_trees(n)) {
      Tree cur = path_tree(n);
      for (const auto& step : plan_from_path(target)) {
        const Tree next = apply_step(cur, step);
        for (int m = 2; m <= 3; ++m) {
          const CliqueUnion h({m, m});
          for (std::uint64_t trial = 0; trial < 40; ++trial) {
            const auto c = sample_coloring(threshold_2km(n, m), 9, trial);
            const auto w = step.kind == OpKind::Stretch ? stretch_step_extract(c, cur, step, m)
                                                        : expand_step_extract(c, cur, step, m);
            CHECK(verify_witness(c, next.graph(), h, w));
          }
        }
        cur = next;
      }
    }
}

TEST_CASE("tree_2km_extract") {
  const Tree k13 = star_tree(4);
  const CliqueUnion h({2, 2});
  for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
    const auto c = TwoColoring::from_bits(5, bits);
    CHECK(verify_witness(c, k13.graph(), h, tree_2km_extract(c, k13, 2)));
  }
  const auto burr = burr_coloring(4, h).coloring;
  CHECK(burr.order() == 4);
  CHECK_THROWS_AS(tree_2km_extract(burr, k13, 2), Error);
  CHECK_FALSE(search_witness(burr, k13.graph(), h).has_value());
}

TEST_CASE("tree_2km_extract records the proof route") {
  const auto w = tree_2km_extract(TwoColoring::all(8, Color::Blue), star_tree(4), 3);
  CHECK(w.side == Color::Blue);
  CHECK_FALSE(w.trace.empty());
  ExtractOptions quiet;
  quiet.record_trace = false;
  CHECK(tree_2km_extract(TwoColoring::all(8, Color::Blue), star_tree(4), 3, quiet).trace.empty());
}

TEST_CASE("tree_kmkl_extract") {
  const Tree p4 = path_tree(4);
  auto w = tree_kmkl_extract(TwoColoring::all(7, Color::Blue), p4, 3, 2);
  CHECK(w.side == Color::Blue);
  CHECK(w.embedding.image.size() == 5);
  w = tree_kmkl_extract(TwoColoring::all(7, Color::Red), p4, 3, 2);
  CHECK(w.side == Color::Red);
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : nonisomorphic_trees(n))
      for (int m = 3; m <= 4; ++m)
        for (int l = 2; l < m; ++l) {
          const CliqueUnion h({m, l});
          for (std::uint64_t trial = 0; trial < 40; ++trial) {
            const auto c = sample_coloring((n - 1) * (m - 1) + 1, 17, trial);
            CHECK(verify_witness(c, t.graph(), h, tree_kmkl_extract(c, t, m, l)));
          }
        }
  CHECK_THROWS_AS(tree_kmkl_extract(TwoColoring(7), p4, 3, 3), Error);
}

TEST_CASE("forest_extract") {
  const auto f = parse_forest_spec("P3+P4");
  const auto h = parse_clique_union("K3");
  const auto w = forest_extract(TwoColoring::all(9, Color::Red), f, h);
  CHECK(w.side == Color::Red);
  CHECK(verify_witness(TwoColoring::all(9, Color::Red), f.graph(), h, w));

  const auto single = parse_forest_spec("P4");
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const auto c = sample_coloring(7, 2, trial);
    const auto a = forest_extract(c, single, h);
    const auto b = chvatal_extract(c, path_tree(4), 3);
    CHECK(a.side == b.side);
    CHECK(a.embedding == b.embedding);
  }
  for (const char* hs : {"K3", "K3+K2", "2K2"})
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const auto hh = parse_clique_union(hs);
      const auto c = sample_coloring(ramsey_value(f, hh), 4, trial);
      CHECK(verify_witness(c, f.graph(), hh, forest_extract(c, f, hh)));
    }
  CHECK_THROWS_AS(forest_extract(TwoColoring(8), f, h), Error);
}

TEST_CASE("best effort below the threshold reports the failing sub-problem") {
  const auto f = parse_forest_spec("P3");
  const auto h = parse_clique_union("2K2");
  ExtractOptions loose;
  loose.enforce_threshold = false;
  const auto burr = burr_coloring(3, h).coloring;
  const auto ex = proof_extract(burr, f, h, loose);
  CHECK_FALSE(ex.witness.has_value());
  REQUIRE(ex.failure.has_value());
  CHECK(ex.failure->blue_sizes == std::vector<int>{2, 2});
  CHECK_THROWS_AS(proof_extract(burr, f, h), Error);
}
