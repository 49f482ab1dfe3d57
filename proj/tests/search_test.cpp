#include <doctest.h>

#include <functional>
#include <random>

#include "ramsey/constructions.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

/// Reference check: tries every injection of the pattern into the host.
bool brute_force_embeds(const Graph& pattern, const Graph& host) {
  const int p = pattern.order();
  const int n = host.order();
  std::vector<Vertex> image(static_cast<std::size_t>(p));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> place = [&](int k) {
    if (k == p) return verify_embedding(pattern, host, Embedding{image});
    for (Vertex h = 0; h < n; ++h) {
      if (used[static_cast<std::size_t>(h)]) continue;
      used[static_cast<std::size_t>(h)] = 1;
      image[static_cast<std::size_t>(k)] = h;
      if (place(k + 1)) return true;
      used[static_cast<std::size_t>(h)] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace

TEST_CASE("embed_red_forest examples") {
  const auto p3 = parse_forest_spec("P3");
  CHECK(embed_red_forest(TwoColoring::all(4, Color::Red), p3).has_value());
  CHECK_FALSE(embed_red_forest(TwoColoring::all(4, Color::Blue), p3).has_value());
  CHECK_FALSE(embed_red_forest(burr_coloring(3, parse_clique_union("2K2")).coloring, p3).has_value());
}

TEST_CASE("find_blue_cliques examples") {
  CHECK(find_blue_cliques(TwoColoring::all(4, Color::Blue), parse_clique_union("2K2")).has_value());
  CHECK_FALSE(find_blue_cliques(TwoColoring::all(6, Color::Red), parse_clique_union("K2")).has_value());
  const auto c = gj_coloring(parse_forest_spec("P3+P4"), parse_clique_union("K3")).coloring;
  CHECK_FALSE(find_blue_cliques(c, parse_clique_union("K3")).has_value());
}

TEST_CASE("search_witness examples") {
  const auto f = parse_forest_spec("P3");
  const auto h = parse_clique_union("2K2");
  auto w = search_witness(TwoColoring::all(4, Color::Red), f, h);
  REQUIRE(w);
  CHECK(w->side == Color::Red);
  w = search_witness(TwoColoring::all(4, Color::Blue), f, h);
  REQUIRE(w);
  CHECK(w->side == Color::Blue);
  CHECK(verify_witness(TwoColoring::all(4, Color::Blue), f.graph(), h, *w));
  CHECK_FALSE(search_witness(burr_coloring(3, h).coloring, f, h).has_value());
}

TEST_CASE("oracle agrees with brute force on every 5-vertex host") {
  std::vector<Graph> patterns;
  for (const auto& t : nonisomorphic_trees(4)) patterns.push_back(t.graph());
  for (const auto& t : nonisomorphic_trees(5)) patterns.push_back(t.graph());
  patterns.push_back(disjoint_union(path_graph(2), path_graph(3)));
  patterns.push_back(CliqueUnion({3, 2}).graph());
  patterns.push_back(CliqueUnion({2, 2}).graph());
  patterns.push_back(complete_graph(4));
  for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
    const Graph host = TwoColoring::from_bits(5, bits).red();
    const HostRows rows(host);
    for (const auto& p : patterns) {
      const auto e = find_embedding(p, rows, rows.all());
      CHECK(e.has_value() == brute_force_embeds(p, host));
      if (e) CHECK(verify_embedding(p, host, *e));
    }
  }
}

TEST_CASE("disjoint cliques agree with the embedding search") {
  std::mt19937_64 rng(3);
  const std::vector<std::vector<int>> shapes{{3}, {2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 3}};
  for (int trial = 0; trial < 300; ++trial) {
    TwoColoring c(8);
    for (Vertex i = 0; i < 8; ++i)
      for (Vertex j = i + 1; j < 8; ++j)
        if (rng() % 3 == 0) c.set(i, j, Color::Red);
    const HostRows blue(c, Color::Blue);
    for (const auto& sizes : shapes) {
      const auto q = find_disjoint_cliques(blue, sizes, blue.all());
      const auto e = find_embedding(CliqueUnion(sizes).graph(), blue, blue.all());
      CHECK(q.has_value() == e.has_value());
      if (!q) continue;
      Mask used = 0;
      for (std::size_t k = 0; k < sizes.size(); ++k) {
        CHECK(static_cast<int>((*q)[k].size()) == sizes[k]);
        for (Vertex a : (*q)[k]) {
          CHECK_FALSE((used & bit(a)));
          used |= bit(a);
          for (Vertex b : (*q)[k])
            if (a != b) CHECK(c.color(a, b) == Color::Blue);
        }
      }
    }
  }
}

TEST_CASE("allowed mask restricts the host") {
  const HostRows all_red(TwoColoring::all(6, Color::Red), Color::Red);
  const auto e = find_embedding(path_graph(3), all_red, 0b111000);
  REQUIRE(e);
  for (Vertex v : e->image) CHECK(v >= 3);
  CHECK_FALSE(find_embedding(path_graph(4), all_red, 0b111000).has_value());
}

TEST_CASE("write_witness layout") {
  const Witness w{Color::Blue, Embedding{{2, 0}}, {"step one"}};
  CHECK(write_witness(w) == "BLUE\n0 -> 2\n1 -> 0\n# trace:\n# step one\n");
}
