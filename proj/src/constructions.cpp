#include "ramsey/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

BlockColoring block_coloring(std::vector<int> sizes) {
  std::erase_if(sizes, [](int s) { return s <= 0; });
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  int n = 0;
  for (int s : sizes) n += s;
  Graph red(n);
  int base = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) red.add_edge(base + i, base + j);
    base += s;
  }
  return {sizes, TwoColoring::from_red_graph(std::move(red))};
}

BlockColoring burr_coloring(int order, const CliqueUnion& h) {
  const auto [chi, s] = chromatic_data(h);
  if (order < s)
    throw Error(ErrorKind::SurplusExceedsOrder,
                "v(G)=" + std::to_string(order) + " < s(H)=" + std::to_string(s));
  std::vector<int> sizes(static_cast<std::size_t>(chi - 1), order - 1);
  sizes.push_back(s - 1);
  return block_coloring(std::move(sizes));
}

BlockColoring gj_coloring(const ForestSpec& f, const CliqueUnion& h) {
  const auto [chi, s] = chromatic_data(h);
  for (const auto& t : f.components())
    if (t.order() < s)
      throw Error(ErrorKind::SurplusExceedsOrder, "component order below s(H)");
  const int j0 = gj_lower_p(f, h).argmax;
  std::vector<int> sizes(static_cast<std::size_t>(chi - 2), j0 - 1);
  sizes.push_back(f.mass_from(j0) - 1);
  sizes.push_back(s - 1);
  return block_coloring(std::move(sizes));
}

ExtremalReport verify_extremal(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h) {
  ExtremalReport r{c};
  r.red_forest_found = embed_red_forest(c, f).has_value();
  r.blue_target_found = find_blue_cliques(c, h).has_value();
  r.certified = !r.red_forest_found && !r.blue_target_found;
  r.method = Method::Exhaustive;
  return r;
}

std::string describe_blocks(const std::vector<int>& blocks) {
  std::ostringstream out;
  int base = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out << "block " << i << ": red K" << blocks[i] << " on vertices " << base << ".."
        << base + blocks[i] - 1 << '\n';
    base += blocks[i];
  }
  out << "all edges between blocks are blue\n";
  return out.str();
}

}  // namespace ramsey
