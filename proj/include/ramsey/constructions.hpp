#pragma once

#include <string>
#include <vector>

#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Colouring whose vertex set is split into consecutive blocks: red inside a
/// block, blue between blocks.
struct BlockColoring {
  std::vector<int> blocks;  // descending sizes; empty blocks are dropped
  TwoColoring coloring;
};

BlockColoring block_coloring(std::vector<int> sizes);

/// chi-1 blocks of size vG-1 and one of size s-1 on (vG-1)(chi-1)+s-1 vertices.
BlockColoring burr_coloring(int order, const CliqueUnion& h);

/// chi-2 blocks of size j0-1, one of size sum_{i>=j0} i k_i - 1 and one of size s-1,
/// p-1 vertices in total.
BlockColoring gj_coloring(const ForestSpec& f, const CliqueUnion& h);

enum class Method { Exhaustive, Search };

struct ExtremalReport {
  TwoColoring coloring;
  bool red_forest_found = false;
  bool blue_target_found = false;
  bool certified = false;
  Method method = Method::Exhaustive;
};

/// Runs the complete embedding searches on `c`; certified iff neither side exists.
ExtremalReport verify_extremal(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h);

std::string describe_blocks(const std::vector<int>& blocks);

}  // namespace ramsey
