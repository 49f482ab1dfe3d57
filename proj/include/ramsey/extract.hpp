#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

struct ExtractOptions {
  /// When false the extractors run below their thresholds and may report a
  /// failure point instead of a witness.
  bool enforce_threshold = true;
  bool record_trace = true;
};

/// A sub-problem on which the extraction stopped: neither the red pattern nor
/// the blue cliques exist inside `host` (confirmed by complete search).
struct FailurePoint {
  Mask host = 0;
  Graph red_pattern;
  std::vector<int> blue_sizes;
  std::string where;
};

struct Extraction {
  std::optional<Witness> witness;
  std::optional<FailurePoint> failure;
  std::vector<std::string> trace;
};

/// Red t or blue K_m on N >= (n-1)(m-1)+1 vertices. A vertex of large blue
/// degree hands the problem to its blue neighbourhood with K_{m-1}; otherwise
/// the red minimum degree is at least n-1 and t is placed greedily.
Witness chvatal_extract(const TwoColoring& c, const Tree& t, int m, const ExtractOptions& opt = {});

/// Red P_n or blue 2K_m on N >= (n-1)(m-1)+2 vertices, n >= 3, m >= 2.
Witness path_2km_extract(const TwoColoring& c, int n, int m, const ExtractOptions& opt = {});

/// Red T** (= t_star after the step, in its labels) or blue 2K_m, given the
/// rewriting step and a way to obtain red t_star. N >= (n-1)(m-1)+2.
Witness stretch_step_extract(const TwoColoring& c, const Tree& t_star, const OpStep& step, int m,
                             const ExtractOptions& opt = {});
Witness expand_step_extract(const TwoColoring& c, const Tree& t_star, const OpStep& step, int m,
                            const ExtractOptions& opt = {});

/// Red t or blue 2K_m on N >= (n-1)(m-1)+2 vertices; recursion over m and over
/// plan_from_path(t).
Witness tree_2km_extract(const TwoColoring& c, const Tree& t, int m, const ExtractOptions& opt = {});

/// Red t or blue K_m + K_l, m > l >= 2, on N >= (n-1)(m-1)+1 vertices.
Witness tree_kmkl_extract(const TwoColoring& c, const Tree& t, int m, int l,
                          const ExtractOptions& opt = {});

/// Red forest (components embedded largest first on shrinking residual hosts)
/// or blue h, on N >= ramsey_value(f, h) vertices.
Witness forest_extract(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h,
                       const ExtractOptions& opt = {});

/// Dispatching entry point used by the PROOF engine. With enforce_threshold it
/// throws BelowThreshold under the formula value; without, a failed sub-problem
/// is reported through Extraction::failure.
Extraction proof_extract(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h,
                         const ExtractOptions& opt = {});

}  // namespace ramsey
