#include "ramsey/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

std::vector<std::string_view> split_plus(std::string_view spec) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto end = spec.find('+', start);
    auto term = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.front()))) term.remove_prefix(1);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
    if (term.empty()) throw Error(ErrorKind::Malformed, "empty term in '" + std::string(spec) + "'");
    out.push_back(term);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

/// Splits an optional decimal count prefix off a term.
int take_count(std::string_view& term) {
  std::size_t digits = 0;
  while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
  if (digits == 0) return 1;
  int count = 0;
  std::from_chars(term.data(), term.data() + digits, count);
  term.remove_prefix(digits);
  if (count < 1) throw Error(ErrorKind::Malformed, "count prefix must be >= 1");
  return count;
}

int parse_positive(std::string_view digits, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1)
    throw Error(ErrorKind::Malformed, "bad size in '" + std::string(context) + "'");
  return value;
}

}  // namespace

CliqueUnion::CliqueUnion(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(ErrorKind::InvalidArgument, "clique union needs a component");
  for (int s : sizes_)
    if (s < 2) throw Error(ErrorKind::InvalidArgument, "clique sizes must be >= 2");
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

int CliqueUnion::order() const {
  int total = 0;
  for (int s : sizes_) total += s;
  return total;
}

Graph CliqueUnion::graph() const {
  Graph g(order());
  int base = 0;
  for (int s : sizes_) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) g.add_edge(base + i, base + j);
    base += s;
  }
  return g;
}

std::string CliqueUnion::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size();) {
    std::size_t j = i;
    while (j < sizes_.size() && sizes_[j] == sizes_[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += "K" + std::to_string(sizes_[i]);
    i = j;
  }
  return out;
}

CliqueUnion parse_clique_union(std::string_view spec) {
  std::vector<int> sizes;
  for (auto term : split_plus(spec)) {
    const std::string_view whole = term;
    const int count = take_count(term);
    if (term.size() < 2 || term.front() != 'K')
      throw Error(ErrorKind::Malformed, "expected K<size> in '" + std::string(whole) + "'");
    const int size = parse_positive(term.substr(1), whole);
    for (int k = 0; k < count; ++k) sizes.push_back(size);
  }
  return CliqueUnion(std::move(sizes));
}

ChromaticData chromatic_data(const CliqueUnion& h) {
  const int chi = h.sizes().front();
  const auto s = std::count(h.sizes().begin(), h.sizes().end(), chi);
  return {chi, static_cast<int>(s)};
}

ForestSpec::ForestSpec(std::vector<Tree> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::InvalidArgument, "forest needs a component");
}

std::vector<int> ForestSpec::orders() const {
  std::vector<int> out;
  for (const auto& t : components_) out.push_back(t.order());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ForestSpec::count_of_order(int i) const {
  return static_cast<int>(std::count_if(components_.begin(), components_.end(),
                                        [i](const Tree& t) { return t.order() == i; }));
}

int ForestSpec::max_order() const { return orders().back(); }

int ForestSpec::total_order() const { return mass_from(0); }

int ForestSpec::mass_from(int j) const {
  int total = 0;
  for (const auto& t : components_)
    if (t.order() >= j) total += t.order();
  return total;
}

Graph ForestSpec::graph() const {
  Graph g(total_order());
  int base = 0;
  for (const auto& t : components_) {
    for (auto [u, v] : t.graph().edges()) g.add_edge(base + u, base + v);
    base += t.order();
  }
  return g;
}

Tree load_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open tree file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return Tree(parse_graph(buf.str()));
}

Tree parse_tree_spec(std::string_view term, const TreeLoader& loader) {
  if (term.starts_with("tree:")) return loader(std::string(term.substr(5)));
  if (term.starts_with("star:")) {
    const int n = parse_positive(term.substr(5), term);
    if (n < 2) throw Error(ErrorKind::Malformed, "a star needs at least 2 vertices");
    return star_tree(n);
  }
  if (term.size() >= 2 && term.front() == 'P') return path_tree(parse_positive(term.substr(1), term));
  if (term.size() >= 2 && term.front() == 'K')
    throw Error(ErrorKind::UnsupportedTarget,
                "'" + std::string(term) + "' is not a tree; only forests are supported on the red side");
  throw Error(ErrorKind::Malformed, "unknown tree term '" + std::string(term) + "'");
}

ForestSpec parse_forest_spec(std::string_view spec, const TreeLoader& loader) {
  std::vector<Tree> comps;
  for (auto term : split_plus(spec)) {
    const int count = take_count(term);
    Tree t = parse_tree_spec(term, loader);
    for (int k = 0; k < count; ++k) comps.push_back(t);
  }
  return ForestSpec(std::move(comps));
}

int burr_lower(int order, const CliqueUnion& h) {
  const auto [chi, s] = chromatic_data(h);
  if (order < s)
    throw Error(ErrorKind::SurplusExceedsOrder,
                "v(G)=" + std::to_string(order) + " < s(H)=" + std::to_string(s));
  return (order - 1) * (chi - 1) + s;
}

LowerBound gj_lower_p(const ForestSpec& f, const CliqueUnion& h) {
  const auto [chi, s] = chromatic_data(h);
  LowerBound best{0, 0};
  bool first = true;
  for (int j : f.orders()) {
    const int value = (j - 1) * (chi - 2) + f.mass_from(j);
    if (first || value >= best.p) best = {value, j};
    first = false;
  }
  best.p += s - 1;
  return best;
}

int union_upper(const ForestSpec& f, const std::map<int, int>& component_value) {
  int best = 0;
  bool first = true;
  for (int j : f.orders()) {
    const auto it = component_value.find(j);
    if (it == component_value.end())
      throw Error(ErrorKind::MissingComponentValue, "no value for order " + std::to_string(j));
    const int value = it->second + f.mass_from(j) - j;
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

int beta(int component_value, int order, const CliqueUnion& h) {
  const auto [chi, s] = chromatic_data(h);
  return component_value - (order - 1) * (chi - 1) - s;
}

void check_supported(const ForestSpec& f, const CliqueUnion& h) {
  if (h.components() > 2)
    throw Error(ErrorKind::UnsupportedTarget,
                h.to_string() + ": no closed form for three or more cliques");
  const auto s = chromatic_data(h).surplus;
  for (const auto& t : f.components()) {
    if (h.components() == 2 && t.order() < 3)
      throw Error(ErrorKind::PreconditionViolated,
                  "components of order < 3 are not covered against " + h.to_string());
    if (t.order() < s)
      throw Error(ErrorKind::PreconditionViolated, "component order below s(H)");
  }
}

int tree_value(int order, const CliqueUnion& h) {
  check_supported(ForestSpec({path_tree(order)}), h);
  return burr_lower(order, h);
}

int ramsey_value(const ForestSpec& f, const CliqueUnion& h) {
  check_supported(f, h);
  return gj_lower_p(f, h).p;
}

}  // namespace ramsey
