#include "ramsey/search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "ramsey/error.hpp"

namespace ramsey {

HostRows::HostRows(const TwoColoring& c, Color side) : n(c.order()) {
  if (n > kWordVertices) throw Error(ErrorKind::InvalidArgument, "search needs N <= 64");
  for (Vertex v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = c.row(side, v);
}

HostRows::HostRows(const Graph& g) : n(g.order()) {
  if (n > kWordVertices) throw Error(ErrorKind::InvalidArgument, "search needs N <= 64");
  for (Vertex v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = g.row(v);
}

namespace {

/// Pattern vertex order plus, for each position, the earlier positions adjacent to it.
struct SearchOrder {
  std::vector<Vertex> vertex;
  std::vector<std::vector<int>> back;
  std::vector<int> degree;
};

SearchOrder make_order(const Graph& pattern) {
  const int p = pattern.order();
  std::vector<int> comp(static_cast<std::size_t>(p), -1);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < p; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comps.emplace_back();
    std::deque<Vertex> queue{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(comps.size()) - 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      comps.back().push_back(v);
      for (Vertex w : pattern.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
          queue.push_back(w);
        }
    }
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  SearchOrder order;
  std::vector<int> position(static_cast<std::size_t>(p), -1);
  for (const auto& members : comps) {
    Vertex root = members.front();
    for (Vertex v : members)
      if (pattern.degree(v) > pattern.degree(root) ||
          (pattern.degree(v) == pattern.degree(root) && v < root))
        root = v;
    std::deque<Vertex> queue{root};
    position[static_cast<std::size_t>(root)] = static_cast<int>(order.vertex.size());
    order.vertex.push_back(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : pattern.neighbors(v))
        if (position[static_cast<std::size_t>(w)] < 0) {
          position[static_cast<std::size_t>(w)] = static_cast<int>(order.vertex.size());
          order.vertex.push_back(w);
          queue.push_back(w);
        }
    }
  }
  for (std::size_t k = 0; k < order.vertex.size(); ++k) {
    const Vertex v = order.vertex[k];
    std::vector<int> back;
    for (Vertex w : pattern.neighbors(v))
      if (position[static_cast<std::size_t>(w)] < static_cast<int>(k))
        back.push_back(position[static_cast<std::size_t>(w)]);
    order.back.push_back(std::move(back));
    order.degree.push_back(pattern.degree(v));
  }
  return order;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SearchOrder& order, const HostRows& host, Mask allowed)
      : order_(order), host_(host), allowed_(allowed), image_(order.vertex.size(), -1) {
    const std::size_t p = order.vertex.size();
    degree_ok_.resize(p, 0);
    for (std::size_t k = 0; k < p; ++k)
      for_each_bit(allowed, [&](Vertex h) {
        if (popcount(host.row[static_cast<std::size_t>(h)] & allowed) >= order.degree[k])
          degree_ok_[k] |= bit(h);
      });
  }

  bool run() { return extend(0, 0); }

  const std::vector<Vertex>& image() const { return image_; }

 private:
  bool extend(std::size_t k, Mask used) {
    if (k == order_.vertex.size()) return true;
    Mask cand = allowed_ & ~used & degree_ok_[k];
    for (int b : order_.back[k]) cand &= host_.row[static_cast<std::size_t>(image_[static_cast<std::size_t>(b)])];
    while (cand) {
      const Vertex h = lowest(cand);
      cand &= cand - 1;
      image_[k] = h;
      if (extend(k + 1, used | bit(h))) return true;
    }
    image_[k] = -1;
    return false;
  }

  const SearchOrder& order_;
  const HostRows& host_;
  Mask allowed_;
  std::vector<Mask> degree_ok_;
  std::vector<Vertex> image_;
};

class CliqueSearch {
 public:
  CliqueSearch(const HostRows& host, const std::vector<int>& sizes, Mask allowed)
      : host_(host), sizes_(sizes), allowed_(allowed), cliques_(sizes.size()) {
    suffix_.assign(sizes.size() + 1, 0);
    for (std::size_t k = sizes.size(); k-- > 0;) suffix_[k] = suffix_[k + 1] + sizes[k];
  }

  bool run() { return place(0, 0); }

  std::vector<std::vector<Vertex>> result() const { return cliques_; }

 private:
  bool place(std::size_t k, Mask used) {
    if (k == sizes_.size()) return true;
    const Mask avail = allowed_ & ~used;
    if (popcount(avail) < suffix_[k]) return false;
    const int size = sizes_[k];
    Mask first = avail;
    if (k > 0 && sizes_[k] == sizes_[k - 1]) first &= ~low_bits(cliques_[k - 1].front() + 1);
    Mask starts = 0;
    for_each_bit(first, [&](Vertex v) {
      if (popcount(host_.row[static_cast<std::size_t>(v)] & avail) >= size - 1) starts |= bit(v);
    });
    cliques_[k].clear();
    while (starts) {
      const Vertex v = lowest(starts);
      starts &= starts - 1;
      cliques_[k].assign(1, v);
      if (grow(k, used, bit(v), avail & host_.row[static_cast<std::size_t>(v)] & ~low_bits(v + 1)))
        return true;
    }
    cliques_[k].clear();
    return false;
  }

  bool grow(std::size_t k, Mask used, Mask clique, Mask cand) {
    const int size = sizes_[k];
    if (static_cast<int>(cliques_[k].size()) == size) return place(k + 1, used | clique);
    if (static_cast<int>(cliques_[k].size()) + popcount(cand) < size) return false;
    while (cand) {
      const Vertex v = lowest(cand);
      cand &= cand - 1;
      cliques_[k].push_back(v);
      if (grow(k, used, clique | bit(v), cand & host_.row[static_cast<std::size_t>(v)])) return true;
      cliques_[k].pop_back();
    }
    return false;
  }

  const HostRows& host_;
  const std::vector<int>& sizes_;
  Mask allowed_;
  std::vector<int> suffix_;
  std::vector<std::vector<Vertex>> cliques_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Graph& pattern, const HostRows& host, Mask allowed) {
  allowed &= host.all();
  if (pattern.order() > popcount(allowed)) return std::nullopt;
  const auto order = make_order(pattern);
  EmbeddingSearch search(order, host, allowed);
  if (!search.run()) return std::nullopt;
  Embedding e{std::vector<Vertex>(static_cast<std::size_t>(pattern.order()), -1)};
  for (std::size_t k = 0; k < order.vertex.size(); ++k)
    e.image[static_cast<std::size_t>(order.vertex[k])] = search.image()[k];
  return e;
}

std::optional<std::vector<std::vector<Vertex>>> find_disjoint_cliques(const HostRows& host,
                                                                     const std::vector<int>& sizes,
                                                                     Mask allowed) {
  std::vector<int> sorted = sizes;
  std::vector<std::size_t> idx(sizes.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  for (std::size_t k = 0; k < idx.size(); ++k) sorted[k] = sizes[idx[k]];
  CliqueSearch search(host, sorted, allowed & host.all());
  if (!search.run()) return std::nullopt;
  auto found = search.result();
  std::vector<std::vector<Vertex>> out(sizes.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = std::move(found[k]);
  return out;
}

std::optional<Embedding> embed_red_graph(const TwoColoring& c, const Graph& pattern) {
  const HostRows red(c, Color::Red);
  return find_embedding(pattern, red, red.all());
}

std::optional<Embedding> embed_red_forest(const TwoColoring& c, const ForestSpec& f) {
  return embed_red_graph(c, f.graph());
}

std::optional<Embedding> find_blue_cliques(const TwoColoring& c, const CliqueUnion& h) {
  const HostRows blue(c, Color::Blue);
  auto cliques = find_disjoint_cliques(blue, h.sizes(), blue.all());
  if (!cliques) return std::nullopt;
  Embedding e;
  for (const auto& q : *cliques) e.image.insert(e.image.end(), q.begin(), q.end());
  return e;
}

std::optional<Witness> search_witness(const TwoColoring& c, const Graph& red_pattern,
                                      const CliqueUnion& h) {
  if (auto e = embed_red_graph(c, red_pattern))
    return Witness{Color::Red, std::move(*e), {"oracle: red embedding by backtracking"}};
  if (auto e = find_blue_cliques(c, h))
    return Witness{Color::Blue, std::move(*e), {"oracle: blue cliques by branch and bound"}};
  return std::nullopt;
}

std::optional<Witness> search_witness(const TwoColoring& c, const ForestSpec& f,
                                      const CliqueUnion& h) {
  return search_witness(c, f.graph(), h);
}

bool verify_witness(const TwoColoring& c, const Graph& red_pattern, const CliqueUnion& h,
                    const Witness& w) {
  if (w.side == Color::Red) return verify_embedding(red_pattern, c.red(), w.embedding);
  return verify_embedding(h.graph(), color_subgraph(c, Color::Blue), w.embedding);
}

std::string write_witness(const Witness& w) {
  std::ostringstream out;
  out << to_string(w.side) << '\n';
  for (std::size_t p = 0; p < w.embedding.image.size(); ++p)
    out << p << " -> " << w.embedding.image[p] << '\n';
  out << "# trace:\n";
  for (const auto& line : w.trace) out << "# " << line << '\n';
  return out.str();
}

}  // namespace ramsey
