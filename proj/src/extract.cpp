#include "ramsey/extract.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

/// Outcome of one sub-extraction: a red map of the requested tree (indexed by
/// its labels) or blue vertex-disjoint cliques.
struct Found {
  bool red = true;
  std::vector<Vertex> map;
  std::vector<std::vector<Vertex>> cliques;

  static Found red_map(std::vector<Vertex> m) { return Found{true, std::move(m), {}}; }
  static Found blue(std::vector<std::vector<Vertex>> q) { return Found{false, {}, std::move(q)}; }
};

using Result = std::optional<Found>;

std::string set_string(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

std::vector<Vertex> with_front(Vertex x, const std::vector<Vertex>& rest) {
  std::vector<Vertex> out{x};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Vertex> head(const std::vector<Vertex>& q, int size) {
  return {q.begin(), q.begin() + size};
}

int chvatal_threshold(int n, int m) { return (n - 1) * (m - 1) + 1; }
int two_clique_threshold(int n, int m) { return (n - 1) * (m - 1) + 2; }

class Engine {
 public:
  Engine(const TwoColoring& c, const ExtractOptions& opt)
      : red_(c, Color::Red), blue_(c, Color::Blue), opt_(opt) {}

  Mask all() const { return red_.all(); }
  std::vector<std::string>& trace() { return trace_; }
  std::optional<FailurePoint>& failure() { return failure_; }

  Result chvatal(Mask host, const Tree& t, int m);
  Result path_2km(Mask host, int n, int m);
  Result tree_2km(Mask host, const Tree& t, int m);
  Result stretch_step(Mask host, const Tree& t_star, const OpStep& step, int m,
                      const std::vector<Vertex>& phi);
  Result expand_step(Mask host, const Tree& t_star, const OpStep& step, int m,
                     const std::vector<Vertex>& phi);
  Result tree_kmkl(Mask host, const Tree& t, int m, int l);
  Result single_tree(Mask host, const Tree& t, const CliqueUnion& h);
  Result forest(Mask host, const ForestSpec& f, const CliqueUnion& h);

 private:
  bool tracing() const { return opt_.record_trace; }

  void note(const std::string& line) {
    if (tracing()) trace_.push_back(std::string(static_cast<std::size_t>(depth_) * 2, ' ') + line);
  }

  struct Scope {
    explicit Scope(Engine& e) : e(e) { ++e.depth_; }
    ~Scope() { --e.depth_; }
    Engine& e;
  };

  /// Sub-problems are only entered above their thresholds when the outer call was.
  void require(Mask host, int need, const char* where) {
    if (popcount(host) >= need) return;
    if (opt_.enforce_threshold)
      throw std::logic_error(std::string(where) + ": host of size " + std::to_string(popcount(host)) +
                             " below " + std::to_string(need));
    note(std::string(where) + ": host below threshold, continuing best-effort");
  }

  /// Complete search on a sub-host; the base case and the best-effort fallback.
  Result complete(Mask host, const Graph& red_pattern, const std::vector<int>& sizes,
                  const std::string& where) {
    if (auto e = find_embedding(red_pattern, red_, host)) {
      note(where + ": complete search found the red pattern");
      return Found::red_map(std::move(e->image));
    }
    if (auto q = find_disjoint_cliques(blue_, sizes, host)) {
      note(where + ": complete search found blue cliques");
      return Found::blue(std::move(*q));
    }
    if (opt_.enforce_threshold)
      throw std::logic_error(where + ": no witness on a host at or above the threshold");
    note(where + ": no witness on this host");
    if (!failure_) failure_ = FailurePoint{host, red_pattern, sizes, where};
    return std::nullopt;
  }

  /// First host vertex of `pool` joined to x in red.
  std::optional<Vertex> red_into(Vertex x, Mask pool) const {
    const Mask m = red_.row[static_cast<std::size_t>(x)] & pool;
    if (!m) return std::nullopt;
    return lowest(m);
  }

  Result blue_pair(std::vector<Vertex> first, std::vector<Vertex> second, const std::string& why) {
    note("blue 2K: " + set_string(first) + " + " + set_string(second) + " (" + why + ")");
    return Found::blue({std::move(first), std::move(second)});
  }

  HostRows red_;
  HostRows blue_;
  ExtractOptions opt_;
  std::vector<std::string> trace_;
  std::optional<FailurePoint> failure_;
  int depth_ = 0;
};

Result Engine::chvatal(Mask host, const Tree& t, int m) {
  const int n = t.order();
  require(host, chvatal_threshold(n, m), "chvatal");
  Scope scope(*this);
  if (n == 1 && host) return Found::red_map({lowest(host)});
  if (m == 1 && host) return Found::blue({{lowest(host)}});

  const int bound = (n - 1) * (m - 2) + 1;
  Result result;
  bool attempted = false;
  for_each_bit(host, [&](Vertex v) {
    if (attempted) return;
    const Mask nb = blue_.row[static_cast<std::size_t>(v)] & host;
    if (popcount(nb) < bound) return;
    attempted = true;
    if (tracing())
      note("chvatal n=" + std::to_string(n) + " m=" + std::to_string(m) + ": vertex " +
           std::to_string(v) + " has blue degree " + std::to_string(popcount(nb)) +
           ", recurse on its blue neighbourhood for K_" + std::to_string(m - 1));
    auto sub = chvatal(nb, t, m - 1);
    if (sub && !sub->red) sub->cliques.front().insert(sub->cliques.front().begin(), v);
    result = std::move(sub);
  });

  if (!attempted) {
    // Every blue degree is below the bound, so red degrees are at least n-1.
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (Vertex w : t.neighbors(order[k]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = order[k];
          order.push_back(w);
        }
    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    Mask used = 0;
    bool ok = host != 0;
    if (ok) {
      map[0] = lowest(host);
      used = bit(map[0]);
    }
    for (std::size_t k = 1; ok && k < order.size(); ++k) {
      const Vertex w = order[k];
      const auto x = red_into(map[static_cast<std::size_t>(parent[static_cast<std::size_t>(w)])], host & ~used);
      if (!x) {
        ok = false;
        break;
      }
      map[static_cast<std::size_t>(w)] = *x;
      used |= bit(*x);
    }
    if (ok) {
      note("chvatal n=" + std::to_string(n) + " m=" + std::to_string(m) +
           ": red minimum degree >= n-1, greedy red tree " + set_string(map));
      result = Found::red_map(std::move(map));
    }
  }
  if (result) return result;
  if (opt_.enforce_threshold) throw std::logic_error("chvatal: greedy red embedding failed above the threshold");
  note("chvatal: proof route failed below threshold, falling back to complete search");
  return complete(host, t.graph(), {m}, "chvatal n=" + std::to_string(n) + " m=" + std::to_string(m));
}

Result Engine::path_2km(Mask host, int n, int m) {
  require(host, two_clique_threshold(n, m), "path");
  Scope scope(*this);
  const Tree path = path_tree(n);
  if (m == 2) return complete(host, path.graph(), {2, 2}, "path n=" + std::to_string(n) + " base m=2");

  auto first = chvatal(host, path, m);
  if (!first) return std::nullopt;
  if (first->red) {
    note("path: red P_" + std::to_string(n) + " directly");
    return first;
  }
  const auto k1 = first->cliques.front();
  auto second = chvatal(host & ~to_mask(k1), path_tree(n - 1), m);
  if (!second) return std::nullopt;
  if (!second->red) return blue_pair(k1, second->cliques.front(), "two blue K_m");

  const auto& p = second->map;
  const Vertex v1 = p.front();
  const Vertex v2 = p.back();
  note("path: red P_" + std::to_string(n - 1) + " " + set_string(p) + " with ends " +
       std::to_string(v1) + "," + std::to_string(v2));
  auto rest = path_2km(host & ~to_mask(p), n, m - 1);
  if (!rest) return std::nullopt;
  if (rest->red) return rest;

  const auto& a1 = rest->cliques[0];
  const auto& a2 = rest->cliques[1];
  const Mask a = to_mask(a1) | to_mask(a2);
  note("path: blue 2K_" + std::to_string(m - 1) + " A=" + set_string(a1) + "+" + set_string(a2));
  if (auto x = red_into(v1, a)) {
    note("path: red edge " + std::to_string(v1) + "-" + std::to_string(*x) + " extends the path");
    return Found::red_map(with_front(*x, p));
  }
  if (auto x = red_into(v2, a)) {
    note("path: red edge " + std::to_string(v2) + "-" + std::to_string(*x) + " extends the path");
    auto out = p;
    out.push_back(*x);
    return Found::red_map(std::move(out));
  }
  return blue_pair(with_front(v1, a1), with_front(v2, a2), "path ends see A only in blue");
}

Result Engine::tree_2km(Mask host, const Tree& t, int m) {
  const int n = t.order();
  require(host, two_clique_threshold(n, m), "tree");
  Scope scope(*this);
  if (m == 2) return complete(host, t.graph(), {2, 2}, "tree n=" + std::to_string(n) + " base m=2");

  const Tree start = path_tree(n);
  auto result = path_2km(host, n, m);
  Tree cur = start;
  if (!t.is_path()) {
    const Plan plan = plan_from_path(t);
    for (const auto& step : plan) {
      if (!result || !result->red) break;
      Tree next = apply_step(cur, step);
      result = step.kind == OpKind::Stretch ? stretch_step(host, cur, step, m, result->map)
                                            : expand_step(host, cur, step, m, result->map);
      cur = std::move(next);
    }
  }
  if (result && result->red) {
    const auto iso = tree_isomorphism(t, cur);
    if (!iso) throw std::logic_error("plan did not reproduce the requested tree");
    std::vector<Vertex> map(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      map[static_cast<std::size_t>(v)] = result->map[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(v)])];
    result->map = std::move(map);
  }
  return result;
}

Result Engine::stretch_step(Mask host, const Tree& t_star, const OpStep& step, int m,
                            const std::vector<Vertex>& phi) {
  const Vertex a = step.anchor;
  const Vertex b = step.deleted;
  const Tree t2 = stretch(t_star, a, b);
  const int n = t_star.order();
  Scope scope(*this);
  if (tracing()) note("stretch at leaf " + std::to_string(a) + " deleting " + std::to_string(b));

  if (n == 3 || t_star.is_path()) {
    const auto iso = tree_isomorphism(t2, t_star);
    std::vector<Vertex> map(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      map[static_cast<std::size_t>(v)] = phi[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(v)])];
    note("stretch: the stretched tree has the same shape, reuse the red copy");
    return Found::red_map(std::move(map));
  }

  const Vertex u = t_star.leaf_neighbor(a);
  Vertex c = -1;
  for (Vertex leaf : t_star.leaves())
    if (leaf != a && leaf != b && leaf != u) {
      c = leaf;
      break;
    }
  const Vertex v = t_star.leaf_neighbor(c);
  const auto at = [&](Vertex x) { return phi[static_cast<std::size_t>(x)]; };

  Mask used = 0;
  for (Vertex w = 0; w < n; ++w)
    if (w != b) used |= bit(at(w));
  const Mask rest = host & ~used;
  if (tracing())
    note("stretch: u=" + std::to_string(u) + " c=" + std::to_string(c) + " v=" + std::to_string(v) +
         (u == v ? " (v = u)" : "") + "; red copy minus b uses " + std::to_string(n - 1) +
         " vertices, residual " + std::to_string(popcount(rest)));

  auto sub = tree_2km(rest, t2, m - 1);
  if (!sub) return std::nullopt;
  if (sub->red) {
    note("stretch: residual holds the stretched tree in red");
    return sub;
  }
  const auto& qa = sub->cliques[0];
  const auto& qb = sub->cliques[1];
  const Mask ma = to_mask(qa), mb = to_mask(qb);
  note("stretch: blue 2K_" + std::to_string(m - 1) + " A=" + set_string(qa) + " B=" + set_string(qb));

  if (auto x = red_into(at(a), ma | mb)) {
    note("stretch: red edge from a to " + std::to_string(*x) + " hosts the new leaf");
    auto map = phi;
    map[static_cast<std::size_t>(b)] = *x;
    return Found::red_map(std::move(map));
  }

  const Mask f = (rest & ~ma & ~mb) | bit(at(c));
  const auto small = remove_vertices(t2, {b, c});
  auto inner = chvatal(f, small.tree, m - 1);
  if (!inner) return std::nullopt;

  if (inner->red) {
    // The red copy of T** - {b, c} lives in F; b hangs on a', c on v'.
    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < small.to_parent.size(); ++k)
      map[static_cast<std::size_t>(small.to_parent[k])] = inner->map[k];
    const Vertex v_img = map[static_cast<std::size_t>(v)];
    const Vertex a_img = map[static_cast<std::size_t>(a)];
    note("stretch: case red subtree; removed new leaf " + std::to_string(b) + " and leaf " +
         std::to_string(c));
    const auto xa = red_into(v_img, ma);
    if (!xa) return blue_pair(with_front(v_img, qa), with_front(at(a), qb), "v' sees A only in blue");
    const auto xb = red_into(a_img, mb);
    if (!xb) return blue_pair(with_front(a_img, qb), with_front(at(a), qa), "a' sees B only in blue");
    map[static_cast<std::size_t>(c)] = *xa;
    map[static_cast<std::size_t>(b)] = *xb;
    return Found::red_map(std::move(map));
  }

  const auto& qc = inner->cliques.front();
  note("stretch: case blue K_" + std::to_string(m - 1) + " C=" + set_string(qc));
  const auto xa = red_into(at(u), ma);
  if (!xa) return blue_pair(with_front(at(u), qa), with_front(at(a), qb), "u sees A only in blue");
  const auto xb = red_into(at(v), mb);
  if (!xb) return blue_pair(with_front(at(v), qb), with_front(at(a), qa), "v sees B only in blue");
  const auto xc = red_into(*xa, to_mask(qc));
  if (!xc) return blue_pair(with_front(*xa, qc), with_front(at(a), qb), "x_A sees C only in blue");
  auto map = phi;
  map[static_cast<std::size_t>(a)] = *xa;
  map[static_cast<std::size_t>(b)] = *xc;
  map[static_cast<std::size_t>(c)] = *xb;
  return Found::red_map(std::move(map));
}

Result Engine::expand_step(Mask host, const Tree& t_star, const OpStep& step, int m,
                           const std::vector<Vertex>& phi) {
  const Vertex u = step.anchor;
  const Vertex b = step.deleted;
  const Tree t2 = expand(t_star, u, b);
  const int n = t_star.order();
  const int d = t_star.degree(u);
  Scope scope(*this);

  Vertex z0 = -1;
  std::vector<Vertex> zs;
  for (Vertex z : t_star.neighbors(u)) {
    if (t_star.is_leaf(z))
      zs.push_back(z);
    else
      z0 = z;
  }
  const auto at = [&](Vertex x) { return phi[static_cast<std::size_t>(x)]; };
  if (tracing())
    note("expand at " + std::to_string(u) + " deleting " + std::to_string(b) + ": d=" + std::to_string(d) +
         " z0=" + std::to_string(z0) + " leaves " + set_string(zs));

  Mask used = 0;
  for (Vertex w = 0; w < n; ++w)
    if (w != b) used |= bit(at(w));
  const Mask rest = host & ~used;

  auto sub = tree_2km(rest, t2, m - 1);
  if (!sub) return std::nullopt;
  if (sub->red) {
    note("expand: residual holds the expanded tree in red");
    return sub;
  }
  const auto& qa = sub->cliques[0];
  const auto& qb = sub->cliques[1];
  const Mask ma = to_mask(qa), mb = to_mask(qb);
  note("expand: blue 2K_" + std::to_string(m - 1) + " A=" + set_string(qa) + " B=" + set_string(qb));

  if (auto x = red_into(at(u), ma | mb)) {
    note("expand: red edge from u to " + std::to_string(*x) + " hosts the new leaf");
    auto map = phi;
    map[static_cast<std::size_t>(b)] = *x;
    return Found::red_map(std::move(map));
  }

  // Leaves of u in T**: the new one first, then z_1..z_{d-1}.
  std::vector<Vertex> leaves{b};
  leaves.insert(leaves.end(), zs.begin(), zs.end());
  const auto other = [&](std::size_t pool) { return pool == 0 ? qb : qa; };

  std::vector<std::vector<Vertex>> pools{qa, qb};
  Mask h = (rest & ~ma & ~mb) | bit(at(zs[0]));
  for (int i = 1; i <= d - 1; ++i) {
    std::vector<Vertex> removed(leaves.begin(), leaves.begin() + i + 1);
    const auto small = remove_vertices(t2, removed);
    auto inner = chvatal(h, small.tree, m - 1);
    if (!inner) return std::nullopt;
    if (inner->red) {
      std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
      for (std::size_t k = 0; k < small.to_parent.size(); ++k)
        map[static_cast<std::size_t>(small.to_parent[k])] = inner->map[k];
      const Vertex u_img = map[static_cast<std::size_t>(u)];
      note("expand: stage " + std::to_string(i) + " red subtree without " + std::to_string(i + 1) +
           " leaves of u; u'=" + std::to_string(u_img));
      for (std::size_t k = 0; k < removed.size(); ++k) {
        const auto x = red_into(u_img, to_mask(pools[k]));
        if (!x)
          return blue_pair(with_front(u_img, pools[k]), with_front(at(u), other(k)),
                           "u' sees a pool only in blue");
        map[static_cast<std::size_t>(removed[k])] = *x;
      }
      return Found::red_map(std::move(map));
    }
    const auto& qc = inner->cliques.front();
    note("expand: stage " + std::to_string(i) + " blue K_" + std::to_string(m - 1) + " C_" +
         std::to_string(i) + "=" + set_string(qc));
    pools.push_back(qc);
    if (i < d - 1) h = (h & ~to_mask(qc)) | bit(at(zs[static_cast<std::size_t>(i)]));
  }

  // pools = A, B, C_1..C_{d-1}; C_1 replaces u.
  const auto& c1 = pools[2];
  const auto x1 = red_into(at(z0), to_mask(c1));
  if (!x1) return blue_pair(with_front(at(z0), c1), with_front(at(u), qb), "z0 sees C_1 only in blue");
  std::vector<std::size_t> fan{0, 1};
  for (std::size_t k = 3; k < pools.size(); ++k) fan.push_back(k);
  auto map = phi;
  map[static_cast<std::size_t>(u)] = *x1;
  for (std::size_t k = 0; k < fan.size(); ++k) {
    const auto x = red_into(*x1, to_mask(pools[fan[k]]));
    if (!x)
      return blue_pair(with_front(*x1, pools[fan[k]]), with_front(at(u), other(fan[k])),
                       "x_C1 sees a pool only in blue");
    map[static_cast<std::size_t>(leaves[k])] = *x;
  }
  note("expand: x_C1=" + std::to_string(*x1) + " takes the place of u");
  return Found::red_map(std::move(map));
}

Result Engine::tree_kmkl(Mask host, const Tree& t, int m, int l) {
  const int n = t.order();
  require(host, chvatal_threshold(n, m), "kmkl");
  Scope scope(*this);
  auto first = tree_2km(host, t, m - 1);
  if (!first) return std::nullopt;
  if (first->red) return first;
  const auto& qa = first->cliques[0];
  const auto& qb = first->cliques[1];
  const Mask ma = to_mask(qa), mb = to_mask(qb);
  note("kmkl: blue 2K_" + std::to_string(m - 1) + " A=" + set_string(qa) + " B=" + set_string(qb));

  const auto leaves = t.leaves();
  const Vertex lu = leaves[0], lv = leaves[1];
  const auto small = remove_vertices(t, {lu, lv});
  auto inner = chvatal(host & ~ma & ~mb, small.tree, m);
  if (!inner) return std::nullopt;
  if (!inner->red) {
    note("kmkl: blue K_" + std::to_string(m) + " outside A and B");
    return Found::blue({inner->cliques.front(), head(qa, l)});
  }
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < small.to_parent.size(); ++k)
    map[static_cast<std::size_t>(small.to_parent[k])] = inner->map[k];
  const Vertex u_img = map[static_cast<std::size_t>(t.leaf_neighbor(lu))];
  const Vertex v_img = map[static_cast<std::size_t>(t.leaf_neighbor(lv))];
  note("kmkl: red tree minus leaves " + std::to_string(lu) + "," + std::to_string(lv) + "; u'=" +
       std::to_string(u_img) + " v'=" + std::to_string(v_img) + (u_img == v_img ? " (u' = v')" : ""));
  const auto xa = red_into(u_img, ma);
  if (!xa) {
    note("kmkl: u' sees A only in blue");
    return Found::blue({with_front(u_img, qa), head(qb, l)});
  }
  const auto xb = red_into(v_img, mb);
  if (!xb) {
    note("kmkl: v' sees B only in blue");
    return Found::blue({with_front(v_img, qb), head(qa, l)});
  }
  map[static_cast<std::size_t>(lu)] = *xa;
  map[static_cast<std::size_t>(lv)] = *xb;
  return Found::red_map(std::move(map));
}

Result Engine::single_tree(Mask host, const Tree& t, const CliqueUnion& h) {
  const auto& sizes = h.sizes();
  if (sizes.size() == 1) return chvatal(host, t, sizes[0]);
  if (sizes.size() == 2 && sizes[0] == sizes[1]) return tree_2km(host, t, sizes[0]);
  if (sizes.size() == 2) return tree_kmkl(host, t, sizes[0], sizes[1]);
  throw Error(ErrorKind::UnsupportedTarget, h.to_string());
}

Result Engine::forest(Mask host, const ForestSpec& f, const CliqueUnion& h) {
  const auto& comps = f.components();
  std::vector<std::size_t> idx(comps.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return comps[x].order() > comps[y].order(); });
  std::vector<int> offset(comps.size(), 0);
  for (std::size_t k = 1; k < comps.size(); ++k) offset[k] = offset[k - 1] + comps[k - 1].order();

  std::vector<Vertex> map(static_cast<std::size_t>(f.total_order()), -1);
  Mask used = 0;
  for (std::size_t i : idx) {
    const Mask residual = host & ~used;
    if (tracing())
      note("forest: component " + std::to_string(i) + " (order " + std::to_string(comps[i].order()) +
           ") on residual host of size " + std::to_string(popcount(residual)));
    auto r = single_tree(residual, comps[i], h);
    if (!r) return std::nullopt;
    if (!r->red) return r;
    for (std::size_t v = 0; v < r->map.size(); ++v) {
      map[static_cast<std::size_t>(offset[i]) + v] = r->map[v];
      used |= bit(r->map[v]);
    }
  }
  return Found::red_map(std::move(map));
}

/// Lays blue cliques out in the order of `sizes` (descending), trimming larger ones.
Embedding blue_embedding(std::vector<std::vector<Vertex>> cliques, const std::vector<int>& sizes) {
  std::stable_sort(cliques.begin(), cliques.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  Embedding e;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (k >= cliques.size() || static_cast<int>(cliques[k].size()) < sizes[k])
      throw std::logic_error("blue cliques do not cover the target");
    e.image.insert(e.image.end(), cliques[k].begin(), cliques[k].begin() + sizes[k]);
  }
  return e;
}

Witness to_witness(Found found, const std::vector<int>& sizes, std::vector<std::string> trace) {
  if (found.red) return Witness{Color::Red, Embedding{std::move(found.map)}, std::move(trace)};
  return Witness{Color::Blue, blue_embedding(std::move(found.cliques), sizes), std::move(trace)};
}

void check_top(const TwoColoring& c, int need, const ExtractOptions& opt, const std::string& what) {
  if (c.order() > kWordVertices) throw Error(ErrorKind::InvalidArgument, "extraction needs N <= 64");
  if (opt.enforce_threshold && c.order() < need)
    throw Error(ErrorKind::BelowThreshold,
                what + " needs N >= " + std::to_string(need) + ", got " + std::to_string(c.order()));
}

Witness finish(Engine& e, Result r, const std::vector<int>& sizes) {
  if (!r) {
    throw Error(ErrorKind::BelowThreshold,
                "no witness: " + (e.failure() ? e.failure()->where : std::string("unknown")));
  }
  return to_witness(std::move(*r), sizes, std::move(e.trace()));
}

}  // namespace

Witness chvatal_extract(const TwoColoring& c, const Tree& t, int m, const ExtractOptions& opt) {
  if (m < 1) throw Error(ErrorKind::PreconditionViolated, "m >= 1 required");
  check_top(c, chvatal_threshold(t.order(), m), opt, "chvatal");
  Engine e(c, opt);
  return finish(e, e.chvatal(e.all(), t, m), {m});
}

Witness path_2km_extract(const TwoColoring& c, int n, int m, const ExtractOptions& opt) {
  if (n < 3 || m < 2) throw Error(ErrorKind::PreconditionViolated, "n >= 3 and m >= 2 required");
  check_top(c, two_clique_threshold(n, m), opt, "path");
  Engine e(c, opt);
  return finish(e, e.path_2km(e.all(), n, m), {m, m});
}

namespace {

Witness step_extract(const TwoColoring& c, const Tree& t_star, const OpStep& step, int m,
                     const ExtractOptions& opt, OpKind kind) {
  if (step.kind != kind) throw Error(ErrorKind::InvalidArgument, "step kind mismatch");
  const int n = t_star.order();
  if (n < 3 || m < 2) throw Error(ErrorKind::PreconditionViolated, "n >= 3 and m >= 2 required");
  apply_step(t_star, step);
  check_top(c, two_clique_threshold(n, m), opt, "step");
  Engine e(c, opt);
  if (m == 2) {
    // Base of the induction on m: complete search for T** directly.
    return finish(e, e.tree_2km(e.all(), apply_step(t_star, step), 2), {2, 2});
  }
  auto prior = e.tree_2km(e.all(), t_star, m);
  if (!prior || !prior->red) return finish(e, std::move(prior), {m, m});
  auto r = kind == OpKind::Stretch ? e.stretch_step(e.all(), t_star, step, m, prior->map)
                                   : e.expand_step(e.all(), t_star, step, m, prior->map);
  return finish(e, std::move(r), {m, m});
}

}  // namespace

Witness stretch_step_extract(const TwoColoring& c, const Tree& t_star, const OpStep& step, int m,
                             const ExtractOptions& opt) {
  return step_extract(c, t_star, step, m, opt, OpKind::Stretch);
}

Witness expand_step_extract(const TwoColoring& c, const Tree& t_star, const OpStep& step, int m,
                            const ExtractOptions& opt) {
  return step_extract(c, t_star, step, m, opt, OpKind::Expand);
}

Witness tree_2km_extract(const TwoColoring& c, const Tree& t, int m, const ExtractOptions& opt) {
  if (t.order() < 3 || m < 2) throw Error(ErrorKind::PreconditionViolated, "n >= 3 and m >= 2 required");
  check_top(c, two_clique_threshold(t.order(), m), opt, "tree");
  Engine e(c, opt);
  return finish(e, e.tree_2km(e.all(), t, m), {m, m});
}

Witness tree_kmkl_extract(const TwoColoring& c, const Tree& t, int m, int l, const ExtractOptions& opt) {
  if (t.order() < 3 || !(m > l && l >= 2))
    throw Error(ErrorKind::PreconditionViolated, "n >= 3 and m > l >= 2 required");
  check_top(c, chvatal_threshold(t.order(), m), opt, "kmkl");
  Engine e(c, opt);
  return finish(e, e.tree_kmkl(e.all(), t, m, l), {m, l});
}

Extraction proof_extract(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h,
                         const ExtractOptions& opt) {
  check_supported(f, h);
  check_top(c, ramsey_value(f, h), opt, "forest");
  Engine e(c, opt);
  auto r = e.forest(e.all(), f, h);
  Extraction out;
  out.failure = std::move(e.failure());
  if (r) {
    out.witness = to_witness(std::move(*r), h.sizes(), std::move(e.trace()));
  } else {
    out.trace = std::move(e.trace());
  }
  return out;
}

Witness forest_extract(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h,
                       const ExtractOptions& opt) {
  auto ex = proof_extract(c, f, h, opt);
  if (!ex.witness)
    throw Error(ErrorKind::BelowThreshold,
                "no witness: " + (ex.failure ? ex.failure->where : std::string("unknown")));
  return std::move(*ex.witness);
}

}  // namespace ramsey
