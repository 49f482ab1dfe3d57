#include "ramsey/tree.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

bool connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  return count == g.order();
}

/// BFS distances and parents from `root`.
struct BfsTree {
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> order;
};

BfsTree bfs(const Tree& t, Vertex root) {
  const auto n = static_cast<std::size_t>(t.order());
  BfsTree out{std::vector<int>(n, -1), std::vector<Vertex>(n, -1), {}};
  out.order.reserve(n);
  out.dist[static_cast<std::size_t>(root)] = 0;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    out.order.push_back(v);
    for (Vertex w : t.neighbors(v))
      if (out.dist[static_cast<std::size_t>(w)] < 0) {
        out.dist[static_cast<std::size_t>(w)] = out.dist[static_cast<std::size_t>(v)] + 1;
        out.parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  return out;
}

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct RootedCodes {
  std::vector<std::string> code;
  std::vector<std::vector<Vertex>> children;
};

/// AHU encoding of every subtree when t is rooted at `root`.
RootedCodes rooted_codes(const Tree& t, Vertex root) {
  const auto b = bfs(t, root);
  const auto n = static_cast<std::size_t>(t.order());
  RootedCodes rc{std::vector<std::string>(n), std::vector<std::vector<Vertex>>(n)};
  for (auto it = b.order.rbegin(); it != b.order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = rc.children[static_cast<std::size_t>(v)];
    for (Vertex w : t.neighbors(v))
      if (w != b.parent[static_cast<std::size_t>(v)]) kids.push_back(w);
    std::sort(kids.begin(), kids.end(), [&](Vertex x, Vertex y) {
      const auto& cx = rc.code[static_cast<std::size_t>(x)];
      const auto& cy = rc.code[static_cast<std::size_t>(y)];
      return cx != cy ? cx < cy : x < y;
    });
    std::string s = "(";
    for (Vertex w : kids) s += rc.code[static_cast<std::size_t>(w)];
    s += ")";
    rc.code[static_cast<std::size_t>(v)] = std::move(s);
  }
  return rc;
}

struct RootChoice {
  Vertex root;
  RootedCodes codes;
};

RootChoice canonical_root(const Tree& t) {
  std::optional<RootChoice> best;
  for (Vertex c : centers(t)) {
    auto rc = rooted_codes(t, c);
    if (!best || rc.code[static_cast<std::size_t>(c)] <
                     best->codes.code[static_cast<std::size_t>(best->root)])
      best = RootChoice{c, std::move(rc)};
  }
  return std::move(*best);
}

}  // namespace

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (g_.order() < 1) throw Error(ErrorKind::Malformed, "tree needs at least one vertex");
  if (g_.edge_count() != static_cast<std::size_t>(g_.order() - 1) || !connected(g_))
    throw Error(ErrorKind::Malformed, "graph is not a tree");
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

Vertex Tree::leaf_neighbor(Vertex leaf) const { return g_.neighbors(leaf).front(); }

bool Tree::is_path() const {
  for (Vertex v = 0; v < order(); ++v)
    if (degree(v) > 2) return false;
  return true;
}

Tree path_tree(int n) { return Tree(path_graph(n)); }

Tree star_tree(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return Tree(std::move(g));
}

Tree tree_from_pruefer(const std::vector<Vertex>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (Vertex s : seq) {
    if (s < 0 || s >= n) throw Error(ErrorKind::LabelOutOfRange, "Prüfer label out of range");
    ++deg[static_cast<std::size_t>(s)];
  }
  Graph g(n);
  for (Vertex s : seq) {
    Vertex leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    g.add_edge(leaf, s);
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(s)];
  }
  Vertex u = -1;
  for (Vertex v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        g.add_edge(u, v);
        break;
      }
    }
  return Tree(std::move(g));
}

SubTree remove_vertices(const Tree& t, const std::vector<Vertex>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(t.order()), 0);
  for (Vertex r : removed) gone[static_cast<std::size_t>(r)] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < t.order(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return SubTree{Tree(induced_subgraph(t.graph(), keep)), keep};
}

Tree stretch(const Tree& t, Vertex a, Vertex b) {
  const int n = t.order();
  if (n < 3) throw Error(ErrorKind::TooSmall, "stretching needs n >= 3");
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::LabelOutOfRange, "stretch vertex");
  if (a == b) throw Error(ErrorKind::SameVertex, "stretch needs a != b");
  if (!t.is_leaf(a)) throw Error(ErrorKind::NotALeaf, "a=" + std::to_string(a));
  if (!t.is_leaf(b)) throw Error(ErrorKind::NotALeaf, "b=" + std::to_string(b));
  Graph g = t.graph();
  g.remove_edge(b, t.leaf_neighbor(b));
  g.add_edge(a, b);
  return Tree(std::move(g));
}

Tree expand(const Tree& t, Vertex u, Vertex b) {
  const int n = t.order();
  if (n < 4) throw Error(ErrorKind::TooSmall, "expanding needs n >= 4");
  if (u < 0 || b < 0 || u >= n || b >= n) throw Error(ErrorKind::LabelOutOfRange, "expand vertex");
  const int d = t.degree(u);
  if (d < 2 || d > n - 2)
    throw Error(ErrorKind::DegreeOutOfRange, "deg(" + std::to_string(u) + ")=" + std::to_string(d));
  int non_leaves = 0;
  for (Vertex z : t.neighbors(u))
    if (!t.is_leaf(z)) ++non_leaves;
  if (non_leaves != 1)
    throw Error(ErrorKind::NeighborShapeViolated,
                std::to_string(non_leaves) + " non-leaf neighbours of " + std::to_string(u));
  if (b == u || t.graph().has_edge(u, b) || !t.is_leaf(b))
    throw Error(ErrorKind::BNotEligible, "b=" + std::to_string(b));
  Graph g = t.graph();
  g.remove_edge(b, t.leaf_neighbor(b));
  g.add_edge(u, b);
  return Tree(std::move(g));
}

Tree apply_step(const Tree& t, const OpStep& step) {
  return step.kind == OpKind::Stretch ? stretch(t, step.anchor, step.deleted)
                                      : expand(t, step.anchor, step.deleted);
}

Tree apply_plan(const Tree& t, const Plan& p) {
  Tree cur = t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    try {
      cur = apply_step(cur, p[i]);
    } catch (const Error& e) {
      throw InvalidStepError(i, e.kind(), e.what());
    }
  }
  return cur;
}

std::vector<Vertex> longest_path(const Tree& t) {
  // Double BFS fixes the diameter; the scan over every start vertex picks the
  // lexicographically least sequence among the paths attaining it.
  const auto far0 = bfs(t, 0);
  const Vertex x = static_cast<Vertex>(
      std::max_element(far0.dist.begin(), far0.dist.end()) - far0.dist.begin());
  const auto farx = bfs(t, x);
  const int diameter = *std::max_element(farx.dist.begin(), farx.dist.end());

  std::vector<Vertex> best;
  for (Vertex s = 0; s < t.order(); ++s) {
    if (!best.empty() && s > best.front()) break;
    if (t.degree(s) > 1 && t.order() > 1) continue;
    const auto from = bfs(t, s);
    for (Vertex e = 0; e < t.order(); ++e) {
      if (from.dist[static_cast<std::size_t>(e)] != diameter) continue;
      std::vector<Vertex> seq;
      for (Vertex v = e; v >= 0; v = from.parent[static_cast<std::size_t>(v)]) seq.push_back(v);
      std::reverse(seq.begin(), seq.end());
      if (best.empty() || seq < best) best = std::move(seq);
    }
  }
  return best;
}

Plan plan_to_path(const Tree& t) {
  const int n = t.order();
  if (n < 3 || t.is_path()) return {};
  const auto path = longest_path(t);

  // Attach every off-path vertex to the path vertex its branch hangs from.
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < path.size(); ++k) pos[static_cast<std::size_t>(path[k])] = static_cast<int>(k);
  std::vector<int> branch_of(static_cast<std::size_t>(n), -1);
  {
    std::deque<Vertex> queue(path.begin(), path.end());
    for (Vertex p : path) branch_of[static_cast<std::size_t>(p)] = pos[static_cast<std::size_t>(p)];
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : t.neighbors(v))
        if (branch_of[static_cast<std::size_t>(w)] < 0) {
          branch_of[static_cast<std::size_t>(w)] = branch_of[static_cast<std::size_t>(v)];
          queue.push_back(w);
        }
    }
  }
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v)
    if (pos[static_cast<std::size_t>(v)] < 0) groups[branch_of[static_cast<std::size_t>(v)]].push_back(v);

  Plan plan;
  Tree cur = t;
  Vertex end = path.front();
  for (auto& [k, group] : groups) {
    while (!group.empty()) {
      auto it = std::max_element(group.begin(), group.end(), [&](Vertex x, Vertex y) {
        const bool lx = cur.is_leaf(x), ly = cur.is_leaf(y);
        return lx != ly ? !lx : x < y;
      });
      const Vertex leaf = *it;
      plan.push_back({OpKind::Stretch, end, leaf});
      cur = stretch(cur, end, leaf);
      group.erase(it);
      end = leaf;
    }
  }
  return plan;
}

Plan plan_from_path(const Tree& target) {
  const int n = target.order();
  if (n < 3 || target.is_path()) return {};
  const auto path = longest_path(target);
  const int len = static_cast<int>(path.size());

  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  for (Vertex p : path) on_path[static_cast<std::size_t>(p)] = 1;
  std::vector<int> branch_pos;
  for (int k = 0; k < len; ++k)
    if (target.degree(path[static_cast<std::size_t>(k)]) > 2) branch_pos.push_back(k);

  // Children of every vertex when the off-path branches hang from the path.
  std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(n));
  {
    std::vector<char> seen = on_path;
    std::deque<Vertex> queue(path.begin(), path.end());
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : target.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          kids[static_cast<std::size_t>(v)].push_back(w);
          queue.push_back(w);
        }
    }
  }

  // Canonical path layout: label 0 is the path vertex just past the first branch
  // vertex, label 1 the branch vertex itself, then back along the path to the
  // far end, and the remaining labels form a reservoir of leaves consumed from
  // the top.
  const int first = branch_pos.front();
  std::vector<Vertex> label(static_cast<std::size_t>(n), -1);
  label[static_cast<std::size_t>(path[static_cast<std::size_t>(first + 1)])] = 0;
  for (int k = first, next = 1; k >= 0; --k, ++next)
    label[static_cast<std::size_t>(path[static_cast<std::size_t>(k)])] = next;
  Vertex reservoir_top = n - 1;

  Plan plan;
  auto take = [&]() { return reservoir_top--; };
  auto lbl = [&](Vertex v) { return label[static_cast<std::size_t>(v)]; };

  for (std::size_t i = 0; i < branch_pos.size(); ++i) {
    const Vertex u = path[static_cast<std::size_t>(branch_pos[i])];
    // Distance-one layer by expanding at u.
    std::vector<Vertex> layer = kids[static_cast<std::size_t>(u)];
    for (Vertex y : layer) {
      const Vertex b = take();
      plan.push_back({OpKind::Expand, lbl(u), b});
      label[static_cast<std::size_t>(y)] = b;
    }
    // Deeper layers: one stretch per non-leaf layer vertex, then expansions.
    while (!layer.empty()) {
      for (Vertex y : layer) {
        const auto& ch = kids[static_cast<std::size_t>(y)];
        if (ch.empty()) continue;
        const Vertex b = take();
        plan.push_back({OpKind::Stretch, lbl(y), b});
        label[static_cast<std::size_t>(ch.front())] = b;
      }
      for (Vertex y : layer) {
        const auto& ch = kids[static_cast<std::size_t>(y)];
        for (std::size_t c = 1; c < ch.size(); ++c) {
          const Vertex b = take();
          plan.push_back({OpKind::Expand, lbl(y), b});
          label[static_cast<std::size_t>(ch[c])] = b;
        }
      }
      std::vector<Vertex> next;
      for (Vertex y : layer)
        for (Vertex c : kids[static_cast<std::size_t>(y)]) next.push_back(c);
      layer = std::move(next);
    }
    // Advance along the path to just past the next branch vertex (or to the end).
    const int stop = i + 1 < branch_pos.size() ? branch_pos[i + 1] + 1 : len - 1;
    for (int k = branch_pos[i] + 2; k <= stop; ++k) {
      const Vertex b = take();
      plan.push_back({OpKind::Stretch, lbl(path[static_cast<std::size_t>(k - 1)]), b});
      label[static_cast<std::size_t>(path[static_cast<std::size_t>(k)])] = b;
    }
  }
  return plan;
}

Plan plan_between(const Tree& src, const Tree& dst) {
  if (src.order() != dst.order())
    throw Error(ErrorKind::OrderMismatch,
                std::to_string(src.order()) + " vs " + std::to_string(dst.order()));
  if (src.order() < 3) return {};
  Plan plan = plan_to_path(src);
  const Tree as_path = apply_plan(src, plan);
  const auto seq = longest_path(as_path);
  for (OpStep step : plan_from_path(dst)) {
    step.anchor = seq[static_cast<std::size_t>(step.anchor)];
    step.deleted = seq[static_cast<std::size_t>(step.deleted)];
    plan.push_back(step);
  }
  return plan;
}

std::string canonical_form(const Tree& t) {
  const auto rc = canonical_root(t);
  return rc.codes.code[static_cast<std::size_t>(rc.root)];
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<Vertex>> tree_isomorphism(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto ra = canonical_root(a);
  const auto rb = canonical_root(b);
  if (ra.codes.code[static_cast<std::size_t>(ra.root)] != rb.codes.code[static_cast<std::size_t>(rb.root)])
    return std::nullopt;
  // Children are sorted by code, so equal codes pair up position by position.
  std::vector<Vertex> image(static_cast<std::size_t>(a.order()), -1);
  std::vector<std::pair<Vertex, Vertex>> stack{{ra.root, rb.root}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    image[static_cast<std::size_t>(x)] = y;
    const auto& kx = ra.codes.children[static_cast<std::size_t>(x)];
    const auto& ky = rb.codes.children[static_cast<std::size_t>(y)];
    for (std::size_t i = 0; i < kx.size(); ++i) stack.emplace_back(kx[i], ky[i]);
  }
  return image;
}

std::vector<Tree> nonisomorphic_trees(int n) {
  if (n < 1) return {};
  if (n == 1) return {Tree(Graph(1))};
  if (n == 2) return {path_tree(2)};
  std::vector<Tree> reps;
  std::unordered_set<std::string> seen;
  std::vector<Vertex> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Tree t = tree_from_pruefer(seq);
    if (seen.insert(canonical_form(t)).second) reps.push_back(std::move(t));
    std::size_t k = seq.size();
    while (k > 0 && seq[k - 1] == n - 1) seq[--k] = 0;
    if (k == 0) break;
    ++seq[k - 1];
  }
  return reps;
}

std::string write_plan(const Plan& p) {
  std::ostringstream out;
  for (const auto& s : p)
    out << (s.kind == OpKind::Stretch ? 'S' : 'E') << ' ' << s.anchor << ' ' << s.deleted << '\n';
  return out.str();
}

Plan parse_plan(std::string_view text) {
  Plan plan;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || (kind != "S" && kind != "E"))
      throw Error(ErrorKind::Malformed, "plan line " + std::to_string(line_no));
    plan.push_back({kind == "S" ? OpKind::Stretch : OpKind::Expand, static_cast<Vertex>(a),
                    static_cast<Vertex>(b)});
  }
  return plan;
}

}  // namespace ramsey
