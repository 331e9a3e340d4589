#include "acs/decomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "acs/error.hpp"

namespace acs {

std::size_t PathDecomposition::path_count() const {
  std::size_t c = 0;
  for (const auto& l : layers) c += l.paths.size();
  return c;
}

namespace {

bool is_tree(const FiniteGraph& t) {
  if (t.vertex_count() == 0) return false;
  return t.edge_count() + 1 == static_cast<std::size_t>(t.vertex_count()) && is_forest(t);
}

// BFS scratch space that only resets the vertices it touched.
class Bfs {
 public:
  explicit Bfs(int vertex_count)
      : dist_(static_cast<std::size_t>(vertex_count), -1), parent_(static_cast<std::size_t>(vertex_count), -1) {}

  // Runs from `sources` over vertices accepted by `allowed`.
  template <class Allowed>
  void run(const FiniteGraph& g, const std::vector<Vertex>& sources, Allowed allowed) {
    clear();
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
      if (dist_[idx(s)] >= 0) continue;
      dist_[idx(s)] = 0;
      touched_.push_back(s);
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (dist_[idx(w)] >= 0 || !allowed(w)) continue;
        dist_[idx(w)] = dist_[idx(v)] + 1;
        parent_[idx(w)] = v;
        touched_.push_back(w);
        queue.push_back(w);
      }
    }
  }

  int dist(Vertex v) const { return dist_[idx(v)]; }
  Vertex parent(Vertex v) const { return parent_[idx(v)]; }
  const std::vector<Vertex>& touched() const { return touched_; }

  // Path from v back to its BFS source.
  Path trace(Vertex v) const {
    Path p{v};
    while (parent_[idx(v)] >= 0) {
      v = parent_[idx(v)];
      p.push_back(v);
    }
    return p;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  void clear() {
    for (Vertex v : touched_) {
      dist_[idx(v)] = -1;
      parent_[idx(v)] = -1;
    }
    touched_.clear();
  }
  std::vector<int> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> touched_;
};

struct ClosePair {
  int d = 0;
  Vertex a = 0;
  Vertex b = 0;
};

// Least distance between two distinct sources, via multi-source BFS.
template <class Allowed>
std::optional<ClosePair> closest_pair(const FiniteGraph& g, const std::vector<Vertex>& sources, Allowed allowed) {
  if (sources.size() < 2) return std::nullopt;
  const std::size_t vc = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> dist(vc, -1);
  std::vector<Vertex> src(vc, -1);
  std::vector<Vertex> order;
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist[static_cast<std::size_t>(s)] = 0;
    src[static_cast<std::size_t>(s)] = s;
    queue.push_back(s);
    order.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] >= 0 || !allowed(w)) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      src[static_cast<std::size_t>(w)] = src[static_cast<std::size_t>(v)];
      queue.push_back(w);
      order.push_back(w);
    }
  }
  std::optional<ClosePair> best;
  for (Vertex v : order) {
    for (Vertex w : g.neighbors(v)) {
      const auto vi = static_cast<std::size_t>(v);
      const auto wi = static_cast<std::size_t>(w);
      if (dist[wi] < 0 || src[vi] == src[wi]) continue;
      const int d = dist[vi] + dist[wi] + 1;
      if (!best || d < best->d) best = ClosePair{d, std::min(src[vi], src[wi]), std::max(src[vi], src[wi])};
    }
  }
  return best;
}

std::vector<Vertex> leaves_of(const FiniteGraph& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

auto everywhere = [](Vertex) { return true; };

}  // namespace

bool check_spindly_cert(const FiniteGraph& t, const SpindlyCert& cert) {
  if (!is_tree(t) || cert.n < 1) return false;
  const auto leaves = leaves_of(t);
  const auto l = cert.distinguished_leaf;
  if (l && (*l < 0 || *l >= t.vertex_count() || t.degree(*l) != 1)) return false;
  std::vector<Vertex> plain;
  for (Vertex v : leaves) {
    if (!t.is_boundary(v) && v != l) plain.push_back(v);
  }
  const auto cp = closest_pair(t, plain, everywhere);
  if (cp && cp->d <= 2 * cert.n) return false;
  if (l && !t.is_boundary(*l)) {
    const auto dist = bfs_distances(t, *l);
    for (Vertex v : plain) {
      if (dist[static_cast<std::size_t>(v)] < cert.n) return false;
    }
  }
  return true;
}

std::optional<SpindlyCert> is_n_spindly(const FiniteGraph& t, int n) {
  if (!is_tree(t)) throw PreconditionError("is_n_spindly expects a tree");
  if (n < 1) throw PreconditionError("spindly parameter n must be >= 1");
  std::vector<Vertex> plain;
  for (Vertex v : leaves_of(t)) {
    if (!t.is_boundary(v)) plain.push_back(v);
  }
  const auto cp = closest_pair(t, plain, everywhere);
  if (!cp || cp->d > 2 * n) return SpindlyCert{std::nullopt, n};
  // A distinguished leaf must belong to every violating pair.
  for (Vertex l : {cp->a, cp->b}) {
    SpindlyCert cert{l, n};
    if (check_spindly_cert(t, cert)) return cert;
  }
  return std::nullopt;
}

namespace {

// Scratch state for nearest-target searches, sized once per tree.
class NearestTargets {
 public:
  explicit NearestTargets(int vertex_count)
      : count_(static_cast<std::size_t>(vertex_count), 0),
        label_(2 * static_cast<std::size_t>(vertex_count), -1),
        dist_(2 * static_cast<std::size_t>(vertex_count), -1),
        target_(static_cast<std::size_t>(vertex_count), false) {}

  // For every reachable vertex, the two nearest distinct targets.
  template <class Allowed>
  void run(const FiniteGraph& t, const std::vector<Vertex>& targets, Allowed allowed) {
    clear();
    struct Item {
      Vertex v;
      Vertex label;
      int dist;
    };
    std::deque<Item> queue;
    for (Vertex x : targets) {
      target_[idx(x)] = true;
      marked_.push_back(x);
      if (offer(x, x, 0)) queue.push_back({x, x, 0});
    }
    while (!queue.empty()) {
      const Item it = queue.front();
      queue.pop_front();
      for (Vertex w : t.neighbors(it.v)) {
        if (!allowed(w)) continue;
        if (offer(w, it.label, it.dist + 1)) queue.push_back({w, it.label, it.dist + 1});
      }
    }
  }

  bool is_target(Vertex v) const { return target_[idx(v)]; }

  // Distance from v to the nearest target other than v, or -1.
  int nearest_other(Vertex v) const {
    for (std::size_t k = 0; k < count_[idx(v)]; ++k) {
      if (label_[2 * idx(v) + k] != v) return dist_[2 * idx(v) + k];
    }
    return -1;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  bool offer(Vertex v, Vertex label, int d) {
    auto& c = count_[idx(v)];
    if (c == 2 || (c == 1 && label_[2 * idx(v)] == label)) return false;
    if (c == 0) touched_.push_back(v);
    label_[2 * idx(v) + c] = label;
    dist_[2 * idx(v) + c] = d;
    ++c;
    return true;
  }

  void clear() {
    for (Vertex v : touched_) count_[idx(v)] = 0;
    for (Vertex v : marked_) target_[idx(v)] = false;
    touched_.clear();
    marked_.clear();
  }

  std::vector<std::size_t> count_;
  std::vector<Vertex> label_;
  std::vector<int> dist_;
  std::vector<bool> target_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> marked_;
};

// Lex-least least-length path from some source to some target (source
// first). Sources and targets are sorted; a vertex never pairs with itself.
template <class Allowed>
std::optional<Path> lex_least_short_path(const FiniteGraph& t, Bfs& bfs, NearestTargets& near,
                                         const std::vector<Vertex>& sources, const std::vector<Vertex>& targets,
                                         Allowed allowed) {
  near.run(t, targets, allowed);
  int best = -1;
  Vertex first = -1;
  for (Vertex s : sources) {
    const int d = near.nearest_other(s);
    if (d >= 0 && (best < 0 || d < best)) {
      best = d;
      first = s;
    }
  }
  if (best < 0) return std::nullopt;
  // Sources are ascending, so `first` is the least source achieving `best`.
  bfs.run(t, {first}, allowed);
  std::optional<Path> pick;
  for (Vertex v : bfs.touched()) {
    if (v == first || !near.is_target(v) || bfs.dist(v) != best) continue;
    Path p = bfs.trace(v);
    std::reverse(p.begin(), p.end());
    if (!pick || p < *pick) pick = std::move(p);
  }
  return pick;
}

}  // namespace

std::vector<Path> spindly_paths(const FiniteGraph& t, const SpindlyCert& cert) {
  if (!check_spindly_cert(t, cert)) throw PreconditionError("invalid spindly certificate");
  std::vector<Path> out;
  if (t.edge_count() == 0) return out;
  const int vc = t.vertex_count();
  Bfs bfs(vc);
  NearestTargets near(vc);
  std::vector<int> member(static_cast<std::size_t>(vc), -1);
  std::vector<bool> on_path(static_cast<std::size_t>(vc), false);

  // A subproblem is the attachment vertex z together with the side of c in
  // t minus z; z is its distinguished leaf. z < 0 denotes the whole tree.
  struct Sub {
    Vertex z = -1;
    Vertex c = -1;
  };
  std::vector<Sub> stack{{-1, -1}};
  int stamp = 0;
  while (!stack.empty()) {
    const Sub sub = stack.back();
    stack.pop_back();
    ++stamp;
    std::vector<Vertex> mem;
    std::optional<Vertex> l;
    if (sub.z < 0) {
      mem.resize(static_cast<std::size_t>(vc));
      std::iota(mem.begin(), mem.end(), 0);
      l = cert.distinguished_leaf;
    } else {
      bfs.run(t, {sub.c}, [&](Vertex w) { return w != sub.z; });
      mem = bfs.touched();
      mem.push_back(sub.z);
      std::sort(mem.begin(), mem.end());
      l = sub.z;
    }
    for (Vertex v : mem) member[static_cast<std::size_t>(v)] = stamp;
    auto inside = [&](Vertex w) { return member[static_cast<std::size_t>(w)] == stamp; };

    std::vector<Vertex> leaves;
    std::vector<Vertex> plain;
    for (Vertex v : mem) {
      int deg = 0;
      for (Vertex w : t.neighbors(v)) deg += inside(w) ? 1 : 0;
      if (deg != 1) continue;
      leaves.push_back(v);
      if (!t.is_boundary(v) && v != l) plain.push_back(v);
    }

    std::optional<Path> p0;
    if (l && !plain.empty()) {
      p0 = lex_least_short_path(t, bfs, near, plain, {*l}, inside);
    } else if (plain.size() >= 2) {
      p0 = lex_least_short_path(t, bfs, near, plain, plain, inside);
    } else if (plain.size() == 1) {
      p0 = lex_least_short_path(t, bfs, near, plain, leaves, inside);
    } else if (l) {
      std::vector<Vertex> others;
      for (Vertex v : leaves) {
        if (v != *l) others.push_back(v);
      }
      p0 = lex_least_short_path(t, bfs, near, others, {*l}, inside);
    } else {
      p0 = lex_least_short_path(t, bfs, near, leaves, leaves, inside);
    }
    if (!p0) throw GenerationError("spindly subtree without a leaf-to-leaf path");

    for (Vertex v : *p0) on_path[static_cast<std::size_t>(v)] = true;
    std::vector<Sub> children;
    for (Vertex z : *p0) {
      for (Vertex c : t.neighbors(z)) {
        if (inside(c) && !on_path[static_cast<std::size_t>(c)]) children.push_back({z, c});
      }
    }
    out.push_back(std::move(*p0));
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

FiniteGraph edge_subgraph(const FiniteGraph& g, const std::vector<Edge>& edges, std::vector<Vertex>& ids) {
  ids.clear();
  for (auto [a, b] : edges) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (auto [a, b] : edges) local_edges.push_back(make_edge(local(a), local(b)));
  std::vector<bool> boundary;
  boundary.reserve(ids.size());
  for (Vertex v : ids) boundary.push_back(g.is_boundary(v));
  return FiniteGraph(static_cast<int>(ids.size()), local_edges, std::move(boundary));
}

std::vector<PathLayer> derivative_layers(int vertex_count, const std::vector<PathSequence>& seqs) {
  std::vector<std::size_t> order(seqs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seqs[a].rank < seqs[b].rank; });
  std::vector<int> top(static_cast<std::size_t>(vertex_count), -1);
  std::vector<PathLayer> layers;
  for (std::size_t si : order) {
    for (const Path& p : seqs[si].paths) {
      int layer = 0;
      for (Vertex v : p) layer = std::max(layer, top[static_cast<std::size_t>(v)] + 1);
      for (Vertex v : p) top[static_cast<std::size_t>(v)] = std::max(top[static_cast<std::size_t>(v)], layer);
      if (static_cast<int>(layers.size()) <= layer) layers.resize(static_cast<std::size_t>(layer) + 1);
      layers[static_cast<std::size_t>(layer)].paths.push_back(p);
    }
  }
  return layers;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// First path in DFS order (neighbors ascending) from `start` that has exactly
// `length` edges, falling back to the first one ending on the boundary.
template <class Allowed>
std::optional<Path> lex_least_escape(const FiniteGraph& g, Vertex start, int length, Allowed allowed) {
  Path path{start};
  std::optional<Path> boundary_end;
  std::vector<std::size_t> next_index{0};
  while (!path.empty()) {
    const Vertex v = path.back();
    if (static_cast<int>(path.size()) - 1 == length) return path;
    const auto& nb = g.neighbors(v);
    std::size_t& i = next_index.back();
    bool pushed = false;
    while (i < nb.size()) {
      const Vertex w = nb[i++];
      if (!allowed(w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      next_index.push_back(0);
      pushed = true;
      if (!boundary_end && g.is_boundary(w)) boundary_end = path;
      break;
    }
    if (!pushed) {
      path.pop_back();
      next_index.pop_back();
    }
  }
  return boundary_end;
}

void add_path_edges(const Path& p, std::vector<Edge>& edges) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.push_back(make_edge(p[i], p[i + 1]));
}

}  // namespace

std::vector<std::vector<Edge>> spindly_decompose(const FiniteGraph& g, int n, const Net& net) {
  if (n < 1) throw PreconditionError("spindly parameter n must be >= 1");
  if (!is_forest(g)) throw PreconditionError("spindly_decompose expects an acyclic graph");
  if (auto err = check_net(g, net); !err.empty()) throw PreconditionError("invalid net: " + err);
  const int vc = g.vertex_count();
  const auto V = [](Vertex v) { return static_cast<std::size_t>(v); };

  std::vector<bool> in_h(V(vc), false);
  DisjointSets h_sets(vc);
  std::vector<int> birth(V(vc), -1);  // indexed by component root
  // Owner of each vertex within the current stage: the net vertex whose tree holds it.
  std::vector<int> owner_stage(V(vc), -1);
  std::vector<Vertex> owner(V(vc), -1);
  Bfs bfs(vc);
  std::vector<std::vector<Edge>> stages;
  std::vector<Edge> covered;

  int first_unbounded = static_cast<int>(net.spacing.size());
  for (std::size_t i = 0; i < net.spacing.size(); ++i) {
    if (net.spacing[i] == kUnboundedSpacing) {
      first_unbounded = static_cast<int>(i);
      break;
    }
  }

  for (int s = 0; s < static_cast<int>(net.stages.size()); ++s) {
    std::vector<Edge> stage_edges;
    auto owned = [&](Vertex v) { return owner_stage[V(v)] == s; };
    for (Vertex x : net.stages[V(s)]) {
      if (in_h[V(x)] || owned(x)) continue;
      owner_stage[V(x)] = s;
      owner[V(x)] = x;
      std::vector<Vertex> tree{x};  // non-H vertices of this tree
      std::vector<Edge> tree_edges;
      std::set<int> bridged;

      // Adds every shortest path of length <= limit (limit < 0: any) through
      // non-H vertices from the tree to a component whose birth is in [lo, hi].
      auto bridge = [&](std::int64_t limit, int lo, int hi) {
        bfs.run(g, tree, [&](Vertex w) {
          return !in_h[V(w)] && !owned(w);
        });
        std::vector<std::pair<Vertex, Vertex>> hits;  // (H vertex, non-H predecessor)
        for (Vertex v : bfs.touched()) {
          if (limit >= 0 && bfs.dist(v) + 1 > limit) continue;
          for (Vertex w : g.neighbors(v)) {
            if (!in_h[V(w)]) continue;
            const int root = h_sets.find(w);
            const int b = birth[V(root)];
            if (b < lo || b > hi || bridged.count(root)) continue;
            bridged.insert(root);
            hits.emplace_back(w, v);
          }
        }
        for (auto [w, v] : hits) {
          Path p = bfs.trace(v);
          tree_edges.push_back(make_edge(w, v));
          add_path_edges(p, tree_edges);
          for (Vertex u : p) {
            if (!owned(u)) {
              owner_stage[V(u)] = s;
              owner[V(u)] = x;
              tree.push_back(u);
            }
          }
        }
      };

      if (first_unbounded <= s - 1) bridge(-1, first_unbounded, s - 1);
      for (int k = std::min(s - 1, first_unbounded - 1); k >= 0; --k) bridge(net.spacing[V(k)], k, k);

      // Bridges to different components may share their first edges.
      std::sort(tree_edges.begin(), tree_edges.end());
      tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());
      int x_degree = 0;
      for (auto [a, b] : tree_edges) x_degree += (a == x || b == x) ? 1 : 0;
      if (x_degree <= 1) {
        const auto escape = lex_least_escape(g, x, n, [&](Vertex w) { return !in_h[V(w)] && !owned(w); });
        if (escape) {
          add_path_edges(*escape, tree_edges);
          for (Vertex u : *escape) {
            owner_stage[V(u)] = s;
            owner[V(u)] = x;
          }
        }
      }
      stage_edges.insert(stage_edges.end(), tree_edges.begin(), tree_edges.end());
    }

    std::sort(stage_edges.begin(), stage_edges.end());
    stage_edges.erase(std::unique(stage_edges.begin(), stage_edges.end()), stage_edges.end());
    for (auto [a, b] : stage_edges) {
      in_h[V(a)] = in_h[V(b)] = true;
      h_sets.unite(a, b);
    }
    for (auto [a, b] : stage_edges) birth[V(h_sets.find(a))] = s;
    covered.insert(covered.end(), stage_edges.begin(), stage_edges.end());
    stages.push_back(std::move(stage_edges));
  }

  std::sort(covered.begin(), covered.end());
  if (covered != g.edges()) {
    std::vector<Edge> missing;
    std::set_difference(g.edges().begin(), g.edges().end(), covered.begin(), covered.end(),
                        std::back_inserter(missing));
    if (!missing.empty()) {
      throw GenerationError("spindly stages leave edge (" + std::to_string(missing[0].first) + "," +
                            std::to_string(missing[0].second) + ") uncovered");
    }
    throw GenerationError("spindly stages cover an edge twice");
  }
  return stages;
}

std::vector<std::vector<Edge>> edge_components(const std::vector<Edge>& edges) {
  std::vector<Vertex> ids;
  for (auto [a, b] : edges) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto local = [&](Vertex v) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };
  DisjointSets sets(static_cast<int>(ids.size()));
  for (auto [a, b] : edges) sets.unite(local(a), local(b));
  // Roots are least members, so root order is least-vertex order.
  std::map<int, std::vector<Edge>> by_root;
  for (const Edge& e : edges) by_root[sets.find(local(e.first))].push_back(e);
  std::vector<std::vector<Edge>> out;
  out.reserve(by_root.size());
  for (auto& [root, es] : by_root) out.push_back(std::move(es));
  return out;
}

namespace {

// Per-component spindly paths of one stage, in order of least vertex.
std::vector<std::vector<Path>> stage_component_paths(const FiniteGraph& g, const std::vector<Edge>& stage, int n,
                                                     int stage_index) {
  std::vector<std::vector<Path>> out;
  for (const auto& edges : edge_components(stage)) {
    std::vector<Vertex> ids;
    const FiniteGraph tree = edge_subgraph(g, edges, ids);
    const auto cert = is_n_spindly(tree, n);
    if (!cert) {
      throw GenerationError("stage " + std::to_string(stage_index) + " component at vertex " +
                            std::to_string(ids.front()) + " is not " + std::to_string(n) + "-spindly");
    }
    auto paths = spindly_paths(tree, *cert);
    for (Path& p : paths) {
      for (Vertex& v : p) v = ids[static_cast<std::size_t>(v)];
    }
    out.push_back(std::move(paths));
  }
  return out;
}

}  // namespace

PathDecomposition path_decomposition(const FiniteGraph& g, int n) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1 && !g.is_boundary(v)) {
      throw PreconditionError("vertex " + std::to_string(v) + " is an interior leaf");
    }
  }
  const Net net = build_net(g, n);
  const auto stages = spindly_decompose(g, n, net);
  std::vector<PathSequence> seqs;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    for (auto& paths : stage_component_paths(g, stages[s], n, static_cast<int>(s))) {
      seqs.push_back({static_cast<int>(s), std::move(paths)});
    }
  }
  PathDecomposition pd;
  pd.min_length = n;
  pd.waiver = true;
  pd.layers = derivative_layers(g.vertex_count(), seqs);
  return pd;
}

namespace {

// Splits into ceil(L / 2n) pieces, lengths as equal as possible with the
// longer pieces first. Paths of length <= 2n are returned unchanged.
std::vector<Path> split_path(const Path& p, int n) {
  const int len = static_cast<int>(p.size()) - 1;
  if (len <= 2 * n) return {p};
  const int k = (len + 2 * n - 1) / (2 * n);
  const int q = len / k;
  const int extra = len % k;
  std::vector<Path> out;
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    const int piece = q + (i < extra ? 1 : 0);
    out.emplace_back(p.begin() + pos, p.begin() + pos + piece + 1);
    pos += piece;
  }
  return out;
}

}  // namespace

PathDecomposition normalize_lengths(const PathDecomposition& pd, int n) {
  if (n < 1) throw PreconditionError("normalize_lengths needs n >= 1");
  if (pd.min_length < n) throw PreconditionError("decomposition minimum length is below n");
  int vc = 0;
  for (const auto& layer : pd.layers) {
    for (const Path& p : layer.paths) {
      for (Vertex v : p) vc = std::max(vc, v + 1);
    }
  }
  std::vector<PathSequence> seqs;
  int rank = 0;
  for (const auto& layer : pd.layers) {
    std::vector<Path> pieces;
    for (const Path& p : layer.paths) {
      for (Path& piece : split_path(p, n)) pieces.push_back(std::move(piece));
    }
    // First-fit coloring of the intersection graph of this layer's pieces.
    std::map<Vertex, std::vector<std::size_t>> at;
    std::vector<int> color(pieces.size(), 0);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      std::set<int> used;
      for (Vertex v : pieces[i]) {
        for (std::size_t j : at[v]) used.insert(color[j]);
      }
      while (used.count(color[i])) ++color[i];
      for (Vertex v : pieces[i]) at[v].push_back(i);
    }
    std::vector<std::size_t> order(pieces.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    for (std::size_t i : order) seqs.push_back({rank++, {pieces[i]}});
  }
  PathDecomposition out;
  out.min_length = pd.min_length;
  out.waiver = pd.waiver;
  out.layers = derivative_layers(vc, seqs);
  return out;
}

PathDecomposition end_selection_decomposition(const FiniteGraph& g, const std::vector<std::vector<Vertex>>& ends,
                                              int n) {
  if (n < 1) throw PreconditionError("end selection needs n >= 1");
  if (!is_forest(g)) throw PreconditionError("end_selection_decomposition expects an acyclic graph");
  const int vc = g.vertex_count();
  const auto V = [](Vertex v) { return static_cast<std::size_t>(v); };
  const auto comp = component_ids(g);

  std::map<int, std::vector<Vertex>> designated;
  for (const auto& list : ends) {
    if (list.empty() || list.size() > 2) throw PreconditionError("each component needs one or two designated ends");
    for (Vertex v : list) {
      if (v < 0 || v >= vc) throw PreconditionError("designated vertex out of range");
      if (!g.is_boundary(v)) throw PreconditionError("designated vertex " + std::to_string(v) + " is not on the boundary");
    }
    const int c = comp[V(list.front())];
    if (list.size() == 2 && (comp[V(list[1])] != c || list[0] == list[1])) {
      throw PreconditionError("two designated ends must be distinct and in one component");
    }
    if (!designated.emplace(c, list).second) throw PreconditionError("component designated twice");
  }
  for (const Edge& e : g.edges()) {
    if (!designated.count(comp[V(e.first)])) {
      throw PreconditionError("component of vertex " + std::to_string(e.first) + " has no designated end");
    }
  }

  // Parent pointers toward the (first) designated vertex of every component.
  FunctionalGraph fg;
  fg.next.assign(V(vc), -1);
  std::vector<Vertex> parent(V(vc), -1);
  for (const auto& [c, list] : designated) {
    Bfs bfs(vc);
    bfs.run(g, {list.front()}, everywhere);
    for (Vertex v : bfs.touched()) {
      parent[V(v)] = bfs.parent(v);
      if (list.size() == 1) fg.next[V(v)] = bfs.parent(v);
    }
  }

  std::vector<PathSequence> seqs;
  std::vector<bool> in_b(V(vc), false);
  std::set<Edge> core_edges;

  auto take = [&](const Path& p, int rank) {
    for (Vertex v : p) in_b[V(v)] = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) core_edges.insert(make_edge(p[i], p[i + 1]));
    seqs.push_back({rank, {p}});
  };

  // One-end components: length-n paths leaving a forward recurrent set away from the end.
  const auto recurrent = forward_recurrent_independent(fg, 2 * n);
  for (Vertex a : recurrent) {
    if (g.degree(a) == 0 || designated.at(comp[V(a)]).size() != 1) continue;
    // DFS over children in ascending order.
    std::vector<std::pair<Vertex, std::size_t>> stack{{a, 0}};
    Path cur{a};
    std::optional<Path> boundary_end;
    while (!stack.empty() && static_cast<int>(cur.size()) - 1 < n) {
      auto& [v, i] = stack.back();
      const auto& nb = g.neighbors(v);
      bool pushed = false;
      while (i < nb.size()) {
        const Vertex w = nb[i++];
        if (w == parent[V(v)] || in_b[V(w)]) continue;
        cur.push_back(w);
        stack.emplace_back(w, 0);
        pushed = true;
        if (!boundary_end && g.is_boundary(w)) boundary_end = cur;
        break;
      }
      if (!pushed) {
        stack.pop_back();
        cur.pop_back();
      }
    }
    if (static_cast<int>(cur.size()) - 1 == n) {
      take(cur, 0);
    } else if (boundary_end) {
      take(*boundary_end, 0);
    }
  }

  // Two-end components: the geodesic, cut into pieces; alternate pieces
  // go to separate ranks so each layer stays vertex-disjoint.
  for (const auto& [c, list] : designated) {
    if (list.size() != 2) continue;
    Path geo{list[1]};
    while (geo.back() != list[0]) geo.push_back(parent[V(geo.back())]);
    std::reverse(geo.begin(), geo.end());
    const auto pieces = split_path(geo, n);
    for (std::size_t i = 0; i < pieces.size(); ++i) take(pieces[i], static_cast<int>(i % 2));
  }

  // Hanging regions: components of the graph off the core vertices, each with
  // its attachments; the attachment nearest the first designated end is the
  // distinguished leaf.
  std::vector<bool> seen(V(vc), false);
  for (Vertex start = 0; start < vc; ++start) {
    if (in_b[V(start)] || seen[V(start)] || g.degree(start) == 0) continue;
    std::vector<Vertex> region{start};
    seen[V(start)] = true;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < region.size(); ++i) {
      const Vertex v = region[i];
      for (Vertex w : g.neighbors(v)) {
        if (in_b[V(w)]) {
          edges.push_back(make_edge(v, w));
        } else if (!seen[V(w)]) {
          seen[V(w)] = true;
          region.push_back(w);
          edges.push_back(make_edge(v, w));
        } else {
          edges.push_back(make_edge(v, w));
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Vertex top = -1;
    for (Vertex v : region) {
      const Vertex p = parent[V(v)];
      if (p >= 0 && in_b[V(p)]) {
        top = p;
        break;
      }
    }
    std::vector<Vertex> ids;
    const FiniteGraph tree = edge_subgraph(g, edges, ids);
    std::optional<SpindlyCert> cert;
    if (top >= 0) {
      const Vertex local = static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), top) - ids.begin());
      SpindlyCert c{local, n};
      if (check_spindly_cert(tree, c)) cert = c;
    }
    if (!cert) cert = is_n_spindly(tree, n);
    if (!cert) {
      throw GenerationError("hanging region at vertex " + std::to_string(start) + " is not " + std::to_string(n) +
                            "-spindly");
    }
    auto paths = spindly_paths(tree, *cert);
    for (Path& p : paths) {
      for (Vertex& v : p) v = ids[V(v)];
    }
    seqs.push_back({2, std::move(paths)});
  }

  // Core-to-core edges that no path took.
  for (const Edge& e : g.edges()) {
    if (in_b[V(e.first)] && in_b[V(e.second)] && !core_edges.count(e)) {
      seqs.push_back({3, {Path{e.first, e.second}}});
    }
  }

  PathDecomposition pd;
  pd.min_length = n;
  pd.waiver = true;
  pd.layers = derivative_layers(vc, seqs);
  return pd;
}

DecompReport verify_path_decomposition(const FiniteGraph& g, const PathDecomposition& pd) {
  const int vc = g.vertex_count();
  auto fail = [](std::string msg) { return DecompReport{false, std::move(msg)}; };
  auto path_name = [](std::size_t layer, std::size_t index) {
    return "layer " + std::to_string(layer) + " path " + std::to_string(index);
  };
  std::vector<int> first_layer(static_cast<std::size_t>(vc), -1);
  std::map<Edge, int> edge_uses;
  for (std::size_t j = 0; j < pd.layers.size(); ++j) {
    std::set<Vertex> in_layer;
    for (std::size_t k = 0; k < pd.layers[j].paths.size(); ++k) {
      const Path& p = pd.layers[j].paths[k];
      if (p.size() < 2) return fail(path_name(j, k) + " has length 0");
      std::set<Vertex> seen;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= vc) return fail(path_name(j, k) + " has an unknown vertex");
        if (!seen.insert(p[i]).second) return fail(path_name(j, k) + " repeats vertex " + std::to_string(p[i]));
        if (!in_layer.insert(p[i]).second) {
          return fail("layer " + std::to_string(j) + " is not vertex-disjoint at vertex " + std::to_string(p[i]));
        }
        if (i + 1 < p.size()) {
          if (!g.adjacent(p[i], p[i + 1])) return fail(path_name(j, k) + " uses a non-edge");
          ++edge_uses[make_edge(p[i], p[i + 1])];
        }
      }
      const int len = static_cast<int>(p.size()) - 1;
      const bool waived = pd.waiver && (g.is_boundary(p.front()) || g.is_boundary(p.back()));
      if (len < pd.min_length && !waived) {
        return fail(path_name(j, k) + " has length " + std::to_string(len) + " < " + std::to_string(pd.min_length));
      }
      for (Vertex v : p) {
        auto& f = first_layer[static_cast<std::size_t>(v)];
        if (f < 0) f = static_cast<int>(j);
      }
    }
  }
  for (std::size_t j = 0; j < pd.layers.size(); ++j) {
    for (std::size_t k = 0; k < pd.layers[j].paths.size(); ++k) {
      const Path& p = pd.layers[j].paths[k];
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (first_layer[static_cast<std::size_t>(p[i])] < static_cast<int>(j)) {
          return fail("vertex " + std::to_string(p[i]) + " is interior to " + path_name(j, k) +
                      " but occurs in an earlier layer");
        }
      }
    }
  }
  for (const auto& [e, uses] : edge_uses) {
    if (uses > 1) return fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") covered twice");
  }
  for (const Edge& e : g.edges()) {
    if (!edge_uses.count(e)) {
      return fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") not covered");
    }
  }
  return {};
}

}  // namespace acs
