#include "acs/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "acs/error.hpp"

namespace acs {

FiniteGraph::FiniteGraph(int vertex_count, const std::vector<Edge>& edges, std::vector<bool> boundary)
    : adj_(static_cast<std::size_t>(vertex_count)), boundary_(std::move(boundary)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  if (boundary_.empty()) boundary_.assign(static_cast<std::size_t>(vertex_count), false);
  if (boundary_.size() != static_cast<std::size_t>(vertex_count)) {
    throw PreconditionError("boundary flags do not match the vertex count");
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
    edges_.push_back(make_edge(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw PreconditionError("duplicate edge");
  }
  for (auto [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool FiniteGraph::adjacent(Vertex a, Vertex b) const {
  const auto& list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

int FiniteGraph::max_degree() const {
  int d = 0;
  for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

ActionGraph::ActionGraph(FiniteGraph graph, std::vector<Arc> arcs)
    : graph_(std::move(graph)), arcs_(std::move(arcs)) {
  arcs_at_.resize(static_cast<std::size_t>(graph_.vertex_count()));
  std::vector<Edge> support;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.src < 0 || a.dst < 0 || a.src >= graph_.vertex_count() || a.dst >= graph_.vertex_count()) {
      throw PreconditionError("arc endpoint out of range");
    }
    if (!graph_.adjacent(a.src, a.dst)) throw PreconditionError("arc without an underlying edge");
    arcs_at_[static_cast<std::size_t>(a.src)].push_back(i);
    arcs_at_[static_cast<std::size_t>(a.dst)].push_back(i);
    support.push_back(make_edge(a.src, a.dst));
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support != graph_.edges()) throw PreconditionError("arc support differs from the edge set");
}

Letter ActionGraph::letter_between(Vertex u, Vertex v, const Presentation& p) const {
  for (std::size_t i : arcs_at_[static_cast<std::size_t>(u)]) {
    const Arc& a = arcs_[i];
    if (a.src == u && a.dst == v) return {a.gen, a.sign};
  }
  for (std::size_t i : arcs_at_[static_cast<std::size_t>(u)]) {
    const Arc& a = arcs_[i];
    if (a.src == v && a.dst == u) return p.inverse({a.gen, a.sign});
  }
  throw PreconditionError("no arc between " + std::to_string(u) + " and " + std::to_string(v));
}

namespace {

struct BallBuild {
  std::vector<Word> words;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  std::vector<bool> boundary;
};

BallBuild build_ball(const Presentation& p, int radius, std::size_t vertex_cap) {
  if (radius < 0) throw PreconditionError("negative radius");
  BallBuild b;
  b.words.push_back({});
  b.boundary.push_back(radius == 0);
  std::size_t level_begin = 0;
  for (int depth = 0; depth < radius; ++depth) {
    const std::size_t level_end = b.words.size();
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (const Letter& l : p.alphabet()) {
        const Word& w = b.words[v];
        if (!w.empty() && l == p.inverse(w.back())) continue;
        if (b.words.size() >= vertex_cap) {
          throw CapacityError("Cayley ball exceeds the vertex cap of " + std::to_string(vertex_cap));
        }
        Word child = w;
        child.push_back(l);
        const Vertex c = static_cast<Vertex>(b.words.size());
        b.words.push_back(std::move(child));
        b.boundary.push_back(depth + 1 == radius);
        const Vertex parent = static_cast<Vertex>(v);
        b.edges.push_back(make_edge(parent, c));
        if (p.involution(l.gen)) {
          b.arcs.push_back({parent, c, l.gen, +1});
          b.arcs.push_back({c, parent, l.gen, +1});
        } else if (l.sign > 0) {
          b.arcs.push_back({parent, c, l.gen, +1});
        } else {
          b.arcs.push_back({c, parent, l.gen, +1});
        }
      }
    }
    level_begin = level_end;
  }
  return b;
}

}  // namespace

ActionGraph cayley_ball(const Presentation& p, int radius, std::size_t vertex_cap) {
  if (radius < 1) throw PreconditionError("cayley_ball needs radius >= 1");
  BallBuild b = build_ball(p, radius, vertex_cap);
  FiniteGraph g(static_cast<int>(b.words.size()), b.edges, std::move(b.boundary));
  return ActionGraph(std::move(g), std::move(b.arcs));
}

std::vector<Word> cayley_ball_words(const Presentation& p, int radius) {
  return build_ball(p, radius, kDefaultVertexCap).words;
}

std::vector<int> bfs_distances(const FiniteGraph& g, Vertex source, int limit) {
  if (source < 0 || source >= g.vertex_count()) throw PreconditionError("unknown vertex id");
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const int dv = dist[static_cast<std::size_t>(v)];
    if (limit >= 0 && dv >= limit) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const FiniteGraph& g, Vertex u, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("unknown vertex id");
  const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<int> component_ids(const FiniteGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_forest(const FiniteGraph& g) {
  const auto comp = component_ids(g);
  const int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return g.edge_count() + static_cast<std::size_t>(components) == static_cast<std::size_t>(g.vertex_count());
}

std::int64_t net_spacing(int n, int stage, int diameter) {
  std::int64_t d = 3 * static_cast<std::int64_t>(n);
  for (int i = 0; i < stage; ++i) {
    if (3 * d >= diameter) return kUnboundedSpacing;
    d *= 6;
  }
  if (3 * d >= diameter) return kUnboundedSpacing;
  return d;
}

namespace {

// Bounded BFS that reuses its marks between runs.
class BallScan {
 public:
  explicit BallScan(int vertex_count) : dist_(static_cast<std::size_t>(vertex_count), -1) {}

  // Vertices within `limit` of v (v included).
  const std::vector<Vertex>& run(const FiniteGraph& g, Vertex v, std::int64_t limit) {
    for (Vertex w : seen_) dist_[static_cast<std::size_t>(w)] = -1;
    seen_.assign(1, v);
    dist_[static_cast<std::size_t>(v)] = 0;
    for (std::size_t i = 0; i < seen_.size(); ++i) {
      const Vertex x = seen_[i];
      const int dx = dist_[static_cast<std::size_t>(x)];
      if (dx >= limit) continue;
      for (Vertex w : g.neighbors(x)) {
        if (dist_[static_cast<std::size_t>(w)] < 0) {
          dist_[static_cast<std::size_t>(w)] = dx + 1;
          seen_.push_back(w);
        }
      }
    }
    return seen_;
  }
  int dist(Vertex v) const { return dist_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<int> dist_;
  std::vector<Vertex> seen_;
};

// Diameter bound per component id: exact on trees, at most twice the
// diameter otherwise.
std::vector<int> component_diameters(const FiniteGraph& g, const std::vector<int>& comp) {
  const bool forest = is_forest(g);
  std::vector<int> out;
  BallScan scan(g.vertex_count());
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(s)]);
    if (c < out.size()) continue;
    out.resize(c + 1, 0);
    const auto& first = scan.run(g, s, std::numeric_limits<int>::max());
    const Vertex far = first.back();
    const auto& second = scan.run(g, far, std::numeric_limits<int>::max());
    const int ecc = scan.dist(second.back());
    out[c] = forest ? ecc : 2 * ecc;
  }
  return out;
}

int max_component_diameter(const FiniteGraph& g) {
  const auto d = component_diameters(g, component_ids(g));
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

}  // namespace

Net build_net(const FiniteGraph& g, int n) {
  if (n < 1) throw PreconditionError("net parameter n must be >= 1");
  const int vc = g.vertex_count();
  const auto comp = component_ids(g);
  const int diameter = max_component_diameter(g);
  Net net;
  std::vector<int> stage_of(static_cast<std::size_t>(vc), -1);
  // Unbounded stages hold one vertex per component, filled in order.
  std::vector<int> unbounded_used(static_cast<std::size_t>(vc), 0);
  BallScan scan(vc);

  auto spacing = [&](int i) {
    while (static_cast<int>(net.spacing.size()) <= i) {
      net.spacing.push_back(net_spacing(n, static_cast<int>(net.spacing.size()), diameter));
    }
    return net.spacing[static_cast<std::size_t>(i)];
  };

  for (Vertex v = 0; v < vc; ++v) {
    int chosen = -1;
    int i = 0;
    for (; spacing(i) != kUnboundedSpacing; ++i) {
      bool clear = true;
      for (Vertex w : scan.run(g, v, 3 * spacing(i))) {
        if (stage_of[static_cast<std::size_t>(w)] == i) {
          clear = false;
          break;
        }
      }
      if (clear) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) chosen = i + unbounded_used[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]++;
    stage_of[static_cast<std::size_t>(v)] = chosen;
    if (static_cast<int>(net.stages.size()) <= chosen) net.stages.resize(static_cast<std::size_t>(chosen) + 1);
    net.stages[static_cast<std::size_t>(chosen)].push_back(v);
  }
  spacing(static_cast<int>(net.stages.size()));
  net.spacing.resize(net.stages.size());
  return net;
}

std::string check_net(const FiniteGraph& g, const Net& net) {
  const int vc = g.vertex_count();
  std::vector<int> stage_of(static_cast<std::size_t>(vc), -1);
  if (net.spacing.size() != net.stages.size()) return "spacing list length differs from stage count";
  for (std::size_t i = 0; i < net.stages.size(); ++i) {
    for (Vertex v : net.stages[i]) {
      if (v < 0 || v >= vc) return "stage vertex out of range";
      if (stage_of[static_cast<std::size_t>(v)] >= 0) return "vertex " + std::to_string(v) + " in two stages";
      stage_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < vc; ++v) {
    if (!g.is_boundary(v) && stage_of[static_cast<std::size_t>(v)] < 0) {
      return "interior vertex " + std::to_string(v) + " not covered";
    }
  }
  const auto comp = component_ids(g);
  std::vector<Vertex> owner(static_cast<std::size_t>(vc), -1);
  BallScan scan(vc);
  for (std::size_t i = 0; i < net.stages.size(); ++i) {
    const std::int64_t d = net.spacing[i];
    if (d == kUnboundedSpacing) {
      for (Vertex v : net.stages[i]) {
        Vertex& o = owner[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        if (o >= 0) {
          return "stage " + std::to_string(i) + " holds " + std::to_string(o) + " and " + std::to_string(v) +
                 " in one component";
        }
        o = v;
      }
      for (Vertex v : net.stages[i]) owner[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = -1;
      continue;
    }
    for (Vertex v : net.stages[i]) {
      for (Vertex w : scan.run(g, v, 3 * d)) {
        if (w != v && stage_of[static_cast<std::size_t>(w)] == static_cast<int>(i)) {
          std::ostringstream os;
          os << "stage " << i << " vertices " << v << " and " << w << " at distance " << scan.dist(w);
          return os.str();
        }
      }
    }
  }
  return {};
}

FiniteGraph FunctionalGraph::support() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    const Vertex w = next[static_cast<std::size_t>(v)];
    if (w >= 0) edges.push_back(make_edge(v, w));
  }
  return FiniteGraph(vertex_count(), edges);
}

std::vector<int> greedy_power_coloring(const FiniteGraph& g, int r) {
  const int vc = g.vertex_count();
  const auto comp = component_ids(g);
  const auto diam = component_diameters(g, comp);
  std::vector<int> color(static_cast<std::size_t>(vc), -1);
  std::vector<int> seen_in_comp(diam.size(), 0);
  BallScan scan(vc);
  std::vector<char> used;
  for (Vertex v = 0; v < vc; ++v) {
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
    if (r >= diam[c]) {
      // The power graph of this component is complete.
      color[static_cast<std::size_t>(v)] = seen_in_comp[c]++;
      continue;
    }
    used.assign(used.size(), 0);
    for (Vertex w : scan.run(g, v, r)) {
      const int cw = color[static_cast<std::size_t>(w)];
      if (cw < 0) continue;
      if (static_cast<std::size_t>(cw) >= used.size()) used.resize(static_cast<std::size_t>(cw) + 1, 0);
      used[static_cast<std::size_t>(cw)] = 1;
    }
    int k = 0;
    while (static_cast<std::size_t>(k) < used.size() && used[static_cast<std::size_t>(k)]) ++k;
    color[static_cast<std::size_t>(v)] = k;
  }
  return color;
}

std::vector<Vertex> forward_recurrent_independent(const FunctionalGraph& fg, int r) {
  const int vc = fg.vertex_count();
  // Sink of each vertex by following f; detects cycles via a step bound.
  std::vector<Vertex> sink(static_cast<std::size_t>(vc), -1);
  for (Vertex v = 0; v < vc; ++v) {
    Vertex x = v;
    int steps = 0;
    while (fg.next[static_cast<std::size_t>(x)] >= 0) {
      x = fg.next[static_cast<std::size_t>(x)];
      if (x < 0 || x >= vc) throw PreconditionError("functional graph successor out of range");
      if (++steps > vc) throw PreconditionError("functional graph has a directed cycle");
    }
    sink[static_cast<std::size_t>(v)] = x;
  }
  const FiniteGraph support = fg.support();
  const auto comp = component_ids(support);
  std::map<int, Vertex> sink_of_component;
  for (Vertex v = 0; v < vc; ++v) {
    const int c = comp[static_cast<std::size_t>(v)];
    auto [it, inserted] = sink_of_component.emplace(c, sink[static_cast<std::size_t>(v)]);
    if (!inserted && it->second != sink[static_cast<std::size_t>(v)]) {
      throw PreconditionError("component has more than one sink");
    }
  }
  const auto color = greedy_power_coloring(support, r);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vc; ++v) {
    if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(sink[static_cast<std::size_t>(v)])]) {
      out.push_back(v);
    }
  }
  return out;
}

FiniteGraph random_tree(int vertices, std::uint64_t seed) {
  if (vertices < 2) throw PreconditionError("a random tree needs at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(vertices - 2));
  for (int& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(vertices));
  std::vector<int> degree(static_cast<std::size_t>(vertices), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < vertices; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(make_edge(leaf, c));
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
  }
  edges.push_back(make_edge(*leaves.begin(), *std::next(leaves.begin())));
  std::vector<bool> boundary(static_cast<std::size_t>(vertices), false);
  std::vector<int> deg(static_cast<std::size_t>(vertices), 0);
  for (const Edge& e : edges) {
    ++deg[static_cast<std::size_t>(e.first)];
    ++deg[static_cast<std::size_t>(e.second)];
  }
  for (int v = 0; v < vertices; ++v) boundary[static_cast<std::size_t>(v)] = deg[static_cast<std::size_t>(v)] <= 1;
  return FiniteGraph(vertices, edges, boundary);
}

}  // namespace acs
