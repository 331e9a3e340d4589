#include "acs/psl2.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "acs/cfrac.hpp"
#include "acs/decomp.hpp"
#include "acs/error.hpp"
#include "acs/words.hpp"

namespace acs {

namespace {

struct MoebiusLetter {
  int gen;
  int sign;
  Moebius m;
};

bool is_involution(const Moebius& m) { return (m * m).is_identity(); }

std::vector<MoebiusLetter> letters_of(const std::vector<Moebius>& gens) {
  std::vector<MoebiusLetter> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int g = static_cast<int>(i);
    out.push_back({g, +1, gens[i]});
    if (!is_involution(gens[i])) out.push_back({g, -1, gens[i].inverse()});
  }
  return out;
}

Moebius power(const Moebius& m, int k) {
  Moebius out{1, 0, 0, 1};
  const Moebius step = k >= 0 ? m : m.inverse();
  for (int i = 0; i < std::abs(k); ++i) out = out * step;
  return out;
}

// Lex-least shortest path from a to b (by vertex id), empty if unreachable.
std::vector<Vertex> lex_shortest_path(const FiniteGraph& g, Vertex a, Vertex b) {
  const std::vector<int> dist = bfs_distances(g, b);
  if (dist[static_cast<std::size_t>(a)] < 0) return {};
  std::vector<Vertex> path{a};
  while (path.back() != b) {
    const Vertex u = path.back();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] - 1) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

void append_erasing_loops(std::vector<Vertex>& path, const std::vector<Vertex>& more) {
  for (Vertex v : more) {
    const auto it = std::find(path.begin(), path.end(), v);
    if (it != path.end()) {
      path.erase(it + 1, path.end());
    } else {
      path.push_back(v);
    }
  }
}

}  // namespace

std::vector<Moebius> free_subgroup_generators(int k) {
  if (k < 1) throw PreconditionError("free subgroup needs at least one generator");
  const Moebius a{1, 2, 0, 1};
  const Moebius b{1, 0, 2, 1};
  if (k == 1) return {a};
  const int m = k - 1;
  std::vector<Moebius> out{power(a, m)};
  for (int i = 0; i + 1 < m; ++i) out.push_back(power(a, i) * b * power(a, -(i + 1)));
  out.push_back(power(a, m - 1) * b);
  return out;
}

bool check_free(const std::vector<Moebius>& gens, int radius) {
  const auto letters = letters_of(gens);
  struct Node {
    Moebius m;
    int gen;
    int sign;
  };
  std::set<Moebius> seen{Moebius{1, 0, 0, 1}.normalized()};
  std::vector<Node> frontier{{Moebius{1, 0, 0, 1}, -1, 0}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (const MoebiusLetter& l : letters) {
        const bool cancels = l.gen == node.gen && (l.sign == -node.sign || is_involution(l.m));
        if (cancels) continue;
        const Moebius m = l.m * node.m;
        if (!seen.insert(m.normalized()).second) return false;
        next.push_back({m, l.gen, l.sign});
      }
    }
    frontier = std::move(next);
  }
  return true;
}

std::optional<Vertex> OrbitBall::find(const QuadraticSurd& x) const {
  const auto it = index.find(x);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

OrbitBall orbit_ball(const std::vector<Moebius>& gens, const QuadraticSurd& seed, int radius,
                     std::size_t vertex_cap) {
  if (radius < 0) throw PreconditionError("negative radius");
  const auto letters = letters_of(gens);
  OrbitBall ball;
  std::vector<int> dist;
  auto add = [&](const QuadraticSurd& x, int d) {
    if (ball.points.size() >= vertex_cap) throw CapacityError("orbit ball exceeds the vertex cap");
    const Vertex v = static_cast<Vertex>(ball.points.size());
    ball.points.push_back(x);
    ball.index.emplace(x, v);
    dist.push_back(d);
    return v;
  };
  add(seed, 0);
  // (src, dst, gen) with gens[gen] src = dst; involutions stored with src < dst.
  std::set<std::tuple<Vertex, Vertex, int>> arcs;
  for (std::size_t head = 0; head < ball.points.size(); ++head) {
    const Vertex u = static_cast<Vertex>(head);
    const int du = dist[head];
    for (const MoebiusLetter& l : letters) {
      const QuadraticSurd y = moebius_apply(l.m, ball.points[head]);
      std::optional<Vertex> v = ball.find(y);
      if (!v) {
        if (du >= radius) continue;
        v = add(y, du + 1);
      }
      if (*v == u) throw PreconditionError("generator " + std::to_string(l.gen) + " fixes " + y.to_string());
      Vertex src = l.sign > 0 ? u : *v;
      Vertex dst = l.sign > 0 ? *v : u;
      if (is_involution(gens[static_cast<std::size_t>(l.gen)]) && src > dst) std::swap(src, dst);
      arcs.emplace(src, dst, l.gen);
    }
  }
  std::vector<Arc> arc_list;
  std::set<Edge> edges;
  for (const auto& [src, dst, gen] : arcs) {
    if (!edges.insert(make_edge(src, dst)).second) {
      throw PreconditionError("two letters join " + ball.points[static_cast<std::size_t>(src)].to_string() + " and " +
                              ball.points[static_cast<std::size_t>(dst)].to_string());
    }
    arc_list.push_back(Arc{src, dst, gen, +1});
  }
  std::vector<bool> boundary(ball.points.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) boundary[i] = dist[i] == radius;
  FiniteGraph g(static_cast<int>(ball.points.size()), std::vector<Edge>(edges.begin(), edges.end()), boundary);
  ball.graph = ActionGraph(std::move(g), std::move(arc_list));
  return ball;
}

std::optional<Vertex> nearest_point(const OrbitBall& sub, const QuadraticSurd& y,
                                    const std::vector<Moebius>& ambient, int max_dist) {
  const auto letters = letters_of(ambient);
  std::set<QuadraticSurd> seen{y};
  std::vector<QuadraticSurd> layer{y};
  for (int d = 0; d <= max_dist; ++d) {
    for (const QuadraticSurd& x : layer) {
      if (auto v = sub.find(x)) return v;
    }
    if (d == max_dist) break;
    std::vector<QuadraticSurd> next;
    for (const QuadraticSurd& x : layer) {
      for (const MoebiusLetter& l : letters) {
        QuadraticSurd z = moebius_apply(l.m, x);
        if (seen.insert(z).second) next.push_back(std::move(z));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::vector<Vertex> transfer_ray(const std::vector<QuadraticSurd>& ray, const OrbitBall& sub,
                                 const std::vector<Moebius>& ambient, int max_dist) {
  if (ray.empty()) throw PreconditionError("empty ray");
  std::vector<Vertex> path;
  for (const QuadraticSurd& y : ray) {
    const auto c = nearest_point(sub, y, ambient, max_dist);
    if (!c) throw PreconditionError("no subgroup point within " + std::to_string(max_dist) + " of " + y.to_string());
    if (path.empty()) {
      path.push_back(*c);
      continue;
    }
    const auto link = lex_shortest_path(sub.graph.graph(), path.back(), *c);
    if (link.empty()) throw PreconditionError("ray images lie in different components");
    append_erasing_loops(path, link);
  }
  return path;
}

std::vector<Moebius> pgl2_generators() { return {moebius_alpha(), moebius_gamma()}; }

bool Psl2Demo::clean() const {
  return std::all_of(seeds.begin(), seeds.end(), [](const SeedReport& s) { return s.report.clean(); });
}

Psl2Demo psl2_demo(const CongruenceSystem& e, const GeneratingSet& genset, const std::vector<QuadraticSurd>& seeds,
                   int radius, int word_cap, std::size_t vertex_cap) {
  if (!is_non_complementing(e)) throw PreconditionError("the system is complementing");
  if (!is_non_expanding(e).non_expanding) throw PreconditionError("the system is expanding");
  if (genset.n != e.pieces()) throw PreconditionError("generating set and system disagree on n");
  const Presentation p(genset);
  for (int i = 0; i < p.generators(); ++i) {
    if (p.involution(i)) throw PreconditionError("pair " + std::to_string(i) + " is an involution; a free action cannot realize it");
  }
  if (radius < 1) throw PreconditionError("radius must be positive");

  Psl2Demo demo;
  demo.generators = free_subgroup_generators(std::max(1, p.generators()));
  if (!check_free(demo.generators, radius)) throw PreconditionError("subgroup generators satisfy a short relation");
  demo.bad_word_bound = bad_word_bound(p, word_cap).r;
  const int n = std::max(1, demo.bad_word_bound);

  for (const QuadraticSurd& seed : seeds) {
    if (seed.is_infinity() || seed.is_rational()) throw PreconditionError("seed " + seed.to_string() + " is rational");
    SeedReport rep;
    rep.seed = seed;
    const OrbitBall ball = orbit_ball(demo.generators, seed, radius, vertex_cap);
    const FiniteGraph& g = ball.graph.graph();
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    if (is_forest(g)) {
      rep.method = "end-selection";
      const auto f_ray = end_selection_ray(seed, 4 * radius);
      std::vector<QuadraticSurd> usable;
      for (const QuadraticSurd& y : f_ray) {
        if (!nearest_point(ball, y, pgl2_generators(), 8)) break;
        usable.push_back(y);
      }
      rep.ray = transfer_ray(usable, ball, pgl2_generators());
      // Continue to the nearest boundary point, least id first.
      const std::vector<int> dist = bfs_distances(g, rep.ray.back());
      Vertex target = -1;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_boundary(v) || dist[static_cast<std::size_t>(v)] < 0) continue;
        if (target < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(target)]) target = v;
      }
      if (target < 0) throw PreconditionError("orbit ball has no boundary");
      append_erasing_loops(rep.ray, lex_shortest_path(g, rep.ray.back(), target));
      rep.end = target;
      const PathDecomposition pd = end_selection_decomposition(g, {{target}}, n);
      rep.realization = realize_along_decomposition(ball.graph, p, pd);
    } else {
      rep.method = "single-orbit";
      rep.realization = realize_single_orbit(ball.graph, p);
    }
    rep.report = verify_realization(ball.graph, p, rep.realization);
    demo.seeds.push_back(std::move(rep));
  }
  return demo;
}

}  // namespace acs
