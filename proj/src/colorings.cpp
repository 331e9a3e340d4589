#include "acs/colorings.hpp"

#include <algorithm>
#include <string>

#include "acs/error.hpp"

namespace acs {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_valid(const FiniteGraph& g, const PathDecomposition& pd, int min_length) {
  if (pd.min_length < min_length) {
    throw PreconditionError("decomposition length " + std::to_string(pd.min_length) + " is below " +
                            std::to_string(min_length));
  }
  if (auto rep = verify_path_decomposition(g, pd); !rep.ok) {
    throw PreconditionError("invalid path decomposition: " + rep.violation);
  }
}

std::string path_label(const Path& p) {
  return "path " + std::to_string(p.front()) + ".." + std::to_string(p.back());
}

}  // namespace

TwoColoring strongly_unfriendly(const FiniteGraph& g, const PathDecomposition& pd, bool strict5) {
  require_valid(g, pd, strict5 ? 5 : 4);
  TwoColoring c(idx(g.vertex_count()), -1);
  for (const auto& layer : pd.layers) {
    for (const Path& p : layer.paths) {
      const int l = static_cast<int>(p.size()) - 1;
      int a = c[idx(p.front())];
      int b = c[idx(p.back())];
      if (a < 0 && b < 0) a = 0;
      if (a < 0) a = b ^ (l % 2);
      if (b < 0) b = a ^ (l % 2);
      // Colors follow a up to position j and b after it.
      int j = l;
      if (b != (a ^ (l % 2))) {
        if (l >= 3) {
          j = l / 2;
        } else if (g.is_boundary(p.back())) {
          j = l - 1;
        } else if (g.is_boundary(p.front())) {
          j = 0;
        } else {
          throw GenerationError(path_label(p) + " is too short to recolor");
        }
      }
      for (int i = 0; i <= l; ++i) {
        int& ci = c[idx(p[static_cast<std::size_t>(i)])];
        if (ci < 0) ci = i <= j ? a ^ (i % 2) : b ^ ((l - i) % 2);
      }
    }
  }
  for (int& x : c) {
    if (x < 0) x = 0;
  }
  return c;
}

UnfriendlyReport verify_strongly_unfriendly(const FiniteGraph& g, const TwoColoring& c) {
  if (c.size() != idx(g.vertex_count())) throw PreconditionError("coloring is not total");
  UnfriendlyReport rep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) continue;
    int same = 0;
    for (Vertex w : g.neighbors(v)) same += c[idx(w)] == c[idx(v)] ? 1 : 0;
    if (same >= 2) rep.strong.push_back(v);
    if (2 * same > g.degree(v)) rep.majority.push_back(v);
  }
  return rep;
}

Matching perfect_matching(const FiniteGraph& g, const PathDecomposition& pd) {
  require_valid(g, pd, 3);
  std::vector<int> remaining(idx(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) remaining[idx(v)] = g.degree(v);
  std::vector<bool> matched(idx(g.vertex_count()), false);
  Matching m;
  for (const auto& layer : pd.layers) {
    for (const Path& p : layer.paths) {
      const std::size_t l = p.size() - 1;
      for (std::size_t i = 0; i <= l; ++i) remaining[idx(p[i])] -= (i == 0 || i == l) ? 1 : 2;
      // Open vertices form one run: interior vertices are new to this path.
      const std::size_t s = matched[idx(p.front())] ? 1 : 0;
      const std::size_t e = matched[idx(p.back())] ? l - 1 : l;
      if (s > e) continue;
      auto urgent = [&](std::size_t i) { return remaining[idx(p[i])] == 0 && !g.is_boundary(p[i]); };
      std::size_t skip = e + 1;  // position left open
      if ((e - s) % 2 == 0) {
        if (s == 0 && !urgent(s)) {
          skip = s;
        } else if (e == l && !urgent(e)) {
          skip = e;
        } else {
          skip = s;
          for (std::size_t i = s; i <= e; i += 2) {
            if (!urgent(i)) {
              skip = i;
              break;
            }
          }
        }
      }
      for (std::size_t i = s; i + 1 <= e;) {
        if (i == skip) {
          ++i;
          continue;
        }
        m.push_back(make_edge(p[i], p[i + 1]));
        matched[idx(p[i])] = matched[idx(p[i + 1])] = true;
        i += 2;
      }
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

MatchingReport verify_matching(const FiniteGraph& g, const Matching& m) {
  MatchingReport rep;
  std::vector<int> uses(idx(g.vertex_count()), 0);
  for (const Edge& e : m) {
    const bool in_range = e.first >= 0 && e.second < g.vertex_count() && e.first < e.second;
    if (!in_range || !g.adjacent(e.first, e.second)) {
      rep.bad_edges.push_back(e);
      continue;
    }
    ++uses[idx(e.first)];
    ++uses[idx(e.second)];
  }
  for (const Edge& e : m) {
    if (e.first >= 0 && e.second < g.vertex_count() && (uses[idx(e.first)] > 1 || uses[idx(e.second)] > 1)) {
      rep.bad_edges.push_back(e);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_boundary(v) && uses[idx(v)] == 0) rep.unmatched_interior.push_back(v);
  }
  return rep;
}

EdgeColoring edge_list_coloring(const FiniteGraph& g, const PathDecomposition& pd, const EdgeLists& lists) {
  require_valid(g, pd, 3);
  const int d = g.max_degree();
  std::map<Edge, std::vector<int>> sorted;
  for (const Edge& e : g.edges()) {
    auto it = lists.find(e);
    if (it == lists.end()) throw PreconditionError("edge without a color list");
    std::vector<int> colors = it->second;
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    if (static_cast<int>(colors.size()) < d) {
      throw PreconditionError("list of edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              ") has fewer than " + std::to_string(d) + " colors");
    }
    sorted.emplace(e, std::move(colors));
  }
  std::vector<std::vector<int>> used(idx(g.vertex_count()));
  EdgeColoring out;
  auto color = [&](Vertex a, Vertex b) {
    const Edge e = make_edge(a, b);
    const auto& ua = used[idx(a)];
    const auto& ub = used[idx(b)];
    for (int col : sorted.at(e)) {
      if (std::find(ua.begin(), ua.end(), col) == ua.end() && std::find(ub.begin(), ub.end(), col) == ub.end()) {
        out[e] = col;
        used[idx(a)].push_back(col);
        used[idx(b)].push_back(col);
        return;
      }
    }
    throw GenerationError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                          ") has no free color");
  };
  for (const auto& layer : pd.layers) {
    for (const Path& p : layer.paths) {
      const std::size_t l = p.size() - 1;
      const bool front_busy = !used[idx(p.front())].empty();
      const bool back_busy = !used[idx(p.back())].empty();
      if (front_busy && back_busy) {
        color(p[0], p[1]);
        if (l >= 2) color(p[l - 1], p[l]);
        for (std::size_t i = 1; i + 1 < l; ++i) color(p[i], p[i + 1]);
      } else if (back_busy) {
        for (std::size_t i = l; i > 0; --i) color(p[i - 1], p[i]);
      } else {
        for (std::size_t i = 0; i < l; ++i) color(p[i], p[i + 1]);
      }
    }
  }
  return out;
}

EdgeColoringReport verify_edge_coloring(const FiniteGraph& g, const EdgeLists& lists, const EdgeColoring& c) {
  EdgeColoringReport rep;
  for (const Edge& e : g.edges()) {
    auto it = c.find(e);
    if (it == c.end()) {
      rep.uncolored.push_back(e);
      continue;
    }
    auto lt = lists.find(e);
    if (lt == lists.end() || std::find(lt->second.begin(), lt->second.end(), it->second) == lt->second.end()) {
      rep.off_list.push_back(e);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Edge e1 = make_edge(v, nb[i]);
        const Edge e2 = make_edge(v, nb[j]);
        auto a = c.find(e1);
        auto b = c.find(e2);
        if (a != c.end() && b != c.end() && a->second == b->second) rep.conflicts.emplace_back(e1, e2);
      }
    }
  }
  return rep;
}

EdgeLists uniform_lists(const FiniteGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.max_degree()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  EdgeLists lists;
  for (const Edge& e : g.edges()) lists.emplace(e, all);
  return lists;
}

}  // namespace acs
