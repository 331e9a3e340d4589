#include "acs/realize.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "acs/error.hpp"

namespace acs {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

bool has(Mask m, int label) { return (m >> label) & 1U; }

int least(Mask m) {
  int i = 0;
  while (!has(m, i)) ++i;
  return i;
}

}  // namespace

bool WitnessReport::clean() const { return violation_count() == 0; }

std::size_t WitnessReport::violation_count() const {
  std::size_t c = 0;
  for (const auto& v : violations) c += v.size();
  return c;
}

std::vector<Transfer> path_steps(const ActionGraph& g, const Presentation& p, const Path& path) {
  const FiniteGraph& fg = g.graph();
  const Mask full = full_mask(p.pieces());
  std::vector<Transfer> steps;
  steps.reserve(path.empty() ? 0 : path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (fg.is_boundary(path[i]) || fg.is_boundary(path[i + 1])) {
      steps.push_back({full, full});
    } else {
      steps.push_back(transfer(g.letter_between(path[i], path[i + 1], p), p));
    }
  }
  return steps;
}

Realization realize_along_decomposition(const ActionGraph& g, const Presentation& p, const PathDecomposition& pd,
                                        const Seed& seed) {
  const FiniteGraph& fg = g.graph();
  const int n = p.pieces();
  if (auto rep = verify_path_decomposition(fg, pd); !rep.ok) {
    throw PreconditionError("invalid path decomposition: " + rep.violation);
  }
  std::vector<int> seeded(idx(fg.vertex_count()), -1);
  if (!seed.empty()) {
    std::vector<bool> endpoint(idx(fg.vertex_count()), false);
    if (!pd.layers.empty()) {
      for (const Path& path : pd.layers.front().paths) endpoint[idx(path.front())] = endpoint[idx(path.back())] = true;
    }
    for (auto [v, piece] : seed) {
      if (v < 0 || v >= fg.vertex_count() || !endpoint[idx(v)]) {
        throw PreconditionError("seed vertex " + std::to_string(v) + " is not a layer-0 path endpoint");
      }
      if (piece < 0 || piece >= n) throw PreconditionError("seed piece " + std::to_string(piece) + " out of range");
      seeded[idx(v)] = piece;
    }
  }

  Realization r{n, std::vector<int>(idx(fg.vertex_count()), -1)};
  const Mask full = full_mask(n);
  auto allowed = [&](Vertex v) {
    if (r.assignment[idx(v)] >= 0) return Mask{1} << r.assignment[idx(v)];
    if (seeded[idx(v)] >= 0) return Mask{1} << seeded[idx(v)];
    return full;
  };
  for (std::size_t li = 0; li < pd.layers.size(); ++li) {
    for (const Path& path : pd.layers[li].paths) {
      const auto labels = lex_least_labeling(path_steps(g, p, path), n, allowed(path.front()), allowed(path.back()));
      if (!labels) {
        throw PreconditionError("layer " + std::to_string(li) + " path from " + std::to_string(path.front()) +
                                " to " + std::to_string(path.back()) + " admits no consistent labeling");
      }
      for (std::size_t i = 0; i < path.size(); ++i) r.assignment[idx(path[i])] = (*labels)[i];
    }
  }
  for (int& a : r.assignment) {
    if (a < 0) a = 0;
  }
  return r;
}

namespace {

// Cycle vertices in traversal order, or empty if the component is a tree.
std::vector<Vertex> find_cycle(const FiniteGraph& fg, const std::vector<Vertex>& members) {
  std::vector<int> deg(idx(fg.vertex_count()), 0);
  std::vector<bool> removed(idx(fg.vertex_count()), false);
  std::vector<Vertex> queue;
  for (Vertex v : members) {
    deg[idx(v)] = fg.degree(v);
    if (deg[idx(v)] <= 1) queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex v = queue[i];
    removed[idx(v)] = true;
    for (Vertex w : fg.neighbors(v)) {
      if (!removed[idx(w)] && --deg[idx(w)] == 1) queue.push_back(w);
    }
  }
  std::vector<Vertex> core;
  for (Vertex v : members) {
    if (removed[idx(v)]) continue;
    if (deg[idx(v)] != 2) throw PreconditionError("component of vertex " + std::to_string(v) + " has two cycles");
    core.push_back(v);
  }
  if (core.empty()) return core;
  std::vector<Vertex> cycle{core.front()};
  Vertex prev = -1;
  Vertex cur = core.front();
  for (;;) {
    Vertex next = -1;
    for (Vertex w : fg.neighbors(cur)) {
      if (!removed[idx(w)] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == cycle.front()) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  if (cycle.size() != core.size()) {
    throw PreconditionError("component of vertex " + std::to_string(core.front()) + " has two cycles");
  }
  return cycle;
}

// Index of a pair that can be dropped when the cycle word is Case-2 shaped,
// or -1 when no window repeats a set up to complement.
int removable_pair(const Word& word, const Presentation& p) {
  const int n = p.pieces();
  const std::size_t l = word.size();
  std::vector<Transfer> t;
  for (const Letter& a : word) t.push_back(transfer(a, p));
  std::vector<Mask> chain{t[0].x};
  for (std::size_t i = 0; i < l; ++i) {
    const Mask v = chain.back();
    if (v == t[i].x) {
      chain.push_back(t[i].y);
    } else if (v == complement(t[i].x, n)) {
      chain.push_back(complement(t[i].y, n));
    } else {
      return -1;
    }
  }
  for (std::size_t span = 2; span <= l; ++span) {
    for (std::size_t i = 0; i + span <= l; ++i) {
      const Mask a = chain[i];
      const Mask b = chain[i + span];
      if (a == b || a == complement(b, n)) return word[i].gen;
    }
  }
  return -1;
}

}  // namespace

Realization realize_single_orbit(const ActionGraph& g, const Presentation& p) {
  const FiniteGraph& fg = g.graph();
  const int n = p.pieces();
  const Mask full = full_mask(n);
  Realization r{n, std::vector<int>(idx(fg.vertex_count()), -1)};
  const auto comp = component_ids(fg);
  std::vector<std::vector<Vertex>> members;
  for (Vertex v = 0; v < fg.vertex_count(); ++v) {
    const auto c = idx(comp[idx(v)]);
    if (members.size() <= c) members.resize(c + 1);
    members[c].push_back(v);
  }

  for (const auto& mem : members) {
    std::deque<Vertex> queue;
    const auto cycle = find_cycle(fg, mem);
    if (cycle.empty()) {
      r.assignment[idx(mem.front())] = 0;
      queue.push_back(mem.front());
    } else {
      Path closed = cycle;
      closed.push_back(cycle.front());
      const auto steps = path_steps(g, p, closed);
      std::optional<std::vector<int>> labels;
      for (int a = 0; a < n && !labels; ++a) labels = lex_least_labeling(steps, n, Mask{1} << a, Mask{1} << a);
      if (!labels) {
        Word word;
        for (std::size_t i = 0; i < cycle.size(); ++i) word.push_back(g.letter_between(closed[i], closed[i + 1], p));
        const int pair = removable_pair(word, p);
        throw NonMinimalGensetError("cycle through vertex " + std::to_string(cycle.front()) + " with word " +
                                        word_to_string(word) + " admits no consistent labeling",
                                    pair);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        r.assignment[idx(cycle[i])] = (*labels)[i];
        queue.push_back(cycle[i]);
      }
    }
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : fg.neighbors(x)) {
        if (r.assignment[idx(y)] >= 0) continue;
        Mask choice = full;
        if (!fg.is_boundary(x) && !fg.is_boundary(y)) {
          const Transfer t = transfer(g.letter_between(x, y, p), p);
          choice = has(t.x, r.assignment[idx(x)]) ? t.y : complement(t.y, n);
        }
        r.assignment[idx(y)] = least(choice);
        queue.push_back(y);
      }
    }
  }
  return r;
}

WitnessReport verify_realization(const ActionGraph& g, const Presentation& p, const Realization& r) {
  const FiniteGraph& fg = g.graph();
  const int n = p.pieces();
  if (r.assignment.size() != idx(fg.vertex_count())) throw PreconditionError("assignment is not total");
  WitnessReport rep;
  rep.violations.resize(static_cast<std::size_t>(p.generators()));
  rep.piece_sizes.assign(static_cast<std::size_t>(n), 0);
  for (int a : r.assignment) {
    if (a < 0 || a >= n) throw PreconditionError("piece " + std::to_string(a) + " out of range");
    ++rep.piece_sizes[static_cast<std::size_t>(a)];
  }
  for (const Arc& arc : g.arcs()) {
    if (fg.is_boundary(arc.src) || fg.is_boundary(arc.dst)) continue;
    const Transfer t = transfer({arc.gen, arc.sign}, p);
    if (has(t.x, r.assignment[idx(arc.src)]) != has(t.y, r.assignment[idx(arc.dst)])) {
      rep.violations[static_cast<std::size_t>(arc.gen)].push_back(arc);
    }
  }
  return rep;
}

}  // namespace acs
