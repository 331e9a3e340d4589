#pragma once

// Finite graphs with a marked truncation frontier ("boundary"), action graphs
// whose arcs carry generator letters, nets, and forward-recurrent sets.
//
// Vertex ids are always 0..vertex_count()-1.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "acs/words.hpp"

namespace acs {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class FiniteGraph {
 public:
  FiniteGraph() = default;
  /// Throws PreconditionError on loops, duplicate edges or unknown ids.
  FiniteGraph(int vertex_count, const std::vector<Edge>& edges, std::vector<bool> boundary = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool is_boundary(Vertex v) const { return boundary_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& boundary() const { return boundary_; }
  int max_degree() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<bool> boundary_;
};

/// x ->(gen,sign) y means letter(gen,sign) . x = y.
struct Arc {
  Vertex src = 0;
  Vertex dst = 0;
  int gen = 0;
  int sign = +1;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class ActionGraph {
 public:
  ActionGraph() = default;
  /// The undirected support of `arcs` must equal the edges of `graph`.
  ActionGraph(FiniteGraph graph, std::vector<Arc> arcs);

  const FiniteGraph& graph() const { return graph_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Letter carrying u to its neighbor v, using inverses for reversed arcs.
  Letter letter_between(Vertex u, Vertex v, const Presentation& p) const;

 private:
  FiniteGraph graph_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> arcs_at_;  // arc indices touching each vertex
};

/// Vertex cap used by cayley_ball unless overridden.
constexpr std::size_t kDefaultVertexCap = 2'000'000;

/// Ball of the Cayley graph of the free product around the identity.
/// Vertex 0 is the identity; ids follow BFS order with letters in lex order.
ActionGraph cayley_ball(const Presentation& p, int radius, std::size_t vertex_cap = kDefaultVertexCap);

/// Reduced word (innermost-first) of each vertex of a cayley_ball result.
std::vector<Word> cayley_ball_words(const Presentation& p, int radius);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const FiniteGraph& g, Vertex u, Vertex v);

/// BFS distances from `source`; -1 marks unreachable vertices. Stops expanding
/// past `limit` when limit >= 0.
std::vector<int> bfs_distances(const FiniteGraph& g, Vertex source, int limit = -1);

/// Connected component id per vertex, numbered by least member.
std::vector<int> component_ids(const FiniteGraph& g);

bool is_forest(const FiniteGraph& g);

struct Net {
  std::vector<std::vector<Vertex>> stages;
  /// spacing[i] = d(i) = 3 n 6^i, saturated at kUnboundedSpacing.
  std::vector<std::int64_t> spacing;
};

/// Spacing value meaning "one vertex per component".
constexpr std::int64_t kUnboundedSpacing = std::int64_t{1} << 60;

/// d(i) = 3 n 6^i, saturated once 3 d(i) reaches `diameter` (no two
/// vertices of one component can then be farther apart than 3 d(i)).
std::int64_t net_spacing(int n, int stage, int diameter);

/// Assigns every vertex (boundary included) to the least stage i at which it
/// is farther than 3 d(i) from the vertices already in stage i. Vertices are
/// scanned in id order; spacing saturates at the largest component diameter.
Net build_net(const FiniteGraph& g, int n);

/// Checks the Net invariants for `g`; returns an empty string on success.
std::string check_net(const FiniteGraph& g, const Net& net);

struct FunctionalGraph {
  /// next[v] is f(v), or -1 at a sink.
  std::vector<Vertex> next;

  int vertex_count() const { return static_cast<int>(next.size()); }
  /// Undirected support: v -- next[v].
  FiniteGraph support() const;
};

/// Greedy first-fit coloring of the distance-r power of the support; returns
/// the vertices sharing the color of their component's sink.
std::vector<Vertex> forward_recurrent_independent(const FunctionalGraph& fg, int r);

/// First-fit coloring of the distance-r power of `g` in vertex-id order.
std::vector<int> greedy_power_coloring(const FiniteGraph& g, int r);

/// Uniform random labeled tree from a Pruefer sequence; leaves are boundary.
FiniteGraph random_tree(int vertices, std::uint64_t seed);

}  // namespace acs
