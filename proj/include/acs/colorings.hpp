#pragma once

// Greedy 2-colorings, matchings and edge list-colorings that follow the
// layers of a path decomposition.

#include <map>
#include <vector>

#include "acs/decomp.hpp"
#include "acs/graph.hpp"

namespace acs {

using TwoColoring = std::vector<int>;  // 0 or 1 per vertex
using Matching = std::vector<Edge>;    // sorted
using EdgeLists = std::map<Edge, std::vector<int>>;
using EdgeColoring = std::map<Edge, int>;

/// Alternates colors along each path, breaking parity once in the middle when
/// both endpoints are already colored with the wrong parity. Requires
/// pd.min_length >= 4 (>= 5 with `strict5`); throws PreconditionError
/// otherwise or if `pd` does not verify.
TwoColoring strongly_unfriendly(const FiniteGraph& g, const PathDecomposition& pd, bool strict5 = false);

struct UnfriendlyReport {
  std::vector<Vertex> strong;    // interior vertices with >= 2 same-colored neighbors
  std::vector<Vertex> majority;  // interior vertices with more same- than other-colored neighbors
  bool clean() const { return strong.empty() && majority.empty(); }
};

UnfriendlyReport verify_strongly_unfriendly(const FiniteGraph& g, const TwoColoring& c);

/// Matches the unmatched vertices of each path along alternate path edges.
/// When their count is odd, one vertex with edges left in later paths stays
/// open, preferring path endpoints. Requires pd.min_length >= 3.
Matching perfect_matching(const FiniteGraph& g, const PathDecomposition& pd);

struct MatchingReport {
  std::vector<Edge> bad_edges;              // not edges of g, or sharing a vertex
  std::vector<Vertex> unmatched_interior;
  bool clean() const { return bad_edges.empty() && unmatched_interior.empty(); }
};

MatchingReport verify_matching(const FiniteGraph& g, const Matching& m);

/// Least free list color per edge. A path whose two endpoints both carry
/// colored edges gets its end edges first, then the rest in order; other paths
/// are colored from the constrained end onward. Requires pd.min_length >= 3
/// and lists of at least max-degree distinct colors (PreconditionError);
/// throws GenerationError if an edge runs out of colors.
EdgeColoring edge_list_coloring(const FiniteGraph& g, const PathDecomposition& pd, const EdgeLists& lists);

struct EdgeColoringReport {
  std::vector<Edge> uncolored;
  std::vector<Edge> off_list;
  std::vector<std::pair<Edge, Edge>> conflicts;  // incident edges sharing a color
  bool clean() const { return uncolored.empty() && off_list.empty() && conflicts.empty(); }
};

EdgeColoringReport verify_edge_coloring(const FiniteGraph& g, const EdgeLists& lists, const EdgeColoring& c);

/// Lists {0, ..., d-1} on every edge, d the maximum degree.
EdgeLists uniform_lists(const FiniteGraph& g);

}  // namespace acs
