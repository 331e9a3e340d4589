#pragma once

// Piece assignments on action graphs that satisfy the congruences of a
// generating set on every interior arc.

#include <cstddef>
#include <map>
#include <vector>

#include "acs/decomp.hpp"
#include "acs/graph.hpp"
#include "acs/words.hpp"

namespace acs {

struct Realization {
  int pieces = 0;
  std::vector<int> assignment;  // piece of each vertex
};

struct WitnessReport {
  /// violations[i]: interior arcs of generator i breaking its congruence.
  std::vector<std::vector<Arc>> violations;
  std::vector<std::size_t> piece_sizes;

  bool clean() const;
  std::size_t violation_count() const;
};

/// Seeds prescribe pieces for endpoints of layer-0 paths.
using Seed = std::map<Vertex, int>;

/// Labels each path, layer by layer, with the lex-least labeling that agrees
/// with its already assigned endpoints. Arcs touching the boundary impose no
/// constraint. Vertices without edges get piece 0.
/// Throws PreconditionError if `pd` does not verify, a seed is misplaced, or
/// some path has no consistent labeling (its word is bad).
Realization realize_along_decomposition(const ActionGraph& g, const Presentation& p, const PathDecomposition& pd,
                                        const Seed& seed = {});

/// Each component may hold at most one cycle. A cycle gets the lex-least
/// consistent labeling starting at its least vertex, heading to its lesser
/// cycle neighbor; the rest is filled greedily in BFS order with the least
/// admissible piece (an acyclic component starts with piece 0 at its least
/// vertex).
/// Throws NonMinimalGensetError when a cycle has no consistent labeling,
/// PreconditionError on a component with two cycles.
Realization realize_single_orbit(const ActionGraph& g, const Presentation& p);

/// Throws PreconditionError if the assignment is not total or out of range.
WitnessReport verify_realization(const ActionGraph& g, const Presentation& p, const Realization& r);

/// Transfers along a path; arcs with a boundary end are unconstrained.
std::vector<Transfer> path_steps(const ActionGraph& g, const Presentation& p, const Path& path);

}  // namespace acs
