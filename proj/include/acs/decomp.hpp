#pragma once

// Spindly trees and layered path decompositions of acyclic graphs.
//
// Every "lex-least" choice compares vertex-id sequences.

#include <optional>
#include <string>
#include <vector>

#include "acs/graph.hpp"

namespace acs {

/// Vertex sequence x_0..x_l of a simple path, l >= 1.
using Path = std::vector<Vertex>;

struct PathLayer {
  std::vector<Path> paths;
};

struct PathDecomposition {
  int min_length = 1;
  bool waiver = true;  // paths with a boundary endpoint may be shorter
  std::vector<PathLayer> layers;

  std::size_t path_count() const;
};

struct SpindlyCert {
  std::optional<Vertex> distinguished_leaf;
  int n = 1;
};

/// Leaves on the boundary are exempt from both distance conditions. Returns
/// the certificate without a distinguished leaf when possible, otherwise the
/// least leaf that works. Throws PreconditionError if `t` is not a tree.
std::optional<SpindlyCert> is_n_spindly(const FiniteGraph& t, int n);

/// True when `cert` witnesses that the tree `t` is n-spindly.
bool check_spindly_cert(const FiniteGraph& t, const SpindlyCert& cert);

/// Edge-disjoint end-ordered paths covering the tree. Throws
/// PreconditionError on an invalid certificate.
std::vector<Path> spindly_paths(const FiniteGraph& t, const SpindlyCert& cert);

/// Sorted edge lists of the stages G_0, G_1, ... (one per net stage).
/// Throws GenerationError if some edge ends up uncovered.
std::vector<std::vector<Edge>> spindly_decompose(const FiniteGraph& g, int n, const Net& net);

/// Connected pieces of an edge set, ordered by least vertex.
std::vector<std::vector<Edge>> edge_components(const std::vector<Edge>& edges);

/// Net, spindly stages and per-component spindly paths, layered by the
/// derivative of the precedence order. Every leaf must be a boundary vertex
/// (PreconditionError otherwise).
PathDecomposition path_decomposition(const FiniteGraph& g, int n);

/// Cuts paths longer than 2n into ceil(L/2n) near-equal pieces (earlier
/// pieces longer) and re-layers.
PathDecomposition normalize_lengths(const PathDecomposition& pd, int n);

/// `ends` holds one list of one or two boundary vertices per component that
/// has an edge.
PathDecomposition end_selection_decomposition(const FiniteGraph& g,
                                              const std::vector<std::vector<Vertex>>& ends, int n);

struct DecompReport {
  bool ok = true;
  std::string violation;  // first violation found
};

DecompReport verify_path_decomposition(const FiniteGraph& g, const PathDecomposition& pd);

/// Ordered groups of paths, e.g. the spindly paths of one component.
struct PathSequence {
  int rank = 0;  // stage; lower ranks precede higher ones
  std::vector<Path> paths;
};

/// Layer j receives the paths whose longest chain of earlier vertex-sharing
/// paths has j members. Paths are ordered by (rank, sequence index, position).
std::vector<PathLayer> derivative_layers(int vertex_count, const std::vector<PathSequence>& seqs);

/// Compact copy of the subgraph spanned by `edges`, keeping boundary flags.
/// `ids` receives the original id of each compact vertex (ascending).
FiniteGraph edge_subgraph(const FiniteGraph& g, const std::vector<Edge>& edges, std::vector<Vertex>& ids);

}  // namespace acs
