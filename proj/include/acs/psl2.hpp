#pragma once

// Orbits of quadratic surds under finitely generated subgroups of PGL2(Z),
// and the pipeline that realizes a congruence system on truncated orbits.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acs/congruence.hpp"
#include "acs/graph.hpp"
#include "acs/realize.hpp"
#include "acs/surd.hpp"

namespace acs {

/// Free generators of a finite-index subgroup of the level-2 Sanov group
/// <A, B>, A = [[1,2],[0,1]], B = [[1,0],[2,1]]. k = 1 gives {A}. Otherwise,
/// with m = k - 1, the Schreier basis {A^m, A^i B A^-(i+1) for i < m - 1,
/// A^(m-1) B} of the words whose total exponent is divisible by m.
/// Throws PreconditionError for k < 1.
std::vector<Moebius> free_subgroup_generators(int k);

/// True when distinct reduced words of length <= radius in `gens` give
/// distinct elements of PSL2, so there is no relation of length <= 2 radius.
bool check_free(const std::vector<Moebius>& gens, int radius);

/// The ball of radius R around a seed in its Schreier graph. Arc
/// x ->(i,+1) y means gens[i] x = y. Points at distance R are boundary.
struct OrbitBall {
  ActionGraph graph;
  std::vector<QuadraticSurd> points;  // by vertex id, BFS order
  std::map<QuadraticSurd, Vertex> index;

  std::optional<Vertex> find(const QuadraticSurd& x) const;
};

/// Generators with M^2 = 1 in PSL2 contribute one letter. Throws
/// PreconditionError if a generator fixes an orbit point (loop) or two
/// letters join the same pair (multi-edge), CapacityError past `vertex_cap`.
OrbitBall orbit_ball(const std::vector<Moebius>& gens, const QuadraticSurd& seed, int radius,
                     std::size_t vertex_cap = kDefaultVertexCap);

/// Closest point of `sub` to y in the Schreier graph of `ambient` (letters
/// tried in list order, inverses after each generator), within max_dist.
std::optional<Vertex> nearest_point(const OrbitBall& sub, const QuadraticSurd& y,
                                    const std::vector<Moebius>& ambient, int max_dist);

/// Moves each ray point to its nearest point of `sub`, joins consecutive
/// images by lex-least shortest paths in sub's graph and erases loops.
/// Throws PreconditionError on an empty ray or a point with no nearby image,
/// and when consecutive images are disconnected.
std::vector<Vertex> transfer_ray(const std::vector<QuadraticSurd>& ray, const OrbitBall& sub,
                                 const std::vector<Moebius>& ambient, int max_dist = 8);

/// Ambient generators of PGL2(Z) used by the f-orbit: alpha and gamma.
std::vector<Moebius> pgl2_generators();

struct SeedReport {
  QuadraticSurd seed;
  std::string method;  // "single-orbit" or "end-selection"
  int vertices = 0;
  std::size_t edges = 0;
  std::optional<Vertex> end;  // end-selection only
  std::vector<Vertex> ray;    // end-selection only
  Realization realization;
  WitnessReport report;
};

struct Psl2Demo {
  std::vector<Moebius> generators;
  int bad_word_bound = 0;
  std::vector<SeedReport> seeds;

  bool clean() const;
};

/// Realizes `genset` (a good generating set of `e`) on the orbit ball of each
/// seed under free_subgroup_generators. Balls with a cycle go through
/// realize_single_orbit. Acyclic balls select an end from the f-orbit of the
/// seed and are decomposed with paths of length >= the bad-word bound.
/// Throws PreconditionError if e is complementing or expanding, if a pair of
/// the genset is an involution, if a seed is rational, or if the generators
/// fail check_free at `radius`.
Psl2Demo psl2_demo(const CongruenceSystem& e, const GeneratingSet& genset, const std::vector<QuadraticSurd>& seeds,
                   int radius, int word_cap = 12, std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace acs
