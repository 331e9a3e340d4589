#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "acs/cfrac.hpp"
#include "acs/error.hpp"
#include "acs/psl2.hpp"

using namespace acs;

namespace {

using S = QuadraticSurd;

const Moebius kA{1, 2, 0, 1};
const Moebius kB{1, 0, 2, 1};

bool is_graph_path(const FiniteGraph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) return false;
  }
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void check_arcs(const OrbitBall& ball, const std::vector<Moebius>& gens) {
  for (const Arc& a : ball.graph.arcs()) {
    CHECK(a.sign == 1);
    CHECK(moebius_apply(gens[static_cast<std::size_t>(a.gen)], ball.points[static_cast<std::size_t>(a.src)]) ==
          ball.points[static_cast<std::size_t>(a.dst)]);
  }
}

std::size_t nonempty(const std::vector<std::size_t>& sizes) {
  return static_cast<std::size_t>(std::count_if(sizes.begin(), sizes.end(), [](std::size_t z) { return z > 0; }));
}

}  // namespace

TEST_CASE("free subgroup generators") {
  CHECK(free_subgroup_generators(1) == std::vector<Moebius>{kA});
  CHECK(free_subgroup_generators(2) == std::vector<Moebius>{kA, kB});
  CHECK(free_subgroup_generators(3) == std::vector<Moebius>{kA * kA, kB * kA.inverse(), kA * kB});
  for (int k = 1; k <= 4; ++k) {
    const auto g = free_subgroup_generators(k);
    CHECK(g.size() == static_cast<std::size_t>(k));
    for (const Moebius& m : g) CHECK(m.det() == 1);
    CHECK(check_free(g, k <= 2 ? 7 : 5));
  }
  CHECK_THROWS_AS(free_subgroup_generators(0), PreconditionError);
}

TEST_CASE("check_free detects relations") {
  CHECK_FALSE(check_free({kA, kA}, 1));
  CHECK_FALSE(check_free({kA, kA * kA}, 2));
  // (alpha beta)^3 = 1 in PSL2.
  CHECK(check_free({moebius_alpha(), moebius_beta()}, 2));
  CHECK_FALSE(check_free({moebius_alpha(), moebius_beta()}, 3));
}

TEST_CASE("orbit ball of sqrt 2") {
  const auto gens = free_subgroup_generators(2);
  const OrbitBall ball = orbit_ball(gens, S::sqrt(2), 5);
  const FiniteGraph& g = ball.graph.graph();
  CHECK(ball.points[0] == S::sqrt(2));
  CHECK(g.vertex_count() == 405);
  CHECK(g.edge_count() == 405);  // one cycle: the stabilizer is cyclic
  REQUIRE(ball.find(S(2, 1, 2)));
  check_arcs(ball, gens);
  const auto dist = bfs_distances(g, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.is_boundary(v) == (dist[static_cast<std::size_t>(v)] == 5));
    if (!g.is_boundary(v)) CHECK(g.degree(v) == 4);
  }
}

TEST_CASE("orbit ball errors") {
  CHECK_THROWS_AS(orbit_ball({Moebius{3, 4, 2, 3}}, S::sqrt(2), 2), PreconditionError);
  CHECK_THROWS_AS(orbit_ball({kA, kA}, S::sqrt(2), 2), PreconditionError);
  CHECK_THROWS_AS(orbit_ball(free_subgroup_generators(2), S::sqrt(2), 8, 1000), CapacityError);
}

TEST_CASE("involution generators contribute one letter") {
  const std::vector<Moebius> psl2{moebius_alpha(), moebius_beta()};
  const OrbitBall ball = orbit_ball(psl2, S::sqrt(2), 4);
  check_arcs(ball, psl2);
  for (Vertex v = 0; v < ball.graph.graph().vertex_count(); ++v) {
    if (!ball.graph.graph().is_boundary(v)) CHECK(ball.graph.graph().degree(v) == 3);
  }
}

TEST_CASE("transfer ray") {
  const std::vector<Moebius> psl2{moebius_alpha(), moebius_beta()};
  const OrbitBall sub = orbit_ball(psl2, S::sqrt(2), 6);
  const FiniteGraph& g = sub.graph.graph();

  SUBCASE("ray inside the subgroup orbit is unchanged") {
    const std::vector<S> ray{S::sqrt(2), S(1, 1, 2), S(2, 1, 2)};
    const auto out = transfer_ray(ray, sub, pgl2_generators());
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sub.points[static_cast<std::size_t>(out[i])] == ray[i]);
  }
  SUBCASE("single point") {
    const auto out = transfer_ray({S::sqrt(2)}, sub, pgl2_generators());
    CHECK(out == std::vector<Vertex>{0});
    const S outside(0, 1, 2, 2);  // gamma(sqrt 2) = 1/sqrt 2
    const auto near = nearest_point(sub, outside, pgl2_generators(), 3);
    REQUIRE(near);
    CHECK(transfer_ray({outside}, sub, pgl2_generators()) == std::vector<Vertex>{*near});
  }
  SUBCASE("index-2 transfer of the f-orbit is a path") {
    for (const S& seed : {S::sqrt(2), S(1, 1, 5, 2), S::sqrt(7)}) {
      const OrbitBall ball = orbit_ball(psl2, seed, 6);
      const auto out = transfer_ray(end_selection_ray(seed, 12), ball, pgl2_generators());
      CHECK(!out.empty());
      CHECK(is_graph_path(ball.graph.graph(), out));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(transfer_ray({}, sub, pgl2_generators()), PreconditionError);
    CHECK_THROWS_AS(transfer_ray({S::sqrt(3)}, sub, pgl2_generators(), 3), PreconditionError);
  }
  CHECK(g.vertex_count() > 0);
}

TEST_CASE("demo on 3-divisibility") {
  const auto ps = preset(Preset::kDivisibility, 3);
  const Psl2Demo demo = psl2_demo(ps.system, ps.generators, {S::sqrt(2), S::sqrt(3)}, 8);
  CHECK(demo.clean());
  CHECK(demo.bad_word_bound == 5);
  REQUIRE(demo.seeds.size() == 2);
  for (const SeedReport& s : demo.seeds) {
    CHECK(s.method == "single-orbit");
    CHECK(s.report.clean());
    CHECK(nonempty(s.report.piece_sizes) == 3);
    CHECK(s.edges == static_cast<std::size_t>(s.vertices));
  }
}

TEST_CASE("demo end-selection branch") {
  const auto ps = preset(Preset::kDivisibility, 3);
  const S seed(3, 1, 67, 7);
  const Psl2Demo demo = psl2_demo(ps.system, ps.generators, {seed}, 7);
  REQUIRE(demo.seeds.size() == 1);
  const SeedReport& s = demo.seeds[0];
  CHECK(s.method == "end-selection");
  CHECK(s.report.clean());
  CHECK(nonempty(s.report.piece_sizes) == 3);
  REQUIRE(s.end);
  CHECK(s.ray.back() == *s.end);
}

TEST_CASE("demo on 4-divisibility") {
  const auto ps = preset(Preset::kDivisibility, 4);
  const Psl2Demo demo = psl2_demo(ps.system, ps.generators, {S::sqrt(3)}, 8);
  CHECK(demo.clean());
  CHECK(demo.generators.size() == 3);
}

TEST_CASE("demo preconditions") {
  const auto para = preset(Preset::kParadoxical, 4);
  CHECK_THROWS_AS(psl2_demo(para.system, para.generators, {S::sqrt(2)}, 4), PreconditionError);
  const auto ps = preset(Preset::kDivisibility, 3);
  CHECK_THROWS_AS(psl2_demo(ps.system, ps.generators, {S::rational(1, 2)}, 4), PreconditionError);
  CHECK_THROWS_AS(psl2_demo(ps.system, ps.generators, {S::sqrt(2)}, 0), PreconditionError);
}
