#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "acs/colorings.hpp"
#include "acs/error.hpp"
#include "graphs.hpp"

using namespace acs;
using fixtures::path_graph;
using fixtures::regular_tree;
using fixtures::spider;

namespace {

PathDecomposition single_path(int vertices) {
  Path p(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) p[static_cast<std::size_t>(i)] = i;
  PathDecomposition pd;
  pd.min_length = vertices - 1;
  pd.layers = {PathLayer{{p}}};
  return pd;
}

Presentation free_group(int gens) {
  GeneratingSet g{3, {}};
  for (int i = 0; i < gens; ++i) g.pairs.push_back({PieceSubset(1, 3), PieceSubset(2, 3)});
  return Presentation(g);
}

// Two layer-0 paths whose ends 4 and 9 are joined by a layer-1 path of length 5.
struct Bridge {
  FiniteGraph g;
  PathDecomposition pd;
};

Bridge bridge() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                          {4, 10}, {10, 11}, {11, 12}, {12, 13}, {9, 13}};
  PathDecomposition pd;
  pd.min_length = 4;
  pd.layers = {PathLayer{{Path{0, 1, 2, 3, 4}, Path{5, 6, 7, 8, 9}}}, PathLayer{{Path{4, 10, 11, 12, 13, 9}}}};
  return {FiniteGraph(14, edges), pd};
}

}  // namespace

TEST_CASE("bare even path alternates") {
  const auto g = path_graph(9);
  const auto c = strongly_unfriendly(g, single_path(9));
  for (int i = 0; i + 1 < 9; ++i) CHECK(c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(i + 1)]);
}

TEST_CASE("one parity break when both endpoints are fixed") {
  const auto b = bridge();
  const auto c = strongly_unfriendly(b.g, b.pd);
  REQUIRE(c[4] == c[9]);
  const Path& p = b.pd.layers[1].paths[0];
  int breaks = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) breaks += c[static_cast<std::size_t>(p[i])] == c[static_cast<std::size_t>(p[i + 1])];
  CHECK(breaks == 1);
  CHECK(c[4] != c[10]);
  CHECK(c[9] != c[13]);
  CHECK(verify_strongly_unfriendly(b.g, c).strong.empty());
}

TEST_CASE("unfriendly verifier") {
  const auto path = path_graph(5);
  CHECK(verify_strongly_unfriendly(path, {0, 1, 0, 1, 0}).clean());
  const FiniteGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto rep = verify_strongly_unfriendly(star, {0, 0, 0, 0});
  CHECK(rep.strong == std::vector<Vertex>{0});
  CHECK(rep.majority == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("unfriendly coloring of balls") {
  for (int gens : {2, 3}) {
    const auto ball = cayley_ball(free_group(gens), 6).graph();
    for (int n : {4, 5}) {
      const auto pd = path_decomposition(ball, n);
      CHECK(verify_strongly_unfriendly(ball, strongly_unfriendly(ball, pd)).clean());
      CHECK(verify_strongly_unfriendly(ball, strongly_unfriendly(ball, pd, n >= 5)).clean());
    }
  }
}

TEST_CASE("unfriendly coloring length thresholds") {
  const auto ball = cayley_ball(free_group(2), 4).graph();
  CHECK_THROWS_AS(strongly_unfriendly(ball, path_decomposition(ball, 3)), PreconditionError);
  CHECK_THROWS_AS(strongly_unfriendly(ball, path_decomposition(ball, 4), true), PreconditionError);
}

TEST_CASE("matching on paths") {
  const auto g = path_graph(8);
  const auto m = perfect_matching(g, single_path(8));
  CHECK(m == Matching{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(verify_matching(g, m).clean());
}

TEST_CASE("matching on 3-regular truncations") {
  const auto t = regular_tree(3, 2, 8);
  for (int n : {3, 4, 5}) {
    const auto pd = path_decomposition(t, n);
    const auto rep = verify_matching(t, perfect_matching(t, pd));
    CHECK(rep.clean());
  }
}

TEST_CASE("matching on balls") {
  for (int gens : {2, 3}) {
    const auto ball = cayley_ball(free_group(gens), 6).graph();
    CHECK(verify_matching(ball, perfect_matching(ball, path_decomposition(ball, 3))).clean());
  }
}

TEST_CASE("vertex matched in layer 0 is skipped later") {
  const auto b = bridge();
  PathDecomposition pd = b.pd;
  pd.min_length = 3;
  const auto m = perfect_matching(b.g, pd);
  // 4 is matched inside 0..4 and stays out of the layer-1 path's matching.
  int at4 = 0;
  for (const Edge& e : m) at4 += (e.first == 4 || e.second == 4) ? 1 : 0;
  CHECK(at4 == 1);
  CHECK(verify_matching(b.g, m).bad_edges.empty());
}

TEST_CASE("matching verifier") {
  const auto g = path_graph(4);
  const auto rep = verify_matching(g, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(rep.bad_edges.size() == 3);
  CHECK(rep.unmatched_interior == std::vector<Vertex>{3});
}

TEST_CASE("edge coloring of a single path") {
  const auto g = path_graph(7);
  const auto pd = single_path(7);
  const auto lists = uniform_lists(g);
  const auto c = edge_list_coloring(g, pd, lists);
  CHECK(verify_edge_coloring(g, lists, c).clean());
}

TEST_CASE("edge coloring of a 3-regular truncation with 3 colors") {
  const auto t = regular_tree(3, 2, 8);
  const auto lists = uniform_lists(t);
  for (int n : {3, 4, 5}) {
    const auto c = edge_list_coloring(t, path_decomposition(t, n), lists);
    CHECK(verify_edge_coloring(t, lists, c).clean());
  }
}

TEST_CASE("adversarial lists on a spider") {
  const auto sp = spider(5, 7, true);
  const auto pd = path_decomposition(sp, 3);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeLists lists;
    for (const Edge& e : sp.edges()) {
      std::vector<int> pool(12);
      for (int i = 0; i < 12; ++i) pool[static_cast<std::size_t>(i)] = i;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(sp.max_degree()));
      lists.emplace(e, pool);
    }
    const auto c = edge_list_coloring(sp, pd, lists);
    CHECK(verify_edge_coloring(sp, lists, c).clean());
  }
}

TEST_CASE("edge coloring preconditions") {
  const auto sp = spider(3, 6, true);
  const auto pd = path_decomposition(sp, 3);
  EdgeLists lists = uniform_lists(sp);
  lists.begin()->second = {0, 1};
  CHECK_THROWS_AS(edge_list_coloring(sp, pd, lists), PreconditionError);
  CHECK_THROWS_AS(edge_list_coloring(sp, path_decomposition(sp, 2), uniform_lists(sp)), PreconditionError);
}

TEST_CASE("decompositions need boundary leaves") {
  CHECK_THROWS_AS(path_decomposition(spider(3, 6), 3), PreconditionError);
}

TEST_CASE("edge coloring verifier") {
  const auto g = path_graph(3);
  const auto lists = uniform_lists(g);
  const auto rep = verify_edge_coloring(g, lists, {{{0, 1}, 1}});
  CHECK(rep.uncolored == std::vector<Edge>{{1, 2}});
  const auto rep2 = verify_edge_coloring(g, lists, {{{0, 1}, 1}, {{1, 2}, 1}});
  CHECK(rep2.conflicts.size() == 1);
  const auto rep3 = verify_edge_coloring(g, lists, {{{0, 1}, 5}, {{1, 2}, 1}});
  CHECK(rep3.off_list == std::vector<Edge>{{0, 1}});
}
