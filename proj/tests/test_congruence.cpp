#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "acs/congruence.hpp"
#include "acs/error.hpp"
#include "oracles.hpp"

using namespace acs;

namespace {

RelationPair rp(std::initializer_list<int> s, std::initializer_list<int> t, int n) {
  return {PieceSubset::of(s, n), PieceSubset::of(t, n)};
}

void check_against_naive(int n, const std::vector<RelationPair>& pairs) {
  std::vector<std::pair<Mask, Mask>> raw;
  for (const auto& p : pairs) raw.emplace_back(p.s.mask, p.t.mask);
  const auto rel = oracle::naive_closure(n, raw);
  const CongruenceSystem e = closure(n, pairs);
  const Mask full = full_mask(n);
  for (Mask a = 1; a < full; ++a)
    for (Mask b = 1; b < full; ++b) REQUIRE(e.related(a, b) == rel[a][b]);
}

}  // namespace

TEST_CASE("closure of no pairs is the identity") {
  const auto e = closure(4, {});
  CHECK(e.classes().size() == 14);
  CHECK(e == CongruenceSystem(4));
}

TEST_CASE("closure rejects piece counts outside [2,16]") {
  CHECK_THROWS_AS(closure(1, {}), CapacityError);
  CHECK_THROWS_AS(closure(17, {}), CapacityError);
}

TEST_CASE("paradoxical closure matches the fixed-point oracle") {
  const auto pairs = std::vector<RelationPair>{rp({0}, {0, 1, 2}, 4), rp({1}, {0, 1, 3}, 4)};
  check_against_naive(4, pairs);
  const auto e = closure(4, pairs);
  const std::vector<std::vector<Mask>> expected{{1, 7}, {2, 11}, {3}, {4, 13}, {5}, {6}, {8, 14}, {9}, {10}, {12}};
  CHECK(e.classes() == expected);
}

TEST_CASE("3-divisibility classes") {
  const auto e = closure(3, {rp({0}, {1}, 3), rp({1}, {2}, 3)});
  CHECK(e.related(1, 2));
  CHECK(e.related(2, 4));
  CHECK(e.related(6, 5));
  CHECK(e.related(5, 3));
  CHECK_FALSE(e.related(1, 6));
  CHECK(e.classes().size() == 2);
}

TEST_CASE("closure agrees with the oracle on random pair sets and is idempotent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Mask full = full_mask(n);
    std::vector<RelationPair> pairs;
    const int count = static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      const Mask s = 1 + rng() % (full - 1);
      const Mask t = 1 + rng() % (full - 1);
      pairs.push_back({PieceSubset(s, n), PieceSubset(t, n)});
    }
    check_against_naive(n, pairs);
    const auto e = closure(n, pairs);
    // Complement closure on every related pair.
    for (Mask a = 1; a < full; ++a)
      for (Mask b = 1; b < full; ++b)
        if (e.related(a, b)) REQUIRE(e.related(complement(a, n), complement(b, n)));
    // Idempotence: closing the class relation again changes nothing.
    std::vector<RelationPair> flat;
    for (const auto& cls : e.classes())
      for (Mask m : cls) flat.push_back({PieceSubset(cls.front(), n), PieceSubset(m, n)});
    CHECK(closure(n, flat) == e);
  }
}

TEST_CASE("from_classes validates its input") {
  CHECK_NOTHROW(CongruenceSystem::from_classes(2, {{1}, {2}}));
  CHECK_THROWS_AS(CongruenceSystem::from_classes(3, {{1, 2}, {4}, {3}, {5}, {6}}), ParseError);
  CHECK_THROWS_AS(CongruenceSystem::from_classes(2, {{1}}), ParseError);
}

TEST_CASE("non-complementing") {
  CHECK_FALSE(is_non_complementing(preset(Preset::kDivisibility, 2).system));
  CHECK(is_non_complementing(preset(Preset::kDivisibility, 3).system));
  CHECK(is_non_complementing(preset(Preset::kParadoxical, 4).system));
}

TEST_CASE("non-expanding") {
  CHECK(is_non_expanding(CongruenceSystem(4)).non_expanding);
  const auto para = preset(Preset::kParadoxical, 4).system;
  const auto res = is_non_expanding(para);
  REQUIRE_FALSE(res.non_expanding);
  REQUIRE(res.witness);
  CHECK(res.witness->v == std::vector<Mask>{7});
  CHECK(res.witness->w == std::vector<Mask>{1});
  CHECK(validate_witness(para, *res.witness));
  for (int n = 3; n <= 8; ++n) CHECK(is_non_expanding(preset(Preset::kDivisibility, n).system).non_expanding);
}

TEST_CASE("non-expanding agrees with the chain oracle for n <= 4") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Mask full = full_mask(n);
    std::vector<RelationPair> pairs;
    const int count = static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      pairs.push_back({PieceSubset(1 + rng() % (full - 1), n), PieceSubset(1 + rng() % (full - 1), n)});
    }
    const auto e = closure(n, pairs);
    const auto res = is_non_expanding(e);
    REQUIRE(res.non_expanding == !oracle::naive_is_expanding(e));
    if (res.witness) REQUIRE(validate_witness(e, *res.witness));
  }
}

TEST_CASE("witness validation rejects broken chains") {
  const auto para = preset(Preset::kParadoxical, 4).system;
  CHECK_FALSE(validate_witness(para, ExpansionWitness{{7}, {7}}));
  CHECK_FALSE(validate_witness(para, ExpansionWitness{{3}, {1}}));
}

TEST_CASE("complementary pairs") {
  CHECK(complementary_pairs(preset(Preset::kDivisibility, 3).system).empty());
  const auto two = complementary_pairs(preset(Preset::kDivisibility, 2).system);
  REQUIRE(two.size() == 1);
  CHECK(two[0].s.mask == 1);
  CHECK(two[0].t.mask == 2);
  CHECK(complementary_pairs(CongruenceSystem(5)).empty());
  for (int n = 2; n <= 5; ++n) {
    const auto e = preset(Preset::kDivisibility, n).system;
    CHECK(is_non_complementing(e) == complementary_pairs(e).empty());
  }
}

TEST_CASE("minimize_good_generating") {
  const auto div3 = preset(Preset::kDivisibility, 3).system;
  const GeneratingSet seed{3, {rp({0}, {1}, 3), rp({1}, {2}, 3), rp({0}, {2}, 3)}};
  const auto min = minimize_good_generating(div3, seed);
  CHECK(min.pairs.size() == 2);
  CHECK(closure(3, min.pairs) == div3);
  // Removal runs in list order, so the first pair goes first.
  CHECK(min.pairs[0].s.mask == 2);
  CHECK(min.pairs[0].t.mask == 4);

  CHECK(minimize_good_generating(CongruenceSystem(4), GeneratingSet{4, {}}).pairs.empty());

  const auto para = preset(Preset::kParadoxical, 4);
  CHECK(minimize_good_generating(para.system, para.generators).pairs.size() == 2);

  CHECK_THROWS_AS(minimize_good_generating(div3, GeneratingSet{3, {rp({0}, {1}, 3)}}), GenerationError);

  const auto div2 = preset(Preset::kDivisibility, 2);
  const auto g2 = minimize_good_generating(div2.system, GeneratingSet{2, {}});
  CHECK(g2.pairs.size() == 1);
}

TEST_CASE("presets") {
  const auto d3 = preset(Preset::kDivisibility, 3);
  REQUIRE(d3.generators.pairs.size() == 2);
  CHECK(d3.generators.pairs[0].s.mask == 1);
  CHECK(d3.generators.pairs[0].t.mask == 2);
  CHECK(d3.generators.pairs[1].s.mask == 2);
  CHECK(d3.generators.pairs[1].t.mask == 4);
  const auto p = preset(Preset::kParadoxical, 4);
  CHECK(p.generators.pairs[0].t.mask == 7);
  CHECK(p.generators.pairs[1].t.mask == 11);
  CHECK(preset(Preset::kDivisibility, 2).generators.pairs.size() == 1);
  CHECK_THROWS_AS(preset(Preset::kParadoxical, 5), PreconditionError);
  CHECK_THROWS_AS(parse_preset("banach"), PreconditionError);
  CHECK(parse_preset("paradoxical") == Preset::kParadoxical);
}

TEST_CASE("piece subsets must be nonempty and proper") {
  CHECK_THROWS_AS(PieceSubset(0, 3), PreconditionError);
  CHECK_THROWS_AS(PieceSubset(7, 3), PreconditionError);
  CHECK(mask_to_string(5) == "{0,2}");
}
