#include <gtest/gtest.h>

#include <cmath>

#include "cctri/oracle.hpp"
#include "cctri/separators.hpp"
#include "support.hpp"

namespace cctri {
namespace {

using test::as_set;
using test::set1;

TEST(FullComponents, Examples) {
  EXPECT_EQ(full_components(test::c4(), set1(4, {1, 3})), (std::vector{set1(4, {2}), set1(4, {4})}));
  EXPECT_EQ(full_components(test::c4(), set1(4, {1, 2})), (std::vector{set1(4, {3, 4})}));
  EXPECT_EQ(full_components(test::k4(), set1(4, {1})), (std::vector{set1(4, {2, 3, 4})}));
}

TEST(IsMinimalSeparator, Examples) {
  EXPECT_TRUE(is_minimal_separator(test::p3(), set1(3, {2})));
  EXPECT_FALSE(is_minimal_separator(test::c4(), set1(4, {1, 2})));
  GraphWithCover k = gen_kcc2(3);
  EXPECT_TRUE(is_minimal_separator(k.graph, VertexSet(6, {3, 4})));
}

TEST(EnumerateMinimalSeparators, Examples) {
  EXPECT_EQ(enumerate_minimal_separators(test::p3()), (std::vector{set1(3, {2})}));
  EXPECT_EQ(enumerate_minimal_separators(test::c4()), (std::vector{set1(4, {1, 3}), set1(4, {2, 4})}));
  EXPECT_TRUE(enumerate_minimal_separators(gen_complete(5)).empty());
}

TEST(EnumerateMinimalSeparators, MatchesOracle) {
  for (const auto& cg : test::random_corpus(120)) {
    const Graph& g = cg.graph;
    auto expected = as_set(oracle::brute_minimal_separators(g));
    EXPECT_EQ(as_set(enumerate_minimal_separators(g)), expected) << "seed " << cg.seed;
    std::vector<VertexSet> hashed, poly;
    for_each_minimal_separator(g, g.vertices(), [&](const VertexSet& s) { hashed.push_back(s); });
    for_each_minimal_separator_polyspace(g, g.vertices(), [&](const VertexSet& s) { poly.push_back(s); });
    EXPECT_EQ(hashed.size(), expected.size());
    EXPECT_EQ(poly.size(), expected.size());
    EXPECT_EQ(as_set(hashed), expected);
    EXPECT_EQ(as_set(poly), expected);
  }
}

TEST(EnumerateMinimalSeparators, CoverBound) {
  for (const auto& cg : test::random_corpus(120)) {
    int cc = greedy_cover(cg.graph).size();
    EXPECT_LE(enumerate_minimal_separators(cg.graph).size(), std::pow(2.0, cc));
  }
}

TEST(Blocks, Examples) {
  auto vertices = [](const std::vector<Block>& bs) {
    std::vector<VertexSet> out;
    for (const Block& b : bs) out.push_back(b.vertices);
    return as_set(out);
  };
  EXPECT_EQ(vertices(all_blocks(test::c4())),
            as_set({set1(4, {1}), set1(4, {2}), set1(4, {3}), set1(4, {4})}));
  EXPECT_EQ(vertices(all_blocks(test::p3())), as_set({set1(3, {1}), set1(3, {3})}));
  EXPECT_TRUE(all_blocks(test::k4()).empty());
}

TEST(Blocks, MatchOracleAndKeys) {
  for (const auto& cg : test::random_corpus(80)) {
    const Graph& g = cg.graph;
    CliqueCover w = greedy_cover(g);
    auto blocks = all_blocks(g, &w);
    std::vector<VertexSet> vs;
    std::set<std::uint64_t> keys;
    for (const Block& b : blocks) {
      vs.push_back(b.vertices);
      keys.insert(b.key.bits());
      EXPECT_EQ(b.separator, neighborhood(g, b.vertices));
      EXPECT_TRUE(is_minimal_separator(g, b.separator));
      EXPECT_EQ(part_vertices(w, b.key), b.vertices);
    }
    EXPECT_EQ(keys.size(), blocks.size());
    EXPECT_EQ(vs.size(), as_set(vs).size());
    EXPECT_EQ(as_set(vs), as_set(oracle::brute_blocks(g)));
  }
}

TEST(BlockIndex, Lookup) {
  Graph g = gen_grid(3, 3);
  CliqueCover w = greedy_cover(g);
  auto seps = enumerate_minimal_separators(g);
  BlockIndex plain(g, seps), keyed(g, seps, &w);
  ASSERT_EQ(plain.size(), keyed.size());
  for (int i = 0; i < keyed.size(); ++i) {
    const Block& b = keyed.block(i);
    EXPECT_EQ(keyed.find(b.vertices), i);
    EXPECT_EQ(keyed.lookup(b.vertices), i);
    EXPECT_EQ(keyed.find_key(b.key), i);
    EXPECT_EQ(plain.block(plain.find(b.vertices)).vertices, b.vertices);
  }
  EXPECT_EQ(keyed.find(VertexSet::full(9)), -1);
}

}  // namespace
}  // namespace cctri
