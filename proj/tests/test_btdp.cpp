#include <gtest/gtest.h>

#include <random>

#include "cctri/btdp.hpp"
#include "cctri/oracle.hpp"
#include "cctri/pmc.hpp"
#include "support.hpp"

namespace cctri {
namespace {

using test::set1;

std::int64_t count_fill(const Graph& g, const TreeDecomposition& td) {
  return static_cast<std::int64_t>(fill_edges(g, triangulation_of(g, td)).size());
}

WeightTable random_weights(const Graph& g, std::mt19937_64& rng) {
  WeightTable w(g.n());
  std::uniform_int_distribution<int> d(0, 5);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) w.set(u, v, d(rng));
  return w;
}

AdmissibleSet random_admissible(const Graph& g, double p, std::mt19937_64& rng) {
  AdmissibleSet f(g.n());
  std::bernoulli_distribution keep(p);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v) && keep(rng)) f.allow(u, v);
  return f;
}

TEST(Btdp, TreewidthExamples) {
  Graph c4 = test::c4();
  auto s = solve_treewidth(c4, enumerate_pmcs(c4));
  ASSERT_TRUE(s.value.feasible());
  EXPECT_EQ(s.value.value(), 2);
  EXPECT_EQ(s.witness.bags.size(), 2u);
  for (const VertexSet& b : s.witness.bags) EXPECT_EQ(b.size(), 3);
  for (int n = 1; n <= 6; ++n) {
    Graph k = gen_complete(n);
    EXPECT_EQ(solve_treewidth(k, enumerate_pmcs(k)).value.value(), n - 1);
  }
  Graph grid = gen_grid(3, 3);
  EXPECT_EQ(solve_treewidth(grid, enumerate_pmcs(grid)).value.value(), 3);
  EXPECT_FALSE(solve_treewidth(c4, enumerate_pmcs(c4), 1).value.feasible());
  EXPECT_TRUE(solve_treewidth(c4, enumerate_pmcs(c4), 2).value.feasible());
}

TEST(Btdp, FillExamples) {
  Graph c6 = gen_cycle(6);
  EXPECT_EQ(solve_weighted_fill(c6, enumerate_pmcs(c6), WeightTable::unit(6)).value.value(), 3);
  Graph c4 = test::c4();
  auto s = solve_weighted_fill(c4, enumerate_pmcs(c4), WeightTable::unit(4));
  EXPECT_EQ(s.value.value(), 1);
  Graph h = extract_triangulation(c4, s.witness);
  EXPECT_TRUE(is_chordal(h));
  EXPECT_EQ(h.m(), 5u);
  Graph k4 = test::k4();
  EXPECT_EQ(extract_triangulation(k4, solve_treewidth(k4, enumerate_pmcs(k4)).witness), k4);
  Graph grid = gen_grid(2, 3);
  EXPECT_EQ(extract_triangulation(grid, solve_weighted_fill(grid, enumerate_pmcs(grid), WeightTable::unit(6)).witness)
                .m(),
            grid.m() + 2);
}

TEST(Btdp, SandwichExamples) {
  Graph tree = gen_path(5);
  EXPECT_TRUE(solve_sandwich(tree, enumerate_pmcs(tree), AdmissibleSet(5)).value.feasible());
  Graph c4 = test::c4();
  EXPECT_FALSE(solve_sandwich(c4, enumerate_pmcs(c4), AdmissibleSet(4)).value.feasible());
  EXPECT_TRUE(solve_sandwich(c4, enumerate_pmcs(c4), AdmissibleSet::from_pairs(4, {{0, 2}})).value.feasible());
}

TEST(Btdp, AssignPmcToBlocks) {
  Graph k4 = test::k4();
  BlockIndex none(k4, enumerate_minimal_separators(k4));
  EXPECT_TRUE(assign_pmc_to_blocks(k4, none, VertexSet::full(4)).empty());

  Graph c4 = test::c4();
  BlockIndex idx(c4, enumerate_minimal_separators(c4));
  auto a = assign_pmc_to_blocks(c4, idx, set1(4, {1, 2, 3}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(idx.block(a[0].block).vertices, set1(4, {2}));
  EXPECT_TRUE(a[0].children.empty());

  Graph p3 = test::p3();
  BlockIndex pidx(p3, enumerate_minimal_separators(p3));
  auto b = assign_pmc_to_blocks(p3, pidx, set1(3, {1, 2}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(pidx.block(b[0].block).vertices, set1(3, {1}));
}

TEST(Btdp, AgreesWithOracle) {
  std::mt19937_64 rng(7);
  auto corpus = test::random_corpus(120);
  std::vector<Graph> graphs;
  for (const auto& cg : corpus) graphs.push_back(cg.graph);
  for (Graph g : test::structured_corpus(5)) graphs.push_back(std::move(g));
  for (const Graph& g : graphs) {
    auto pmcs = enumerate_pmcs(g);
    CliqueCover w = greedy_cover(g);
    for (const CliqueCover* cover : {static_cast<const CliqueCover*>(nullptr), static_cast<const CliqueCover*>(&w)}) {
      auto tw = solve_treewidth(g, pmcs, std::nullopt, cover);
      ASSERT_TRUE(tw.value.feasible());
      EXPECT_EQ(tw.value.value(), oracle::brute_treewidth(g));
      EXPECT_TRUE(is_valid_decomposition(g, tw.witness));
      EXPECT_EQ(tw.witness.width(), tw.value.value());

      auto fill = solve_weighted_fill(g, pmcs, WeightTable::unit(g.n()), cover);
      EXPECT_EQ(fill.value.value(), oracle::brute_fill_in(g));
      EXPECT_TRUE(is_valid_decomposition(g, fill.witness));
      EXPECT_EQ(count_fill(g, fill.witness), fill.value.value());
    }
    WeightTable wt = random_weights(g, rng);
    auto wf = solve_weighted_fill(g, pmcs, wt, &w);
    EXPECT_EQ(wf.value.value(), oracle::brute_weighted_fill(g, [&](Vertex u, Vertex v) { return wt.at(u, v); }));
    std::int64_t realised = 0;
    for (auto [u, v] : fill_edges(g, triangulation_of(g, wf.witness))) realised += wt.at(u, v);
    EXPECT_EQ(realised, wf.value.value());

    AdmissibleSet f = random_admissible(g, 0.5, rng);
    auto sw = solve_sandwich(g, pmcs, f, &w);
    bool expected = oracle::brute_sandwich(g, [&](Vertex u, Vertex v) { return f.admissible(u, v); });
    EXPECT_EQ(sw.value.feasible(), expected);
    if (expected) {
      for (auto [u, v] : fill_edges(g, triangulation_of(g, sw.witness))) EXPECT_TRUE(f.admissible(u, v));
    }
  }
}

TEST(Btdp, DisconnectedGraphs) {
  Graph g = test::graph1(7, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}});
  auto pmcs = enumerate_pmcs(g);
  auto tw = solve_treewidth(g, pmcs);
  EXPECT_EQ(tw.value.value(), 2);
  EXPECT_TRUE(is_valid_decomposition(g, tw.witness));
  EXPECT_EQ(solve_weighted_fill(g, pmcs, WeightTable::unit(7)).value.value(), 1);
}

TEST(Btdp, SolveVariant) {
  Graph g = gen_cycle(5);
  auto pmcs = enumerate_pmcs(g);
  CliqueCover w = greedy_cover(g);
  EXPECT_EQ(*solve(g, &w, TreewidthObjective{}, pmcs).value, 2);
  EXPECT_EQ(*solve(g, &w, WeightedFillObjective{WeightTable::unit(5)}, pmcs).value, 2);
  EXPECT_EQ(*solve(g, nullptr, SandwichObjective{AdmissibleSet::everything(5)}, pmcs).value, 0);
  EXPECT_FALSE(solve(g, nullptr, TreewidthObjective{1}, pmcs).value);
  WeightTable half(5, 10);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v)
      if (!g.adjacent(u, v)) half.set(u, v, 5);
  EXPECT_EQ(*solve(g, &w, WeightedFillObjective{half}, pmcs).value, Rational(1));
}

}  // namespace
}  // namespace cctri
