#include <gtest/gtest.h>

#include <random>

#include "cctri/btdp.hpp"
#include "cctri/hyper.hpp"
#include "cctri/oracle.hpp"
#include "cctri/pmc.hpp"
#include "cctri/polyspace.hpp"
#include "support.hpp"

namespace cctri {
namespace {

using test::set1;

TEST(Polyspace, Examples) {
  Graph c4 = test::c4();
  EXPECT_TRUE(treewidth_polyspace(c4, greedy_cover(c4), 2));
  EXPECT_FALSE(treewidth_polyspace(c4, greedy_cover(c4), 1));
  Graph tree = gen_path(6);
  EXPECT_EQ(*solve_polyspace(tree, greedy_cover(tree), WeightedFillObjective{WeightTable::unit(6)}).value, 0);
  Graph k3 = gen_complete(3);
  Hypergraph tri(3, {set1(3, {1, 2}), set1(3, {2, 3}), set1(3, {1, 3})});
  PrimalGraph p = primal_graph(tri);
  FcovFunction f = [&](const VertexSet& x) { return fcov(tri, x); };
  EXPECT_EQ(*solve_polyspace(p.graph, p.cover, FhtwObjective{f}).value, Rational(3, 2));
  EXPECT_THROW(solve_polyspace(k3, greedy_cover(k3), SandwichObjective{AdmissibleSet(3)}), std::invalid_argument);
}

TEST(PolyspaceNocover, Examples) {
  EXPECT_TRUE(treewidth_polyspace_nocover(test::c4(), 4, 2));
  EXPECT_FALSE(treewidth_polyspace_nocover(test::k4(), 1, 2));
  EXPECT_TRUE(treewidth_polyspace_nocover(test::k4(), 1, 3));
  // Below the cover number the answer may be infeasible, never too small.
  Graph grid = gen_grid(3, 3);
  for (int cc = 1; cc <= 12; ++cc) {
    Solution s = solve_polyspace_nocover(grid, cc, TreewidthObjective{});
    if (s.value) {
      EXPECT_GE(*s.value, 3);
    }
  }
}

TEST(Realization, CompletesSeparator) {
  Graph c4 = test::c4();
  std::vector<Vertex> orig;
  Graph r = realization(c4, set1(4, {2}), &orig);
  EXPECT_EQ(orig, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(r.is_complete());
}

TEST(Polyspace, AgreesWithBtdp) {
  std::mt19937_64 rng(3);
  std::vector<Graph> graphs;
  for (const auto& cg : test::random_corpus(80, 10)) graphs.push_back(cg.graph);
  for (Graph g : test::structured_corpus(5)) graphs.push_back(std::move(g));
  PolyspaceOptions opts;
  opts.witness = true;
  for (const Graph& g : graphs) {
    CliqueCover w = greedy_cover(g);
    auto pmcs = enumerate_pmcs(g);
    const int tw = oracle::brute_treewidth(g);

    Solution t = solve_polyspace(g, w, TreewidthObjective{}, opts);
    ASSERT_TRUE(t.value);
    EXPECT_EQ(*t.value, tw);
    EXPECT_TRUE(is_valid_decomposition(g, t.witness));
    EXPECT_EQ(t.witness.width(), tw);
    EXPECT_TRUE(treewidth_polyspace(g, w, tw));
    EXPECT_FALSE(treewidth_polyspace(g, w, tw - 1));

    Solution nc = solve_polyspace_nocover(g, w.size(), TreewidthObjective{}, opts);
    ASSERT_TRUE(nc.value);
    EXPECT_EQ(*nc.value, tw);
    EXPECT_TRUE(treewidth_polyspace_nocover(g, w.size(), tw));
    EXPECT_FALSE(treewidth_polyspace_nocover(g, w.size(), tw - 1));

    WeightTable wt(g.n());
    std::uniform_int_distribution<int> d(0, 4);
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (!g.adjacent(u, v)) wt.set(u, v, d(rng));
    Solution ref = solve(g, &w, WeightedFillObjective{wt}, pmcs);
    Solution f = solve_polyspace(g, w, WeightedFillObjective{wt}, opts);
    EXPECT_EQ(*f.value, *ref.value);
    EXPECT_TRUE(is_valid_decomposition(g, f.witness));
    std::int64_t realised = 0;
    for (auto [u, v] : fill_edges(g, triangulation_of(g, f.witness))) realised += wt.at(u, v);
    EXPECT_EQ(Rational(realised), *f.value);
    EXPECT_EQ(*solve_polyspace_nocover(g, w.size(), WeightedFillObjective{wt}).value, *ref.value);
  }
}

TEST(Polyspace, InvalidCoverRejected) {
  Graph c4 = test::c4();
  CliqueCover bad(4, {set1(4, {1, 2}), set1(4, {2, 3})});
  EXPECT_THROW(solve_polyspace(c4, bad, TreewidthObjective{}), std::invalid_argument);
}

}  // namespace
}  // namespace cctri
