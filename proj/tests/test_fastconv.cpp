#include <gtest/gtest.h>

#include <random>

#include "cctri/btdp.hpp"
#include "cctri/fastconv.hpp"
#include "cctri/oracle.hpp"
#include "cctri/pmc.hpp"
#include "support.hpp"

namespace cctri {
namespace {

SetFunction random_function(int cc, std::int64_t bound, double inf_rate, std::mt19937_64& rng) {
  SetFunction f(cc);
  std::uniform_int_distribution<std::int64_t> d(0, bound);
  std::bernoulli_distribution inf(inf_rate);
  for (auto& v : f.values) v = inf(rng) ? SetFunction::kInfinity : d(rng);
  return f;
}

TEST(Convolution, Examples) {
  SetFunction f(2), g(2);
  f.values = {0, 2, 5, 9};
  g.values = {1, 3, 1, 4};
  for (auto m : {ConvolutionMethod::kDirect, ConvolutionMethod::kTransform, ConvolutionMethod::kAuto}) {
    SetFunction h = min_plus_subset_convolution(f, g, 9, m);
    EXPECT_EQ(h[0b11], 3);
    EXPECT_EQ(h[0], f[0] + g[0]);
  }
  SetFunction id(2);
  id[0] = 0;
  EXPECT_EQ(min_plus_subset_convolution(id, g, 9, ConvolutionMethod::kTransform).values, g.values);
  EXPECT_EQ(min_plus_subset_convolution_naive(id, g).values, g.values);
}

TEST(Convolution, MatchesNaive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int cc = trial % 11;
    std::int64_t bound = 1 + trial % 50;
    SetFunction f = random_function(cc, bound, 0.2, rng), g = random_function(cc, bound, 0.2, rng);
    SetFunction expected = min_plus_subset_convolution_naive(f, g);
    EXPECT_EQ(min_plus_subset_convolution(f, g, bound, ConvolutionMethod::kTransform).values, expected.values);
    EXPECT_EQ(min_plus_subset_convolution(f, g, bound, ConvolutionMethod::kDirect).values, expected.values);
  }
}

TEST(Convolution, SplitSumsMatchNaive) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    int cc = trial % 7;
    std::int64_t bound = 1 + trial % 9;
    SetFunction f = random_function(cc, bound, 0.3, rng), g = random_function(cc, bound, 0.3, rng);
    SplitSums a = split_sums(f, g, bound, ConvolutionMethod::kTransform);
    SplitSums b = split_sums(f, g, bound, ConvolutionMethod::kDirect);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << cc); ++y)
      for (std::int64_t s = 0; s <= 2 * bound; ++s) {
        bool expected = false;
        for (std::uint64_t sub = y;; sub = (sub - 1) & y) {
          if (f[sub] != SetFunction::kInfinity && g[y ^ sub] != SetFunction::kInfinity && f[sub] + g[y ^ sub] == s)
            expected = true;
          if (sub == 0) break;
        }
        EXPECT_EQ(a.achievable(y, s), expected);
        EXPECT_EQ(b.achievable(y, s), expected);
      }
  }
}

TEST(FastTreewidth, Examples) {
  Graph c4 = test::c4();
  CliqueCover edges = greedy_cover(c4);
  EXPECT_FALSE(treewidth_fast(c4, edges, 1));
  EXPECT_TRUE(treewidth_fast(c4, edges, 2));
  Graph k5 = gen_complete(5);
  CliqueCover one = greedy_cover(k5);
  EXPECT_FALSE(treewidth_fast(k5, one, 3));
  EXPECT_TRUE(treewidth_fast(k5, one, 4));
  GraphWithCover k = gen_kcc2(3);
  int tw = oracle::brute_treewidth(k.graph);
  EXPECT_TRUE(treewidth_fast(k.graph, k.cover, tw));
  EXPECT_FALSE(treewidth_fast(k.graph, k.cover, tw - 1));
}

TEST(FastFill, Examples) {
  Graph c4 = test::c4();
  EXPECT_EQ(fillin_fast(c4, greedy_cover(c4)), 1);
  Graph tree = gen_path(6);
  EXPECT_EQ(fillin_fast(tree, greedy_cover(tree)), 0);
  Graph c6 = gen_cycle(6);
  EXPECT_EQ(fillin_fast(c6, greedy_cover(c6)), 3);
}

TEST(FastSandwich, Examples) {
  Graph tree = gen_path(5);
  EXPECT_TRUE(sandwich_fast(tree, greedy_cover(tree), AdmissibleSet(5)));
  Graph c4 = test::c4();
  EXPECT_TRUE(sandwich_fast(c4, greedy_cover(c4), AdmissibleSet::from_pairs(4, {{0, 2}})));
  EXPECT_FALSE(sandwich_fast(c4, greedy_cover(c4), AdmissibleSet(4)));
}

std::vector<Graph> agreement_graphs() {
  std::vector<Graph> out;
  for (const auto& cg : test::random_corpus(100, 11)) out.push_back(cg.graph);
  for (Graph g : test::structured_corpus(5)) out.push_back(std::move(g));
  return out;
}

TEST(Fast, AgreesWithOracleAndBtdp) {
  std::mt19937_64 rng(5);
  for (const Graph& g : agreement_graphs()) {
    CliqueCover w = greedy_cover(g);
    const int tw = oracle::brute_treewidth(g);
    for (auto m : {ConvolutionMethod::kDirect, ConvolutionMethod::kTransform}) {
      // The forced transform costs about 2^cc * cc^2 * M per round.
      if (m == ConvolutionMethod::kTransform && w.size() > 9) continue;
      FastOptions opts{m, true};
      FastResult r = treewidth_fast_optimize(g, w, opts);
      ASSERT_TRUE(r.value);
      EXPECT_EQ(*r.value, tw);
      EXPECT_TRUE(is_valid_decomposition(g, r.witness));
      EXPECT_EQ(r.witness.width(), tw);
      EXPECT_FALSE(treewidth_fast_decide(g, w, tw - 1, opts).value);

      FastResult fr = fillin_fast_solve(g, w, opts);
      EXPECT_EQ(*fr.value, oracle::brute_fill_in(g));
      EXPECT_TRUE(is_valid_decomposition(g, fr.witness));
      EXPECT_EQ(static_cast<std::int64_t>(fill_edges(g, triangulation_of(g, fr.witness)).size()), *fr.value);

      AdmissibleSet f(g.n());
      std::bernoulli_distribution keep(0.5);
      for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
          if (!g.adjacent(u, v) && keep(rng)) f.allow(u, v);
      FastResult sr = sandwich_fast_solve(g, w, f, opts);
      EXPECT_EQ(sr.value.has_value(), oracle::brute_sandwich(g, [&](Vertex u, Vertex v) { return f.admissible(u, v); }));
      if (sr.value) {
        EXPECT_TRUE(is_valid_decomposition(g, sr.witness));
        for (auto [u, v] : fill_edges(g, triangulation_of(g, sr.witness))) EXPECT_TRUE(f.admissible(u, v));
      }
    }
  }
}

// After the round for block size i every block of size <= i with treewidth
// <= k is solved, and nothing else is.
TEST(Fast, SolvedBlocksMatchPerBlockTreewidth) {
  for (const auto& cg : test::random_corpus(40, 10, 77)) {
    const Graph& g = cg.graph;
    CliqueCover w = greedy_cover(g);
    int tw = oracle::brute_treewidth(g);
    for (int k = std::max(0, tw - 1); k <= tw; ++k) {
      FastResult r = treewidth_fast_decide(g, w, k);
      std::set<VertexSet> solved(r.solved_blocks.begin(), r.solved_blocks.end());
      for (const Block& b : all_blocks(g)) {
        std::vector<Vertex> orig;
        VertexSet closed = b.vertices | b.separator;
        Graph rc = g.induced(closed, &orig);
        for (Vertex u = 0; u < rc.n(); ++u)
          for (Vertex v = u + 1; v < rc.n(); ++v)
            if (b.separator.contains(orig[u]) && b.separator.contains(orig[v]) && !rc.adjacent(u, v)) rc.add_edge(u, v);
        EXPECT_EQ(solved.count(b.vertices) > 0, oracle::brute_treewidth(rc) <= k) << "seed " << cg.seed;
      }
    }
  }
}

TEST(Fast, CountsIterations) {
  GraphWithCover k = gen_kcc2(4);
  FastResult r = treewidth_fast_decide(k.graph, k.cover, 4);
  EXPECT_GT(r.iterations, 0u);
  EXPECT_GT(r.blocks, 0u);
}

}  // namespace
}  // namespace cctri
