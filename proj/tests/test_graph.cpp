#include <gtest/gtest.h>

#include <sstream>

#include "cctri/graph.hpp"
#include "cctri/io.hpp"
#include "cctri/parts.hpp"
#include "support.hpp"

namespace cctri {
namespace {

using test::graph1;
using test::set1;

// K^3_2: v1, v2, v3 are 0..2; v12, v13, v23 are 3..5.
constexpr Vertex kV1 = 0, kV2 = 1, kV12 = 3, kV13 = 4;

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(test::p3(), set1(3, {2})), set1(3, {1, 3}));
  EXPECT_EQ(neighborhood(test::c4(), VertexSet(4)), VertexSet(4));
  EXPECT_EQ(neighborhood(test::c4(), set1(4, {1, 2})), set1(4, {3, 4}));
}

TEST(Neighborhood, DisjointFromArgument) {
  for (const auto& cg : test::random_corpus(30)) {
    const Graph& g = cg.graph;
    for (Vertex v = 0; v < g.n(); ++v) {
      VertexSet x = closed_neighborhood(g, VertexSet(g.n(), {v}));
      VertexSet nx = neighborhood(g, x);
      EXPECT_FALSE(nx.intersects(x));
      EXPECT_FALSE(neighborhood(g, nx | x).intersects(x));
    }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(test::c4(), set1(4, {1, 3})), (std::vector{set1(4, {2}), set1(4, {4})}));
  EXPECT_EQ(components(test::k4(), VertexSet(4)), (std::vector{VertexSet::full(4)}));
  EXPECT_EQ(components(test::p3(), set1(3, {2})), (std::vector{set1(3, {1}), set1(3, {3})}));
}

TEST(Parts, KccVertices) {
  GraphWithCover k = gen_kcc2(3);
  ASSERT_EQ(k.graph.n(), 6);
  EXPECT_EQ(k.graph.m(), 9u);
  EXPECT_EQ(part_vertices(k.cover, Part::single(0)), VertexSet(6, {kV1}));
  EXPECT_EQ(part_vertices(k.cover, k.cover.all()), k.graph.vertices());
  EXPECT_EQ(part_vertices(k.cover, Part(0b011)), VertexSet(6, {kV1, kV2, kV12}));
  EXPECT_EQ(cliques_touching(k.cover, VertexSet(6, {kV1})), Part::single(0));
  EXPECT_EQ(cliques_touching(k.cover, VertexSet(6)), Part());
  EXPECT_EQ(cliques_touching(k.cover, VertexSet(6, {kV12})), Part(0b011));
}

TEST(Parts, GoodParts) {
  GraphWithCover k = gen_kcc2(3);
  EXPECT_TRUE(is_good_part(k.graph, k.cover, Part::single(0)));
  // Every vertex of C4 lies in two edge cliques.
  Graph c4 = test::c4();
  CliqueCover edges = greedy_cover(c4);
  EXPECT_TRUE(part_vertices(edges, Part::single(0)).empty());
  EXPECT_TRUE(is_good_part(c4, edges, Part::single(0)));
}

TEST(Parts, Compatibility) {
  GraphWithCover k = gen_kcc2(3);
  EXPECT_FALSE(are_compatible(k.graph, k.cover, Part::single(0), Part::single(1)));
  Graph c4 = test::c4();
  CliqueCover edges = greedy_cover(c4);
  EXPECT_TRUE(are_compatible(c4, edges, Part::single(0), Part::single(3)));
  EXPECT_FALSE(are_compatible(c4, edges, Part::single(0), Part::single(2)));
  Graph two = graph1(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CliqueCover tri(6, {set1(6, {1, 2, 3}), set1(6, {4, 5, 6})});
  EXPECT_TRUE(are_compatible(two, tri, Part::single(0), Part::single(1)));
  EXPECT_THROW(are_compatible(two, tri, Part::single(0), Part::single(0)), std::invalid_argument);
  EXPECT_THROW(are_compatible(two, tri, Part(), Part::single(0)), std::invalid_argument);
}

TEST(Parts, Monotone) {
  for (int cc = 2; cc <= 5; ++cc) {
    GraphWithCover k = gen_kcc2(cc);
    const std::uint64_t all = k.cover.all().bits();
    for (std::uint64_t a = 0; a <= all; ++a)
      for (std::uint64_t b = 0; b <= all; ++b) {
        VertexSet va = part_vertices(k.cover, Part(a)), vb = part_vertices(k.cover, Part(b));
        VertexSet vab = part_vertices(k.cover, Part(a | b));
        if ((a & ~b) == 0) {
          EXPECT_TRUE(va.is_subset_of(vb));
        }
        EXPECT_TRUE((va | vb).is_subset_of(vab));
        EXPECT_EQ(part_vertices(k.cover, Part(a), Part(b)), va | vb);
      }
  }
}

TEST(GreedyCover, Examples) {
  EXPECT_EQ(greedy_cover(test::k4()).cliques(), (std::vector{VertexSet::full(4)}));
  EXPECT_EQ(greedy_cover(test::c4()).size(), 4);
  EXPECT_EQ(greedy_cover(test::p3()).cliques(), (std::vector{set1(3, {1, 2}), set1(3, {2, 3})}));
  EXPECT_EQ(greedy_cover(gen_complete(1)).size(), 1);
}

TEST(GreedyCover, AlwaysValid) {
  for (const auto& cg : test::random_corpus(60)) EXPECT_TRUE(validate_cover(cg.graph, greedy_cover(cg.graph)));
}

TEST(ValidateCover, Examples) {
  Graph c4 = test::c4();
  EXPECT_TRUE(validate_cover(c4, greedy_cover(c4)));
  CliqueCover missing(4, {set1(4, {1, 2}), set1(4, {2, 3}), set1(4, {3, 4})});
  EXPECT_FALSE(validate_cover(c4, missing));
  CliqueCover nonclique(4, {set1(4, {1, 2, 3}), set1(4, {3, 4}), set1(4, {4, 1})});
  EXPECT_FALSE(validate_cover(c4, nonclique));
}

TEST(RestrictCover, CoversInducedGraph) {
  for (const auto& cg : test::random_corpus(30)) {
    const Graph& g = cg.graph;
    CliqueCover w = greedy_cover(g);
    VertexSet keep = g.vertices();
    keep.erase(0);
    EXPECT_TRUE(validate_cover(g.induced(keep), restrict_cover(w, keep)));
  }
}

TEST(GraphIo, RoundTrip) {
  for (const auto& cg : test::random_corpus(20)) {
    std::stringstream ss;
    write_graph(ss, cg.graph);
    EXPECT_EQ(read_graph(ss), cg.graph);
  }
  GraphWithCover k = gen_kcc2(4);
  std::stringstream ss;
  write_cover(ss, k.cover);
  EXPECT_EQ(read_cover(ss, k.graph.n()).cliques(), k.cover.cliques());
}

TEST(GraphIo, Errors) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_graph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("p tw x 1\n"), 1);
  EXPECT_EQ(line_of("c hi\np tw 3 2\n1 2\n2 9\n"), 4);
  EXPECT_EQ(line_of("1 2\n"), 1);
  std::istringstream ok("c comment\np tw 3 2\n1 2\n2 3\n");
  EXPECT_EQ(read_graph(ok), test::p3());
}

}  // namespace
}  // namespace cctri
