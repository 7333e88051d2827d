#include <set>

#include <gtest/gtest.h>

#include <gprod/graph.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gprod;
using fixtures::graph;

namespace {

VertexSet named(const SimplicialGraph& g, std::string_view names) { return g.parse_set(names); }

}  // namespace

TEST(Link, PathMiddle) {
  auto g = fixtures::path3();
  EXPECT_EQ(g.link(g.index("v")), named(g, "u,w"));
}

TEST(Link, PathEnd) {
  auto g = fixtures::path3();
  EXPECT_EQ(g.link(g.index("u")), named(g, "v"));
}

TEST(Link, Edgeless) {
  auto g = fixtures::edgeless2();
  EXPECT_TRUE(g.link(g.index("a")).empty());
}

TEST(Link, UnknownVertexRejected) {
  auto g = fixtures::path3();
  EXPECT_THROW(g.index("x"), Error);
  EXPECT_THROW(g.link(7), Error);
}

TEST(Star, Examples) {
  auto p = fixtures::path3();
  EXPECT_EQ(p.star(p.index("v")), named(p, "u,v,w"));
  EXPECT_EQ(p.star(p.index("u")), named(p, "u,v"));
  auto e = fixtures::edgeless2();
  EXPECT_EQ(e.star(e.index("a")), named(e, "a"));
  EXPECT_THROW(p.star(3), Error);
}

TEST(FullSubgraph, Examples) {
  auto p = fixtures::path3();
  auto uw = p.full_subgraph(named(p, "u,w"));
  EXPECT_EQ(uw.names(), (std::vector<std::string>{"u", "w"}));
  EXPECT_TRUE(uw.edges().empty());
  EXPECT_EQ(p.full_subgraph({}).size(), 0U);
  EXPECT_EQ(p.full_subgraph(p.vertices()), p);
  EXPECT_THROW(p.full_subgraph(VertexSet::of({5})), Error);
}

TEST(MaximalCliques, Examples) {
  auto p = fixtures::path3();
  EXPECT_EQ(p.maximal_cliques(), (std::vector<VertexSet>{named(p, "u,v"), named(p, "v,w")}));
  auto e = fixtures::edgeless2();
  EXPECT_EQ(e.maximal_cliques(), (std::vector<VertexSet>{named(e, "a"), named(e, "b")}));
  auto t = fixtures::triangle();
  EXPECT_EQ(t.maximal_cliques(), (std::vector<VertexSet>{t.vertices()}));
}

TEST(JoinFactors, Examples) {
  auto p = fixtures::path3();
  auto parts = p.join_factors();
  EXPECT_EQ(std::set<VertexSet>(parts.begin(), parts.end()),
            (std::set<VertexSet>{named(p, "v"), named(p, "u,w")}));
  auto e = fixtures::edgeless2();
  EXPECT_EQ(e.join_factors(), (std::vector<VertexSet>{e.vertices()}));
  auto t = fixtures::triangle();
  EXPECT_EQ(t.join_factors().size(), 3U);
}

TEST(Construction, Rejections) {
  EXPECT_THROW(graph({"a", "a"}), Error);
  try {
    graph({"a"}, {{"a", "a"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no loops"), std::string::npos);
  }
  EXPECT_THROW(graph({"a"}, {{"a", "b"}}), Error);
  // Repeated edges collapse to one.
  EXPECT_EQ(graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}).edges().size(), 1U);
}

TEST(GraphProperties, LinkAndStar) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen::random_graph(rng, 1 + trial % 9, 0.45);
    for (Vertex v = 0; v < g.size(); ++v) {
      EXPECT_FALSE(g.link(v).contains(v));
      EXPECT_EQ(g.star(v), g.link(v) | VertexSet::of({v}));
    }
  }
}

TEST(GraphProperties, CliquesMatchBruteForce) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = gen::random_graph(rng, 1 + trial % 10, 0.2 + 0.6 * (trial % 5) / 4.0);
    auto cliques = g.maximal_cliques();
    std::set<VertexSet> got(cliques.begin(), cliques.end());
    EXPECT_EQ(got.size(), cliques.size()) << "duplicate clique";
    EXPECT_TRUE(std::is_sorted(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
      return a.members() < b.members();
    }));
    EXPECT_EQ(got, oracles::brute_force_cliques(g));
  }
}

TEST(GraphProperties, JoinFactorsAreFinestJoin) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = gen::random_graph(rng, 1 + trial % 12, 0.3 + 0.5 * (trial % 3) / 2.0);
    auto parts = g.join_factors();
    VertexSet covered;
    for (VertexSet part : parts) {
      EXPECT_TRUE((covered & part).empty());
      covered = covered | part;
      EXPECT_FALSE(oracles::brute_force_reducible(g, part)) << g.format_set(part);
      EXPECT_FALSE(g.is_reducible(part));
    }
    EXPECT_EQ(covered, g.vertices());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        for (Vertex a : parts[i].members())
          for (Vertex b : parts[j].members()) EXPECT_TRUE(g.adjacent(a, b));
    EXPECT_EQ(g.is_reducible(), oracles::brute_force_reducible(g, g.vertices()));
  }
}
