#include <map>

#include <gtest/gtest.h>

#include <gprod/special_subgroups.hpp>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace gprod;

namespace {

GraphProduct free_zz() { return fixtures::free_zz().product(); }
GraphProduct p3_zz() {
  return GraphProduct(fixtures::path3(), std::vector<VertexGroup>(3, VertexGroup::integers()));
}

}  // namespace

TEST(Retract, Examples) {
  auto f = free_zz();
  auto g = f.parse("a:2 b:1 a:1");
  EXPECT_EQ(f.format(retract(f, g, f.graph().parse_set("a"))), "a:3");
  EXPECT_EQ(retract(f, g, f.graph().vertices()), g);
  EXPECT_TRUE(retract(f, g, {}).empty());
  EXPECT_THROW(retract(f, g, VertexSet::of({4})), Error);
}

TEST(IsMember, Examples) {
  auto f = free_zz();
  EXPECT_TRUE(is_member(f.identity(), {}));
  auto p = p3_zz();
  EXPECT_TRUE(is_member(p.parse("u:1 w:1"), p.graph().star(p.graph().index("v"))));
  EXPECT_FALSE(is_member(f.parse("a:1 b:1"), f.graph().parse_set("a")));
}

TEST(CosetRep, Examples) {
  auto f = free_zz();
  VertexSet st_a = f.graph().star(0);
  EXPECT_TRUE(coset_rep(f, f.parse("a:-4"), st_a).empty());
  EXPECT_EQ(f.format(coset_rep(f, f.parse("b:1 a:2"), st_a)), "b:1");
  auto p = p3_zz();
  EXPECT_TRUE(coset_rep(p, p.parse("u:1 w:1 v:1"), p.graph().star(1)).empty());
  EXPECT_THROW(coset_rep(f, f.identity(), VertexSet::of({9})), Error);
}

TEST(CosetTranslate, Examples) {
  auto f = free_zz();
  CosetId c{0, f.identity()};
  EXPECT_EQ(coset_translate(f, f.identity(), c), c);
  EXPECT_EQ(f.format(coset_translate(f, f.parse("b:1"), c).rep), "b:1");
  EXPECT_EQ(coset_translate(f, f.parse("a:5"), c), c);
}

TEST(SpecialSubgroupProperties, RetractIsHomomorphismOnBalls) {
  for (const auto& fx : fixtures::all(2)) {
    const auto& g = fx.action.product();
    auto ball = g.enumerate_ball(4);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits) {
      VertexSet a = VertexSet::from_bits(bits);
      for (const auto& x : ball) {
        auto rx = retract(g, x, a);
        EXPECT_EQ(retract(g, rx, a), rx);
        EXPECT_TRUE(is_member(rx, a));
        EXPECT_EQ(rx == x, is_member(x, a));
        for (const auto& y : ball)
          ASSERT_EQ(retract(g, g.multiply(x, y), a), g.multiply(rx, retract(g, y, a)))
              << fx.name << " " << g.format(x) << " | " << g.format(y);
      }
    }
  }
}

TEST(SpecialSubgroupProperties, CosetRepIsCompleteInvariant) {
  for (const auto& fx : fixtures::all(2)) {
    const auto& g = fx.action.product();
    auto ball = g.enumerate_ball(4);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      VertexSet st = g.graph().star(v);
      std::map<NormalForm, std::size_t> shortest;
      std::vector<NormalForm> reps;
      for (const auto& x : ball) {
        reps.push_back(coset_rep(g, x, st));
        EXPECT_EQ(coset_rep(g, reps.back(), st), reps.back());
        EXPECT_TRUE(is_member(g.multiply(g.invert(reps.back()), x), st));
        auto [it, fresh] = shortest.emplace(reps.back(), g.word_length(x));
        it->second = std::min(it->second, g.word_length(x));
      }
      for (std::size_t i = 0; i < ball.size(); ++i)
        for (std::size_t j = 0; j < ball.size(); ++j)
          ASSERT_EQ(reps[i] == reps[j], is_member(g.multiply(g.invert(ball[i]), ball[j]), st));
      for (const auto& [rep, len] : shortest) EXPECT_LE(g.word_length(rep), len) << g.format(rep);
    }
  }
}

TEST(SpecialSubgroupProperties, CosetTranslateIsLeftAction) {
  gen::Rng rng(31);
  for (const auto& fx : fixtures::all(2)) {
    const auto& g = fx.action.product();
    for (int i = 0; i < 200; ++i) {
      auto h1 = gen::random_element(rng, g, 4);
      auto h2 = gen::random_element(rng, g, 4);
      Vertex v = static_cast<Vertex>(i % g.vertex_count());
      CosetId c = coset_of(g, gen::random_element(rng, g, 4), v);
      EXPECT_EQ(coset_translate(g, g.multiply(h1, h2), c),
                coset_translate(g, h1, coset_translate(g, h2, c)));
      EXPECT_EQ(coset_translate(g, g.identity(), c), c);
    }
  }
}

TEST(SpecialSubgroupProperties, ReducedWordPredicate) {
  auto f = free_zz();
  std::vector<Syllable> reducible{{0, 1}, {0, 2}};
  EXPECT_FALSE(is_reduced_word(f, reducible));
  auto p = p3_zz();
  // u and u separated by v ∈ st(u): not reduced.
  std::vector<Syllable> word{{0, 1}, {1, 1}, {0, 1}};
  EXPECT_FALSE(is_reduced_word(p, word));
  std::vector<Syllable> ok{{0, 1}, {2, 1}, {0, 1}};
  EXPECT_TRUE(is_reduced_word(p, ok));
}
