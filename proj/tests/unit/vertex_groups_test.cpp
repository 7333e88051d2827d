#include <cmath>

#include <gtest/gtest.h>

#include <gprod/vertex_cocycle.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gprod;

TEST(VertexGroup, MultiplyExamples) {
  VertexGroup z = VertexGroup::integers();
  EXPECT_EQ(multiply({&z, 2}, {&z, -3}).value, -1);
  VertexGroup z2 = VertexGroup::cyclic(2);
  EXPECT_EQ(multiply({&z2, 1}, {&z2, 1}).value, z2.identity());
  VertexGroup s3 = fixtures::s3();
  Element s = s3.parse_element("s");
  EXPECT_EQ(s3.multiply(s, s), s3.identity());
  EXPECT_THROW(multiply({&z, 1}, {&z2, 1}), Error);
}

TEST(VertexGroup, WordLengthExamples) {
  VertexGroup z = VertexGroup::integers();
  EXPECT_EQ(z.word_length(-3), 3U);
  VertexGroup z5 = VertexGroup::cyclic(5);
  EXPECT_EQ(z5.word_length(3), 2U);
  EXPECT_EQ(z5.word_length(z5.identity()), 0U);
}

TEST(VertexGroup, WordLengthMatchesCayleyBfs) {
  for (VertexGroup g : {VertexGroup::cyclic(2), VertexGroup::cyclic(5), VertexGroup::cyclic(8),
                        fixtures::s3()}) {
    auto dist = oracles::cayley_lengths(g, 100);
    ASSERT_EQ(dist.size(), *g.order());
    for (auto [x, d] : dist) EXPECT_EQ(g.word_length(x), d);
  }
  VertexGroup z = VertexGroup::integers();
  for (auto [x, d] : oracles::cayley_lengths(z, 12)) EXPECT_EQ(z.word_length(x), d);
}

TEST(VertexGroup, CyclicPayloadReduced) {
  VertexGroup z4 = VertexGroup::cyclic(4);
  EXPECT_EQ(z4.parse_element("-1"), 3);
  EXPECT_EQ(z4.parse_element("9"), 1);
  EXPECT_EQ(z4.inverse(1), 3);
}

TEST(VertexGroup, Rejections) {
  try {
    VertexGroup::cyclic(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("vertex groups are non-trivial"), std::string::npos);
  }
  // Not associative / not closed / generators do not generate.
  EXPECT_THROW(VertexGroup::table({"e", "x"}, {{"e", "x"}, {"x", "x"}}, {"x"}), Error);
  EXPECT_THROW(VertexGroup::table({"e", "x"}, {{"e", "x"}, {"x", "y"}}, {"x"}), Error);
  EXPECT_THROW(VertexGroup::table({"e", "x", "y", "xy"},
                                  {{"e", "x", "y", "xy"},
                                   {"x", "e", "xy", "y"},
                                   {"y", "xy", "e", "x"},
                                   {"xy", "y", "x", "e"}},
                                  {"x"}),
               Error);
  EXPECT_THROW(VertexGroup::table({"e"}, {{"e"}}, {}), Error);
}

TEST(VertexGroup, TableGroupAxioms) {
  VertexGroup s3 = fixtures::s3();
  auto elems = s3.elements();
  ASSERT_EQ(elems.size(), 6U);
  EXPECT_EQ(elems.front(), s3.identity());
  for (Element a : elems) {
    EXPECT_EQ(s3.multiply(a, s3.inverse(a)), s3.identity());
    for (Element b : elems)
      for (Element c : elems)
        EXPECT_EQ(s3.multiply(s3.multiply(a, b), c), s3.multiply(a, s3.multiply(b, c)));
  }
}

TEST(TranslationCocycle, Examples) {
  VertexGroup z = VertexGroup::integers();
  auto c = VertexCocycle::translation(z, Exponent(2));
  EXPECT_EQ(c.b(3).at({0, 0}), 3);
  EXPECT_EQ(c.norm_pow(3).exact_value(), 9);
  EXPECT_TRUE(c.b(0).empty());
  EXPECT_EQ(VertexCocycle::translation(z, Exponent(1)).norm_pow(-2).exact_value(), 2);
  EXPECT_THROW(VertexCocycle::translation(VertexGroup::cyclic(3), Exponent(2)), Error);
}

TEST(RegularCocycle, Examples) {
  VertexGroup z2 = VertexGroup::cyclic(2);
  EXPECT_EQ(VertexCocycle::regular(z2, Exponent(2), 1).norm_pow(1).exact_value(), 2);
  EXPECT_TRUE(VertexCocycle::regular(z2, Exponent(2), 1).b(0).empty());
  VertexGroup z3 = VertexGroup::cyclic(3);
  EXPECT_DOUBLE_EQ(VertexCocycle::regular(z3, Exponent(1), 2).norm_pow(1).root(Exponent(1)), 4.0);
  EXPECT_THROW(VertexCocycle::regular(z3, Exponent(1), 0), Error);
  EXPECT_THROW(VertexCocycle::regular(z3, Exponent(1), -1), Error);
  EXPECT_THROW(VertexCocycle::regular(VertexGroup::integers(), Exponent(1), 1), Error);
}

TEST(RegularCocycle, ConstantNormOnNonIdentity) {
  for (VertexGroup g : {VertexGroup::cyclic(2), VertexGroup::cyclic(7), fixtures::s3()}) {
    for (unsigned p : {1U, 2U, 3U}) {
      Rational c(3, 2);
      auto cocycle = VertexCocycle::regular(g, Exponent(p), c);
      for (Element x : g.elements()) {
        if (g.is_identity(x)) continue;
        EXPECT_EQ(cocycle.norm_pow(x).exact_value(), 2 * pow_int(c, p));
      }
    }
  }
}

TEST(PadCocycle, Examples) {
  VertexGroup z = VertexGroup::integers();
  auto padded = VertexCocycle::padded(VertexCocycle::translation(z, Exponent(2)), 1);
  EXPECT_EQ(padded.norm_pow(3).exact_value(), 11);
  EXPECT_TRUE(padded.b(0).empty());
  VertexGroup z2 = VertexGroup::cyclic(2);
  auto p1 = VertexCocycle::padded(VertexCocycle::regular(z2, Exponent(1), 1), 2);
  EXPECT_EQ(p1.norm_pow(1).exact_value(), 6);
  EXPECT_THROW(VertexCocycle::padded(p1, 0), Error);
}

TEST(PadCocycle, NormEquationOnWindow) {
  VertexGroup z = VertexGroup::integers();
  for (unsigned p : {1U, 2U, 3U}) {
    auto base = VertexCocycle::translation(z, Exponent(p));
    Rational c(5, 3);
    auto padded = VertexCocycle::padded(base, c);
    for (Element g = -15; g <= 15; ++g) {
      if (g == 0) continue;
      EXPECT_EQ(padded.norm_pow(g).exact_value(), base.norm_pow(g).exact_value() + 2 * pow_int(c, p));
    }
    EXPECT_EQ(padded.floor_pow().exact_value(), 1 + 2 * pow_int(c, p));
  }
}

TEST(CheckVertexCocycle, Examples) {
  VertexGroup z = VertexGroup::integers();
  EXPECT_TRUE(check_vertex_cocycle(VertexCocycle::translation(z, Exponent(2)), 10).passed);
  auto z4 = VertexGroup::cyclic(4);
  auto report = check_vertex_cocycle(VertexCocycle::regular(z4, Exponent(2), 1), 1);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.checks, 16U);
}

TEST(CheckVertexCocycle, CorruptedFailsWithWitness) {
  VertexGroup z = VertexGroup::integers();
  auto good = VertexCocycle::translation(z, Exponent(2));
  BlockVector wrong = good.b(2);
  wrong *= Rational(3);
  auto report = check_vertex_cocycle(good.with_override(2, wrong), 4);
  EXPECT_FALSE(report.passed);
  ASSERT_TRUE(report.witness.has_value());
  auto [g, h] = *report.witness;
  EXPECT_TRUE(g == 2 || h == 2 || g + h == 2);
}

TEST(VertexCocycleProperties, IsometryAndIdentity) {
  std::vector<VertexCocycle> cocycles;
  for (unsigned p : {1U, 2U, 3U}) {
    Exponent e(p);
    VertexGroup z = VertexGroup::integers();
    cocycles.push_back(VertexCocycle::translation(z, e));
    cocycles.push_back(VertexCocycle::padded(VertexCocycle::translation(z, e), Rational(1, 2)));
    cocycles.push_back(VertexCocycle::regular(VertexGroup::cyclic(5), e, 2));
    cocycles.push_back(VertexCocycle::padded(VertexCocycle::regular(fixtures::s3(), e, 1), 3));
  }
  for (const VertexCocycle& c : cocycles) {
    auto r = check_vertex_cocycle(c, 6);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_GT(c.floor_pow().value(), 0.0);
  }
}

TEST(VertexCocycleProperties, NonIntegralExponentUsesTolerance) {
  VertexGroup z = VertexGroup::integers();
  auto c = VertexCocycle::padded(VertexCocycle::translation(z, Exponent(1.5)), 1);
  EXPECT_FALSE(c.norm_pow(2).is_exact());
  EXPECT_NEAR(c.norm_pow(2).value(), std::pow(2.0, 1.5) + 2.0, 1e-9);
  EXPECT_TRUE(check_vertex_cocycle(c, 5).passed);
}
