#include <gtest/gtest.h>

#include "support.hpp"

namespace fdouble {
  using namespace test;

  class CyclicThree : public ::testing::Test {
   protected:
    FinitePresentation   P = FinitePresentation::parse("rank=1; relators=aaa");
    FiniteQuotientOracle oracle
        = finite_quotient_oracle(P, {parse_cycles("(0 1 2)")});

    PairWord pair(std::string_view text) {
      return PairWord::parse(text, 1);
    }
  };

  TEST(Presentation, Parse) {
    auto P = FinitePresentation::parse("rank=2; relators=abAB,aaa");
    EXPECT_EQ(P.rank, 2U);
    EXPECT_EQ(P.relators, Ws("abAB,aaa"));
    EXPECT_EQ(FinitePresentation::parse(P.to_string()).relators, P.relators);
    EXPECT_TRUE(FinitePresentation::parse("rank=2; relators=").relators.empty());
    EXPECT_TRUE(FinitePresentation::parse("rank=2").relators.empty());
    EXPECT_THROW(FinitePresentation::parse("relators=aa"), Error);
    EXPECT_THROW(FinitePresentation::parse("rank=1; relators=aA"), Error);
    EXPECT_THROW(FinitePresentation::parse("rank=1; relators=b"), Error);
    EXPECT_THROW(FinitePresentation::parse("rank=x"), Error);
  }

  TEST(PairWord, Parse) {
    auto p = PairWord::parse("(aaa, 1)", 1);
    EXPECT_EQ(p.left, W("aaa", 1));
    EXPECT_TRUE(p.right.empty());
    EXPECT_EQ(p.to_string(), "(aaa,1)");
    EXPECT_THROW(PairWord::parse("aaa,1", 1), Error);
    EXPECT_THROW(PairWord::parse("(a,a,a)", 1), Error);
  }

  TEST(MihailovaGenerators, Examples) {
    auto gens = mihailova_generators(FinitePresentation::parse("rank=1; relators=aaa"));
    ASSERT_EQ(gens.size(), 2U);
    EXPECT_EQ(gens[0], (PairWord{W("a", 1), W("a", 1)}));
    EXPECT_EQ(gens[1], (PairWord{Word(1), W("aaa", 1)}));

    auto free = mihailova_generators(FinitePresentation::parse("rank=2"));
    EXPECT_EQ(free, (std::vector<PairWord>{{W("a"), W("a")}, {W("b"), W("b")}}));

    EXPECT_EQ(mihailova_generators(
                  FinitePresentation::parse("rank=2; relators=abAB"))
                  .size(),
              3U);
  }

  TEST_F(CyclicThree, OracleExamples) {
    EXPECT_TRUE(oracle(W("aaa", 1)));
    EXPECT_FALSE(oracle(W("a", 1)));
    try {
      finite_quotient_oracle(P, {parse_cycles("(0 1)")});
      FAIL();
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::relator_violated);
    }
  }

  TEST_F(CyclicThree, MembershipExamples) {
    EXPECT_TRUE(fiber_membership(pair("(aaa,1)"), P, oracle));
    EXPECT_FALSE(fiber_membership(pair("(a,1)"), P, oracle));
    EXPECT_TRUE(fiber_membership(pair("(AA,a)"), P, oracle));
    EXPECT_THROW(fiber_membership(PairWord{W("a"), W("a")}, P, oracle), Error);
  }

  TEST_F(CyclicThree, BallExamples) {
    auto gens = mihailova_generators(P);
    EXPECT_EQ(enumerate_M_ball(gens, 0),
              (std::set<PairWord>{{Word(1), Word(1)}}));
    std::set<PairWord> radius_one{pair("(1,1)"), pair("(a,a)"), pair("(A,A)"),
                                  pair("(1,aaa)"), pair("(1,AAA)")};
    EXPECT_EQ(enumerate_M_ball(gens, 1), radius_one);
    EXPECT_THROW(enumerate_M_ball(gens, 8, 50), Error);
  }

  TEST_F(CyclicThree, BallIsSoundAndComplete) {
    auto ball = enumerate_M_ball(mihailova_generators(P), 8);
    for (auto const& p : enumerate_M_ball(mihailova_generators(P), 4)) {
      ASSERT_TRUE(fiber_membership(p, P, oracle)) << p.to_string();
    }
    for (auto const& p : ball) {
      ASSERT_TRUE(fiber_membership(p, P, oracle)) << p.to_string();
    }
    auto words = all_words(1, 4);
    for (auto const& u : words) {
      for (auto const& v : words) {
        PairWord p{u, v};
        ASSERT_EQ(fiber_membership(p, P, oracle), ball.count(p) == 1)
            << p.to_string();
      }
    }
  }

  TEST(Mihailova, DiagonalAlwaysMember) {
    auto P      = FinitePresentation::parse("rank=2; relators=aa,bbb,abab");
    // S3 as <a, b | a^2, b^3, (ab)^2>.
    auto oracle = finite_quotient_oracle(
        P, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)")});
    for (auto const& w : all_words(2, 4)) {
      ASSERT_TRUE(fiber_membership({w, w}, P, oracle));
    }
    EXPECT_FALSE(fiber_membership({W("a"), W("b")}, P, oracle));
    EXPECT_TRUE(fiber_membership({W("ab"), W("BA")}, P, oracle));
  }

}  // namespace fdouble
