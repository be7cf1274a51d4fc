#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace fdouble {
  using test::W;

  TEST(Word, ReduceExamples) {
    EXPECT_EQ(W("abBA"), Word(2));
    EXPECT_EQ(W("aBba").to_string(), "aa");
    EXPECT_EQ(W("aba").to_string(), "aba");
    EXPECT_EQ(W("1"), Word(2));
    EXPECT_EQ(W(""), Word(2));
  }

  TEST(Word, MalformedInput) {
    EXPECT_THROW(W("abc"), Error);
    EXPECT_THROW(W("a-b"), Error);
    try {
      Word(2, {make_letter(5)});
      FAIL();
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::malformed_input);
    }
  }

  TEST(Word, MultiplyAndInvert) {
    EXPECT_TRUE((W("ab") * W("BA")).empty());
    EXPECT_EQ(invert(W("aB")).to_string(), "bA");
    EXPECT_EQ((W("aab") * W("Baa")).to_string(), "aaaa");
    EXPECT_EQ(power(W("ab"), -2).to_string(), "BABA");
  }

  TEST(Word, RankMismatch) {
    try {
      (void) (W("a", 2) * W("a", 3));
      FAIL();
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::rank_mismatch);
    }
  }

  TEST(Word, ParseList) {
    EXPECT_TRUE(parse_word_list("", 2).empty());
    EXPECT_TRUE(parse_word_list("  ", 2).empty());
    auto ws = parse_word_list("bA, abAA,aaa", 2);
    ASSERT_EQ(ws.size(), 3U);
    EXPECT_EQ(ws[1].to_string(), "abAA");
  }

  // Reduction is idempotent and multiplication is associative with inverses;
  // checked against naive concatenation followed by reduction.
  TEST(Word, RandomGroupLaws) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> len(0, 10);
    std::uniform_int_distribution<Letter>      letter(0, 5);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<Letter> raw(len(rng));
      for (auto& x : raw) {
        x = letter(rng);
      }
      Word w(3, raw);
      for (std::size_t i = 1; i < w.size(); ++i) {
        ASSERT_NE(w[i], inverse_letter(w[i - 1]));
      }
      EXPECT_EQ(Word(3, w.letters()), w);
      auto u = random_word(rng, 3, len(rng));
      auto v = random_word(rng, 3, len(rng));
      std::vector<Letter> cat(u.letters().begin(), u.letters().end());
      cat.insert(cat.end(), v.letters().begin(), v.letters().end());
      EXPECT_EQ(u * v, Word(3, cat));
      EXPECT_EQ((u * v) * w, u * (v * w));
      EXPECT_TRUE((u * invert(u)).empty());
      EXPECT_EQ(Word::parse(u.to_string(), 3), u);
    }
  }

  TEST(Word, RandomWordIsReducedOfExactLength) {
    std::mt19937_64 rng(2);
    for (std::size_t n = 0; n < 30; ++n) {
      EXPECT_EQ(random_word(rng, 2, n).size(), n);
    }
  }

}  // namespace fdouble
