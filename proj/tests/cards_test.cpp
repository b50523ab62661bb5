#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "oracle/reference_eval.hpp"
#include "pokerprob/cards.hpp"
#include "pokerprob/rng.hpp"

using namespace pokerprob;

namespace {

HandRank eval(std::string_view text) {
  auto cards = parse_cards(text);
  return evaluate_best(cards);
}

std::array<Card, 7> random_seven(Xoshiro256& rng) {
  std::array<int, kDeckSize> deck{};
  std::iota(deck.begin(), deck.end(), 0);
  std::array<Card, 7> out{};
  for (int j = 0; j < 7; ++j) {
    auto k = j + uniform_below(rng, kDeckSize - j);
    std::swap(deck[j], deck[k]);
    out[j] = Card::from_index(deck[j]);
  }
  return out;
}

}  // namespace

TEST(ParseCard, Examples) {
  EXPECT_EQ(parse_card("As"), Card(14, Suit::Spades));
  EXPECT_EQ(parse_card("2c"), Card(2, Suit::Clubs));
  EXPECT_EQ(parse_card("Td"), Card(10, Suit::Diamonds));
  EXPECT_THROW(parse_card("1x"), ParseError);
}

TEST(ParseCard, ErrorNamesOffendingCharacter) {
  try {
    parse_card("1s");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'1'"), std::string::npos) << e.what();
  }
  try {
    parse_card("Ax");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_card("A"), ParseError);
  EXPECT_THROW(parse_card("Asd"), ParseError);
  EXPECT_THROW(parse_card("as"), ParseError);
}

TEST(ParseCard, AllCardsRoundTripAndAreDistinct) {
  std::vector<std::string> seen;
  for (int i = 0; i < kDeckSize; ++i) {
    Card c = Card::from_index(i);
    EXPECT_EQ(c.index(), i);
    std::string code = format_card(c);
    EXPECT_EQ(parse_card(code), c);
    seen.push_back(code);
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
}

TEST(ParseCards, SpaceSeparated) {
  auto cards = parse_cards("As Kd  7c");
  ASSERT_EQ(cards.size(), 3u);
  EXPECT_EQ(format_cards(cards), "As Kd 7c");
  EXPECT_TRUE(parse_cards("").empty());
  EXPECT_THROW(parse_cards("As K"), ParseError);
}

TEST(EvaluateBest, RoyalFlushIsAceHighStraightFlush) {
  HandRank r = eval("As Ks Qs Js Ts");
  EXPECT_EQ(r.category(), HandCategory::StraightFlush);
  EXPECT_EQ(r.tiebreakers(), std::vector<int>{14});
}

TEST(EvaluateBest, WheelIsFiveHigh) {
  HandRank r = eval("Ah 2d 3c 4s 5h");
  EXPECT_EQ(r.category(), HandCategory::Straight);
  EXPECT_EQ(r.tiebreakers(), std::vector<int>{5});
  EXPECT_LT(r, eval("2h 3d 4c 5s 6h"));
  EXPECT_EQ(eval("Ah 2h 3h 4h 5h").tiebreakers(), std::vector<int>{5});
}

TEST(EvaluateBest, CategoryTiebreakers) {
  EXPECT_EQ(eval("Ah Ad Ac As Kd 2c 3c").tiebreakers(), (std::vector<int>{14, 13}));
  EXPECT_EQ(eval("Ah Ad Ac Kh Kd Ks 2c").category(), HandCategory::FullHouse);
  EXPECT_EQ(eval("Ah Ad Ac Kh Kd Ks 2c").tiebreakers(), (std::vector<int>{14, 13}));
  EXPECT_EQ(eval("Ah Ad Kh Kd Qh Qd 2c").tiebreakers(), (std::vector<int>{14, 13, 12}));
  EXPECT_EQ(eval("Ah Ad 9h 8d 4c 3c 2d").tiebreakers(), (std::vector<int>{14, 9, 8, 4}));
  EXPECT_EQ(eval("Kh 9h 7h 5h 3h 2h Ad").tiebreakers(), (std::vector<int>{13, 9, 7, 5, 3}));
  EXPECT_EQ(eval("9h 8d 7c 6s 5h 4h 3h").tiebreakers(), std::vector<int>{9});
}

TEST(EvaluateBest, FewerThanFiveCardsUsesAchievableCategories) {
  EXPECT_EQ(eval("As Ah").category(), HandCategory::Pair);
  EXPECT_EQ(eval("As Ah").tiebreakers(), std::vector<int>{14});
  EXPECT_EQ(eval("As Kd").category(), HandCategory::HighCard);
  EXPECT_EQ(eval("As Kd").tiebreakers(), (std::vector<int>{14, 13}));
  EXPECT_EQ(eval("As Ks Qs").category(), HandCategory::HighCard);
  EXPECT_EQ(eval("7s 7h 7d").category(), HandCategory::ThreeOfAKind);
  EXPECT_EQ(eval("7s 7h 2d 2c").category(), HandCategory::TwoPair);
  EXPECT_EQ(eval("7s 7h 7d 7c").category(), HandCategory::FourOfAKind);
  EXPECT_EQ(eval("2s 3s 4s 5s").category(), HandCategory::HighCard);
}

TEST(EvaluateBest, ContractViolations) {
  EXPECT_THROW(eval("As"), ContractViolation);
  EXPECT_THROW(eval("As As"), ContractViolation);
  EXPECT_THROW(eval("As Ks Qs Js Ts 9s 8s 7s"), ContractViolation);
}

TEST(CompareShowdown, Examples) {
  EXPECT_EQ(compare_showdown(eval("Ah Ad Kc Qs Jh"), eval("As Ac Kd Qh Jd")), Showdown::Tie);
  // A 9-high straight on the board loses to a 10-high straight.
  EXPECT_EQ(compare_showdown(eval("5h 6d 7c 8s 9h"), eval("6d 7c 8s 9h Td")), Showdown::BWins);
  EXPECT_EQ(compare_showdown(eval("Jh 9h 7h 4h 2h"), eval("Kh Jh 9h 7h 4h")), Showdown::BWins);
  EXPECT_EQ(compare_showdown(eval("Kh Jh 9h 7h 4h"), eval("Jh 9h 7h 4h 2h")), Showdown::AWins);
}

TEST(CompareShowdown, AntisymmetricAndTransitive) {
  Xoshiro256 rng(11);
  for (int i = 0; i < 20000; ++i) {
    auto a = random_seven(rng), b = random_seven(rng), c = random_seven(rng);
    HandRank ra = evaluate_best(a), rb = evaluate_best(b), rc = evaluate_best(c);
    Showdown ab = compare_showdown(ra, rb), ba = compare_showdown(rb, ra);
    if (ab == Showdown::Tie) {
      EXPECT_EQ(ba, Showdown::Tie);
      EXPECT_EQ(ra.category(), rb.category());
      EXPECT_EQ(ra.tiebreakers(), rb.tiebreakers());
    } else {
      EXPECT_NE(ab, ba);
      EXPECT_NE(ba, Showdown::Tie);
    }
    if (compare_showdown(ra, rb) != Showdown::BWins && compare_showdown(rb, rc) != Showdown::BWins) {
      EXPECT_NE(compare_showdown(ra, rc), Showdown::BWins);
    }
  }
}

TEST(EvaluateBest, SevenCardsMatchBestFiveCardSubsetOracle) {
  Xoshiro256 rng(3);
  for (int i = 0; i < 5000; ++i) {
    auto seven = random_seven(rng);
    ASSERT_EQ(oracle::to_ref(evaluate_best(seven)), oracle::best_of_seven(seven))
        << format_cards(seven);
  }
}

TEST(EvaluateBest, SuitPermutationInvariance) {
  Xoshiro256 rng(5);
  std::array<int, 4> perm = {0, 1, 2, 3};
  for (int i = 0; i < 2000; ++i) {
    auto seven = random_seven(rng);
    std::next_permutation(perm.begin(), perm.end());
    std::array<Card, 7> permuted{};
    for (int j = 0; j < 7; ++j) {
      permuted[j] = Card(seven[j].rank(), static_cast<Suit>(perm[static_cast<int>(seven[j].suit())]));
    }
    EXPECT_EQ(evaluate_best(seven), evaluate_best(permuted));
  }
}

TEST(SplitMix64, ReferenceOutputs) {
  // Published reference stream for seed 0.
  SplitMix64 sm(0);
  EXPECT_EQ(sm(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(sm(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(sm(), 0x06C45D188009454Full);
}

TEST(UniformBelow, StaysInRangeAndCoversIt) {
  Xoshiro256 rng(1);
  std::array<int, 7> hits{};
  for (int i = 0; i < 7000; ++i) {
    auto v = uniform_below(rng, 7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 850);
}
