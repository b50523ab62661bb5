#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "pokerprob/equity.hpp"

using namespace pokerprob;

namespace {

// Opponent hands outer, runouts inner: the opposite nesting to exact_equity,
// evaluated through the public checked API.
EquityEstimate double_loop_oracle(const GameState& st) {
  std::vector<Card> known = st.cards();
  std::vector<Card> unseen;
  for (int i = 0; i < kDeckSize; ++i) {
    Card c = Card::from_index(i);
    if (std::find(known.begin(), known.end(), c) == known.end()) unseen.push_back(c);
  }
  const std::size_t m = unseen.size();
  const std::size_t missing = 5 - st.board.size();
  std::uint64_t w = 0, t = 0, n = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      auto showdown = [&](std::vector<Card> extra) {
        std::vector<Card> hero = known;
        std::vector<Card> opp = {unseen[a], unseen[b]};
        opp.insert(opp.end(), st.board.begin(), st.board.end());
        hero.insert(hero.end(), extra.begin(), extra.end());
        opp.insert(opp.end(), extra.begin(), extra.end());
        auto s = compare_showdown(evaluate_best(hero), evaluate_best(opp));
        ++n;
        if (s == Showdown::AWins) ++w;
        if (s == Showdown::Tie) ++t;
      };
      if (missing == 0) {
        showdown({});
      } else if (missing == 1) {
        for (std::size_t c = 0; c < m; ++c) {
          if (c != a && c != b) showdown({unseen[c]});
        }
      } else {
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t d = c + 1; d < m; ++d) {
            if (c != a && c != b && d != a && d != b) showdown({unseen[c], unseen[d]});
          }
        }
      }
    }
  }
  return EquityEstimate::from_counts(w, t, n);
}

GameState permute_suits(const GameState& st, const std::array<int, 4>& perm) {
  auto map = [&](Card c) { return Card(c.rank(), static_cast<Suit>(perm[static_cast<int>(c.suit())])); };
  std::vector<Card> board;
  for (Card c : st.board) board.push_back(map(c));
  return GameState({map(st.hole[0]), map(st.hole[1])}, board);
}

}  // namespace

TEST(GameState, Validation) {
  EXPECT_NO_THROW(GameState::parse("As Ah", ""));
  EXPECT_THROW(GameState::parse("As", ""), ContractViolation);
  EXPECT_THROW(GameState::parse("As Ah", "Kd Qd"), ContractViolation);
  EXPECT_THROW(GameState::parse("As Ah", "As Kd Qd"), ContractViolation);
  EXPECT_EQ(GameState::parse("As Ah", "Kd Qd 2c 3c").stage(), Stage::Turn);
  auto st = GameState::parse("As Ah", "Kd Qd 2c");
  EXPECT_EQ(GameState::from_string(st.to_string()), st);
  EXPECT_EQ(GameState::parse("As Ah", "").to_string(), "As Ah|");
}

TEST(SimulateEquity, RoyalFlushOnBoardAlwaysTies) {
  auto st = GameState::parse("2c 3d", "Ts Js Qs Ks As");
  for (std::uint64_t n : {1u, 7u, 1000u}) {
    auto e = simulate_equity(st, n, 42);
    EXPECT_EQ(e.p_win, 0.0);
    EXPECT_EQ(e.p_tie, 1.0);
    EXPECT_EQ(e.n, n);
  }
}

TEST(SimulateEquity, QuadAcesWithKingKickerNeverLoses) {
  auto st = GameState::parse("As Ah", "Ac Ad Ks Qh Jd");
  auto e = simulate_equity(st, 5000, 9);
  EXPECT_EQ(e.p_win, 1.0);
  EXPECT_EQ(e.p_tie, 0.0);
}

TEST(SimulateEquity, AgreesWithExactOnRiver) {
  auto st = GameState::parse("As Ks", "Ah Kd 7c 7s 2h");
  auto exact = exact_equity(st);
  EXPECT_EQ(exact.n, 990u);
  auto mc = simulate_equity(st, 100000, 2024);
  EXPECT_NEAR(mc.p_win, exact.p_win, 0.005);
  EXPECT_NEAR(mc.p_tie, exact.p_tie, 0.005);
}

TEST(SimulateEquity, DeterministicAndIndependentOfJobs) {
  auto st = GameState::parse("Ah Kh", "Qh Jh 2c");
  auto a = simulate_equity(st, 20000, 77);
  EXPECT_EQ(a, simulate_equity(st, 20000, 77));
  EXPECT_EQ(a, simulate_equity(st, 20000, 77, 3));
  EXPECT_EQ(a, simulate_equity(st, 20000, 77, 8));
  EXPECT_NE(a, simulate_equity(st, 20000, 78));
  EXPECT_EQ(a.wins + a.ties <= a.n, true);
  EXPECT_DOUBLE_EQ(a.p_win * 20000, static_cast<double>(a.wins));
}

TEST(SimulateEquity, RejectsBadInput) {
  auto st = GameState::parse("As Ah", "");
  EXPECT_THROW(simulate_equity(st, 0, 1), ContractViolation);
  GameState bad;
  bad.hole = {parse_card("As"), parse_card("As")};
  EXPECT_THROW(simulate_equity(bad, 10, 1), ContractViolation);
}

TEST(ExactEquity, ForcedOutcomes) {
  auto royal = exact_equity(GameState::parse("2c 3d", "Ts Js Qs Ks As"));
  EXPECT_EQ(royal.p_win, 0.0);
  EXPECT_EQ(royal.p_tie, 1.0);
  auto quads = exact_equity(GameState::parse("As Ah", "Ac Ad Ks Qh Jd"));
  EXPECT_EQ(quads.p_win, 1.0);
  EXPECT_EQ(quads.p_tie, 0.0);
}

TEST(ExactEquity, RiverFrozenValue) {
  // 990 opponent hands; computed by double_loop_oracle.
  auto e = exact_equity(GameState::parse("As Ks", "Ah Kd 7c 7s 2h"));
  EXPECT_EQ(e.wins, 894u);
  EXPECT_EQ(e.ties, 4u);
  EXPECT_EQ(e, double_loop_oracle(GameState::parse("As Ks", "Ah Kd 7c 7s 2h")));
}

TEST(ExactEquity, FlopMatchesDoubleLoopOracle) {
  auto st = GameState::parse("Ah Kh", "Qh Jh 2c");
  auto e = exact_equity(st);
  // Frozen from double_loop_oracle: C(45,2) opponents x C(47,2)-style runouts.
  EXPECT_EQ(e.n, 1070190u);
  EXPECT_EQ(e.wins, 811922u);
  EXPECT_EQ(e.ties, 9910u);
  EXPECT_EQ(e, double_loop_oracle(st));
}

TEST(ExactEquity, TurnMatchesDoubleLoopOracle) {
  auto st = GameState::parse("9c 9d", "9h 5s 6s Kd");
  auto e = exact_equity(st);
  EXPECT_EQ(e.n, 46u * 990u);
  EXPECT_EQ(e, double_loop_oracle(st));
}

TEST(ExactEquity, PreflopUnsupported) {
  EXPECT_THROW(exact_equity(GameState::parse("As Ah", "")), UnsupportedStage);
}

TEST(ExactEquity, SuitPermutationInvariant) {
  auto st = GameState::parse("Ah Kh", "Qh Jh 2c 5d");
  auto base = exact_equity(st);
  std::array<int, 4> perm = {0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) {
    EXPECT_EQ(exact_equity(permute_suits(st, perm)), base);
  }
}

TEST(SimulateEquity, SuitPermutationWithinThreeStandardErrors) {
  auto st = GameState::parse("Td 9d", "8d 7c 2h");
  auto base = simulate_equity(st, 100000, 5);
  auto moved = simulate_equity(permute_suits(st, {3, 2, 0, 1}), 100000, 6);
  const double se_win = std::sqrt(2 * base.p_win * (1 - base.p_win) / 100000);
  const double se_tie = std::sqrt(2 * base.p_tie * (1 - base.p_tie) / 100000);
  EXPECT_LE(std::abs(base.p_win - moved.p_win), 3 * se_win);
  EXPECT_LE(std::abs(base.p_tie - moved.p_tie), 3 * se_tie);
}

TEST(ConvergenceTrace, PrefixConsistentWithSimulate) {
  auto st = GameState::parse("Qs Qd", "Jc 8h 3s");
  auto trace = convergence_trace(st, 1000, 31);
  ASSERT_EQ(trace.size(), 1000u);
  for (std::uint64_t n : {1u, 17u, 500u, 1000u}) {
    auto e = simulate_equity(st, n, 31);
    EXPECT_EQ(trace[n - 1].n, n);
    EXPECT_EQ(trace[n - 1].p_win, e.p_win);
    EXPECT_EQ(trace[n - 1].p_tie, e.p_tie);
  }
}

TEST(ConvergenceTrace, RoyalBoardTiesThroughout) {
  auto trace = convergence_trace(GameState::parse("2c 3d", "Ts Js Qs Ks As"), 200, 1);
  for (const auto& p : trace) EXPECT_EQ(p.p_tie, 1.0);
  EXPECT_THROW(convergence_trace(GameState::parse("2c 3d", ""), 0, 1), ContractViolation);
}

TEST(SimulateEquity, PreflopProbabilitiesAreSane) {
  auto aa = simulate_equity(GameState::parse("As Ah", ""), 20000, 3);
  // Pocket aces win about 85% against a random hand.
  EXPECT_NEAR(aa.p_win, 0.85, 0.01);
  EXPECT_GE(aa.p_lose(), 0.0);
}
