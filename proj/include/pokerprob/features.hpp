#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>

#include "pokerprob/cards.hpp"
#include "pokerprob/category_distribution.hpp"
#include "pokerprob/equity.hpp"
#include "pokerprob/preflop_table.hpp"

namespace pokerprob {

inline constexpr int kNumFeatures = 29;

// Network input. Layout:
//   [0..7]   P(final category) for StraightFlush, FourOfAKind, FullHouse,
//            Flush, Straight, ThreeOfAKind, TwoPair, Pair
//   [8..15]  made-hand one-hot for hole + board, same category order
//   [16..23] made-hand one-hot for the board alone (zero preflop)
//   [24]     (higher hole rank - 2) / 12
//   [25]     (lower hole rank - 2) / 12
//   [26]     most cards of one suit among visible cards / 7
//   [27]     cards missing from the closest straight / 4
//   [28]     board size / 5
using FeatureVector = std::array<double, kNumFeatures>;

// Category order used by every 8-wide feature block.
inline constexpr std::array<HandCategory, 8> kFeatureCategories = {
    HandCategory::StraightFlush, HandCategory::FourOfAKind, HandCategory::FullHouse,
    HandCategory::Flush,         HandCategory::Straight,    HandCategory::ThreeOfAKind,
    HandCategory::TwoPair,       HandCategory::Pair};

inline std::string feature_name(int i) { return "f" + std::to_string(i + 1); }

// Exact distribution of the hero's final category with the rest of the board
// dealt uniformly. Preflop reads the precomputed 169-class table.
inline CategoryDistribution category_distribution(const GameState& state) {
  state.validate();
  if (state.stage() == Stage::Preflop) {
    const auto& row = kPreflopCategoryCounts[hole_class(state.hole[0], state.hole[1])];
    CategoryDistribution d;
    std::copy(row.begin(), row.end(), d.counts.begin());
    d.total = kPreflopBoards;
    return d;
  }
  return enumerate_category_distribution(state);
}

namespace detail {

inline void require_feature_cards(std::span<const Card> cards) {
  if (cards.size() < 2 || cards.size() > 7) {
    throw ContractViolation("need 2..7 cards, got " + std::to_string(cards.size()));
  }
  require_distinct(cards);
}

inline std::array<bool, 8> one_hot(HandCategory c) {
  std::array<bool, 8> out{};
  for (std::size_t i = 0; i < kFeatureCategories.size(); ++i) out[i] = kFeatureCategories[i] == c;
  return out;
}

}  // namespace detail

// One-hot of the made category in kFeatureCategories order; all false for HighCard.
inline std::array<bool, 8> made_indicators(std::span<const Card> cards) {
  return detail::one_hot(evaluate_best(cards).category());
}

// Fewest extra ranks needed to complete any straight window (A-5 .. T-A).
inline int straight_gap(std::span<const Card> cards) {
  detail::require_feature_cards(cards);
  std::uint32_t ranks = 0;
  for (Card c : cards) ranks |= 1u << (c.rank() - 1);
  if (ranks & (1u << 13)) ranks |= 1u;  // ace low
  int best = 0;
  for (int low = 0; low <= 9; ++low) best = std::max(best, std::popcount((ranks >> low) & 0x1Fu));
  return 5 - best;
}

inline int max_suited_count(std::span<const Card> cards) {
  detail::require_feature_cards(cards);
  std::array<int, kNumSuits> per_suit{};
  for (Card c : cards) ++per_suit[static_cast<int>(c.suit())];
  return *std::max_element(per_suit.begin(), per_suit.end());
}

inline FeatureVector extract_features(const GameState& state) {
  const CategoryDistribution dist = category_distribution(state);
  const std::vector<Card> visible = state.cards();
  FeatureVector f{};

  for (std::size_t i = 0; i < kFeatureCategories.size(); ++i) {
    f[i] = dist.probability(kFeatureCategories[i]);
  }
  const auto made = made_indicators(visible);
  for (std::size_t i = 0; i < made.size(); ++i) f[8 + i] = made[i] ? 1.0 : 0.0;
  if (!state.board.empty()) {
    const auto board_made = made_indicators(state.board);
    for (std::size_t i = 0; i < board_made.size(); ++i) f[16 + i] = board_made[i] ? 1.0 : 0.0;
  }
  const int hi = std::max(state.hole[0].rank(), state.hole[1].rank());
  const int lo = std::min(state.hole[0].rank(), state.hole[1].rank());
  f[24] = (hi - 2) / 12.0;
  f[25] = (lo - 2) / 12.0;
  f[26] = max_suited_count(visible) / 7.0;
  f[27] = straight_gap(visible) / 4.0;
  f[28] = static_cast<double>(state.board.size()) / 5.0;
  return f;
}

}  // namespace pokerprob
