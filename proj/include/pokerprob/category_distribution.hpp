#pragma once

#include <array>
#include <cstdint>

#include "pokerprob/cards.hpp"
#include "pokerprob/equity.hpp"

namespace pokerprob {

// Distribution of the hero's final 7-card category over all ways to complete
// the board. Counts are exact; probabilities are counts / total.
struct CategoryDistribution {
  std::array<std::uint64_t, kNumCategories> counts{};
  std::uint64_t total = 0;

  double probability(HandCategory c) const noexcept {
    return total == 0 ? 0.0
                      : static_cast<double>(counts[static_cast<int>(c)]) /
                            static_cast<double>(total);
  }

  friend bool operator==(const CategoryDistribution&, const CategoryDistribution&) = default;
};

namespace detail {

inline void enumerate_completions(const std::array<std::uint8_t, kDeckSize>& unseen, int m,
                                  int start, int remaining, CardMask cards,
                                  CategoryDistribution& out) {
  if (remaining == 0) {
    ++out.counts[static_cast<int>(evaluate_mask(cards).category())];
    ++out.total;
    return;
  }
  for (int i = start; i <= m - remaining; ++i) {
    enumerate_completions(unseen, m, i + 1, remaining - 1, cards | (CardMask{1} << unseen[i]),
                          out);
  }
}

}  // namespace detail

// Exhaustive enumeration of every board completion for the known cards
// (hole + board). Preflop this visits C(50,5) = 2,118,760 boards.
inline CategoryDistribution enumerate_category_distribution(const GameState& state) {
  const detail::RolloutSetup setup(state);
  CategoryDistribution out;
  detail::enumerate_completions(setup.unseen, setup.unseen_count, 0, setup.missing_board,
                                setup.hero, out);
  return out;
}

inline constexpr int kNumHoleClasses = 169;

// Suit-isomorphism class of a starting hand, laid out as a 13x13 grid
// indexed by rank (0 = deuce): pairs on the diagonal, suited hands at
// [high][low], offsuit hands at [low][high].
inline int hole_class(Card a, Card b) {
  int hi = std::max(a.rank(), b.rank()) - 2;
  int lo = std::min(a.rank(), b.rank()) - 2;
  if (hi == lo) return hi * kNumRanks + hi;
  if (a.suit() == b.suit()) return hi * kNumRanks + lo;
  return lo * kNumRanks + hi;
}

// A concrete hole-card pair belonging to the class.
inline std::array<Card, 2> hole_class_representative(int cls) {
  if (cls < 0 || cls >= kNumHoleClasses) throw ContractViolation("hole class out of range");
  int row = cls / kNumRanks;
  int col = cls % kNumRanks;
  if (row == col) return {Card(row + 2, Suit::Clubs), Card(row + 2, Suit::Diamonds)};
  if (row > col) return {Card(row + 2, Suit::Clubs), Card(col + 2, Suit::Clubs)};
  return {Card(col + 2, Suit::Clubs), Card(row + 2, Suit::Diamonds)};
}

}  // namespace pokerprob
