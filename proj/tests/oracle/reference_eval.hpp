#pragma once

// Test-only oracles. Written from the rules of poker with sorting and
// counting; shares nothing with the bitmask evaluator under test.

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "pokerprob/cards.hpp"

namespace pokerprob::oracle {

// (category, tiebreakers); std::pair ordering is the poker order.
using RefRank = std::pair<int, std::vector<int>>;

inline RefRank classify_five(const std::array<Card, 5>& hand) {
  std::map<int, int> count_by_rank;
  for (const Card& c : hand) ++count_by_rank[c.rank()];

  // Groups sorted by size then rank, both descending.
  std::vector<std::pair<int, int>> groups;
  for (auto [rank, count] : count_by_rank) groups.emplace_back(count, rank);
  std::sort(groups.rbegin(), groups.rend());

  std::vector<int> ranks_desc;
  for (const Card& c : hand) ranks_desc.push_back(c.rank());
  std::sort(ranks_desc.rbegin(), ranks_desc.rend());

  bool flush = std::all_of(hand.begin(), hand.end(),
                           [&](const Card& c) { return c.suit() == hand[0].suit(); });

  int straight_high = 0;
  if (groups.size() == 5) {
    if (ranks_desc[0] - ranks_desc[4] == 4) {
      straight_high = ranks_desc[0];
    } else if (ranks_desc == std::vector<int>{14, 5, 4, 3, 2}) {
      straight_high = 5;
    }
  }

  std::vector<int> group_ranks;
  for (auto [count, rank] : groups) group_ranks.push_back(rank);

  constexpr int kHigh = 0, kPair = 1, kTwoPair = 2, kTrips = 3, kStraight = 4, kFlush = 5,
                kFullHouse = 6, kQuads = 7, kStraightFlush = 8;

  if (straight_high && flush) return {kStraightFlush, {straight_high}};
  if (groups[0].first == 4) return {kQuads, group_ranks};
  if (groups[0].first == 3 && groups[1].first == 2) return {kFullHouse, group_ranks};
  if (flush) return {kFlush, ranks_desc};
  if (straight_high) return {kStraight, {straight_high}};
  if (groups[0].first == 3) return {kTrips, group_ranks};
  if (groups[0].first == 2 && groups[1].first == 2) return {kTwoPair, group_ranks};
  if (groups[0].first == 2) return {kPair, group_ranks};
  return {kHigh, ranks_desc};
}

// Best hand of 7 cards as the maximum over all 21 five-card subsets.
inline RefRank best_of_seven(const std::array<Card, 7>& cards) {
  RefRank best{-1, {}};
  for (int skip_a = 0; skip_a < 7; ++skip_a) {
    for (int skip_b = skip_a + 1; skip_b < 7; ++skip_b) {
      std::array<Card, 5> five{};
      int k = 0;
      for (int i = 0; i < 7; ++i) {
        if (i != skip_a && i != skip_b) five[k++] = cards[i];
      }
      best = std::max(best, classify_five(five));
    }
  }
  return best;
}

inline RefRank to_ref(HandRank r) {
  return {static_cast<int>(r.category()), r.tiebreakers()};
}

// Known category counts over all C(52,5) five-card hands, HighCard first;
// produced by enumerating classify_five over every hand.
inline constexpr std::array<long long, 9> kFiveCardCategoryCounts = {
    1302540, 1098240, 123552, 54912, 10200, 5108, 3744, 624, 40};

}  // namespace pokerprob::oracle
