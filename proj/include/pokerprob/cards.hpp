#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pokerprob/errors.hpp"

namespace pokerprob {

enum class Suit : std::uint8_t { Clubs = 0, Diamonds = 1, Hearts = 2, Spades = 3 };

inline constexpr int kNumRanks = 13;
inline constexpr int kNumSuits = 4;
inline constexpr int kDeckSize = 52;
inline constexpr int kAce = 14;

// A playing card. Rank runs 2..14 with the ace high.
class Card {
 public:
  constexpr Card() = default;
  constexpr Card(int rank, Suit suit)
      : rank_(static_cast<std::uint8_t>(rank)), suit_(suit) {
    if (rank < 2 || rank > kAce) throw ContractViolation("card rank out of range");
  }

  constexpr int rank() const noexcept { return rank_; }
  constexpr Suit suit() const noexcept { return suit_; }

  // Dense index in [0, 52): rank-major, suit-minor.
  constexpr int index() const noexcept {
    return (rank_ - 2) * kNumSuits + static_cast<int>(suit_);
  }
  static constexpr Card from_index(int index) {
    return Card(index / kNumSuits + 2, static_cast<Suit>(index % kNumSuits));
  }

  // Bit position inside a CardMask: 16 bits per suit, one bit per rank.
  constexpr int bit() const noexcept {
    return static_cast<int>(suit_) * 16 + (rank_ - 2);
  }

  friend constexpr bool operator==(Card, Card) = default;
  friend constexpr auto operator<=>(Card a, Card b) { return a.index() <=> b.index(); }

 private:
  std::uint8_t rank_ = 2;
  Suit suit_ = Suit::Clubs;
};

// Set of cards as a bitmask; see Card::bit().
using CardMask = std::uint64_t;

constexpr CardMask mask_of(Card c) { return CardMask{1} << c.bit(); }

inline CardMask mask_of(std::span<const Card> cards) {
  CardMask m = 0;
  for (Card c : cards) m |= mask_of(c);
  return m;
}

inline constexpr std::string_view kRankChars = "23456789TJQKA";
inline constexpr std::string_view kSuitChars = "cdhs";

inline Card parse_card(std::string_view text) {
  if (text.size() != 2) {
    throw ParseError("card code must be 2 characters, got '" + std::string(text) + "'");
  }
  auto r = kRankChars.find(text[0]);
  if (r == std::string_view::npos) {
    throw ParseError("bad rank character '" + std::string(1, text[0]) + "' in '" +
                     std::string(text) + "'");
  }
  auto s = kSuitChars.find(text[1]);
  if (s == std::string_view::npos) {
    throw ParseError("bad suit character '" + std::string(1, text[1]) + "' in '" +
                     std::string(text) + "'");
  }
  return Card(static_cast<int>(r) + 2, static_cast<Suit>(s));
}

inline std::string format_card(Card c) {
  return {kRankChars[c.rank() - 2], kSuitChars[static_cast<int>(c.suit())]};
}

// Parses a whitespace-separated list such as "As Kd 7c". Empty input yields no cards.
inline std::vector<Card> parse_cards(std::string_view text) {
  std::vector<Card> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    out.push_back(parse_card(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

inline std::string format_cards(std::span<const Card> cards) {
  std::string out;
  for (Card c : cards) {
    if (!out.empty()) out += ' ';
    out += format_card(c);
  }
  return out;
}

// Throws unless all cards are pairwise distinct.
inline void require_distinct(std::span<const Card> cards) {
  CardMask seen = 0;
  for (Card c : cards) {
    if (seen & mask_of(c)) throw ContractViolation("duplicate card " + format_card(c));
    seen |= mask_of(c);
  }
}

enum class HandCategory : std::uint8_t {
  HighCard = 0,
  Pair,
  TwoPair,
  ThreeOfAKind,
  Straight,
  Flush,
  FullHouse,
  FourOfAKind,
  StraightFlush,
};

inline constexpr int kNumCategories = 9;

inline constexpr std::string_view category_name(HandCategory c) {
  constexpr std::array<std::string_view, kNumCategories> names = {
      "HighCard", "Pair",     "TwoPair",   "ThreeOfAKind", "Straight",
      "Flush",    "FullHouse", "FourOfAKind", "StraightFlush"};
  return names[static_cast<int>(c)];
}

// Strength of a best hand. Packed as category << 20 followed by up to five
// 4-bit tiebreaker ranks, most significant first; unused slots are zero, so
// integer comparison is the poker order.
class HandRank {
 public:
  constexpr HandRank() = default;

  static constexpr HandRank make(HandCategory category, std::span<const int> tiebreakers) {
    if (tiebreakers.size() > 5) throw ContractViolation("at most 5 tiebreakers");
    std::uint32_t v = static_cast<std::uint32_t>(category) << 20;
    int shift = 16;
    for (int r : tiebreakers) {
      v |= static_cast<std::uint32_t>(r) << shift;
      shift -= 4;
    }
    return HandRank(v);
  }

  static constexpr HandRank from_value(std::uint32_t packed) { return HandRank(packed); }

  constexpr HandCategory category() const noexcept {
    return static_cast<HandCategory>(value_ >> 20);
  }

  std::vector<int> tiebreakers() const {
    std::vector<int> out;
    for (int shift = 16; shift >= 0; shift -= 4) {
      int r = static_cast<int>((value_ >> shift) & 0xF);
      if (r == 0) break;
      out.push_back(r);
    }
    return out;
  }

  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr auto operator<=>(HandRank, HandRank) = default;

 private:
  constexpr explicit HandRank(std::uint32_t v) : value_(v) {}
  std::uint32_t value_ = 0;
};

inline std::string to_string(HandRank r) {
  std::string out(category_name(r.category()));
  out += " [";
  bool first = true;
  for (int t : r.tiebreakers()) {
    if (!first) out += ' ';
    out += kRankChars[t - 2];
    first = false;
  }
  out += ']';
  return out;
}

namespace detail {

// Ranks are bit positions 0..12 (rank 2..14) inside a 13-bit mask.
constexpr std::uint32_t kRankBits = 0x1FFF;

inline int top_rank(std::uint32_t rank_mask) { return std::bit_width(rank_mask) + 1; }

inline std::uint32_t clear_rank(std::uint32_t rank_mask, int rank) {
  return rank_mask & ~(1u << (rank - 2));
}

// Appends the k highest ranks of the mask (fewer if the mask runs out).
inline std::uint32_t push_top(std::uint32_t value, int& shift, std::uint32_t rank_mask, int k) {
  for (int i = 0; i < k && rank_mask != 0; ++i) {
    int r = top_rank(rank_mask);
    value |= static_cast<std::uint32_t>(r) << shift;
    shift -= 4;
    rank_mask = clear_rank(rank_mask, r);
  }
  return value;
}

// High card of the best straight inside the rank mask, or 0. The ace also
// counts as rank 1 so the wheel A-2-3-4-5 is a 5-high straight.
inline int straight_high(std::uint32_t rank_mask) {
  std::uint32_t m = (rank_mask << 1) | ((rank_mask >> 12) & 1u);
  std::uint32_t s = m & (m >> 1) & (m >> 2) & (m >> 3) & (m >> 4);
  if (s == 0) return 0;
  return std::bit_width(s) - 1 + 5;
}

}  // namespace detail

// Best hand in a mask of 2..7 cards; no validation. Categories that need
// five cards only appear once five cards are present.
inline HandRank evaluate_mask(CardMask cards) {
  using namespace detail;
  const int n = std::popcount(cards);
  const std::array<std::uint32_t, 4> suits = {
      static_cast<std::uint32_t>(cards) & kRankBits,
      static_cast<std::uint32_t>(cards >> 16) & kRankBits,
      static_cast<std::uint32_t>(cards >> 32) & kRankBits,
      static_cast<std::uint32_t>(cards >> 48) & kRankBits};

  // Bit-sliced per-rank counter: count = ones + 2*twos + 4*fours.
  std::uint32_t ones = 0, twos = 0, fours = 0;
  for (std::uint32_t s : suits) {
    std::uint32_t carry = ones & s;
    ones ^= s;
    fours |= twos & carry;
    twos ^= carry;
  }
  const std::uint32_t any = suits[0] | suits[1] | suits[2] | suits[3];
  const std::uint32_t quads = fours;
  const std::uint32_t trips = ones & twos;
  const std::uint32_t pairs = twos & ~ones;
  const int slots = n < 5 ? n : 5;

  auto pack = [](HandCategory c) { return static_cast<std::uint32_t>(c) << 20; };

  std::uint32_t flush_mask = 0;
  for (std::uint32_t s : suits) {
    if (std::popcount(s) >= 5) flush_mask = s;
  }
  if (flush_mask != 0) {
    if (int hi = straight_high(flush_mask)) {
      return HandRank::make(HandCategory::StraightFlush, std::array{hi});
    }
  }
  if (quads != 0) {
    int q = top_rank(quads);
    int shift = 12;
    std::uint32_t v = pack(HandCategory::FourOfAKind) | (static_cast<std::uint32_t>(q) << 16);
    v = push_top(v, shift, clear_rank(any, q), slots - 4);
    return HandRank::from_value(v);
  }
  if (trips != 0) {
    int t = top_rank(trips);
    std::uint32_t pair_candidates = clear_rank(trips, t) | pairs;
    if (pair_candidates != 0) {
      int p = top_rank(pair_candidates);
      return HandRank::make(HandCategory::FullHouse, std::array{t, p});
    }
  }
  if (flush_mask != 0) {
    int shift = 16;
    return HandRank::from_value(push_top(pack(HandCategory::Flush), shift, flush_mask, 5));
  }
  if (n >= 5) {
    if (int hi = straight_high(any)) {
      return HandRank::make(HandCategory::Straight, std::array{hi});
    }
  }
  if (trips != 0) {
    int t = top_rank(trips);
    int shift = 12;
    std::uint32_t v = pack(HandCategory::ThreeOfAKind) | (static_cast<std::uint32_t>(t) << 16);
    return HandRank::from_value(push_top(v, shift, clear_rank(any, t), slots - 3));
  }
  if (std::popcount(pairs) >= 2) {
    int hi = top_rank(pairs);
    int lo = top_rank(clear_rank(pairs, hi));
    int shift = 8;
    std::uint32_t v = pack(HandCategory::TwoPair) | (static_cast<std::uint32_t>(hi) << 16) |
                      (static_cast<std::uint32_t>(lo) << 12);
    return HandRank::from_value(push_top(v, shift, clear_rank(clear_rank(any, hi), lo), slots - 4));
  }
  if (pairs != 0) {
    int p = top_rank(pairs);
    int shift = 12;
    std::uint32_t v = pack(HandCategory::Pair) | (static_cast<std::uint32_t>(p) << 16);
    return HandRank::from_value(push_top(v, shift, clear_rank(any, p), slots - 2));
  }
  int shift = 16;
  return HandRank::from_value(push_top(pack(HandCategory::HighCard), shift, any, slots));
}

// Best hand over 2..7 distinct cards.
inline HandRank evaluate_best(std::span<const Card> cards) {
  if (cards.size() < 2 || cards.size() > 7) {
    throw ContractViolation("evaluate_best needs 2..7 cards, got " +
                            std::to_string(cards.size()));
  }
  require_distinct(cards);
  return evaluate_mask(mask_of(cards));
}

enum class Showdown { AWins, BWins, Tie };

constexpr Showdown compare_showdown(HandRank a, HandRank b) noexcept {
  if (a > b) return Showdown::AWins;
  if (b > a) return Showdown::BWins;
  return Showdown::Tie;
}

}  // namespace pokerprob
