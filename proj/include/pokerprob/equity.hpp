#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pokerprob/cards.hpp"
#include "pokerprob/errors.hpp"
#include "pokerprob/rng.hpp"

namespace pokerprob {

enum class Stage : std::uint8_t { Preflop = 0, Flop = 1, Turn = 2, River = 3 };

inline constexpr std::array<Stage, 4> kAllStages = {Stage::Preflop, Stage::Flop, Stage::Turn,
                                                    Stage::River};

constexpr int board_size(Stage s) noexcept {
  constexpr std::array<int, 4> sizes = {0, 3, 4, 5};
  return sizes[static_cast<int>(s)];
}

constexpr std::string_view stage_name(Stage s) noexcept {
  constexpr std::array<std::string_view, 4> names = {"preflop", "flop", "turn", "river"};
  return names[static_cast<int>(s)];
}

// Hero's hole cards plus the visible board.
struct GameState {
  std::array<Card, 2> hole{};
  std::vector<Card> board;

  GameState() = default;
  GameState(std::array<Card, 2> h, std::vector<Card> b) : hole(h), board(std::move(b)) {
    validate();
  }

  static GameState parse(std::string_view hole_text, std::string_view board_text) {
    auto h = parse_cards(hole_text);
    if (h.size() != 2) {
      throw ContractViolation("hole must be exactly 2 cards, got " + std::to_string(h.size()));
    }
    return GameState({h[0], h[1]}, parse_cards(board_text));
  }

  void validate() const {
    if (board.size() != 0 && board.size() != 3 && board.size() != 4 && board.size() != 5) {
      throw ContractViolation("board must have 0, 3, 4 or 5 cards, got " +
                              std::to_string(board.size()));
    }
    std::vector<Card> all = cards();
    require_distinct(all);
  }

  Stage stage() const noexcept {
    switch (board.size()) {
      case 0: return Stage::Preflop;
      case 3: return Stage::Flop;
      case 4: return Stage::Turn;
      default: return Stage::River;
    }
  }

  // Hole followed by board.
  std::vector<Card> cards() const {
    std::vector<Card> all(hole.begin(), hole.end());
    all.insert(all.end(), board.begin(), board.end());
    return all;
  }

  CardMask hole_mask() const { return mask_of(hole); }
  CardMask board_mask() const { return mask_of(board); }

  // "As Ah|Ac Ad Ks"; preflop states end with the bar.
  std::string to_string() const { return format_cards(hole) + "|" + format_cards(board); }

  static GameState from_string(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw ParseError("state text needs a '|' separator");
    return parse(text.substr(0, bar), text.substr(bar + 1));
  }

  friend bool operator==(const GameState&, const GameState&) = default;
};

struct EquityEstimate {
  double p_win = 0;
  double p_tie = 0;
  std::uint64_t n = 0;
  std::uint64_t wins = 0;
  std::uint64_t ties = 0;

  double p_lose() const noexcept { return 1.0 - p_win - p_tie; }

  static EquityEstimate from_counts(std::uint64_t wins, std::uint64_t ties, std::uint64_t n) {
    EquityEstimate e;
    e.n = n;
    e.wins = wins;
    e.ties = ties;
    e.p_win = static_cast<double>(wins) / static_cast<double>(n);
    e.p_tie = static_cast<double>(ties) / static_cast<double>(n);
    return e;
  }

  friend bool operator==(const EquityEstimate&, const EquityEstimate&) = default;
};

namespace detail {

// Unseen cards (as mask bit positions) and the fixed part of a state.
struct RolloutSetup {
  CardMask hero = 0;   // hole + board
  CardMask board = 0;
  int missing_board = 0;
  int unseen_count = 0;
  std::array<std::uint8_t, kDeckSize> unseen{};

  explicit RolloutSetup(const GameState& state) {
    state.validate();
    board = state.board_mask();
    hero = board | state.hole_mask();
    missing_board = 5 - static_cast<int>(state.board.size());
    for (int i = 0; i < kDeckSize; ++i) {
      Card c = Card::from_index(i);
      if (!(hero & mask_of(c))) unseen[unseen_count++] = static_cast<std::uint8_t>(c.bit());
    }
  }
};

// Rollout `index` of the stream `seed`. Draws the opponent's two cards then
// the missing board cards by partial Fisher-Yates over `deck`, and undoes
// the swaps before returning, so each rollout depends only on (seed, index).
inline Showdown rollout(const RolloutSetup& setup, std::array<std::uint8_t, kDeckSize>& deck,
                        std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(derive_seed(seed, index));
  const int need = 2 + setup.missing_board;
  const auto m = static_cast<std::uint64_t>(setup.unseen_count);
  std::array<std::uint8_t, 7> picks{};
  for (int j = 0; j < need; ++j) {
    auto k = static_cast<std::uint8_t>(j + uniform_below(rng, m - j));
    picks[j] = k;
    std::swap(deck[j], deck[k]);
  }
  CardMask extra = 0;
  for (int j = 2; j < need; ++j) extra |= CardMask{1} << deck[j];
  const CardMask opp = (CardMask{1} << deck[0]) | (CardMask{1} << deck[1]);
  for (int j = need - 1; j >= 0; --j) std::swap(deck[j], deck[picks[j]]);

  return compare_showdown(evaluate_mask(setup.hero | extra),
                          evaluate_mask(setup.board | extra | opp));
}

struct Tally {
  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
};

inline Tally run_rollouts(const RolloutSetup& setup, std::uint64_t seed, std::uint64_t first,
                          std::uint64_t last) {
  auto deck = setup.unseen;
  Tally t;
  for (std::uint64_t i = first; i < last; ++i) {
    switch (rollout(setup, deck, seed, i)) {
      case Showdown::AWins: ++t.wins; break;
      case Showdown::Tie: ++t.ties; break;
      case Showdown::BWins: break;
    }
  }
  return t;
}

}  // namespace detail

// Monte Carlo win/tie frequencies against one uniformly random opponent hand,
// with the board run out to the river. The result depends only on
// (state, n, seed); `jobs` splits the rollouts across threads.
inline EquityEstimate simulate_equity(const GameState& state, std::uint64_t n,
                                      std::uint64_t seed, unsigned jobs = 1) {
  if (n == 0) throw ContractViolation("simulate_equity needs n >= 1");
  const detail::RolloutSetup setup(state);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(n, 256))));
  if (jobs == 1) {
    auto t = detail::run_rollouts(setup, seed, 0, n);
    return EquityEstimate::from_counts(t.wins, t.ties, n);
  }
  std::vector<detail::Tally> parts(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      parts[w] = detail::run_rollouts(setup, seed, n * w / jobs, n * (w + 1) / jobs);
    });
  }
  for (auto& th : workers) th.join();
  detail::Tally total;
  for (const auto& p : parts) {
    total.wins += p.wins;
    total.ties += p.ties;
  }
  return EquityEstimate::from_counts(total.wins, total.ties, n);
}

struct TracePoint {
  std::uint64_t n = 0;
  double p_win = 0;
  double p_tie = 0;
};

// Running estimate after each of the first n_max rollouts of the seeded
// stream; entry n-1 equals simulate_equity(state, n, seed).
inline std::vector<TracePoint> convergence_trace(const GameState& state, std::uint64_t n_max,
                                                 std::uint64_t seed) {
  if (n_max == 0) throw ContractViolation("convergence_trace needs n_max >= 1");
  const detail::RolloutSetup setup(state);
  auto deck = setup.unseen;
  std::vector<TracePoint> out;
  out.reserve(n_max);
  std::uint64_t wins = 0, ties = 0;
  for (std::uint64_t i = 0; i < n_max; ++i) {
    switch (detail::rollout(setup, deck, seed, i)) {
      case Showdown::AWins: ++wins; break;
      case Showdown::Tie: ++ties; break;
      case Showdown::BWins: break;
    }
    const auto count = static_cast<double>(i + 1);
    out.push_back({i + 1, static_cast<double>(wins) / count, static_cast<double>(ties) / count});
  }
  return out;
}

// Exact win/tie frequencies over every board completion and every opponent
// hand. Post-flop only: flop enumerates C(47,2) x C(45,2) outcomes.
inline EquityEstimate exact_equity(const GameState& state) {
  if (state.stage() == Stage::Preflop) {
    state.validate();
    throw UnsupportedStage("exact_equity does not enumerate preflop states");
  }
  const detail::RolloutSetup setup(state);
  const auto& u = setup.unseen;
  const int m = setup.unseen_count;
  std::uint64_t wins = 0, ties = 0, total = 0;

  auto showdowns = [&](CardMask extra) {
    const HandRank hero = evaluate_mask(setup.hero | extra);
    const CardMask board = setup.board | extra;
    for (int i = 0; i < m; ++i) {
      const CardMask a = CardMask{1} << u[i];
      if (extra & a) continue;
      for (int j = i + 1; j < m; ++j) {
        const CardMask b = CardMask{1} << u[j];
        if (extra & b) continue;
        switch (compare_showdown(hero, evaluate_mask(board | a | b))) {
          case Showdown::AWins: ++wins; break;
          case Showdown::Tie: ++ties; break;
          case Showdown::BWins: break;
        }
        ++total;
      }
    }
  };

  switch (setup.missing_board) {
    case 0:
      showdowns(0);
      break;
    case 1:
      for (int i = 0; i < m; ++i) showdowns(CardMask{1} << u[i]);
      break;
    default:
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) showdowns((CardMask{1} << u[i]) | (CardMask{1} << u[j]));
      }
      break;
  }
  return EquityEstimate::from_counts(wins, ties, total);
}

}  // namespace pokerprob
