#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "pokerprob/equity.hpp"
#include "pokerprob/errors.hpp"
#include "pokerprob/features.hpp"
#include "pokerprob/rng.hpp"

namespace pokerprob {

struct DatasetRecord {
  GameState state;
  FeatureVector features{};
  double label_win = 0;
  double label_tie = 0;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct GenConfig {
  std::uint64_t count = 1;
  std::uint64_t label_n = 1000;
  std::uint64_t master_seed = 1;
  // Relative weights of preflop, flop, turn, river.
  std::array<double, 4> stage_mix = {0.25, 0.25, 0.25, 0.25};
  unsigned jobs = 1;

  void validate() const {
    if (count == 0) throw ContractViolation("count must be >= 1");
    if (label_n == 0) throw ContractViolation("label_n must be >= 1");
    double total = 0;
    for (double w : stage_mix) {
      if (!(w >= 0) || !std::isfinite(w)) throw ContractViolation("stage weights must be >= 0");
      total += w;
    }
    if (!(total > 0)) throw ContractViolation("stage weights must sum to > 0");
  }
};

template <class Rng>
Stage draw_stage(Rng& rng, const std::array<double, 4>& weights) {
  const double total = weights[0] + weights[1] + weights[2] + weights[3];
  const double u = uniform_unit(rng) * total;
  double acc = 0;
  Stage last = Stage::Preflop;
  for (int i = 0; i < 4; ++i) {
    if (weights[i] <= 0) continue;
    acc += weights[i];
    last = static_cast<Stage>(i);
    if (u < acc) return last;
  }
  return last;
}

// Hole cards and a board of the stage's size, dealt without replacement.
template <class Rng>
GameState deal_state(Rng& rng, Stage stage) {
  std::array<int, kDeckSize> deck{};
  std::iota(deck.begin(), deck.end(), 0);
  const int need = 2 + board_size(stage);
  for (int j = 0; j < need; ++j) {
    auto k = j + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(kDeckSize - j)));
    std::swap(deck[j], deck[k]);
  }
  std::vector<Card> board;
  for (int j = 2; j < need; ++j) board.push_back(Card::from_index(deck[j]));
  return GameState({Card::from_index(deck[0]), Card::from_index(deck[1])}, std::move(board));
}

// Features plus Monte Carlo labels for one state.
inline DatasetRecord make_record(GameState state, std::uint64_t label_n,
                                 std::uint64_t label_seed) {
  DatasetRecord r;
  const EquityEstimate label = simulate_equity(state, label_n, label_seed);
  r.label_win = label.p_win;
  r.label_tie = label.p_tie;
  r.features = extract_features(state);
  r.state = std::move(state);
  return r;
}

// Record `index` of the dataset; depends only on (config, index).
inline DatasetRecord generate_record(const GenConfig& config, std::uint64_t index) {
  Xoshiro256 rng(derive_seed(config.master_seed, index));
  const Stage stage = draw_stage(rng, config.stage_mix);
  GameState state = deal_state(rng, stage);
  const std::uint64_t label_seed = rng();
  return make_record(std::move(state), config.label_n, label_seed);
}

inline std::vector<DatasetRecord> generate(const GenConfig& config) {
  config.validate();
  std::vector<DatasetRecord> out(config.count);
  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(config.jobs, 1, std::min<std::uint64_t>(config.count, 256)));
  auto work = [&](unsigned w) {
    for (std::uint64_t i = w; i < config.count; i += jobs) out[i] = generate_record(config, i);
  };
  if (jobs == 1) {
    work(0);
    return out;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w);
  for (auto& t : workers) t.join();
  return out;
}

// Shuffled partition; the first round(train_fraction * size) go to train.
inline std::pair<std::vector<DatasetRecord>, std::vector<DatasetRecord>> split(
    const std::vector<DatasetRecord>& records, double train_fraction, std::uint64_t seed) {
  if (records.empty()) throw ContractViolation("cannot split an empty dataset");
  if (!(train_fraction > 0 && train_fraction < 1)) {
    throw ContractViolation("train fraction must be in (0, 1)");
  }
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  Xoshiro256 rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(rng, i + 1)]);
  }
  const auto n_train = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(records.size())));
  std::pair<std::vector<DatasetRecord>, std::vector<DatasetRecord>> out;
  out.first.reserve(n_train);
  out.second.reserve(records.size() - n_train);
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < n_train ? out.first : out.second).push_back(records[order[i]]);
  }
  return out;
}

// CSV columns: state, f1..f29, label_win, label_tie.
inline std::string csv_header() {
  std::string h = "state";
  for (int i = 0; i < kNumFeatures; ++i) h += "," + feature_name(i);
  h += ",label_win,label_tie";
  return h;
}

namespace detail {

inline void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

inline double parse_number(std::string_view field, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw MalformedRow(line, "bad number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace detail

inline void write_csv(std::ostream& os, const std::vector<DatasetRecord>& records) {
  os << csv_header() << '\n';
  std::string row;
  for (const auto& r : records) {
    row = r.state.to_string();
    for (double f : r.features) {
      row += ',';
      detail::append_number(row, f);
    }
    row += ',';
    detail::append_number(row, r.label_win);
    row += ',';
    detail::append_number(row, r.label_tie);
    os << row << '\n';
  }
}

inline std::vector<DatasetRecord> read_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) throw MalformedRow(line_no, "missing header");
  if (line != csv_header()) throw MalformedRow(line_no, "unexpected header");

  constexpr std::size_t kColumns = 1 + kNumFeatures + 2;
  std::vector<DatasetRecord> out;
  std::vector<std::string_view> fields;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    fields.clear();
    std::string_view rest = line;
    for (;;) {
      auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != kColumns) {
      throw MalformedRow(line_no, "expected " + std::to_string(kColumns) + " columns, got " +
                                      std::to_string(fields.size()));
    }
    DatasetRecord r;
    try {
      r.state = GameState::from_string(fields[0]);
    } catch (const Error& e) {
      throw MalformedRow(line_no, e.what());
    }
    for (int i = 0; i < kNumFeatures; ++i) r.features[i] = detail::parse_number(fields[1 + i], line_no);
    r.label_win = detail::parse_number(fields[1 + kNumFeatures], line_no);
    r.label_tie = detail::parse_number(fields[2 + kNumFeatures], line_no);
    out.push_back(std::move(r));
  }
  return out;
}

inline void save_csv(const std::vector<DatasetRecord>& records, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_csv(os, records);
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

inline std::vector<DatasetRecord> load_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  return read_csv(is);
}

}  // namespace pokerprob
