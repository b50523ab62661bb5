// pokerprob: command-line front end for the evaluator, equity estimators,
// dataset generator, trainer and benchmark.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pokerprob/bench.hpp"
#include "pokerprob/dataset.hpp"
#include "pokerprob/equity.hpp"
#include "pokerprob/features.hpp"
#include "pokerprob/mlp.hpp"

using namespace pokerprob;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kIo = 3 };

struct Output {
  std::string path;
  bool force = false;
};

// Refuses to clobber an existing file unless --force was given.
void check_writable(const Output& out) {
  if (out.path.empty()) return;
  if (!out.force && std::filesystem::exists(out.path)) {
    throw IoError("'" + out.path + "' exists; pass --force to overwrite");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  return os;
}

void write_file(const std::string& path, const std::string& text) {
  auto os = open_out(path);
  os << text;
  if (!os) throw IoError("write to '" + path + "' failed");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::array<double, 4> parse_stage_mix(const std::string& text) {
  std::array<double, 4> mix{};
  std::istringstream in(text);
  std::string cell;
  std::size_t i = 0;
  while (std::getline(in, cell, ',')) {
    if (i == 4) throw ParseError("--stage-mix takes 4 weights");
    try {
      std::size_t used = 0;
      mix[i] = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::logic_error&) {
      throw ParseError("bad --stage-mix weight '" + cell + "'");
    }
    ++i;
  }
  if (i != 4) throw ParseError("--stage-mix takes 4 weights (preflop,flop,turn,river)");
  return mix;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heads-up hold'em win/tie probabilities: simulation, enumeration and a learned approximation"};
  app.require_subcommand(1);
  // Keys go under a [subcommand] section, e.g. "[gen-dataset]" then "count=1000".
  app.set_config("--config", "", "key=value file with [subcommand] sections; flags take precedence");
  app.get_config_ptr()->check(CLI::ExistingFile);

  // eval
  auto* eval = app.add_subcommand("eval", "Rank the best 5-card hand in 2 to 7 cards");
  std::string eval_cards;
  eval->add_option("--cards", eval_cards, "space-separated cards, e.g. \"As Ks Qs Js Ts\"")->required();

  // equity
  auto* equity = app.add_subcommand("equity", "Win/tie probability against one random hand");
  std::string hole, board;
  std::uint64_t n = 1000, seed = 1;
  unsigned jobs = 1;
  bool exact = false;
  equity->add_option("--hole", hole, "two hole cards")->required();
  equity->add_option("--board", board, "0, 3, 4 or 5 board cards")->capture_default_str();
  equity->add_option("--n", n, "Monte Carlo rollouts")->capture_default_str();
  equity->add_option("--seed", seed, "rollout seed")->capture_default_str();
  equity->add_option("--jobs", jobs, "threads (result does not depend on it)")->capture_default_str();
  equity->add_flag("--exact", exact, "enumerate every outcome instead of sampling");

  // features
  auto* features = app.add_subcommand("features", "Print the 29 network inputs for a state");
  features->add_option("--hole", hole)->required();
  features->add_option("--board", board);

  // gen-dataset
  auto* gen = app.add_subcommand("gen-dataset", "Generate labelled training records as CSV");
  GenConfig gen_config;
  std::string stage_mix = "0.25,0.25,0.25,0.25";
  Output gen_out;
  gen->add_option("--count", gen_config.count, "records")->capture_default_str();
  gen->add_option("--seed", gen_config.master_seed, "master seed")->capture_default_str();
  gen->add_option("--label-n", gen_config.label_n, "rollouts per label")->capture_default_str();
  gen->add_option("--stage-mix", stage_mix, "weights for preflop,flop,turn,river")->capture_default_str();
  gen->add_option("--jobs", gen_config.jobs, "threads (output does not depend on it)")->capture_default_str();
  gen->add_option("--out", gen_out.path, "output CSV")->required();
  gen->add_flag("--force", gen_out.force, "overwrite an existing file");

  // train
  auto* tr = app.add_subcommand("train", "Train the network on a dataset CSV");
  TrainConfig train_config;
  std::string data_path;
  std::uint64_t split_seed = 3;
  double train_fraction = 0.9;
  std::uint64_t log_every = 100;
  Output model_out, report_out, loss_out;
  tr->add_option("--data", data_path, "dataset CSV")->required();
  tr->add_option("--epochs", train_config.epochs)->capture_default_str();
  tr->add_option("--batch", train_config.batch_size)->capture_default_str();
  tr->add_option("--lr", train_config.adam.learning_rate)->capture_default_str();
  tr->add_option("--seed", train_config.init_seed, "weight init seed")->capture_default_str();
  tr->add_option("--shuffle-seed", train_config.shuffle_seed)->capture_default_str();
  tr->add_option("--split-seed", split_seed)->capture_default_str();
  tr->add_option("--train-fraction", train_fraction)->capture_default_str();
  tr->add_option("--log-every", log_every, "epochs between progress lines (0: quiet)")->capture_default_str();
  tr->add_option("--out", model_out.path, "model file")->required();
  tr->add_option("--report", report_out.path, "deviation/MAE table CSV");
  tr->add_option("--loss-out", loss_out.path, "per-epoch train MSE CSV");
  bool train_force = false;
  tr->add_flag("--force", train_force, "overwrite existing files");

  // infer
  auto* inf = app.add_subcommand("infer", "Predict win/tie probability with a trained model");
  std::string model_path;
  inf->add_option("--model", model_path)->required();
  inf->add_option("--hole", hole)->required();
  inf->add_option("--board", board);

  // bench
  auto* bench = app.add_subcommand("bench", "Time simulation against model inference");
  BenchConfig bench_config;
  Output bench_out;
  bench->add_option("--model", model_path)->required();
  bench->add_option("--states", bench_config.states_per_stage, "states per stage")->capture_default_str();
  bench->add_option("--reps", bench_config.repetitions, "timed calls per state")->capture_default_str();
  bench->add_option("--warmup", bench_config.warmup)->capture_default_str();
  bench->add_option("--seed", bench_config.seed)->capture_default_str();
  bench->add_option("--mc-n", bench_config.mc_n, "rollouts per simulation")->capture_default_str();
  bench->add_option("--out", bench_out.path, "report CSV");
  bench->add_flag("--force", bench_out.force);

  // convergence
  auto* conv = app.add_subcommand("convergence", "Running Monte Carlo estimates for several seeds");
  std::uint64_t n_max = 1000, runs = 25;
  Output conv_out;
  conv->add_option("--hole", hole)->required();
  conv->add_option("--board", board);
  conv->add_option("--nmax", n_max)->capture_default_str();
  conv->add_option("--runs", runs)->capture_default_str();
  conv->add_option("--seed", seed, "base seed; run r uses derive_seed(seed, r)")->capture_default_str();
  conv->add_option("--out", conv_out.path, "trace CSV")->required();
  conv->add_flag("--force", conv_out.force);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      const auto cards = parse_cards(eval_cards);
      std::cout << to_string(evaluate_best(cards)) << '\n';
    } else if (*equity) {
      const auto state = GameState::parse(hole, board);
      EquityEstimate e;
      if (exact) {
        e = exact_equity(state);
        std::cout << "method=exact";
      } else {
        e = simulate_equity(state, n, seed, jobs);
        std::cout << "method=monte_carlo seed=" << seed;
      }
      std::cout << " n=" << e.n << " p_win=" << fmt(e.p_win) << " p_tie=" << fmt(e.p_tie)
                << " p_lose=" << fmt(e.p_lose()) << '\n';
    } else if (*features) {
      const auto f = extract_features(GameState::parse(hole, board));
      for (int i = 0; i < kNumFeatures; ++i) std::cout << feature_name(i) << '=' << fmt(f[i]) << '\n';
    } else if (*gen) {
      gen_config.stage_mix = parse_stage_mix(stage_mix);
      gen_config.validate();
      check_writable(gen_out);
      std::cerr << "gen-dataset: count=" << gen_config.count << " seed=" << gen_config.master_seed
                << " label_n=" << gen_config.label_n << " jobs=" << gen_config.jobs << '\n';
      save_csv(generate(gen_config), gen_out.path);
      std::cout << "wrote " << gen_config.count << " records to " << gen_out.path << '\n';
    } else if (*tr) {
      model_out.force = report_out.force = loss_out.force = train_force;
      train_config.validate();
      check_writable(model_out);
      check_writable(report_out);
      check_writable(loss_out);
      auto records = load_csv(data_path);
      auto [train_set, test_set] = split(records, train_fraction, split_seed);
      std::cerr << "train: " << train_set.size() << " train / " << test_set.size()
                << " test records; seed=" << train_config.init_seed
                << " shuffle_seed=" << train_config.shuffle_seed << " split_seed=" << split_seed
                << '\n';
      auto result = train(train_set, test_set, train_config, [&](std::uint64_t epoch, double mse) {
        if (log_every != 0 && ((epoch + 1) % log_every == 0 || epoch + 1 == train_config.epochs)) {
          std::cerr << "epoch " << epoch + 1 << " train_mse " << mse << '\n';
        }
      });
      save_model(result.model, model_out.path);
      std::ostringstream table;
      write_metrics_csv(table, result.report);
      std::cout << table.str();
      if (!report_out.path.empty()) write_file(report_out.path, table.str());
      if (!loss_out.path.empty()) {
        std::ostringstream loss;
        write_loss_csv(loss, result.report);
        write_file(loss_out.path, loss.str());
      }
    } else if (*inf) {
      const auto model = load_model(model_path);
      const auto p = infer(model, GameState::parse(hole, board));
      std::cout << "p_win=" << fmt(p.p_win) << " p_tie=" << fmt(p.p_tie) << '\n';
    } else if (*bench) {
      check_writable(bench_out);
      const auto model = load_model(model_path);
      const auto report = run_bench(model, bench_config);
      write_bench_table(std::cout, report);
      if (!bench_out.path.empty()) {
        std::ostringstream csv;
        write_bench_csv(csv, report);
        write_file(bench_out.path, csv.str());
      }
    } else if (*conv) {
      if (runs == 0) throw ContractViolation("--runs must be > 0");
      check_writable(conv_out);
      const auto state = GameState::parse(hole, board);
      auto os = open_out(conv_out.path);
      os << "run,seed,n,p_win,p_tie\n";
      char buf[96];
      for (std::uint64_t r = 0; r < runs; ++r) {
        const std::uint64_t run_seed = derive_seed(seed, r);
        for (const auto& pt : convergence_trace(state, n_max, run_seed)) {
          std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%.17g,%.17g\n",
                        static_cast<unsigned long long>(r), static_cast<unsigned long long>(run_seed),
                        static_cast<unsigned long long>(pt.n), pt.p_win, pt.p_tie);
          os << buf;
        }
      }
      if (!os) throw IoError("write to '" + conv_out.path + "' failed");
      std::cout << "wrote " << runs << " traces to " << conv_out.path << " (seed=" << seed << ")\n";
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
