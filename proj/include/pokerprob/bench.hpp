#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pokerprob/dataset.hpp"
#include "pokerprob/equity.hpp"
#include "pokerprob/errors.hpp"
#include "pokerprob/mlp.hpp"

namespace pokerprob {

// Figures quoted for the original Python simulator and network, kept only as
// annotations next to our own measurements.
struct ReferenceFigures {
  static constexpr double mc_latency_s = 0.46563;
  static constexpr double infer_latency_s = 0.00078;
  static constexpr double speedup = 600;
  static constexpr double model_bytes = 8.4e3;
  static constexpr double lookup_table_bytes = 123e6;
  static constexpr double lookup_table_entries = 32.5e6;
  static constexpr double memory_reduction = 14600;
};

struct BenchConfig {
  std::size_t states_per_stage = 100;
  std::size_t repetitions = 1;  // timed calls per state and path
  std::size_t warmup = 10;      // untimed calls per path before timing
  std::uint64_t seed = 1;
  std::uint64_t mc_n = 1000;

  void validate() const {
    if (states_per_stage == 0) throw ContractViolation("bench needs at least one state per stage");
    if (repetitions == 0) throw ContractViolation("repetitions must be > 0");
    if (warmup < 10) throw ContractViolation("warmup must be >= 10");
    if (mc_n == 0) throw ContractViolation("mc_n must be > 0");
  }
};

using StageSample = std::array<std::vector<GameState>, 4>;

// Same seed, same states. Each stage draws from its own stream.
inline StageSample bench_sample(std::uint64_t seed, std::size_t states_per_stage) {
  StageSample sample;
  for (Stage s : kAllStages) {
    Xoshiro256 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    auto& states = sample[static_cast<int>(s)];
    for (std::size_t i = 0; i < states_per_stage; ++i) states.push_back(deal_state(rng, s));
  }
  return sample;
}

struct LatencyStats {
  std::size_t samples = 0;
  double mean_s = 0;
  double median_s = 0;
  double p95_s = 0;
};

// Nearest-rank percentiles.
inline LatencyStats summarize(std::vector<double> seconds) {
  if (seconds.empty()) throw ContractViolation("no timings to summarize");
  std::sort(seconds.begin(), seconds.end());
  const std::size_t n = seconds.size();
  auto rank = [&](double q) {
    auto r = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    return seconds[std::clamp<std::size_t>(r, 1, n) - 1];
  };
  LatencyStats s;
  s.samples = n;
  s.mean_s = std::accumulate(seconds.begin(), seconds.end(), 0.0) / static_cast<double>(n);
  s.median_s = n % 2 ? seconds[n / 2] : 0.5 * (seconds[n / 2 - 1] + seconds[n / 2]);
  s.p95_s = rank(0.95);
  return s;
}

struct StageBench {
  Stage stage = Stage::Preflop;
  LatencyStats mc;
  LatencyStats infer;
  double speedup = 0;  // mc mean / infer mean
};

struct MachineInfo {
  std::string cpu;
  unsigned hardware_threads = 0;
  std::string compiler;
  std::string build;
};

inline MachineInfo machine_info() {
  MachineInfo m;
  std::ifstream cpuinfo("/proc/cpuinfo");
  for (std::string line; std::getline(cpuinfo, line);) {
    if (line.rfind("model name", 0) == 0) {
      auto colon = line.find(':');
      if (colon != std::string::npos) m.cpu = line.substr(line.find_first_not_of(' ', colon + 1));
      break;
    }
  }
  if (m.cpu.empty()) m.cpu = "unknown";
  m.hardware_threads = std::thread::hardware_concurrency();
#if defined(__clang__)
  m.compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  m.compiler = "gcc " __VERSION__;
#else
  m.compiler = "unknown";
#endif
#ifdef NDEBUG
  m.build = "release";
#else
  m.build = "debug";
#endif
  return m;
}

struct BenchReport {
  BenchConfig config;
  std::vector<StageBench> stages;
  LatencyStats mc_overall;
  LatencyStats infer_overall;
  double speedup = 0;
  std::size_t model_bytes = 0;
  MachineInfo machine;
};

namespace detail {

template <class F>
double time_call(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

// Keeps results observable so timed calls are not optimized away.
inline volatile double bench_sink = 0;

}  // namespace detail

// Times simulate_equity(mc_n) and infer on the same states, one call at a
// time, single-threaded.
inline BenchReport run_bench(const MlpModel& model, const StageSample& sample,
                             const BenchConfig& config) {
  config.validate();
  BenchReport report;
  report.config = config;
  report.model_bytes = serialize_model(model).size();
  report.machine = machine_info();

  std::vector<const GameState*> all;
  for (const auto& states : sample) {
    for (const auto& s : states) all.push_back(&s);
  }
  if (all.empty()) throw ContractViolation("bench sample is empty");

  std::uint64_t call = 0;
  for (std::size_t i = 0; i < config.warmup; ++i) {
    const GameState& s = *all[i % all.size()];
    detail::bench_sink = detail::bench_sink + simulate_equity(s, config.mc_n, derive_seed(config.seed, call++)).p_win;
    detail::bench_sink = detail::bench_sink + infer(model, s).p_win;
  }

  std::vector<double> mc_all, infer_all;
  for (Stage stage : kAllStages) {
    const auto& states = sample[static_cast<int>(stage)];
    if (states.empty()) continue;
    std::vector<double> mc_times, infer_times;
    for (const auto& s : states) {
      for (std::size_t r = 0; r < config.repetitions; ++r) {
        const std::uint64_t mc_seed = derive_seed(config.seed, call++);
        mc_times.push_back(detail::time_call([&] {
          detail::bench_sink = detail::bench_sink + simulate_equity(s, config.mc_n, mc_seed).p_win;
        }));
        infer_times.push_back(detail::time_call(
            [&] { detail::bench_sink = detail::bench_sink + infer(model, s).p_win; }));
      }
    }
    mc_all.insert(mc_all.end(), mc_times.begin(), mc_times.end());
    infer_all.insert(infer_all.end(), infer_times.begin(), infer_times.end());
    StageBench b;
    b.stage = stage;
    b.mc = summarize(std::move(mc_times));
    b.infer = summarize(std::move(infer_times));
    b.speedup = b.mc.mean_s / b.infer.mean_s;
    report.stages.push_back(b);
  }
  report.mc_overall = summarize(std::move(mc_all));
  report.infer_overall = summarize(std::move(infer_all));
  report.speedup = report.mc_overall.mean_s / report.infer_overall.mean_s;
  return report;
}

inline BenchReport run_bench(const MlpModel& model, const BenchConfig& config) {
  config.validate();
  return run_bench(model, bench_sample(config.seed, config.states_per_stage), config);
}

// Hours of extra work if every one of `hands` training hands needs
// `sims_per_hand` equity simulations costing `latency_s` each.
inline double training_cost_projection(double latency_s, double hands, double sims_per_hand) {
  if (!(latency_s >= 0) || !(hands >= 0) || !(sims_per_hand >= 0)) {
    throw ContractViolation("training_cost_projection needs non-negative inputs");
  }
  return hands * sims_per_hand * latency_s / 3600.0;
}

// Long format: stage,measure,value. Stage "all" holds aggregate rows,
// "reference" the quoted figures, "machine" the environment.
inline void write_bench_csv(std::ostream& os, const BenchReport& r) {
  auto row = [&](const std::string& stage, const char* measure, double value) {
    // Shortest text that reads back to the same double.
    char buf[32];
    auto end = std::to_chars(buf, buf + sizeof buf, value).ptr;
    os << stage << ',' << measure << ',' << std::string_view(buf, end - buf) << '\n';
  };
  auto stats = [&](const std::string& stage, const char* prefix, const LatencyStats& s) {
    const std::string p = prefix;
    row(stage, (p + "_mean_s").c_str(), s.mean_s);
    row(stage, (p + "_median_s").c_str(), s.median_s);
    row(stage, (p + "_p95_s").c_str(), s.p95_s);
    row(stage, (p + "_samples").c_str(), static_cast<double>(s.samples));
  };
  os << "stage,measure,value\n";
  for (const auto& b : r.stages) {
    const std::string name(stage_name(b.stage));
    stats(name, "mc", b.mc);
    stats(name, "infer", b.infer);
    row(name, "speedup", b.speedup);
  }
  stats("all", "mc", r.mc_overall);
  stats("all", "infer", r.infer_overall);
  row("all", "speedup", r.speedup);
  row("all", "model_bytes", static_cast<double>(r.model_bytes));
  row("all", "mc_n", static_cast<double>(r.config.mc_n));
  row("all", "seed", static_cast<double>(r.config.seed));
  row("reference", "mc_mean_s", ReferenceFigures::mc_latency_s);
  row("reference", "infer_mean_s", ReferenceFigures::infer_latency_s);
  row("reference", "speedup", ReferenceFigures::speedup);
  row("reference", "model_bytes", ReferenceFigures::model_bytes);
  row("reference", "lookup_table_bytes", ReferenceFigures::lookup_table_bytes);
  row("reference", "lookup_table_entries", ReferenceFigures::lookup_table_entries);
  row("reference", "memory_reduction", ReferenceFigures::memory_reduction);
  // Text fields are quoted; commas in CPU names are common.
  auto quoted = [](std::string s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  os << "machine,cpu," << quoted(r.machine.cpu) << '\n';
  os << "machine,hardware_threads," << r.machine.hardware_threads << '\n';
  os << "machine,compiler," << quoted(r.machine.compiler) << '\n';
  os << "machine,build," << r.machine.build << '\n';
}

inline void write_bench_table(std::ostream& os, const BenchReport& r) {
  char buf[200];
  auto us = [](double s) { return s * 1e6; };
  std::snprintf(buf, sizeof buf, "%-8s %12s %12s %12s %10s %10s %10s %10s\n", "stage",
                "mc mean us", "mc med us", "mc p95 us", "nn mean us", "nn med us", "nn p95 us",
                "speedup");
  os << buf;
  auto line = [&](const std::string& name, const LatencyStats& mc, const LatencyStats& nn,
                  double speedup) {
    std::snprintf(buf, sizeof buf, "%-8s %12.1f %12.1f %12.1f %10.2f %10.2f %10.2f %9.0fx\n",
                  name.c_str(), us(mc.mean_s), us(mc.median_s), us(mc.p95_s), us(nn.mean_s),
                  us(nn.median_s), us(nn.p95_s), speedup);
    os << buf;
  };
  for (const auto& b : r.stages) line(std::string(stage_name(b.stage)), b.mc, b.infer, b.speedup);
  line("all", r.mc_overall, r.infer_overall, r.speedup);
  std::snprintf(buf, sizeof buf,
                "\nMC rollouts per call: %llu; model file: %zu bytes\n",
                static_cast<unsigned long long>(r.config.mc_n), r.model_bytes);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "Reference (Python): MC %.5f s, network %.5f s, ~%.0fx; model %.1f KB vs "
                "%.0f MB lookup table (%.1fM entries, ~%.0fx)\n",
                ReferenceFigures::mc_latency_s, ReferenceFigures::infer_latency_s,
                ReferenceFigures::speedup, ReferenceFigures::model_bytes / 1e3,
                ReferenceFigures::lookup_table_bytes / 1e6,
                ReferenceFigures::lookup_table_entries / 1e6, ReferenceFigures::memory_reduction);
  os << buf;
  os << "Machine: " << r.machine.cpu << ", " << r.machine.hardware_threads << " threads, "
     << r.machine.compiler << ", " << r.machine.build << " build\n";
}

}  // namespace pokerprob
