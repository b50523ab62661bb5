#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pokerprob/dataset.hpp"
#include "pokerprob/errors.hpp"
#include "pokerprob/features.hpp"
#include "pokerprob/rng.hpp"

namespace pokerprob {

inline constexpr std::array<int, 4> kDefaultLayerDims = {kNumFeatures, 24, 12, 2};

// Fully connected network: ELU hidden layers, sigmoid outputs.
//
// Parameters live in one flat buffer, layer by layer: the weight matrix as
// fan_in rows of fan_out values (row = input unit), then the bias vector.
// This is also the on-disk order.
class MlpModel {
 public:
  MlpModel() : MlpModel(std::vector<int>(kDefaultLayerDims.begin(), kDefaultLayerDims.end())) {}

  explicit MlpModel(std::vector<int> layer_dims, double elu_alpha = 1.0)
      : dims_(std::move(layer_dims)), alpha_(elu_alpha) {
    if (dims_.size() < 2) throw ContractViolation("a network needs at least 2 layer dims");
    std::size_t offset = 0;
    for (std::size_t l = 0; l + 1 < dims_.size(); ++l) {
      if (dims_[l] <= 0 || dims_[l + 1] <= 0) throw ContractViolation("layer dims must be > 0");
      weight_offsets_.push_back(offset);
      offset += static_cast<std::size_t>(dims_[l]) * dims_[l + 1];
      bias_offsets_.push_back(offset);
      offset += dims_[l + 1];
    }
    params_.assign(offset, 0.0);
  }

  const std::vector<int>& layer_dims() const noexcept { return dims_; }
  std::size_t num_layers() const noexcept { return dims_.size() - 1; }
  int input_size() const noexcept { return dims_.front(); }
  int output_size() const noexcept { return dims_.back(); }
  double elu_alpha() const noexcept { return alpha_; }
  std::size_t parameter_count() const noexcept { return params_.size(); }
  int max_width() const noexcept { return *std::max_element(dims_.begin(), dims_.end()); }

  std::span<double> parameters() noexcept { return params_; }
  std::span<const double> parameters() const noexcept { return params_; }

  std::span<double> weights(std::size_t layer) {
    return {params_.data() + weight_offsets_[layer], weight_count(layer)};
  }
  std::span<const double> weights(std::size_t layer) const {
    return {params_.data() + weight_offsets_[layer], weight_count(layer)};
  }
  std::span<double> biases(std::size_t layer) {
    return {params_.data() + bias_offsets_[layer], static_cast<std::size_t>(dims_[layer + 1])};
  }
  std::span<const double> biases(std::size_t layer) const {
    return {params_.data() + bias_offsets_[layer], static_cast<std::size_t>(dims_[layer + 1])};
  }
  std::size_t weight_offset(std::size_t layer) const { return weight_offsets_[layer]; }
  std::size_t bias_offset(std::size_t layer) const { return bias_offsets_[layer]; }

  friend bool operator==(const MlpModel& a, const MlpModel& b) {
    return a.dims_ == b.dims_ && std::bit_cast<std::uint64_t>(a.alpha_) ==
                                     std::bit_cast<std::uint64_t>(b.alpha_) &&
           a.params_.size() == b.params_.size() &&
           std::memcmp(a.params_.data(), b.params_.data(), a.params_.size() * sizeof(double)) == 0;
  }

 private:
  std::size_t weight_count(std::size_t layer) const {
    return static_cast<std::size_t>(dims_[layer]) * dims_[layer + 1];
  }

  std::vector<int> dims_;
  double alpha_;
  std::vector<double> params_;
  std::vector<std::size_t> weight_offsets_;
  std::vector<std::size_t> bias_offsets_;
};

// Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
inline MlpModel init_model(std::uint64_t seed,
                           std::vector<int> layer_dims = {kDefaultLayerDims.begin(),
                                                          kDefaultLayerDims.end()},
                           double elu_alpha = 1.0) {
  MlpModel model(std::move(layer_dims), elu_alpha);
  Xoshiro256 rng(seed);
  for (std::size_t l = 0; l < model.num_layers(); ++l) {
    const double bound =
        std::sqrt(6.0 / (model.layer_dims()[l] + model.layer_dims()[l + 1]));
    for (double& w : model.weights(l)) w = (2.0 * uniform_unit(rng) - 1.0) * bound;
  }
  return model;
}

inline double elu(double x, double alpha = 1.0) noexcept {
  return x >= 0 ? x : alpha * std::expm1(x);
}

inline double sigmoid(double x) noexcept {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

struct Prediction {
  double p_win = 0;
  double p_tie = 0;
};

namespace detail {

// out[o] = b[o] + sum_i x[i] * W[i][o]
inline void affine(const double* x, int fan_in, const double* w, const double* b, int fan_out,
                   double* out) {
  std::copy(b, b + fan_out, out);
  for (int i = 0; i < fan_in; ++i) {
    const double xi = x[i];
    const double* row = w + static_cast<std::size_t>(i) * fan_out;
    for (int o = 0; o < fan_out; ++o) out[o] += xi * row[o];
  }
}

// Runs the network, writing every layer's activations into `acts`
// (acts[0] = input). Layer l's activation starts at offsets[l].
inline void forward_pass(const MlpModel& model, const double* x, std::vector<double>& acts,
                         std::vector<std::size_t>& offsets) {
  const auto& dims = model.layer_dims();
  offsets.resize(dims.size());
  std::size_t total = 0;
  for (std::size_t l = 0; l < dims.size(); ++l) {
    offsets[l] = total;
    total += dims[l];
  }
  acts.resize(total);
  std::copy(x, x + dims[0], acts.begin());
  const std::size_t last = model.num_layers() - 1;
  for (std::size_t l = 0; l < model.num_layers(); ++l) {
    double* out = acts.data() + offsets[l + 1];
    affine(acts.data() + offsets[l], dims[l], model.weights(l).data(), model.biases(l).data(),
           dims[l + 1], out);
    for (int o = 0; o < dims[l + 1]; ++o) {
      out[o] = l == last ? sigmoid(out[o]) : elu(out[o], model.elu_alpha());
    }
  }
}

}  // namespace detail

// All output activations for input x.
inline std::vector<double> forward_all(const MlpModel& model, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(model.input_size())) {
    throw ContractViolation("input has " + std::to_string(x.size()) + " values, model expects " +
                            std::to_string(model.input_size()));
  }
  thread_local std::vector<double> acts;
  thread_local std::vector<std::size_t> offsets;
  detail::forward_pass(model, x.data(), acts, offsets);
  return {acts.begin() + static_cast<std::ptrdiff_t>(offsets.back()), acts.end()};
}

inline Prediction forward(const MlpModel& model, std::span<const double> x) {
  if (model.output_size() != 2) throw ContractViolation("forward expects a 2-output model");
  if (x.size() != static_cast<std::size_t>(model.input_size())) {
    throw ContractViolation("input has " + std::to_string(x.size()) + " values, model expects " +
                            std::to_string(model.input_size()));
  }
  thread_local std::vector<double> acts;
  thread_local std::vector<std::size_t> offsets;
  detail::forward_pass(model, x.data(), acts, offsets);
  return {acts[offsets.back()], acts[offsets.back() + 1]};
}

// Feature rows and label rows as two dense row-major matrices.
struct TrainingSet {
  std::size_t inputs = kNumFeatures;
  std::size_t outputs = 2;
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const noexcept { return inputs == 0 ? 0 : x.size() / inputs; }
  const double* input(std::size_t row) const { return x.data() + row * inputs; }
  const double* target(std::size_t row) const { return y.data() + row * outputs; }

  static TrainingSet from_records(const std::vector<DatasetRecord>& records) {
    TrainingSet s;
    s.x.reserve(records.size() * kNumFeatures);
    s.y.reserve(records.size() * 2);
    for (const auto& r : records) {
      s.x.insert(s.x.end(), r.features.begin(), r.features.end());
      s.y.push_back(r.label_win);
      s.y.push_back(r.label_tie);
    }
    return s;
  }
};

// Mean squared error over the selected rows and every output, with its exact
// gradient with respect to every parameter written to `gradients`.
inline double loss_and_gradients(const MlpModel& model, const TrainingSet& data,
                                 std::span<const std::size_t> rows, std::span<double> gradients) {
  if (rows.empty()) throw ContractViolation("loss_and_gradients needs a non-empty batch");
  if (gradients.size() != model.parameter_count()) {
    throw ContractViolation("gradient buffer size does not match the model");
  }
  if (data.inputs != static_cast<std::size_t>(model.input_size()) ||
      data.outputs != static_cast<std::size_t>(model.output_size())) {
    throw ContractViolation("training set shape does not match the model");
  }
  std::fill(gradients.begin(), gradients.end(), 0.0);
  const auto& dims = model.layer_dims();
  const std::size_t layers = model.num_layers();
  const int k = model.output_size();
  const double alpha = model.elu_alpha();
  const double scale = 2.0 / (static_cast<double>(rows.size()) * k);

  std::vector<double> acts;
  std::vector<std::size_t> offsets;
  std::vector<double> delta(model.max_width()), prev_delta(model.max_width());
  double sum_sq = 0;

  for (std::size_t row : rows) {
    detail::forward_pass(model, data.input(row), acts, offsets);
    const double* y = acts.data() + offsets[layers];
    const double* t = data.target(row);
    for (int o = 0; o < k; ++o) {
      const double err = y[o] - t[o];
      sum_sq += err * err;
      delta[o] = scale * err * y[o] * (1.0 - y[o]);
    }
    for (std::size_t l = layers; l-- > 0;) {
      const int fan_in = dims[l];
      const int fan_out = dims[l + 1];
      const double* h = acts.data() + offsets[l];
      const double* w = model.weights(l).data();
      double* gw = gradients.data() + model.weight_offset(l);
      double* gb = gradients.data() + model.bias_offset(l);
      for (int o = 0; o < fan_out; ++o) gb[o] += delta[o];
      for (int i = 0; i < fan_in; ++i) {
        const double hi = h[i];
        double* grow = gw + static_cast<std::size_t>(i) * fan_out;
        for (int o = 0; o < fan_out; ++o) grow[o] += hi * delta[o];
      }
      if (l == 0) break;
      for (int i = 0; i < fan_in; ++i) {
        const double* wrow = w + static_cast<std::size_t>(i) * fan_out;
        double s = 0;
        for (int o = 0; o < fan_out; ++o) s += wrow[o] * delta[o];
        // ELU'(z) is 1 for z > 0 and h + alpha otherwise.
        prev_delta[i] = s * (h[i] > 0 ? 1.0 : h[i] + alpha);
      }
      std::swap(delta, prev_delta);
    }
  }
  return sum_sq / (static_cast<double>(rows.size()) * k);
}

struct LossAndGradients {
  double mse = 0;
  std::vector<double> gradients;
};

inline LossAndGradients loss_and_gradients(const MlpModel& model, const TrainingSet& data) {
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), 0);
  LossAndGradients out;
  out.gradients.resize(model.parameter_count());
  out.mse = loss_and_gradients(model, data, rows, out.gradients);
  return out;
}

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t step = 0;

  explicit AdamState(std::size_t parameter_count)
      : m(parameter_count, 0.0), v(parameter_count, 0.0) {}
};

// One Adam update with bias-corrected moments.
inline void adam_step(MlpModel& model, AdamState& state, std::span<const double> gradients,
                      const AdamConfig& config) {
  auto params = model.parameters();
  if (state.m.size() != params.size() || state.v.size() != params.size() ||
      gradients.size() != params.size()) {
    throw ContractViolation("Adam state does not match the model");
  }
  ++state.step;
  const double correction1 = 1.0 - std::pow(config.beta1, static_cast<double>(state.step));
  const double correction2 = 1.0 - std::pow(config.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = gradients[i];
    state.m[i] = config.beta1 * state.m[i] + (1.0 - config.beta1) * g;
    state.v[i] = config.beta2 * state.v[i] + (1.0 - config.beta2) * g * g;
    const double m_hat = state.m[i] / correction1;
    const double v_hat = state.v[i] / correction2;
    params[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
}

// Bucket widths for the deviation table, as absolute probability differences.
inline constexpr std::array<double, 8> kDeviationBuckets = {0.005, 0.01, 0.02, 0.03,
                                                            0.04,  0.05, 0.10, 0.20};

struct Metrics {
  std::size_t count = 0;
  std::array<double, 2> mae{};  // win, tie
  // within[b][o]: fraction of rows with |prediction - label| <= kDeviationBuckets[b].
  std::array<std::array<double, 2>, kDeviationBuckets.size()> within{};
};

inline Metrics evaluate_metrics(const MlpModel& model, const TrainingSet& data) {
  if (data.size() == 0) throw ContractViolation("evaluate_metrics needs records");
  if (model.output_size() != 2) throw ContractViolation("metrics expect a 2-output model");
  Metrics m;
  m.count = data.size();
  std::array<std::array<std::size_t, 2>, kDeviationBuckets.size()> hits{};
  std::vector<double> acts;
  std::vector<std::size_t> offsets;
  for (std::size_t row = 0; row < data.size(); ++row) {
    detail::forward_pass(model, data.input(row), acts, offsets);
    const double* y = acts.data() + offsets.back();
    for (int o = 0; o < 2; ++o) {
      const double dev = std::abs(y[o] - data.target(row)[o]);
      m.mae[o] += dev;
      for (std::size_t b = 0; b < kDeviationBuckets.size(); ++b) {
        if (dev <= kDeviationBuckets[b]) ++hits[b][o];
      }
    }
  }
  const auto n = static_cast<double>(m.count);
  for (int o = 0; o < 2; ++o) {
    m.mae[o] /= n;
    for (std::size_t b = 0; b < kDeviationBuckets.size(); ++b) {
      m.within[b][o] = static_cast<double>(hits[b][o]) / n;
    }
  }
  return m;
}

inline Metrics evaluate_metrics(const MlpModel& model, const std::vector<DatasetRecord>& records) {
  return evaluate_metrics(model, TrainingSet::from_records(records));
}

struct TrainConfig {
  std::uint64_t epochs = 10000;
  std::size_t batch_size = 250;
  AdamConfig adam;
  std::uint64_t init_seed = 1;
  std::uint64_t shuffle_seed = 2;
  double elu_alpha = 1.0;
  std::vector<int> layer_dims = {kDefaultLayerDims.begin(), kDefaultLayerDims.end()};

  void validate() const {
    if (epochs == 0) throw ContractViolation("epochs must be > 0");
    if (batch_size == 0) throw ContractViolation("batch size must be > 0");
    if (!(adam.beta1 > 0 && adam.beta1 < 1 && adam.beta2 > 0 && adam.beta2 < 1)) {
      throw ContractViolation("Adam betas must lie in (0, 1)");
    }
    if (!(adam.learning_rate > 0)) throw ContractViolation("learning rate must be > 0");
  }
};

struct TrainReport {
  std::vector<double> epoch_train_mse;  // mean batch loss seen during each epoch
  Metrics train;
  Metrics test;
};

struct TrainResult {
  MlpModel model;
  TrainReport report;
};

// Called after every epoch with (epoch index, that epoch's train MSE).
using EpochCallback = std::function<void(std::uint64_t, double)>;

// Minibatch Adam on MSE. The row order is reshuffled every epoch from
// shuffle_seed; the last batch of an epoch may be partial.
inline TrainResult train(const TrainingSet& train_set, const TrainingSet& test_set,
                         const TrainConfig& config, const EpochCallback& on_epoch = {}) {
  config.validate();
  if (train_set.size() == 0 || test_set.size() == 0) {
    throw ContractViolation("train and test sets must be non-empty");
  }
  TrainResult result{init_model(config.init_seed, config.layer_dims, config.elu_alpha), {}};
  MlpModel& model = result.model;
  AdamState adam(model.parameter_count());
  std::vector<double> gradients(model.parameter_count());
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);
  Xoshiro256 rng(config.shuffle_seed);

  result.report.epoch_train_mse.reserve(config.epochs);
  for (std::uint64_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = order.size() - 1; i > 0; --i) {
      std::swap(order[i], order[uniform_below(rng, i + 1)]);
    }
    double weighted_loss = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t len = std::min(config.batch_size, order.size() - start);
      std::span<const std::size_t> batch(order.data() + start, len);
      weighted_loss += loss_and_gradients(model, train_set, batch, gradients) * len;
      adam_step(model, adam, gradients, config.adam);
    }
    const double epoch_mse = weighted_loss / static_cast<double>(order.size());
    result.report.epoch_train_mse.push_back(epoch_mse);
    if (on_epoch) on_epoch(epoch, epoch_mse);
  }
  result.report.train = evaluate_metrics(model, train_set);
  result.report.test = evaluate_metrics(model, test_set);
  return result;
}

inline TrainResult train(const std::vector<DatasetRecord>& train_records,
                         const std::vector<DatasetRecord>& test_records,
                         const TrainConfig& config, const EpochCallback& on_epoch = {}) {
  return train(TrainingSet::from_records(train_records), TrainingSet::from_records(test_records),
               config, on_epoch);
}

// Deviation table: one row per bucket, then MAE; values in percent.
inline void write_metrics_csv(std::ostream& os, const TrainReport& report) {
  char buf[160];
  os << "deviation,train_win,train_tie,test_win,test_tie\n";
  for (std::size_t b = 0; b < kDeviationBuckets.size(); ++b) {
    std::snprintf(buf, sizeof buf, "within_%.1f%%,%.4f,%.4f,%.4f,%.4f\n",
                  kDeviationBuckets[b] * 100, report.train.within[b][0] * 100,
                  report.train.within[b][1] * 100, report.test.within[b][0] * 100,
                  report.test.within[b][1] * 100);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "MAE,%.4f,%.4f,%.4f,%.4f\n", report.train.mae[0] * 100,
                report.train.mae[1] * 100, report.test.mae[0] * 100, report.test.mae[1] * 100);
  os << buf;
}

inline void write_loss_csv(std::ostream& os, const TrainReport& report) {
  char buf[64];
  os << "epoch,train_mse\n";
  for (std::size_t e = 0; e < report.epoch_train_mse.size(); ++e) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", e + 1, report.epoch_train_mse[e]);
    os << buf;
  }
}

// Model file layout (all little-endian):
//   "PKNN" | u16 format version | u16 weight-layer count | f64 ELU alpha
//   u32 layer dims (layer count + 1 of them)
//   f64 parameters in MlpModel's flat order
inline constexpr std::array<char, 4> kModelMagic = {'P', 'K', 'N', 'N'};
inline constexpr std::uint16_t kModelFormatVersion = 1;
inline constexpr std::size_t kModelHeaderBytes = 16;

namespace detail {

template <class T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                               std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint16_t>>;
  const U bits = std::bit_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <class T>
  T get() {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                 std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint16_t>>;
    if (bytes_.size() - pos_ < sizeof(T)) {
      throw TruncatedModel("model file truncated at byte " + std::to_string(pos_));
    }
    U bits = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(bytes_[pos_ + i]) << (8 * i);
    pos_ += sizeof(T);
    return std::bit_cast<T>(bits);
  }

  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<std::uint8_t> serialize_model(const MlpModel& model) {
  std::vector<std::uint8_t> out(kModelMagic.begin(), kModelMagic.end());
  detail::put_le<std::uint16_t>(out, kModelFormatVersion);
  detail::put_le<std::uint16_t>(out, static_cast<std::uint16_t>(model.num_layers()));
  detail::put_le<double>(out, model.elu_alpha());
  for (int d : model.layer_dims()) detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(d));
  for (double p : model.parameters()) detail::put_le<double>(out, p);
  return out;
}

inline MlpModel deserialize_model(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kModelMagic.size()) throw TruncatedModel("model file shorter than its magic");
  if (!std::equal(kModelMagic.begin(), kModelMagic.end(), bytes.begin(),
                  [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
    throw BadMagic("not a model file (bad magic)");
  }
  detail::ByteReader in(bytes.subspan(kModelMagic.size()));
  const auto version = in.get<std::uint16_t>();
  if (version != kModelFormatVersion) {
    throw UnsupportedVersion("unsupported model format version " + std::to_string(version));
  }
  const auto layers = in.get<std::uint16_t>();
  const auto alpha = in.get<double>();
  if (layers == 0) throw ModelFormatError("model has no layers");
  std::vector<int> dims;
  for (int i = 0; i <= layers; ++i) {
    const auto d = in.get<std::uint32_t>();
    if (d == 0 || d > 1u << 16) throw ModelFormatError("implausible layer width " + std::to_string(d));
    dims.push_back(static_cast<int>(d));
  }
  MlpModel model(std::move(dims), alpha);
  if (in.remaining() < model.parameter_count() * sizeof(double)) {
    throw TruncatedModel("model file truncated in parameter payload");
  }
  for (double& p : model.parameters()) {
    p = in.get<double>();
    if (!std::isfinite(p)) throw ModelFormatError("non-finite parameter in model file");
  }
  if (in.remaining() != 0) throw ModelFormatError("trailing bytes after model payload");
  return model;
}

inline void save_model(const MlpModel& model, const std::string& path) {
  const auto bytes = serialize_model(model);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("write to '" + path + "' failed");
}

inline MlpModel load_model(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                                  std::istreambuf_iterator<char>());
  return deserialize_model(bytes);
}

// Feature extraction followed by the forward pass.
inline Prediction infer(const MlpModel& model, const GameState& state) {
  const FeatureVector x = extract_features(state);
  return forward(model, x);
}

}  // namespace pokerprob
