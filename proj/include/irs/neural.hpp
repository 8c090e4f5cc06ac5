// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: secure downlink simulation with an intelligent reflecting surface
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "irs/channel.hpp"
#include "irs/kernels.hpp"
#include "irs/rates.hpp"
#include "irs/rng.hpp"

namespace irs::nn {

using kernels::Matrix;

enum class Activation { Linear, Relu };

struct DenseLayer {
  Matrix w;  // in x out
  std::vector<double> b;
  Activation act = Activation::Relu;

  int in() const { return w.rows; }
  int out() const { return w.cols; }
};

struct BatchNormLayer {
  int width = 0;
  double epsilon = 1e-5;
  double momentum = 0.99;
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<double> running_mean;
  std::vector<double> running_var;
  bool running_initialized = false;  // first training batch seeds the running statistics
};

using Layer = std::variant<DenseLayer, BatchNormLayer>;

enum class TargetEncoding { Radians, UnitCircle };

std::string to_string(TargetEncoding e);
TargetEncoding parse_encoding(const std::string& s);

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int batch_size = 64;
  int max_epochs = 300;
  int early_stop_epoch = 110;  // 0 disables early stopping
  double split = 0.9;
  std::uint64_t seed = 1;
  std::vector<int> hidden = {256, 128};
  TargetEncoding encoding = TargetEncoding::UnitCircle;
  bool batch_norm = true;
  // Channel features have variances around 1e-10, so the input layer's
  // epsilon must sit far below that for the normalization to take effect.
  double input_bn_epsilon = 1e-20;
  double hidden_bn_epsilon = 1e-5;
  double bn_momentum = 0.99;

  int epochs() const;
  void validate() const;
};

class MlpModel {
 public:
  std::vector<Layer> layers;

  int input_width() const;
  int output_width() const;
  std::size_t parameter_count() const;

  /// Width chaining, positive running variances. Throws ValidationError.
  void validate() const;

  /// Input batch-norm (optional), then per hidden width a ReLU dense layer
  /// followed by batch-norm (optional), then a linear output layer.
  /// Dense weights are Glorot-uniform, biases zero.
  static MlpModel build(int input, int output, const TrainConfig& cfg, Rng& rng);
};

/// Per-layer intermediate values of a training-mode pass.
struct TrainCache {
  std::vector<Matrix> inputs;                // input to each layer
  std::vector<Matrix> outputs;               // output of each layer
  std::vector<Matrix> normalized;            // x_hat, batch-norm layers only
  std::vector<std::vector<double>> inv_std;  // batch-norm layers only
  std::vector<std::vector<double>> batch_mean;
  std::vector<std::vector<double>> batch_var;
};

/// Inference: batch-norm uses running statistics.
Matrix forward_infer(const MlpModel& model, const Matrix& x);

/// Training pass: batch-norm uses batch statistics; the model is untouched.
Matrix forward_train(const MlpModel& model, const Matrix& x, TrainCache& cache);

/// Parameter gradients, one block per parameter tensor in layer order
/// (dense: w then b; batch-norm: gamma then beta).
using Gradients = std::vector<std::vector<double>>;

Gradients backward(const MlpModel& model, const TrainCache& cache, const Matrix& d_output);

/// Spans over the trainable parameters, same order as Gradients.
std::vector<std::span<double>> parameter_blocks(MlpModel& model);

/// Mean over all entries of (y - t)^2.
double mse(const Matrix& y, const Matrix& t);
Matrix mse_gradient(const Matrix& y, const Matrix& t);

/// Folds the batch statistics recorded in `cache` into the running statistics.
void update_running_stats(MlpModel& model, const TrainCache& cache);

/// max over parameters of |g_a - g_fd| / max(1e-8, |g_a| + |g_fd|) with
/// central differences of step `step`, batch-norm in training mode.
double gradient_check(const MlpModel& model, const Matrix& x, const Matrix& t, double step = 1e-5);

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double test_loss = 0.0;
};

struct History {
  std::vector<EpochRecord> epochs;
};

/// Adam on MSE with shuffled minibatches. The recorded train loss is the
/// size-weighted mean of the epoch's minibatch losses; test loss is measured
/// in inference mode after the epoch. Throws SolverError naming the epoch if
/// the loss becomes non-finite.
History fit(MlpModel& model, const Matrix& x_train, const Matrix& t_train, const Matrix& x_test,
            const Matrix& t_test, const TrainConfig& cfg);

// Domain layer: channels in, phase shifts out.

struct Sample {
  ChannelSet channels;
  double P_t = 0.0;     // watts
  RVector target_theta; // radians, [0, 2*pi)
  double target_rate = 0.0;
};

/// Re/Im of G (row-major), h_au, h_ae, h_iu, h_ie, then P_t in dBm:
/// 2NM + 4M + 4N + 1 values.
std::vector<double> featurize(const ChannelSet& ch, double P_t);
int feature_width(int M, int N);

int target_width(TargetEncoding e, int N);
std::vector<double> encode_target(const RVector& theta, TargetEncoding e);
RVector decode_output(std::span<const double> output, TargetEncoding e);

/// phi_n = exp(j theta_n); theta wrapped into [0, 2*pi). Throws
/// ValidationError on non-finite input.
PhaseVector to_phase(const RVector& theta);

Matrix feature_matrix(std::span<const Sample> samples);
Matrix target_matrix(std::span<const Sample> samples, TargetEncoding e);

struct TrainResult {
  MlpModel model;
  History history;
  TrainConfig config;
};

/// Trains on the first split fraction of `data` and tests on the rest.
TrainResult train(std::span<const Sample> data, const TrainConfig& cfg);

/// Same, with explicit train and test sets.
TrainResult train(std::span<const Sample> train_set, std::span<const Sample> test_set,
                  const TrainConfig& cfg);

/// Predicted phases for a batch of channels.
std::vector<PhaseVector> predict_phases(const MlpModel& model, std::span<const Sample> samples,
                                        TargetEncoding e);

/// forward -> phase -> beamformer step for that phase -> secrecy rate.
std::vector<RateReport> evaluate(const MlpModel& model, std::span<const Sample> data,
                                 const SystemParams& params, TargetEncoding e);

// Checkpoints: JSON container with layer specs, weights, batch-norm
// statistics and the training configuration. Doubles are written in
// shortest round-trip form, so a reload reproduces inference bit-exactly.

struct Checkpoint {
  MlpModel model;
  TrainConfig config;
};

void save_checkpoint(const std::string& path, const MlpModel& model, const TrainConfig& cfg);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace irs::nn
