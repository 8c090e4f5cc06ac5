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

#include "irs/neural.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "irs/error.hpp"
#include "irs/txbf.hpp"

namespace irs::nn {

std::string to_string(TargetEncoding e) {
  return e == TargetEncoding::Radians ? "radians" : "unit-circle";
}

TargetEncoding parse_encoding(const std::string& s) {
  if (s == "radians") return TargetEncoding::Radians;
  if (s == "unit-circle") return TargetEncoding::UnitCircle;
  throw ValidationError("unknown target encoding '" + s + "'");
}

int TrainConfig::epochs() const {
  return early_stop_epoch > 0 ? std::min(max_epochs, early_stop_epoch) : max_epochs;
}

void TrainConfig::validate() const {
  if (!(split > 0.0 && split < 1.0)) throw ValidationError("TrainConfig: split must lie in (0, 1)");
  if (max_epochs < 1) throw ValidationError("TrainConfig: max_epochs must be >= 1");
  if (early_stop_epoch < 0) throw ValidationError("TrainConfig: early_stop_epoch must be >= 0");
  if (batch_size < 1) throw ValidationError("TrainConfig: batch_size must be >= 1");
  if (!(learning_rate >= 0.0)) throw ValidationError("TrainConfig: learning_rate must be >= 0");
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
    throw ValidationError("TrainConfig: Adam betas must lie in [0, 1)");
  }
  if (!(adam_epsilon > 0.0)) throw ValidationError("TrainConfig: adam_epsilon must be positive");
  for (int h : hidden) {
    if (h < 1) throw ValidationError("TrainConfig: hidden widths must be positive");
  }
}

// ---------------------------------------------------------------- model

namespace {

int layer_in(const Layer& l) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DenseLayer>) return x.in();
    else return x.width;
  }, l);
}

int layer_out(const Layer& l) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DenseLayer>) return x.out();
    else return x.width;
  }, l);
}

BatchNormLayer make_batch_norm(int width, double epsilon, double momentum) {
  BatchNormLayer bn;
  bn.width = width;
  bn.epsilon = epsilon;
  bn.momentum = momentum;
  bn.gamma.assign(static_cast<std::size_t>(width), 1.0);
  bn.beta.assign(static_cast<std::size_t>(width), 0.0);
  bn.running_mean.assign(static_cast<std::size_t>(width), 0.0);
  bn.running_var.assign(static_cast<std::size_t>(width), 1.0);
  return bn;
}

DenseLayer make_dense(int in, int out, Activation act, Rng& rng) {
  DenseLayer d;
  d.w = Matrix(in, out);
  d.b.assign(static_cast<std::size_t>(out), 0.0);
  d.act = act;
  const double limit = std::sqrt(6.0 / static_cast<double>(in + out));
  for (double& v : d.w.data) v = (2.0 * rng.uniform() - 1.0) * limit;
  return d;
}

}  // namespace

int MlpModel::input_width() const { return layers.empty() ? 0 : layer_in(layers.front()); }
int MlpModel::output_width() const { return layers.empty() ? 0 : layer_out(layers.back()); }

std::size_t MlpModel::parameter_count() const {
  std::size_t n = 0;
  for (const Layer& l : layers) {
    if (const auto* d = std::get_if<DenseLayer>(&l)) n += d->w.data.size() + d->b.size();
    else n += 2 * static_cast<std::size_t>(std::get<BatchNormLayer>(l).width);
  }
  return n;
}

void MlpModel::validate() const {
  if (layers.empty()) throw ValidationError("MlpModel: no layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i > 0 && layer_in(layers[i]) != layer_out(layers[i - 1])) {
      throw ValidationError("MlpModel: layer widths do not chain at layer " + std::to_string(i));
    }
    if (const auto* d = std::get_if<DenseLayer>(&layers[i])) {
      if (d->b.size() != static_cast<std::size_t>(d->out())) throw ValidationError("MlpModel: bias size mismatch");
    } else {
      const auto& bn = std::get<BatchNormLayer>(layers[i]);
      const auto w = static_cast<std::size_t>(bn.width);
      if (bn.gamma.size() != w || bn.beta.size() != w || bn.running_mean.size() != w ||
          bn.running_var.size() != w) {
        throw ValidationError("MlpModel: batch-norm parameter size mismatch");
      }
      for (double v : bn.running_var) {
        if (!(v > 0.0)) throw ValidationError("MlpModel: batch-norm running variance must be positive");
      }
    }
  }
}

MlpModel MlpModel::build(int input, int output, const TrainConfig& cfg, Rng& rng) {
  if (input < 1 || output < 1) throw ValidationError("MlpModel::build: widths must be positive");
  MlpModel m;
  if (cfg.batch_norm) m.layers.emplace_back(make_batch_norm(input, cfg.input_bn_epsilon, cfg.bn_momentum));
  int prev = input;
  for (int h : cfg.hidden) {
    m.layers.emplace_back(make_dense(prev, h, Activation::Relu, rng));
    if (cfg.batch_norm) m.layers.emplace_back(make_batch_norm(h, cfg.hidden_bn_epsilon, cfg.bn_momentum));
    prev = h;
  }
  m.layers.emplace_back(make_dense(prev, output, Activation::Linear, rng));
  return m;
}

// ---------------------------------------------------------------- passes

namespace {

void dense_apply(const DenseLayer& d, const Matrix& x, Matrix& y) {
  y = Matrix(x.rows, d.out());
  kernels::dense_forward(x, d.w, d.b, y);
  if (d.act == Activation::Relu) {
    for (double& v : y.data) v = v > 0.0 ? v : 0.0;
  }
}

}  // namespace

Matrix forward_infer(const MlpModel& model, const Matrix& x) {
  if (x.cols != model.input_width()) throw ValidationError("forward: input width mismatch");
  Matrix cur = x;
  Matrix next;
  for (const Layer& l : model.layers) {
    if (const auto* d = std::get_if<DenseLayer>(&l)) {
      dense_apply(*d, cur, next);
    } else {
      const auto& bn = std::get<BatchNormLayer>(l);
      next = Matrix(cur.rows, bn.width);
      std::vector<double> scale(static_cast<std::size_t>(bn.width));
      std::vector<double> shift(static_cast<std::size_t>(bn.width));
      for (std::size_t j = 0; j < scale.size(); ++j) {
        scale[j] = bn.gamma[j] / std::sqrt(bn.running_var[j] + bn.epsilon);
        shift[j] = bn.beta[j] - bn.running_mean[j] * scale[j];
      }
      for (int r = 0; r < cur.rows; ++r) {
        const double* in = cur.row(r);
        double* out = next.row(r);
        for (int j = 0; j < bn.width; ++j) out[j] = in[j] * scale[static_cast<std::size_t>(j)] + shift[static_cast<std::size_t>(j)];
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

Matrix forward_train(const MlpModel& model, const Matrix& x, TrainCache& cache) {
  if (x.cols != model.input_width()) throw ValidationError("forward: input width mismatch");
  const std::size_t n_layers = model.layers.size();
  cache.inputs.assign(n_layers, Matrix());
  cache.outputs.assign(n_layers, Matrix());
  cache.normalized.assign(n_layers, Matrix());
  cache.inv_std.assign(n_layers, {});
  cache.batch_mean.assign(n_layers, {});
  cache.batch_var.assign(n_layers, {});

  Matrix cur = x;
  for (std::size_t li = 0; li < n_layers; ++li) {
    cache.inputs[li] = cur;
    Matrix next;
    if (const auto* d = std::get_if<DenseLayer>(&model.layers[li])) {
      dense_apply(*d, cur, next);
    } else {
      const auto& bn = std::get<BatchNormLayer>(model.layers[li]);
      const int rows = cur.rows;
      const auto w = static_cast<std::size_t>(bn.width);
      std::vector<double> mean(w, 0.0);
      std::vector<double> var(w, 0.0);
      for (int r = 0; r < rows; ++r) {
        const double* in = cur.row(r);
        for (std::size_t j = 0; j < w; ++j) mean[j] += in[j];
      }
      for (double& m : mean) m /= rows;
      for (int r = 0; r < rows; ++r) {
        const double* in = cur.row(r);
        for (std::size_t j = 0; j < w; ++j) {
          const double c = in[j] - mean[j];
          var[j] += c * c;
        }
      }
      for (double& v : var) v /= rows;
      std::vector<double> inv(w);
      for (std::size_t j = 0; j < w; ++j) inv[j] = 1.0 / std::sqrt(var[j] + bn.epsilon);

      Matrix xhat(rows, bn.width);
      next = Matrix(rows, bn.width);
      for (int r = 0; r < rows; ++r) {
        const double* in = cur.row(r);
        double* h = xhat.row(r);
        double* out = next.row(r);
        for (std::size_t j = 0; j < w; ++j) {
          h[j] = (in[j] - mean[j]) * inv[j];
          out[j] = bn.gamma[j] * h[j] + bn.beta[j];
        }
      }
      cache.normalized[li] = std::move(xhat);
      cache.inv_std[li] = std::move(inv);
      cache.batch_mean[li] = std::move(mean);
      cache.batch_var[li] = std::move(var);
    }
    cache.outputs[li] = next;
    cur = std::move(next);
  }
  return cur;
}

Gradients backward(const MlpModel& model, const TrainCache& cache, const Matrix& d_output) {
  const std::size_t n_layers = model.layers.size();
  std::vector<Gradients> per_layer(n_layers);
  Matrix grad = d_output;
  for (std::size_t li = n_layers; li-- > 0;) {
    const Matrix& x = cache.inputs[li];
    if (const auto* d = std::get_if<DenseLayer>(&model.layers[li])) {
      if (d->act == Activation::Relu) {
        const Matrix& y = cache.outputs[li];
        for (std::size_t k = 0; k < grad.data.size(); ++k) {
          if (!(y.data[k] > 0.0)) grad.data[k] = 0.0;
        }
      }
      Matrix dw(d->in(), d->out());
      std::vector<double> db(static_cast<std::size_t>(d->out()));
      kernels::dense_backward_params(x, grad, dw, db);
      if (li > 0) {
        Matrix dx(x.rows, d->in());
        kernels::dense_backward_input(grad, d->w, dx);
        grad = std::move(dx);
      }
      per_layer[li] = {std::move(dw.data), std::move(db)};
    } else {
      const auto& bn = std::get<BatchNormLayer>(model.layers[li]);
      const int rows = grad.rows;
      const auto w = static_cast<std::size_t>(bn.width);
      const Matrix& xhat = cache.normalized[li];
      const std::vector<double>& inv = cache.inv_std[li];
      std::vector<double> dgamma(w, 0.0);
      std::vector<double> dbeta(w, 0.0);
      std::vector<double> sum_dxhat(w, 0.0);
      std::vector<double> sum_dxhat_xhat(w, 0.0);
      for (int r = 0; r < rows; ++r) {
        const double* g = grad.row(r);
        const double* h = xhat.row(r);
        for (std::size_t j = 0; j < w; ++j) {
          dgamma[j] += g[j] * h[j];
          dbeta[j] += g[j];
          const double dh = g[j] * bn.gamma[j];
          sum_dxhat[j] += dh;
          sum_dxhat_xhat[j] += dh * h[j];
        }
      }
      if (li > 0) {
        Matrix dx(rows, bn.width);
        const double inv_rows = 1.0 / rows;
        for (int r = 0; r < rows; ++r) {
          const double* g = grad.row(r);
          const double* h = xhat.row(r);
          double* out = dx.row(r);
          for (std::size_t j = 0; j < w; ++j) {
            const double dh = g[j] * bn.gamma[j];
            out[j] = inv[j] * (dh - inv_rows * sum_dxhat[j] - h[j] * inv_rows * sum_dxhat_xhat[j]);
          }
        }
        grad = std::move(dx);
      }
      per_layer[li] = {std::move(dgamma), std::move(dbeta)};
    }
  }
  Gradients out;
  for (auto& g : per_layer) {
    for (auto& block : g) out.push_back(std::move(block));
  }
  return out;
}

std::vector<std::span<double>> parameter_blocks(MlpModel& model) {
  std::vector<std::span<double>> out;
  for (Layer& l : model.layers) {
    if (auto* d = std::get_if<DenseLayer>(&l)) {
      out.emplace_back(d->w.data);
      out.emplace_back(d->b);
    } else {
      auto& bn = std::get<BatchNormLayer>(l);
      out.emplace_back(bn.gamma);
      out.emplace_back(bn.beta);
    }
  }
  return out;
}

double mse(const Matrix& y, const Matrix& t) {
  if (y.rows != t.rows || y.cols != t.cols) throw ValidationError("mse: shape mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < y.data.size(); ++k) {
    const double d = y.data[k] - t.data[k];
    s += d * d;
  }
  return s / static_cast<double>(y.data.size());
}

Matrix mse_gradient(const Matrix& y, const Matrix& t) {
  Matrix g(y.rows, y.cols);
  const double scale = 2.0 / static_cast<double>(y.data.size());
  for (std::size_t k = 0; k < y.data.size(); ++k) g.data[k] = scale * (y.data[k] - t.data[k]);
  return g;
}

void update_running_stats(MlpModel& model, const TrainCache& cache) {
  for (std::size_t li = 0; li < model.layers.size(); ++li) {
    auto* bn = std::get_if<BatchNormLayer>(&model.layers[li]);
    if (bn == nullptr) continue;
    const auto& mean = cache.batch_mean[li];
    const auto& var = cache.batch_var[li];
    if (!bn->running_initialized) {
      bn->running_mean = mean;
      bn->running_var = var;
      for (double& v : bn->running_var) v = std::max(v, std::numeric_limits<double>::min());
      bn->running_initialized = true;
      continue;
    }
    const double m = bn->momentum;
    for (std::size_t j = 0; j < mean.size(); ++j) {
      bn->running_mean[j] = m * bn->running_mean[j] + (1.0 - m) * mean[j];
      bn->running_var[j] = std::max(m * bn->running_var[j] + (1.0 - m) * var[j],
                                    std::numeric_limits<double>::min());
    }
  }
}

double gradient_check(const MlpModel& model, const Matrix& x, const Matrix& t, double step) {
  TrainCache cache;
  const Matrix y = forward_train(model, x, cache);
  const Gradients analytic = backward(model, cache, mse_gradient(y, t));

  MlpModel probe = model;
  auto blocks = parameter_blocks(probe);
  double worst = 0.0;
  TrainCache scratch;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t k = 0; k < blocks[bi].size(); ++k) {
      const double saved = blocks[bi][k];
      blocks[bi][k] = saved + step;
      const double up = mse(forward_train(probe, x, scratch), t);
      blocks[bi][k] = saved - step;
      const double down = mse(forward_train(probe, x, scratch), t);
      blocks[bi][k] = saved;
      const double fd = (up - down) / (2.0 * step);
      const double ga = analytic[bi][k];
      const double err = std::abs(ga - fd) / std::max(1e-8, std::abs(ga) + std::abs(fd));
      worst = std::max(worst, err);
    }
  }
  return worst;
}

// ---------------------------------------------------------------- training

namespace {

Matrix gather_rows(const Matrix& m, std::span<const std::size_t> idx) {
  Matrix out(static_cast<int>(idx.size()), m.cols);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    std::copy_n(m.row(static_cast<int>(idx[r])), m.cols, out.row(static_cast<int>(r)));
  }
  return out;
}

struct Adam {
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;
  long long t = 0;
};

}  // namespace

History fit(MlpModel& model, const Matrix& x_train, const Matrix& t_train, const Matrix& x_test,
            const Matrix& t_test, const TrainConfig& cfg) {
  cfg.validate();
  model.validate();
  if (x_train.rows < 1 || x_train.rows != t_train.rows || x_test.rows != t_test.rows) {
    throw ValidationError("fit: empty or mismatched training data");
  }
  if (x_train.cols != model.input_width() || t_train.cols != model.output_width()) {
    throw ValidationError("fit: data width does not match the model");
  }

  bool has_bn = false;
  for (const Layer& l : model.layers) has_bn = has_bn || std::holds_alternative<BatchNormLayer>(l);

  Rng rng(derive_seed(cfg.seed, 0x5eed));
  Adam adam;
  {
    auto blocks = parameter_blocks(model);
    for (const auto& b : blocks) {
      adam.m.emplace_back(b.size(), 0.0);
      adam.v.emplace_back(b.size(), 0.0);
    }
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(x_train.rows));
  std::iota(order.begin(), order.end(), std::size_t{0});

  History history;
  const int epochs = cfg.epochs();
  TrainCache cache;
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.next_u64() % i);
      std::swap(order[i - 1], order[j]);
    }

    double loss_sum = 0.0;
    std::size_t seen = 0;
    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t stop = std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      // A single-row batch has no batch statistics.
      if (has_bn && stop - start < 2) continue;
      const std::span<const std::size_t> idx(order.data() + start, stop - start);
      const Matrix xb = gather_rows(x_train, idx);
      const Matrix tb = gather_rows(t_train, idx);

      const Matrix y = forward_train(model, xb, cache);
      const double loss = mse(y, tb);
      if (!std::isfinite(loss)) {
        throw SolverError("train: loss became non-finite at epoch " + std::to_string(epoch));
      }
      loss_sum += loss * static_cast<double>(idx.size());
      seen += idx.size();

      const Gradients grads = backward(model, cache, mse_gradient(y, tb));
      update_running_stats(model, cache);

      ++adam.t;
      const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(adam.t));
      const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(adam.t));
      auto blocks = parameter_blocks(model);
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        auto& m = adam.m[bi];
        auto& v = adam.v[bi];
        const auto& g = grads[bi];
        for (std::size_t k = 0; k < g.size(); ++k) {
          m[k] = cfg.beta1 * m[k] + (1.0 - cfg.beta1) * g[k];
          v[k] = cfg.beta2 * v[k] + (1.0 - cfg.beta2) * g[k] * g[k];
          const double mh = m[k] / c1;
          const double vh = v[k] / c2;
          blocks[bi][k] -= cfg.learning_rate * mh / (std::sqrt(vh) + cfg.adam_epsilon);
        }
      }
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = seen > 0 ? loss_sum / static_cast<double>(seen) : 0.0;
    rec.test_loss = x_test.rows > 0 ? mse(forward_infer(model, x_test), t_test) : 0.0;
    if (!std::isfinite(rec.train_loss) || !std::isfinite(rec.test_loss)) {
      throw SolverError("train: loss became non-finite at epoch " + std::to_string(epoch));
    }
    history.epochs.push_back(rec);
  }
  return history;
}

// ---------------------------------------------------------------- domain

int feature_width(int M, int N) { return 2 * N * M + 4 * M + 4 * N + 1; }

std::vector<double> featurize(const ChannelSet& ch, double P_t) {
  const auto n = ch.G.rows();
  const auto m = ch.G.cols();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(feature_width(static_cast<int>(m), static_cast<int>(n))));
  auto push = [&](cplx z) {
    out.push_back(z.real());
    out.push_back(z.imag());
  };
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) push(ch.G(r, c));
  }
  for (Eigen::Index i = 0; i < ch.h_au.size(); ++i) push(ch.h_au(i));
  for (Eigen::Index i = 0; i < ch.h_ae.size(); ++i) push(ch.h_ae(i));
  for (Eigen::Index i = 0; i < ch.h_iu.size(); ++i) push(ch.h_iu(i));
  for (Eigen::Index i = 0; i < ch.h_ie.size(); ++i) push(ch.h_ie(i));
  out.push_back(watts_to_dbm(P_t));
  return out;
}

int target_width(TargetEncoding e, int N) { return e == TargetEncoding::UnitCircle ? 2 * N : N; }

std::vector<double> encode_target(const RVector& theta, TargetEncoding e) {
  std::vector<double> out;
  if (e == TargetEncoding::Radians) {
    out.assign(theta.data(), theta.data() + theta.size());
    return out;
  }
  out.reserve(static_cast<std::size_t>(2 * theta.size()));
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    out.push_back(std::cos(theta(i)));
    out.push_back(std::sin(theta(i)));
  }
  return out;
}

RVector decode_output(std::span<const double> output, TargetEncoding e) {
  if (e == TargetEncoding::Radians) {
    RVector theta(static_cast<Eigen::Index>(output.size()));
    for (std::size_t i = 0; i < output.size(); ++i) theta(static_cast<Eigen::Index>(i)) = output[i];
    return theta;
  }
  if (output.size() % 2 != 0) throw ValidationError("decode_output: unit-circle output must have even width");
  RVector theta(static_cast<Eigen::Index>(output.size() / 2));
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    theta(i) = std::atan2(output[static_cast<std::size_t>(2 * i + 1)], output[static_cast<std::size_t>(2 * i)]);
  }
  return theta;
}

PhaseVector to_phase(const RVector& theta) { return PhaseVector::from_angles(theta); }

Matrix feature_matrix(std::span<const Sample> samples) {
  if (samples.empty()) return Matrix();
  const auto& ch0 = samples.front().channels;
  const int width = feature_width(static_cast<int>(ch0.G.cols()), static_cast<int>(ch0.G.rows()));
  Matrix x(static_cast<int>(samples.size()), width);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::vector<double> f = featurize(samples[i].channels, samples[i].P_t);
    if (static_cast<int>(f.size()) != width) throw ValidationError("feature_matrix: inconsistent sample sizes");
    std::copy(f.begin(), f.end(), x.row(static_cast<int>(i)));
  }
  return x;
}

Matrix target_matrix(std::span<const Sample> samples, TargetEncoding e) {
  if (samples.empty()) return Matrix();
  const int width = target_width(e, static_cast<int>(samples.front().target_theta.size()));
  Matrix t(static_cast<int>(samples.size()), width);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::vector<double> v = encode_target(samples[i].target_theta, e);
    if (static_cast<int>(v.size()) != width) throw ValidationError("target_matrix: inconsistent sample sizes");
    std::copy(v.begin(), v.end(), t.row(static_cast<int>(i)));
  }
  return t;
}

TrainResult train(std::span<const Sample> data, const TrainConfig& cfg) {
  cfg.validate();
  if (data.size() < 2) throw ValidationError("train: at least two samples required");
  auto n_train = static_cast<std::size_t>(std::floor(cfg.split * static_cast<double>(data.size())));
  n_train = std::clamp<std::size_t>(n_train, 1, data.size() - 1);
  return train(data.first(n_train), data.subspan(n_train), cfg);
}

TrainResult train(std::span<const Sample> train_set, std::span<const Sample> test_set, const TrainConfig& cfg) {
  cfg.validate();
  if (train_set.empty() || test_set.empty()) throw ValidationError("train: train and test sets must be nonempty");
  const Matrix x_train = feature_matrix(train_set);
  const Matrix t_train = target_matrix(train_set, cfg.encoding);
  const Matrix x_test = feature_matrix(test_set);
  const Matrix t_test = target_matrix(test_set, cfg.encoding);

  Rng rng(cfg.seed);
  TrainResult res;
  res.config = cfg;
  res.model = MlpModel::build(x_train.cols, t_train.cols, cfg, rng);
  res.history = fit(res.model, x_train, t_train, x_test, t_test, cfg);
  return res;
}

std::vector<PhaseVector> predict_phases(const MlpModel& model, std::span<const Sample> samples,
                                        TargetEncoding e) {
  std::vector<PhaseVector> out;
  if (samples.empty()) return out;
  const Matrix y = forward_infer(model, feature_matrix(samples));
  out.reserve(samples.size());
  for (int r = 0; r < y.rows; ++r) {
    out.push_back(to_phase(decode_output(std::span<const double>(y.row(r), static_cast<std::size_t>(y.cols)), e)));
  }
  return out;
}

std::vector<RateReport> evaluate(const MlpModel& model, std::span<const Sample> data, const SystemParams& params,
                                 TargetEncoding e) {
  const std::vector<PhaseVector> phases = predict_phases(model, data, e);
  return kernels::map_indexed<RateReport>(data.size(), [&](std::size_t i) {
    SystemParams p = params;
    p.P_t = data[i].P_t;
    const Beamformer f = optimize_beamformer(build_rayleigh_pair(data[i].channels, phases[i], p), p.P_t);
    return secrecy_rate(data[i].channels, f, phases[i], p);
  });
}

}  // namespace irs::nn
