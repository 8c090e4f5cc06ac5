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

#include "irs/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "irs/error.hpp"

namespace irs::kernels {

void set_threads(int k) {
  if (k > 0) omp_set_num_threads(k);
}

int max_threads() { return omp_get_max_threads(); }

std::size_t first_argmax(std::span<const double> values) {
  std::size_t best = 0;
  bool found = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i])) continue;
    if (!found || values[i] > values[best]) {
      best = i;
      found = true;
    }
  }
  return best;
}

namespace {

void check_forward(const Matrix& x, const Matrix& w, std::span<const double> bias, const Matrix& y) {
  if (x.cols != w.rows || y.rows != x.rows || y.cols != w.cols ||
      bias.size() != static_cast<std::size_t>(w.cols)) {
    throw ValidationError("dense_forward: shape mismatch");
  }
}

void check_backward_input(const Matrix& dy, const Matrix& w, const Matrix& dx) {
  if (dy.cols != w.cols || dx.rows != dy.rows || dx.cols != w.rows) {
    throw ValidationError("dense_backward_input: shape mismatch");
  }
}

void check_backward_params(const Matrix& x, const Matrix& dy, const Matrix& dw, std::span<double> db) {
  if (x.rows != dy.rows || dw.rows != x.cols || dw.cols != dy.cols ||
      db.size() != static_cast<std::size_t>(dy.cols)) {
    throw ValidationError("dense_backward_params: shape mismatch");
  }
}

// The per-row bodies below are shared by the serial and parallel drivers.

inline void forward_row(const Matrix& x, const Matrix& w, std::span<const double> bias, Matrix& y, int b) {
  double* out = y.row(b);
  const double* in = x.row(b);
  const int n_out = w.cols;
  for (int o = 0; o < n_out; ++o) out[o] = bias[static_cast<std::size_t>(o)];
  for (int i = 0; i < w.rows; ++i) {
    const double xi = in[i];
    if (xi == 0.0) continue;
    const double* wr = w.row(i);
    for (int o = 0; o < n_out; ++o) out[o] += xi * wr[o];
  }
}

Matrix transposed(const Matrix& w) {
  Matrix t(w.cols, w.rows);
  for (int i = 0; i < w.rows; ++i) {
    for (int o = 0; o < w.cols; ++o) t(o, i) = w(i, o);
  }
  return t;
}

// wt is w transposed (out x in), so the update is a contiguous axpy.
inline void backward_input_row(const Matrix& dy, const Matrix& wt, Matrix& dx, int b) {
  const double* g = dy.row(b);
  double* out = dx.row(b);
  const int n_in = wt.cols;
  for (int i = 0; i < n_in; ++i) out[i] = 0.0;
  for (int o = 0; o < wt.rows; ++o) {
    const double go = g[o];
    if (go == 0.0) continue;
    const double* wr = wt.row(o);
    for (int i = 0; i < n_in; ++i) out[i] += go * wr[i];
  }
}

inline void backward_weight_row(const Matrix& x, const Matrix& dy, Matrix& dw, int i) {
  double* out = dw.row(i);
  const int n_out = dy.cols;
  for (int o = 0; o < n_out; ++o) out[o] = 0.0;
  for (int b = 0; b < x.rows; ++b) {
    const double xi = x(b, i);
    if (xi == 0.0) continue;
    const double* g = dy.row(b);
    for (int o = 0; o < n_out; ++o) out[o] += xi * g[o];
  }
}

inline void bias_sums(const Matrix& dy, std::span<double> db) {
  std::fill(db.begin(), db.end(), 0.0);
  for (int b = 0; b < dy.rows; ++b) {
    const double* g = dy.row(b);
    for (int o = 0; o < dy.cols; ++o) db[static_cast<std::size_t>(o)] += g[o];
  }
}

}  // namespace

void dense_forward(const Matrix& x, const Matrix& w, std::span<const double> bias, Matrix& y) {
  check_forward(x, w, bias, y);
#pragma omp parallel for schedule(static)
  for (int b = 0; b < x.rows; ++b) forward_row(x, w, bias, y, b);
}

void dense_backward_input(const Matrix& dy, const Matrix& w, Matrix& dx) {
  check_backward_input(dy, w, dx);
  const Matrix wt = transposed(w);
#pragma omp parallel for schedule(static)
  for (int b = 0; b < dy.rows; ++b) backward_input_row(dy, wt, dx, b);
}

void dense_backward_params(const Matrix& x, const Matrix& dy, Matrix& dw, std::span<double> db) {
  check_backward_params(x, dy, dw, db);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < x.cols; ++i) backward_weight_row(x, dy, dw, i);
  bias_sums(dy, db);
}

namespace serial {

void dense_forward(const Matrix& x, const Matrix& w, std::span<const double> bias, Matrix& y) {
  check_forward(x, w, bias, y);
  for (int b = 0; b < x.rows; ++b) forward_row(x, w, bias, y, b);
}

void dense_backward_input(const Matrix& dy, const Matrix& w, Matrix& dx) {
  check_backward_input(dy, w, dx);
  const Matrix wt = transposed(w);
  for (int b = 0; b < dy.rows; ++b) backward_input_row(dy, wt, dx, b);
}

void dense_backward_params(const Matrix& x, const Matrix& dy, Matrix& dw, std::span<double> db) {
  check_backward_params(x, dy, dw, db);
  for (int i = 0; i < x.cols; ++i) backward_weight_row(x, dy, dw, i);
  bias_sums(dy, db);
}

}  // namespace serial

}  // namespace irs::kernels
