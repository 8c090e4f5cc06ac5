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

// Data-parallel kernels. Every kernel has a serial twin under
// irs::kernels::serial that runs the identical per-element code in a plain
// loop; the parallel versions only distribute independent outputs across
// threads and never reorder a floating-point reduction, so both produce
// bit-identical results for any thread count.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include <omp.h>

namespace irs::kernels {

/// Sets the OpenMP thread count (k <= 0 keeps the runtime default).
void set_threads(int k);
int max_threads();

/// Row-major dense matrix used by the network kernels.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

  double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }
};

// y (batch x out) = x (batch x in) * w (in x out) + bias
void dense_forward(const Matrix& x, const Matrix& w, std::span<const double> bias, Matrix& y);
// dx (batch x in) = dy (batch x out) * w^T
void dense_backward_input(const Matrix& dy, const Matrix& w, Matrix& dx);
// dw (in x out) = x^T * dy ; db = column sums of dy
void dense_backward_params(const Matrix& x, const Matrix& dy, Matrix& dw, std::span<double> db);

/// Fills values[i] = fn(i) for i in [0, count). Exceptions thrown by fn are
/// rethrown on the calling thread (lowest index wins).
template <class Fn>
void evaluate_all(std::size_t count, std::span<double> values, Fn&& fn);

/// Applies fn(i) for i in [0, count) and collects the results by index.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn);

/// Index of the largest value; ties go to the lowest index. NaN never wins.
std::size_t first_argmax(std::span<const double> values);

namespace serial {

void dense_forward(const Matrix& x, const Matrix& w, std::span<const double> bias, Matrix& y);
void dense_backward_input(const Matrix& dy, const Matrix& w, Matrix& dx);
void dense_backward_params(const Matrix& x, const Matrix& dy, Matrix& dw, std::span<double> db);

template <class Fn>
void evaluate_all(std::size_t count, std::span<double> values, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) values[i] = fn(i);
}

template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn) {
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace detail {

// Runs body(i) for every i in parallel and rethrows the lowest-index failure.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

template <class Fn>
void evaluate_all(std::size_t count, std::span<double> values, Fn&& fn) {
  detail::parallel_for(count, [&](std::size_t i) { values[i] = fn(i); });
}

template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  detail::parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace irs::kernels
