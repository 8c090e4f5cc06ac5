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

// JSON-lines dataset: a header line with the system parameters and the
// generation settings, then one sample per line in index order.

#include <cstdint>
#include <string>
#include <vector>

#include "irs/altopt.hpp"
#include "irs/channel.hpp"
#include "irs/neural.hpp"

namespace irs {

inline constexpr const char* kDatasetFormat = "irs-dataset";
inline constexpr int kDatasetVersion = 1;

// Per-realization generator streams: channels use Rng(seed) directly, the
// optimizers use Rng(derive_seed(seed, stream)).
inline constexpr std::uint64_t kStreamAlternate = 1;
inline constexpr std::uint64_t kStreamApMev = 2;

struct DatasetHeader {
  SystemParams params;
  std::size_t count = 0;
  std::size_t train_count = 0;  // samples [0, train_count) form the training split
  double split = 0.9;
  std::uint64_t base_seed = 0;
  int max_iter = 20;
  double epsilon = 1e-4;
  int randomization_count = 500;
};

struct DatasetRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;  // base_seed + index
  ChannelSet channels;
  double P_t = 0.0;  // watts
  RVector theta;
  CVector f;
  RateReport rate;
  std::vector<double> trace;
  int iterations = 0;
  bool converged = false;
};

struct Dataset {
  DatasetHeader header;
  std::vector<DatasetRecord> records;

  std::vector<nn::Sample> samples() const;
  std::vector<nn::Sample> train_samples() const;
  std::vector<nn::Sample> test_samples() const;
};

/// floor(split * count), clamped so both parts are nonempty when count >= 2.
std::size_t split_boundary(std::size_t count, double split);

/// Channels from Rng(seed), then alternating optimization seeded from the
/// same value.
DatasetRecord make_record(std::size_t index, std::uint64_t seed, const SystemParams& params,
                          const AltOptOptions& opts);

nn::Sample to_sample(const DatasetRecord& r);

std::string header_line(const DatasetHeader& h);
std::string record_line(const DatasetRecord& r);
DatasetHeader parse_header(const std::string& line);
DatasetRecord parse_record(const std::string& line, const SystemParams& params);

/// Throws ValidationError on malformed files, naming the line.
Dataset read_dataset(const std::string& path);

}  // namespace irs
