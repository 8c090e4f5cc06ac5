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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irs/altopt.hpp"
#include "irs/channel.hpp"
#include "irs/dataset.hpp"
#include "irs/neural.hpp"
#include "irs/serialize.hpp"

namespace irs {

inline constexpr const char* kSchemeNoIrs = "no-irs";
inline constexpr const char* kSchemeApMev = "ap-mev";
inline constexpr const char* kSchemeAlternating = "alternating";
inline constexpr const char* kSchemeSupervised = "supervised";

struct DatasetConfig {
  std::size_t count = 10000;
  double split = 0.9;
  std::string path = "dataset.jsonl";
};

struct CompareConfig {
  std::size_t realizations = 200;
  std::optional<std::uint64_t> first_seed;  // default: seed + dataset.count
  std::vector<std::string> schemes = {kSchemeNoIrs, kSchemeApMev, kSchemeAlternating, kSchemeSupervised};
  int bins = 30;
  bool timing = false;  // wall_ms column stays empty unless set, keeping outputs byte-stable
};

struct OverfitConfig {
  std::vector<std::size_t> sizes = {100, 2700, 9000};
  std::vector<int> hidden_layers = {4, 3, 2};
  std::vector<int> early_stop = {0, 110};  // 0 runs the full max_epochs
};

/// Everything a CLI command needs. Relative paths resolve against out_dir.
struct ExperimentConfig {
  SystemParams params = SystemParams::defaults();
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  int threads = 0;
  std::string checkpoint = "model.json";
  DatasetConfig dataset;
  AltOptOptions altopt;
  CompareConfig compare;
  nn::TrainConfig train;
  bool train_seed_set = false;  // train.seed follows `seed` unless given
  OverfitConfig overfit;

  /// Strict parse: unknown keys and wrong types throw ValidationError.
  static ExperimentConfig from_json(const Json& j);
  static ExperimentConfig load(const std::string& path);

  void set_seed(std::uint64_t s);
  std::string resolve(const std::string& path) const;
  std::uint64_t compare_first_seed() const;
  void validate() const;
};

/// Shortest round-trip decimal form.
std::string format_double(double v);

// ------------------------------------------------------------ gen-data

struct GenDataResult {
  std::string path;
  std::size_t count = 0;
  std::size_t train_count = 0;
  std::size_t converged = 0;
};

/// Runs the alternating optimizer for seeds base..base+count-1 in parallel
/// and writes the records in index order. Progress lines go to `log` when
/// given. Throws SolverError naming the failing seed.
GenDataResult gen_dataset(const ExperimentConfig& cfg, std::ostream* log = nullptr);

// ------------------------------------------------------------ compare

struct ResultRecord {
  std::uint64_t seed = 0;
  std::string scheme;
  RateReport rate;
  int iterations = 0;
  std::optional<double> wall_ms;
};

struct Distribution {
  double mean = 0.0;
  double median = 0.0;
  std::vector<double> edges;    // bins + 1 entries, shared across schemes
  std::vector<double> density;  // integrates to 1 over edges
  std::vector<double> cdf_x;    // sorted values
  std::vector<double> cdf_p;    // (i + 1) / n
};

Distribution summarize(std::vector<double> values, const std::vector<double>& edges);

/// Equal-width edges over [min, max] of every value; a degenerate range is
/// widened to one unit.
std::vector<double> common_edges(const std::vector<std::vector<double>>& groups, int bins);

std::string results_csv(const std::vector<ResultRecord>& records);
Json summary_json(const std::vector<ResultRecord>& records, const std::vector<std::string>& schemes, int bins);

/// Evaluates the requested schemes on one realization; `model` is required
/// when the supervised scheme is requested.
std::vector<ResultRecord> evaluate_realization(std::uint64_t seed, const ExperimentConfig& cfg,
                                               const nn::MlpModel* model, nn::TargetEncoding encoding,
                                               bool timing);

struct CompareResult {
  std::vector<ResultRecord> records;  // sorted by seed, then scheme order
  std::string csv_path;
  std::string summary_path;
  Json summary;
};

/// Writes results.csv and summary.json into out_dir.
CompareResult run_comparison(const ExperimentConfig& cfg);

// ------------------------------------------------------------ train

struct HeldOutReport {
  std::size_t count = 0;
  double mean_supervised = 0.0;
  double mean_no_irs = 0.0;
  double mean_alternating = 0.0;  // stored optimizer rates
};

/// Supervised scheme against the no-IRS baseline and the stored alternating
/// rates on the given records.
HeldOutReport evaluate_held_out(const nn::MlpModel& model, nn::TargetEncoding encoding,
                                const std::vector<DatasetRecord>& records, const SystemParams& params);

Json history_json(const std::string& name, const nn::History& h, std::size_t train_size, std::size_t test_size,
                  const nn::TrainConfig& cfg);

struct TrainCommandResult {
  nn::TrainResult train;
  HeldOutReport held_out;
  std::string checkpoint_path;
  std::string history_path;
};

/// Trains on the dataset's split, writes the checkpoint, history_train.json
/// and train_summary.json.
TrainCommandResult run_training(const ExperimentConfig& cfg);

// ------------------------------------------------------------ overfit-study

/// Widths for a given hidden-layer count: 2 -> {256, 128},
/// 3 -> {256, 128, 128}, 4 -> {256, 256, 128, 128}.
std::vector<int> hidden_widths(int depth);

/// Test-set size paired with a training size: max(100, size / 9).
std::size_t overfit_test_size(std::size_t train_size);

struct OverfitCase {
  std::string name;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  int depth = 0;
  int early_stop = 0;
  nn::TrainConfig config;
  nn::History history;

  double final_test_loss() const;
  double final_train_loss() const;
};

/// Trains on the first `train_size` training records and tests on the first
/// overfit_test_size(train_size) test records. Throws ValidationError when
/// the dataset is too small.
OverfitCase run_overfit_case(const Dataset& ds, std::size_t train_size, int depth, int early_stop,
                             const nn::TrainConfig& base);

/// Every (size, depth, early stop) combination; writes history_<name>.json
/// per case and overfit_summary.json.
std::vector<OverfitCase> run_overfitting_study(const ExperimentConfig& cfg);

// ------------------------------------------------------------ optimize

/// Alternating optimization of the realization drawn from `cfg.seed`.
Json optimize_single(const ExperimentConfig& cfg);

}  // namespace irs
