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

// Command-line entry point.
//
//   irs_secrecy gen-data      --config cfg.json --out out/
//   irs_secrecy train         --config cfg.json
//   irs_secrecy compare       --config cfg.json
//   irs_secrecy overfit-study --config cfg.json
//   irs_secrecy optimize      --seed 7
//
// Exit codes: 0 success, 1 validation error, 2 solver failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "irs/error.hpp"
#include "irs/harness.hpp"
#include "irs/kernels.hpp"

namespace {

struct GlobalFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  int threads = 0;
};

irs::ExperimentConfig load_config(const GlobalFlags& g) {
  irs::ExperimentConfig cfg = g.config.empty() ? irs::ExperimentConfig::from_json(irs::Json::object())
                                               : irs::ExperimentConfig::load(g.config);
  if (g.seed) cfg.set_seed(*g.seed);
  if (!g.out.empty()) cfg.out_dir = g.out;
  if (g.threads > 0) cfg.threads = g.threads;
  if (g.threads < 0) throw irs::ValidationError("--threads must be >= 0");
  irs::kernels::set_threads(cfg.threads);
  return cfg;
}

int run(const std::string& command, const GlobalFlags& g) {
  const irs::ExperimentConfig cfg = load_config(g);
  if (command == "gen-data") {
    const irs::GenDataResult r = irs::gen_dataset(cfg, &std::cerr);
    std::cout << "wrote " << r.count << " samples (" << r.train_count << " train, " << r.count - r.train_count
              << " test, " << r.converged << " converged) to " << r.path << "\n";
  } else if (command == "train") {
    const irs::TrainCommandResult r = irs::run_training(cfg);
    const auto& last = r.train.history.epochs.back();
    std::cout << "epochs " << r.train.history.epochs.size() << ", final train loss "
              << irs::format_double(last.train_loss) << ", final test loss " << irs::format_double(last.test_loss)
              << "\n"
              << "held-out mean R_sec: supervised " << irs::format_double(r.held_out.mean_supervised) << ", no-irs "
              << irs::format_double(r.held_out.mean_no_irs) << ", alternating "
              << irs::format_double(r.held_out.mean_alternating) << "\n"
              << "checkpoint " << r.checkpoint_path << "\n";
  } else if (command == "compare") {
    const irs::CompareResult r = irs::run_comparison(cfg);
    for (const std::string& s : cfg.compare.schemes) {
      const auto& e = r.summary.at("schemes").at(s);
      std::cout << s << ": mean " << irs::format_double(e.at("mean").get<double>()) << ", median "
                << irs::format_double(e.at("median").get<double>()) << "\n";
    }
    std::cout << "wrote " << r.csv_path << " and " << r.summary_path << "\n";
  } else if (command == "overfit-study") {
    for (const irs::OverfitCase& c : irs::run_overfitting_study(cfg)) {
      std::cout << c.name << ": epochs " << c.history.epochs.size() << ", final train "
                << irs::format_double(c.final_train_loss()) << ", final test "
                << irs::format_double(c.final_test_loss()) << "\n";
    }
  } else if (command == "optimize") {
    std::cout << irs::optimize_single(cfg).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRS-assisted secure downlink: dataset generation, training and scheme comparison"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--config", g.config, "JSON experiment configuration");
  app.add_option("--seed", g.seed, "Base seed (overrides the configuration)");
  app.add_option("--out", g.out, "Output directory (overrides the configuration)");
  app.add_option("--threads", g.threads, "Worker threads (0 keeps the runtime default)");

  const char* commands[][2] = {
      {"gen-data", "Generate the training dataset with the alternating optimizer"},
      {"train", "Train the phase-shift network on the dataset"},
      {"compare", "Evaluate all schemes on common channel realizations"},
      {"overfit-study", "Loss histories over training-set sizes and depths"},
      {"optimize", "Alternating optimization of a single realization"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), g);
  } catch (const irs::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const irs::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
