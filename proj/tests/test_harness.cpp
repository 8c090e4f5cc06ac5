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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "irs/error.hpp"
#include "irs/harness.hpp"

using namespace irs;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("irs_harness_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

// Four-element surface and a short schedule keep every stage quick.
Json small_config(const fs::path& out) {
  return Json{{"seed", 11},
              {"out_dir", out.string()},
              {"params", {{"N", 4}}},
              {"dataset", {{"count", 10}}},
              {"compare", {{"realizations", 6}, {"bins", 5}, {"schemes", {"no-irs", "ap-mev", "alternating"}}}},
              {"train", {{"max_epochs", 4}, {"early_stop_epoch", 0}, {"batch_size", 4}, {"hidden", {8}}}}};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(IRS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, DefaultsAndOverrides) {
  const ExperimentConfig d = ExperimentConfig::from_json(Json::object());
  EXPECT_EQ(d.dataset.count, 10000u);
  EXPECT_EQ(d.compare_first_seed(), 10001u);
  EXPECT_EQ(d.train.seed, 1u);

  ExperimentConfig c = ExperimentConfig::from_json(Json{{"seed", 5}, {"params", {{"P_t_dbm", 30.0}}}});
  EXPECT_EQ(c.train.seed, 5u);
  EXPECT_DOUBLE_EQ(c.params.P_t, 1.0);
  c.set_seed(9);
  EXPECT_EQ(c.train.seed, 9u);

  const ExperimentConfig pinned =
      ExperimentConfig::from_json(Json{{"seed", 5}, {"train", {{"seed", 77}}}, {"compare", {{"first_seed", 3}}}});
  EXPECT_EQ(pinned.train.seed, 77u);
  EXPECT_EQ(pinned.compare_first_seed(), 3u);

  ExperimentConfig r = d;
  r.out_dir = "/tmp/x";
  EXPECT_EQ(r.resolve("a.json"), "/tmp/x/a.json");
  EXPECT_EQ(r.resolve("/abs/b.json"), "/abs/b.json");
}

TEST(Config, StrictParsing) {
  auto bad = [](const Json& j) { EXPECT_THROW(ExperimentConfig::from_json(j), ValidationError) << j.dump(); };
  bad(Json{{"sed", 1}});
  bad(Json{{"seed", -1}});
  bad(Json{{"seed", "one"}});
  bad(Json{{"dataset", {{"count", 1.5}}}});
  bad(Json{{"params", {{"P_t", 0.1}, {"P_t_dbm", 20.0}}}});
  bad(Json{{"params", {{"d_eu", 6.0}}}});
  bad(Json{{"params", {{"N", 0}}}});
  bad(Json{{"compare", {{"schemes", {"no-irs", "genie"}}}}});
  bad(Json{{"train", {{"encoding", "degrees"}}}});
  bad(Json{{"train", {{"momentum", 0.9}}}});
  EXPECT_NO_THROW(ExperimentConfig::from_json(Json{{"params", {{"d_eu", 5.0}}}}));
}

TEST(Summary, DistributionInvariants) {
  const std::vector<double> a = {0.5, 2.0, 1.0, 4.0, 3.0};
  const std::vector<double> b = {1.5, 1.5, 2.5};
  const std::vector<double> edges = common_edges({a, b}, 7);
  ASSERT_EQ(edges.size(), 8u);
  EXPECT_EQ(edges.front(), 0.5);
  EXPECT_EQ(edges.back(), 4.0);

  const Distribution d = summarize(a, edges);
  EXPECT_DOUBLE_EQ(d.mean, 2.1);
  EXPECT_EQ(d.median, 2.0);
  EXPECT_EQ(summarize(b, edges).median, 1.5);
  EXPECT_EQ(summarize({1.0, 2.0, 3.0, 4.0}, edges).median, 2.5);

  double integral = 0.0;
  for (std::size_t i = 0; i < d.density.size(); ++i) integral += d.density[i] * (edges[i + 1] - edges[i]);
  EXPECT_NEAR(integral, 1.0, 1e-9);
  for (std::size_t i = 1; i < d.cdf_x.size(); ++i) {
    EXPECT_LE(d.cdf_x[i - 1], d.cdf_x[i]);
    EXPECT_LT(d.cdf_p[i - 1], d.cdf_p[i]);
  }
  EXPECT_EQ(d.cdf_p.back(), 1.0);

  const std::vector<double> flat = common_edges({{2.0, 2.0}}, 4);
  EXPECT_LT(flat.front(), 2.0);
  EXPECT_GT(flat.back(), 2.0);
}

TEST(Summary, CsvLayout) {
  ResultRecord r;
  r.seed = 42;
  r.scheme = kSchemeNoIrs;
  r.rate = {0.1, 0.25, 0.0};
  r.iterations = 1;
  const std::string csv = results_csv({r});
  EXPECT_EQ(csv, "seed,scheme,R_u,R_e,R_sec,iterations,wall_ms\n42,no-irs,0.1,0.25,0,1,\n");
  r.wall_ms = 1.5;
  EXPECT_NE(results_csv({r}).find(",1,1.5\n"), std::string::npos);
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Dataset, SplitArithmetic) {
  EXPECT_EQ(split_boundary(10000, 0.9), 9000u);
  EXPECT_EQ(split_boundary(10, 0.9), 9u);
  EXPECT_EQ(split_boundary(2, 0.99), 1u);
  EXPECT_EQ(split_boundary(2, 0.01), 1u);
}

TEST(Dataset, GenerationIsReproducibleAndReadable) {
  const fs::path dir = fresh_dir("dataset");
  ExperimentConfig cfg = ExperimentConfig::from_json(small_config(dir));
  const GenDataResult g = gen_dataset(cfg);
  EXPECT_EQ(g.count, 10u);
  EXPECT_EQ(g.train_count, 9u);
  const std::string first = slurp(g.path);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 11);

  gen_dataset(cfg);
  EXPECT_EQ(slurp(g.path), first);

  const Dataset ds = read_dataset(g.path);
  EXPECT_EQ(ds.header.count, 10u);
  EXPECT_EQ(ds.header.train_count, 9u);
  EXPECT_EQ(ds.header.base_seed, 11u);
  ASSERT_EQ(ds.records.size(), 10u);
  EXPECT_EQ(ds.train_samples().size(), 9u);
  EXPECT_EQ(ds.test_samples().size(), 1u);

  for (const DatasetRecord& r : ds.records) {
    EXPECT_EQ(r.seed, 11u + r.index);
    const RateReport again = secrecy_rate(r.channels, r.f, PhaseVector::from_angles(r.theta).phi(), cfg.params);
    EXPECT_NEAR(again.secrecy, r.rate.secrecy, 1e-12);
    EXPECT_EQ(r.trace.back(), r.rate.secrecy);
    EXPECT_EQ(static_cast<int>(r.trace.size()), r.iterations);
  }
  const DatasetRecord direct = make_record(3, 14, cfg.params, cfg.altopt);
  EXPECT_EQ(record_line(direct), record_line(ds.records[3]));
}

TEST(Dataset, MalformedFilesNameTheLine) {
  const fs::path dir = fresh_dir("malformed");
  ExperimentConfig cfg = ExperimentConfig::from_json(small_config(dir));
  cfg.dataset.count = 3;
  const GenDataResult g = gen_dataset(cfg);
  std::string text = slurp(g.path);
  const auto second = text.find('\n', text.find('\n') + 1);
  text.insert(second + 1, "{not json\n");
  const fs::path broken = dir / "broken.jsonl";
  std::ofstream(broken) << text;
  try {
    read_dataset(broken.string());
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_dataset((dir / "absent.jsonl").string()), ValidationError);
}

TEST(Compare, OutputsAreDeterministicAndWellFormed) {
  const fs::path dir = fresh_dir("compare");
  const ExperimentConfig cfg = ExperimentConfig::from_json(small_config(dir));
  const CompareResult a = run_comparison(cfg);
  const std::string csv = slurp(a.csv_path);
  const std::string summary = slurp(a.summary_path);
  ASSERT_EQ(a.records.size(), 18u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "seed,scheme,R_u,R_e,R_sec,iterations,wall_ms");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 19);
  EXPECT_EQ(a.records.front().seed, 21u);

  const Json j = Json::parse(summary);
  EXPECT_EQ(j.at("format"), "irs-summary");
  EXPECT_EQ(j.at("version"), 1);
  EXPECT_EQ(j.at("first_seed"), 21);
  EXPECT_EQ(j.at("realizations"), 6);
  EXPECT_EQ(j.at("scheme_order").size(), 3u);
  for (const auto& [name, s] : j.at("schemes").items()) {
    EXPECT_EQ(s.at("count"), 6);
    EXPECT_EQ(s.at("pdf").at("edges").size(), 6u);
    EXPECT_EQ(s.at("pdf").at("edges"), j.at("schemes").at("no-irs").at("pdf").at("edges"));
    EXPECT_EQ(s.at("cdf").at("p").back(), 1.0);
  }

  for (std::size_t i = 0; i < a.records.size(); i += 3) {
    EXPECT_GE(a.records[i + 1].rate.secrecy, a.records[i].rate.secrecy - 1e-12);
  }

  const CompareResult b = run_comparison(cfg);
  EXPECT_EQ(slurp(b.csv_path), csv);
  EXPECT_EQ(slurp(b.summary_path), summary);
}

TEST(Compare, SupervisedNeedsCheckpoint) {
  const fs::path dir = fresh_dir("nockpt");
  Json j = small_config(dir);
  j["compare"]["schemes"] = {"supervised"};
  EXPECT_THROW(run_comparison(ExperimentConfig::from_json(j)), ValidationError);
}

TEST(Training, CommandWritesCheckpointAndHistory) {
  const fs::path dir = fresh_dir("train");
  Json j = small_config(dir);
  j["compare"]["schemes"] = {"no-irs", "supervised"};
  const ExperimentConfig cfg = ExperimentConfig::from_json(j);
  gen_dataset(cfg);
  const TrainCommandResult r = run_training(cfg);
  EXPECT_TRUE(fs::exists(r.checkpoint_path));
  EXPECT_EQ(r.held_out.count, 1u);
  const Json h = Json::parse(slurp(r.history_path));
  EXPECT_EQ(h.at("format"), "irs-history");
  EXPECT_EQ(h.at("epoch").size(), 4u);
  EXPECT_EQ(h.at("train_loss").size(), 4u);
  EXPECT_EQ(h.at("test_loss").size(), 4u);
  EXPECT_TRUE(fs::exists(dir / "train_summary.json"));

  const CompareResult c = run_comparison(cfg);
  EXPECT_EQ(c.records.size(), 12u);
  EXPECT_EQ(c.records[1].scheme, kSchemeSupervised);
}

TEST(Overfit, Helpers) {
  EXPECT_EQ(hidden_widths(2), (std::vector<int>{256, 128}));
  EXPECT_EQ(hidden_widths(3), (std::vector<int>{256, 128, 128}));
  EXPECT_EQ(hidden_widths(4), (std::vector<int>{256, 256, 128, 128}));
  EXPECT_EQ(overfit_test_size(100), 100u);
  EXPECT_EQ(overfit_test_size(2700), 300u);
  EXPECT_EQ(overfit_test_size(9000), 1000u);

  const fs::path dir = fresh_dir("overfit");
  ExperimentConfig cfg = ExperimentConfig::from_json(small_config(dir));
  gen_dataset(cfg);
  const Dataset ds = read_dataset(cfg.resolve(cfg.dataset.path));
  EXPECT_THROW(run_overfit_case(ds, 100, 2, 0, cfg.train), ValidationError);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = fresh_dir("cli");
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli(""), 1);
  EXPECT_EQ(run_cli("frobnicate"), 1);
  EXPECT_EQ(run_cli("compare --config " + (dir / "missing.json").string()), 1);

  std::ofstream(dir / "bad.json") << R"({"seed": 1, "unknown": true})";
  EXPECT_EQ(run_cli("optimize --config " + (dir / "bad.json").string()), 1);

  Json j = small_config(dir);
  std::ofstream(dir / "cfg.json") << j.dump();
  EXPECT_EQ(run_cli("optimize --config " + (dir / "cfg.json").string() + " --seed 3"), 0);
  EXPECT_EQ(run_cli("gen-data --config " + (dir / "cfg.json").string()), 0);

  // A diverging optimizer is a solver failure, not a validation error.
  j["train"]["learning_rate"] = 1e300;
  std::ofstream(dir / "diverge.json") << j.dump();
  EXPECT_EQ(run_cli("train --config " + (dir / "diverge.json").string()), 2);
}
