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

#include "irs/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>

#include "irs/error.hpp"
#include "irs/kernels.hpp"
#include "irs/txbf.hpp"

namespace irs {

namespace fs = std::filesystem;

// ------------------------------------------------------------ config

namespace {

bool non_negative_integer(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

template <class T>
T get_as(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  bool ok = true;
  if constexpr (std::is_same_v<T, bool>) ok = v.is_boolean();
  else if constexpr (std::is_integral_v<T>) ok = std::is_signed_v<T> ? v.is_number_integer() : non_negative_integer(v);
  else if constexpr (std::is_floating_point_v<T>) ok = v.is_number();
  else if constexpr (std::is_same_v<T, std::string>) ok = v.is_string();
  if (!ok) throw ValidationError(where + ": key '" + key + "' has the wrong type");
  return v.get<T>();
}

template <class T>
std::vector<T> get_list(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_array()) throw ValidationError(where + ": key '" + key + "' must be an array");
  std::vector<T> out;
  for (const Json& e : v) {
    bool ok = true;
    if constexpr (std::is_integral_v<T>) ok = std::is_signed_v<T> ? e.is_number_integer() : non_negative_integer(e);
    else if constexpr (std::is_same_v<T, std::string>) ok = e.is_string();
    if (!ok) throw ValidationError(where + ": key '" + key + "' has an entry of the wrong type");
    out.push_back(e.get<T>());
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create directory '" + dir + "': " + ec.message());
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  require_keys(j, {"params", "seed", "out_dir", "threads", "checkpoint", "dataset", "altopt", "compare", "train",
                   "overfit"},
               "config");
  ExperimentConfig c;
  try {
    if (j.contains("params")) c.params = params_from_json(j.at("params"));
    if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j, "seed", "config");
    if (j.contains("out_dir")) c.out_dir = get_as<std::string>(j, "out_dir", "config");
    if (j.contains("threads")) c.threads = get_as<int>(j, "threads", "config");
    if (j.contains("checkpoint")) c.checkpoint = get_as<std::string>(j, "checkpoint", "config");

    if (j.contains("dataset")) {
      const Json& d = j.at("dataset");
      require_keys(d, {"count", "split", "path"}, "dataset");
      if (d.contains("count")) c.dataset.count = get_as<std::size_t>(d, "count", "dataset");
      if (d.contains("split")) c.dataset.split = get_as<double>(d, "split", "dataset");
      if (d.contains("path")) c.dataset.path = get_as<std::string>(d, "path", "dataset");
    }
    if (j.contains("altopt")) {
      const Json& a = j.at("altopt");
      require_keys(a, {"max_iter", "epsilon", "randomization_count"}, "altopt");
      if (a.contains("max_iter")) c.altopt.max_iter = get_as<int>(a, "max_iter", "altopt");
      if (a.contains("epsilon")) c.altopt.epsilon = get_as<double>(a, "epsilon", "altopt");
      if (a.contains("randomization_count")) {
        c.altopt.randomization_count = get_as<int>(a, "randomization_count", "altopt");
      }
    }
    if (j.contains("compare")) {
      const Json& m = j.at("compare");
      require_keys(m, {"realizations", "first_seed", "schemes", "bins", "timing"}, "compare");
      if (m.contains("realizations")) c.compare.realizations = get_as<std::size_t>(m, "realizations", "compare");
      if (m.contains("first_seed")) c.compare.first_seed = get_as<std::uint64_t>(m, "first_seed", "compare");
      if (m.contains("schemes")) c.compare.schemes = get_list<std::string>(m, "schemes", "compare");
      if (m.contains("bins")) c.compare.bins = get_as<int>(m, "bins", "compare");
      if (m.contains("timing")) c.compare.timing = get_as<bool>(m, "timing", "compare");
    }
    if (j.contains("train")) {
      c.train = train_config_from_json(j.at("train"));
      c.train_seed_set = j.at("train").contains("seed");
    }
    if (j.contains("overfit")) {
      const Json& o = j.at("overfit");
      require_keys(o, {"sizes", "hidden_layers", "early_stop"}, "overfit");
      if (o.contains("sizes")) c.overfit.sizes = get_list<std::size_t>(o, "sizes", "overfit");
      if (o.contains("hidden_layers")) c.overfit.hidden_layers = get_list<int>(o, "hidden_layers", "overfit");
      if (o.contains("early_stop")) c.overfit.early_stop = get_list<int>(o, "early_stop", "overfit");
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  if (!c.train_seed_set) c.train.seed = c.seed;
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("config '" + path + "': " + e.what());
  }
  return from_json(j);
}

void ExperimentConfig::set_seed(std::uint64_t s) {
  seed = s;
  if (!train_seed_set) train.seed = s;
}

std::string ExperimentConfig::resolve(const std::string& path) const {
  const fs::path p(path);
  if (p.is_absolute()) return p.string();
  return (fs::path(out_dir) / p).string();
}

std::uint64_t ExperimentConfig::compare_first_seed() const {
  return compare.first_seed.value_or(seed + static_cast<std::uint64_t>(dataset.count));
}

void ExperimentConfig::validate() const {
  params.validate();
  train.validate();
  if (out_dir.empty()) throw ValidationError("config: out_dir must not be empty");
  if (threads < 0) throw ValidationError("config: threads must be >= 0");
  if (dataset.count < 1) throw ValidationError("dataset: count must be >= 1");
  if (!(dataset.split > 0.0 && dataset.split < 1.0)) throw ValidationError("dataset: split must lie in (0, 1)");
  if (altopt.max_iter < 1) throw ValidationError("altopt: max_iter must be >= 1");
  if (!(altopt.epsilon >= 0.0)) throw ValidationError("altopt: epsilon must be >= 0");
  if (altopt.randomization_count < 1) throw ValidationError("altopt: randomization_count must be >= 1");
  if (compare.realizations < 1) throw ValidationError("compare: realizations must be >= 1");
  if (compare.bins < 1) throw ValidationError("compare: bins must be >= 1");
  if (compare.schemes.empty()) throw ValidationError("compare: schemes must not be empty");
  for (std::size_t i = 0; i < compare.schemes.size(); ++i) {
    const std::string& s = compare.schemes[i];
    if (s != kSchemeNoIrs && s != kSchemeApMev && s != kSchemeAlternating && s != kSchemeSupervised) {
      throw ValidationError("compare: unknown scheme '" + s + "'");
    }
    if (std::find(compare.schemes.begin(), compare.schemes.begin() + static_cast<std::ptrdiff_t>(i), s) !=
        compare.schemes.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw ValidationError("compare: scheme '" + s + "' listed twice");
    }
  }
  for (std::size_t s : overfit.sizes) {
    if (s < 1) throw ValidationError("overfit: sizes must be >= 1");
  }
  for (int d : overfit.hidden_layers) {
    if (d < 1) throw ValidationError("overfit: hidden_layers must be >= 1");
  }
  for (int e : overfit.early_stop) {
    if (e < 0) throw ValidationError("overfit: early_stop entries must be >= 0");
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ------------------------------------------------------------ gen-data

GenDataResult gen_dataset(const ExperimentConfig& cfg, std::ostream* log) {
  cfg.validate();
  GenDataResult out;
  out.path = cfg.resolve(cfg.dataset.path);
  ensure_dir(fs::path(out.path).parent_path().string());

  DatasetHeader h;
  h.params = cfg.params;
  h.count = cfg.dataset.count;
  h.split = cfg.dataset.split;
  h.train_count = split_boundary(h.count, h.split);
  h.base_seed = cfg.seed;
  h.max_iter = cfg.altopt.max_iter;
  h.epsilon = cfg.altopt.epsilon;
  h.randomization_count = cfg.altopt.randomization_count;
  out.count = h.count;
  out.train_count = h.train_count;

  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw ValidationError("cannot write dataset '" + out.path + "'");
  file << header_line(h) << '\n';

  const std::size_t chunk = 32 * static_cast<std::size_t>(std::max(1, kernels::max_threads()));
  for (std::size_t start = 0; start < h.count; start += chunk) {
    const std::size_t n = std::min(chunk, h.count - start);
    const std::vector<DatasetRecord> recs = kernels::map_indexed<DatasetRecord>(n, [&](std::size_t k) {
      const std::size_t i = start + k;
      return make_record(i, h.base_seed + i, cfg.params, cfg.altopt);
    });
    for (const DatasetRecord& r : recs) {
      file << record_line(r) << '\n';
      out.converged += r.converged ? 1 : 0;
    }
    file.flush();
    if (log != nullptr) *log << "gen-data: " << (start + n) << "/" << h.count << std::endl;
  }
  if (!file) throw ValidationError("failed writing dataset '" + out.path + "'");
  return out;
}

// ------------------------------------------------------------ compare

std::vector<double> common_edges(const std::vector<std::vector<double>>& groups, int bins) {
  if (bins < 1) throw ValidationError("histogram: bins must be >= 1");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& g : groups) {
    for (double v : g) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("histogram: no finite values");
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  const double width = (hi - lo) / bins;
  for (int i = 0; i < bins; ++i) edges[static_cast<std::size_t>(i)] = lo + i * width;
  edges.back() = hi;
  return edges;
}

Distribution summarize(std::vector<double> values, const std::vector<double>& edges) {
  if (values.empty()) throw ValidationError("summarize: no values");
  if (edges.size() < 2) throw ValidationError("summarize: need at least one bin");
  Distribution d;
  const auto n = values.size();
  std::sort(values.begin(), values.end());
  d.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
  d.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  d.edges = edges;

  const std::size_t bins = edges.size() - 1;
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    if (v < edges.front() || v > edges.back()) throw ValidationError("summarize: value outside the edges");
    // upper_bound finds the first edge above v; the last edge closes the final bin.
    auto it = std::upper_bound(edges.begin(), edges.end(), v);
    std::size_t bin = static_cast<std::size_t>(it - edges.begin());
    bin = bin == 0 ? 0 : bin - 1;
    counts[std::min(bin, bins - 1)] += 1;
  }
  d.density.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    d.density[b] = static_cast<double>(counts[b]) / (static_cast<double>(n) * (edges[b + 1] - edges[b]));
  }
  d.cdf_x = values;
  d.cdf_p.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.cdf_p[i] = static_cast<double>(i + 1) / static_cast<double>(n);
  return d;
}

std::string results_csv(const std::vector<ResultRecord>& records) {
  std::string out = "seed,scheme,R_u,R_e,R_sec,iterations,wall_ms\n";
  for (const ResultRecord& r : records) {
    out += std::to_string(r.seed);
    out += ',' + r.scheme;
    out += ',' + format_double(r.rate.user);
    out += ',' + format_double(r.rate.eve);
    out += ',' + format_double(r.rate.secrecy);
    out += ',' + std::to_string(r.iterations);
    out += ',';
    if (r.wall_ms) out += format_double(*r.wall_ms);
    out += '\n';
  }
  return out;
}

Json summary_json(const std::vector<ResultRecord>& records, const std::vector<std::string>& schemes, int bins) {
  std::vector<std::vector<double>> groups(schemes.size());
  for (const ResultRecord& r : records) {
    const auto it = std::find(schemes.begin(), schemes.end(), r.scheme);
    if (it == schemes.end()) throw ValidationError("summary: unexpected scheme '" + r.scheme + "'");
    groups[static_cast<std::size_t>(it - schemes.begin())].push_back(r.rate.secrecy);
  }
  const std::vector<double> edges = common_edges(groups, bins);
  Json per_scheme = Json::object();
  for (std::size_t s = 0; s < schemes.size(); ++s) {
    const Distribution d = summarize(groups[s], edges);
    per_scheme[schemes[s]] = Json{{"count", groups[s].size()},
                                  {"mean", d.mean},
                                  {"median", d.median},
                                  {"pdf", {{"edges", d.edges}, {"density", d.density}}},
                                  {"cdf", {{"x", d.cdf_x}, {"p", d.cdf_p}}}};
  }
  return Json{{"format", "irs-summary"}, {"version", 1}, {"metric", "R_sec"}, {"bins", bins},
              {"scheme_order", schemes}, {"schemes", std::move(per_scheme)}};
}

std::vector<ResultRecord> evaluate_realization(std::uint64_t seed, const ExperimentConfig& cfg,
                                               const nn::MlpModel* model, nn::TargetEncoding encoding,
                                               bool timing) {
  Rng rng(seed);
  const ChannelSet ch = sample_channels(cfg.params, rng);
  std::vector<ResultRecord> out;
  using clock = std::chrono::steady_clock;
  for (const std::string& scheme : cfg.compare.schemes) {
    const auto t0 = clock::now();
    ResultRecord rec;
    rec.seed = seed;
    rec.scheme = scheme;
    try {
      if (scheme == kSchemeNoIrs) {
        const AltOptResult r = baseline_no_irs(ch, cfg.params);
        rec.rate = r.rate;
        rec.iterations = r.iterations;
      } else if (scheme == kSchemeApMev) {
        AltOptOptions o = cfg.altopt;
        o.seed = derive_seed(seed, kStreamApMev);
        const AltOptResult r = baseline_ap_mev(ch, cfg.params, o);
        rec.rate = r.rate;
        rec.iterations = r.iterations;
      } else if (scheme == kSchemeAlternating) {
        AltOptOptions o = cfg.altopt;
        o.seed = derive_seed(seed, kStreamAlternate);
        const AltOptResult r = alternate(ch, cfg.params, o);
        rec.rate = r.rate;
        rec.iterations = r.iterations;
      } else {
        if (model == nullptr) throw ValidationError("compare: supervised scheme needs a checkpoint");
        nn::Sample s;
        s.channels = ch;
        s.P_t = cfg.params.P_t;
        const std::vector<nn::Sample> one{s};
        rec.rate = nn::evaluate(*model, one, cfg.params, encoding).front();
        rec.iterations = 1;
      }
    } catch (const SolverError& e) {
      throw SolverError("seed " + std::to_string(seed) + ", scheme " + scheme + ": " + e.what());
    }
    if (timing) {
      rec.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

CompareResult run_comparison(const ExperimentConfig& cfg) {
  cfg.validate();
  std::optional<nn::Checkpoint> ck;
  const bool supervised = std::find(cfg.compare.schemes.begin(), cfg.compare.schemes.end(),
                                    std::string(kSchemeSupervised)) != cfg.compare.schemes.end();
  if (supervised) {
    const std::string path = cfg.resolve(cfg.checkpoint);
    if (!fs::exists(path)) throw ValidationError("compare: supervised scheme requested but checkpoint '" + path + "' is missing");
    ck = nn::load_checkpoint(path);
    const int width = nn::feature_width(cfg.params.M, cfg.params.N);
    if (ck->model.input_width() != width ||
        ck->model.output_width() != nn::target_width(ck->config.encoding, cfg.params.N)) {
      throw ValidationError("compare: checkpoint does not match M and N of the configuration");
    }
  }

  const std::uint64_t first = cfg.compare_first_seed();
  const auto per_seed = kernels::map_indexed<std::vector<ResultRecord>>(cfg.compare.realizations, [&](std::size_t i) {
    return evaluate_realization(first + i, cfg, ck ? &ck->model : nullptr,
                                ck ? ck->config.encoding : nn::TargetEncoding::UnitCircle, cfg.compare.timing);
  });

  CompareResult res;
  for (const auto& recs : per_seed) res.records.insert(res.records.end(), recs.begin(), recs.end());
  // map_indexed returns index order, which is already seed order.
  res.summary = summary_json(res.records, cfg.compare.schemes, cfg.compare.bins);
  res.summary["first_seed"] = first;
  res.summary["realizations"] = cfg.compare.realizations;
  res.summary["params"] = params_to_json(cfg.params);

  ensure_dir(cfg.out_dir);
  res.csv_path = cfg.resolve("results.csv");
  res.summary_path = cfg.resolve("summary.json");
  write_text(res.csv_path, results_csv(res.records));
  write_text(res.summary_path, res.summary.dump(2) + "\n");
  return res;
}

// ------------------------------------------------------------ train

HeldOutReport evaluate_held_out(const nn::MlpModel& model, nn::TargetEncoding encoding,
                                const std::vector<DatasetRecord>& records, const SystemParams& params) {
  HeldOutReport rep;
  rep.count = records.size();
  if (records.empty()) return rep;
  std::vector<nn::Sample> samples;
  samples.reserve(records.size());
  for (const auto& r : records) samples.push_back(to_sample(r));
  const std::vector<RateReport> sup = nn::evaluate(model, samples, params, encoding);
  const std::vector<double> base = kernels::map_indexed<double>(records.size(), [&](std::size_t i) {
    SystemParams p = params;
    p.P_t = records[i].P_t;
    return baseline_no_irs(records[i].channels, p).rate.secrecy;
  });
  for (std::size_t i = 0; i < records.size(); ++i) {
    rep.mean_supervised += sup[i].secrecy;
    rep.mean_no_irs += base[i];
    rep.mean_alternating += records[i].rate.secrecy;
  }
  const auto n = static_cast<double>(records.size());
  rep.mean_supervised /= n;
  rep.mean_no_irs /= n;
  rep.mean_alternating /= n;
  return rep;
}

Json history_json(const std::string& name, const nn::History& h, std::size_t train_size, std::size_t test_size,
                  const nn::TrainConfig& cfg) {
  std::vector<int> epoch;
  std::vector<double> train_loss;
  std::vector<double> test_loss;
  for (const auto& e : h.epochs) {
    epoch.push_back(e.epoch);
    train_loss.push_back(e.train_loss);
    test_loss.push_back(e.test_loss);
  }
  return Json{{"format", "irs-history"},
              {"version", 1},
              {"name", name},
              {"train_size", train_size},
              {"test_size", test_size},
              {"hidden", cfg.hidden},
              {"early_stop_epoch", cfg.early_stop_epoch},
              {"encoding", nn::to_string(cfg.encoding)},
              {"epoch", epoch},
              {"train_loss", train_loss},
              {"test_loss", test_loss}};
}

TrainCommandResult run_training(const ExperimentConfig& cfg) {
  cfg.validate();
  const Dataset ds = read_dataset(cfg.resolve(cfg.dataset.path));
  if (ds.header.params.M != cfg.params.M || ds.header.params.N != cfg.params.N) {
    throw ValidationError("train: dataset dimensions differ from the configuration");
  }
  const std::vector<nn::Sample> train_set = ds.train_samples();
  const std::vector<nn::Sample> test_set = ds.test_samples();

  TrainCommandResult out;
  out.train = nn::train(train_set, test_set, cfg.train);
  const std::vector<DatasetRecord> held(ds.records.begin() + static_cast<std::ptrdiff_t>(ds.header.train_count),
                                        ds.records.end());
  out.held_out = evaluate_held_out(out.train.model, cfg.train.encoding, held, ds.header.params);

  ensure_dir(cfg.out_dir);
  out.checkpoint_path = cfg.resolve(cfg.checkpoint);
  nn::save_checkpoint(out.checkpoint_path, out.train.model, cfg.train);
  out.history_path = cfg.resolve("history_train.json");
  write_text(out.history_path,
             history_json("train", out.train.history, train_set.size(), test_set.size(), cfg.train).dump(2) + "\n");
  const auto& last = out.train.history.epochs.back();
  const Json summary{{"train_size", train_set.size()},
                     {"test_size", test_set.size()},
                     {"epochs", out.train.history.epochs.size()},
                     {"final_train_loss", last.train_loss},
                     {"final_test_loss", last.test_loss},
                     {"mean_R_sec_supervised", out.held_out.mean_supervised},
                     {"mean_R_sec_no_irs", out.held_out.mean_no_irs},
                     {"mean_R_sec_alternating", out.held_out.mean_alternating}};
  write_text(cfg.resolve("train_summary.json"), summary.dump(2) + "\n");
  return out;
}

// ------------------------------------------------------------ overfit-study

std::vector<int> hidden_widths(int depth) {
  if (depth < 1) throw ValidationError("hidden layer count must be >= 1");
  const int wide = std::max(1, depth / 2);
  std::vector<int> out;
  for (int i = 0; i < depth; ++i) out.push_back(i < wide ? 256 : 128);
  return out;
}

std::size_t overfit_test_size(std::size_t train_size) { return std::max<std::size_t>(100, train_size / 9); }

double OverfitCase::final_test_loss() const { return history.epochs.back().test_loss; }
double OverfitCase::final_train_loss() const { return history.epochs.back().train_loss; }

OverfitCase run_overfit_case(const Dataset& ds, std::size_t train_size, int depth, int early_stop,
                             const nn::TrainConfig& base) {
  OverfitCase c;
  c.train_size = train_size;
  c.test_size = overfit_test_size(train_size);
  c.depth = depth;
  c.early_stop = early_stop;
  c.name = "s" + std::to_string(train_size) + "_h" + std::to_string(depth) + "_" +
           (early_stop > 0 ? "es" + std::to_string(early_stop) : std::string("full"));
  const std::size_t train_avail = ds.header.train_count;
  const std::size_t test_avail = ds.records.size() - ds.header.train_count;
  if (train_size > train_avail || c.test_size > test_avail) {
    throw ValidationError("overfit-study: case " + c.name + " needs " + std::to_string(train_size) + " training and " +
                          std::to_string(c.test_size) + " test samples, dataset has " + std::to_string(train_avail) +
                          " and " + std::to_string(test_avail));
  }
  std::vector<nn::Sample> train_set;
  std::vector<nn::Sample> test_set;
  for (std::size_t i = 0; i < train_size; ++i) train_set.push_back(to_sample(ds.records[i]));
  for (std::size_t i = 0; i < c.test_size; ++i) test_set.push_back(to_sample(ds.records[train_avail + i]));

  c.config = base;
  c.config.hidden = hidden_widths(depth);
  c.config.early_stop_epoch = early_stop;
  c.history = nn::train(train_set, test_set, c.config).history;
  return c;
}

std::vector<OverfitCase> run_overfitting_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const Dataset ds = read_dataset(cfg.resolve(cfg.dataset.path));
  ensure_dir(cfg.out_dir);
  std::vector<OverfitCase> cases;
  Json summary = Json::array();
  for (std::size_t size : cfg.overfit.sizes) {
    for (int depth : cfg.overfit.hidden_layers) {
      for (int es : cfg.overfit.early_stop) {
        OverfitCase c = run_overfit_case(ds, size, depth, es, cfg.train);
        write_text(cfg.resolve("history_" + c.name + ".json"),
                   history_json(c.name, c.history, c.train_size, c.test_size, c.config).dump(2) + "\n");
        summary.push_back(Json{{"name", c.name},
                               {"train_size", c.train_size},
                               {"test_size", c.test_size},
                               {"hidden_layers", c.depth},
                               {"early_stop_epoch", c.early_stop},
                               {"epochs", c.history.epochs.size()},
                               {"final_train_loss", c.final_train_loss()},
                               {"final_test_loss", c.final_test_loss()}});
        cases.push_back(std::move(c));
      }
    }
  }
  write_text(cfg.resolve("overfit_summary.json"), Json{{"cases", summary}}.dump(2) + "\n");
  return cases;
}

// ------------------------------------------------------------ optimize

Json optimize_single(const ExperimentConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const ChannelSet ch = sample_channels(cfg.params, rng);
  AltOptOptions o = cfg.altopt;
  o.seed = derive_seed(cfg.seed, kStreamAlternate);
  const AltOptResult r = alternate(ch, cfg.params, o);
  std::vector<double> theta(r.phase.theta().data(), r.phase.theta().data() + r.phase.theta().size());
  return Json{{"seed", cfg.seed},
              {"f", vector_to_json(r.f.f)},
              {"theta", theta},
              {"R_u", r.rate.user},
              {"R_e", r.rate.eve},
              {"R_sec", r.rate.secrecy},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"trace", r.trace}};
}

}  // namespace irs
