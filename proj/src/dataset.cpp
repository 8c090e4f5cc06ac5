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

#include "irs/dataset.hpp"

#include <cmath>
#include <fstream>

#include "irs/error.hpp"
#include "irs/serialize.hpp"

namespace irs {

std::size_t split_boundary(std::size_t count, double split) {
  if (!(split > 0.0 && split < 1.0)) throw ValidationError("split must lie in (0, 1)");
  auto n = static_cast<std::size_t>(std::floor(split * static_cast<double>(count)));
  if (count >= 2) n = std::clamp<std::size_t>(n, 1, count - 1);
  return n;
}

DatasetRecord make_record(std::size_t index, std::uint64_t seed, const SystemParams& params,
                          const AltOptOptions& opts) {
  DatasetRecord r;
  r.index = index;
  r.seed = seed;
  Rng rng(seed);
  r.channels = sample_channels(params, rng);
  r.P_t = params.P_t;

  AltOptOptions o = opts;
  o.seed = derive_seed(seed, kStreamAlternate);
  AltOptResult res;
  try {
    res = alternate(r.channels, params, o);
  } catch (const SolverError& e) {
    throw SolverError("seed " + std::to_string(seed) + ": " + e.what());
  }
  r.theta = res.phase.theta();
  r.f = res.f.f;
  r.rate = res.rate;
  r.trace = res.trace;
  r.iterations = res.iterations;
  r.converged = res.converged;
  return r;
}

nn::Sample to_sample(const DatasetRecord& r) {
  nn::Sample s;
  s.channels = r.channels;
  s.P_t = r.P_t;
  s.target_theta = r.theta;
  s.target_rate = r.rate.secrecy;
  return s;
}

std::vector<nn::Sample> Dataset::samples() const {
  std::vector<nn::Sample> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(to_sample(r));
  return out;
}

std::vector<nn::Sample> Dataset::train_samples() const {
  std::vector<nn::Sample> all = samples();
  all.resize(std::min(all.size(), header.train_count));
  return all;
}

std::vector<nn::Sample> Dataset::test_samples() const {
  std::vector<nn::Sample> out;
  for (std::size_t i = header.train_count; i < records.size(); ++i) out.push_back(to_sample(records[i]));
  return out;
}

std::string header_line(const DatasetHeader& h) {
  const Json j{{"format", kDatasetFormat},
               {"version", kDatasetVersion},
               {"params", params_to_json(h.params)},
               {"count", h.count},
               {"train_count", h.train_count},
               {"split", h.split},
               {"base_seed", h.base_seed},
               {"altopt",
                {{"max_iter", h.max_iter}, {"epsilon", h.epsilon}, {"randomization_count", h.randomization_count}}}};
  return j.dump();
}

std::string record_line(const DatasetRecord& r) {
  Json theta = Json::array();
  for (Eigen::Index i = 0; i < r.theta.size(); ++i) theta.push_back(r.theta(i));
  const Json j{{"index", r.index},
               {"seed", r.seed},
               {"P_t", r.P_t},
               {"G", matrix_to_json(r.channels.G)},
               {"h_au", row_to_json(r.channels.h_au)},
               {"h_ae", row_to_json(r.channels.h_ae)},
               {"h_iu", row_to_json(r.channels.h_iu)},
               {"h_ie", row_to_json(r.channels.h_ie)},
               {"theta", std::move(theta)},
               {"f", vector_to_json(r.f)},
               {"R_u", r.rate.user},
               {"R_e", r.rate.eve},
               {"R_sec", r.rate.secrecy},
               {"trace", r.trace},
               {"iterations", r.iterations},
               {"converged", r.converged}};
  return j.dump();
}

DatasetHeader parse_header(const std::string& line) {
  try {
    const Json j = Json::parse(line);
    require_keys(j, {"format", "version", "params", "count", "train_count", "split", "base_seed", "altopt"},
                 "dataset header");
    if (j.at("format") != kDatasetFormat) throw ValidationError("dataset header: not an irs-dataset file");
    if (j.at("version") != kDatasetVersion) {
      throw ValidationError("dataset header: unsupported version " + j.at("version").dump());
    }
    DatasetHeader h;
    h.params = params_from_json(j.at("params"));
    h.count = j.at("count").get<std::size_t>();
    h.train_count = j.at("train_count").get<std::size_t>();
    h.split = j.at("split").get<double>();
    h.base_seed = j.at("base_seed").get<std::uint64_t>();
    const Json& a = j.at("altopt");
    require_keys(a, {"max_iter", "epsilon", "randomization_count"}, "dataset header altopt");
    h.max_iter = a.at("max_iter").get<int>();
    h.epsilon = a.at("epsilon").get<double>();
    h.randomization_count = a.at("randomization_count").get<int>();
    if (h.train_count > h.count) throw ValidationError("dataset header: train_count exceeds count");
    return h;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("dataset header: ") + e.what());
  }
}

DatasetRecord parse_record(const std::string& line, const SystemParams& params) {
  try {
    const Json j = Json::parse(line);
    require_keys(j, {"index", "seed", "P_t", "G", "h_au", "h_ae", "h_iu", "h_ie", "theta", "f", "R_u", "R_e",
                     "R_sec", "trace", "iterations", "converged"},
                 "dataset record");
    DatasetRecord r;
    r.index = j.at("index").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.P_t = j.at("P_t").get<double>();
    r.channels.G = matrix_from_json(j.at("G"));
    r.channels.h_au = row_from_json(j.at("h_au"));
    r.channels.h_ae = row_from_json(j.at("h_ae"));
    r.channels.h_iu = row_from_json(j.at("h_iu"));
    r.channels.h_ie = row_from_json(j.at("h_ie"));
    r.channels.seed = r.seed;
    r.channels.check(params);
    const auto theta = j.at("theta").get<std::vector<double>>();
    r.theta = Eigen::Map<const RVector>(theta.data(), static_cast<Eigen::Index>(theta.size()));
    if (r.theta.size() != params.N) throw ValidationError("dataset record: theta length != N");
    r.f = vector_from_json(j.at("f"));
    if (r.f.size() != params.M) throw ValidationError("dataset record: f length != M");
    r.rate.user = j.at("R_u").get<double>();
    r.rate.eve = j.at("R_e").get<double>();
    r.rate.secrecy = j.at("R_sec").get<double>();
    r.trace = j.at("trace").get<std::vector<double>>();
    r.iterations = j.at("iterations").get<int>();
    r.converged = j.at("converged").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("dataset record: ") + e.what());
  }
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open dataset '" + path + "'");
  Dataset ds;
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("dataset '" + path + "' is empty");
  ds.header = parse_header(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      DatasetRecord r = parse_record(line, ds.header.params);
      if (r.index != ds.records.size()) throw ValidationError("records out of order");
      ds.records.push_back(std::move(r));
    } catch (const ValidationError& e) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (ds.records.size() != ds.header.count) {
    throw ValidationError("dataset '" + path + "' holds " + std::to_string(ds.records.size()) +
                          " records, header says " + std::to_string(ds.header.count));
  }
  return ds;
}

}  // namespace irs
