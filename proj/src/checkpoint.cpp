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

#include <fstream>
#include <sstream>

#include "irs/error.hpp"
#include "irs/neural.hpp"
#include "irs/serialize.hpp"

namespace irs::nn {

namespace {

constexpr const char* kFormat = "irs-mlp";
constexpr int kVersion = 1;

std::vector<double> doubles(const Json& j, const char* key, std::size_t expected) {
  const Json& a = j.at(key);
  if (!a.is_array() || a.size() != expected) {
    throw ValidationError(std::string("checkpoint: '") + key + "' has the wrong length");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const Json& v : a) {
    if (!v.is_number()) throw ValidationError(std::string("checkpoint: '") + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

Json layer_to_json(const Layer& l) {
  if (const auto* d = std::get_if<DenseLayer>(&l)) {
    return Json{{"kind", "dense"},
                {"in", d->in()},
                {"out", d->out()},
                {"activation", d->act == Activation::Relu ? "relu" : "linear"},
                {"w", d->w.data},
                {"b", d->b}};
  }
  const auto& bn = std::get<BatchNormLayer>(l);
  return Json{{"kind", "batch-norm"},
              {"width", bn.width},
              {"epsilon", bn.epsilon},
              {"momentum", bn.momentum},
              {"gamma", bn.gamma},
              {"beta", bn.beta},
              {"running_mean", bn.running_mean},
              {"running_var", bn.running_var},
              {"running_initialized", bn.running_initialized}};
}

Layer layer_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dense") {
    require_keys(j, {"kind", "in", "out", "activation", "w", "b"}, "checkpoint dense layer");
    const int in = j.at("in").get<int>();
    const int out = j.at("out").get<int>();
    if (in < 1 || out < 1) throw ValidationError("checkpoint: dense widths must be positive");
    DenseLayer d;
    const std::string act = j.at("activation").get<std::string>();
    if (act == "relu") d.act = Activation::Relu;
    else if (act == "linear") d.act = Activation::Linear;
    else throw ValidationError("checkpoint: unknown activation '" + act + "'");
    d.w = Matrix(in, out);
    d.w.data = doubles(j, "w", static_cast<std::size_t>(in) * static_cast<std::size_t>(out));
    d.b = doubles(j, "b", static_cast<std::size_t>(out));
    return d;
  }
  if (kind == "batch-norm") {
    require_keys(j, {"kind", "width", "epsilon", "momentum", "gamma", "beta", "running_mean", "running_var",
                     "running_initialized"},
                 "checkpoint batch-norm layer");
    BatchNormLayer bn;
    bn.width = j.at("width").get<int>();
    if (bn.width < 1) throw ValidationError("checkpoint: batch-norm width must be positive");
    const auto w = static_cast<std::size_t>(bn.width);
    bn.epsilon = j.at("epsilon").get<double>();
    bn.momentum = j.at("momentum").get<double>();
    bn.gamma = doubles(j, "gamma", w);
    bn.beta = doubles(j, "beta", w);
    bn.running_mean = doubles(j, "running_mean", w);
    bn.running_var = doubles(j, "running_var", w);
    bn.running_initialized = j.at("running_initialized").get<bool>();
    return bn;
  }
  throw ValidationError("checkpoint: unknown layer kind '" + kind + "'");
}

}  // namespace

void save_checkpoint(const std::string& path, const MlpModel& model, const TrainConfig& cfg) {
  model.validate();
  Json layers = Json::array();
  for (const Layer& l : model.layers) layers.push_back(layer_to_json(l));
  const Json doc{{"format", kFormat}, {"version", kVersion}, {"config", train_config_to_json(cfg)},
                 {"layers", std::move(layers)}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write checkpoint '" + path + "'");
  out << doc.dump() << '\n';
  if (!out) throw ValidationError("failed writing checkpoint '" + path + "'");
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open checkpoint '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
    require_keys(doc, {"format", "version", "config", "layers"}, "checkpoint");
    if (doc.at("format") != kFormat) throw ValidationError("checkpoint: not an irs-mlp file");
    if (doc.at("version") != kVersion) {
      throw ValidationError("checkpoint: unsupported version " + doc.at("version").dump());
    }
    Checkpoint ck;
    ck.config = train_config_from_json(doc.at("config"));
    for (const Json& l : doc.at("layers")) ck.model.layers.push_back(layer_from_json(l));
    ck.model.validate();
    return ck;
  } catch (const Json::exception& e) {
    throw ValidationError("checkpoint '" + path + "': " + e.what());
  }
}

}  // namespace irs::nn
