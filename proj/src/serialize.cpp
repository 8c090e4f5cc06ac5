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

#include "irs/serialize.hpp"

#include <cmath>
#include <optional>

#include "irs/error.hpp"

namespace irs {

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) throw ValidationError(where + ": unknown key '" + item.key() + "'");
  }
}

namespace {

template <class T>
std::optional<T> read(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  try {
    if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) throw ValidationError("");
    } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      const bool ok = std::is_signed_v<T> ? it->is_number_integer()
                                           : it->is_number_unsigned() ||
                                                 (it->is_number_integer() && it->template get<std::int64_t>() >= 0);
      if (!ok) throw ValidationError("");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!it->is_boolean()) throw ValidationError("");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) throw ValidationError("");
    }
    return it->get<T>();
  } catch (const std::exception&) {
    throw ValidationError(where + ": key '" + key + "' has the wrong type");
  }
}

// Exactly one of the linear or logarithmic spellings, or neither.
std::optional<double> read_power(const Json& j, const char* linear, const char* log_key, const std::string& where,
                                 double (*from_log)(double)) {
  const auto lin = read<double>(j, linear, where);
  const auto lg = read<double>(j, log_key, where);
  if (lin && lg) {
    throw ValidationError(where + ": give either '" + std::string(linear) + "' or '" + log_key + "'");
  }
  if (lg) return from_log(*lg);
  return lin;
}

}  // namespace

Json params_to_json(const SystemParams& p) {
  return Json{{"M", p.M},           {"N", p.N},           {"P_t", p.P_t},         {"sigma_u_sq", p.sigma_u_sq},
              {"sigma_e_sq", p.sigma_e_sq},
              {"d_ae", p.d_ae},     {"d_au", p.d_au},     {"d_ie", p.d_ie},       {"d_eu", p.d_eu},
              {"d_iu", p.d_iu},     {"d_ai", p.d_ai},     {"eta0", p.eta0},       {"d0", p.d0},
              {"psi_au", p.psi_au}, {"psi_ae", p.psi_ae}, {"psi_ai", p.psi_ai},   {"psi_iu", p.psi_iu},
              {"psi_ie", p.psi_ie}, {"K_au", p.K_au},     {"K_ae", p.K_ae},       {"K_ai", p.K_ai},
              {"K_iu", p.K_iu},     {"K_ie", p.K_ie},     {"r", p.r}};
}

SystemParams params_from_json(const Json& j, const SystemParams& base) {
  const std::string where = "params";
  require_keys(j,
               {"M", "N", "P_t", "P_t_dbm", "sigma_u_sq", "sigma_u_sq_dbm", "sigma_e_sq", "sigma_e_sq_dbm", "d_ae",
                "d_au", "d_ie", "d_eu", "d_iu", "d_ai", "eta0", "eta0_db", "d0", "psi_au", "psi_ae", "psi_ai",
                "psi_iu", "psi_ie", "K_au", "K_ae", "K_ai", "K_iu", "K_ie", "r"},
               where);
  SystemParams p = base;
  if (auto v = read<int>(j, "M", where)) p.M = *v;
  if (auto v = read<int>(j, "N", where)) p.N = *v;
  if (auto v = read_power(j, "P_t", "P_t_dbm", where, dbm_to_watts)) p.P_t = *v;
  if (auto v = read_power(j, "sigma_u_sq", "sigma_u_sq_dbm", where, dbm_to_watts)) p.sigma_u_sq = *v;
  if (auto v = read_power(j, "sigma_e_sq", "sigma_e_sq_dbm", where, dbm_to_watts)) p.sigma_e_sq = *v;
  if (auto v = read_power(j, "eta0", "eta0_db", where, db_to_linear)) p.eta0 = *v;
  if (auto v = read<double>(j, "d0", where)) p.d0 = *v;

  const double ae = read<double>(j, "d_ae", where).value_or(p.d_ae);
  const double au = read<double>(j, "d_au", where).value_or(p.d_au);
  const double ie = read<double>(j, "d_ie", where).value_or(p.d_ie);
  p.set_geometry(ae, au, ie);
  const std::pair<const char*, double> derived[] = {{"d_eu", p.d_eu}, {"d_iu", p.d_iu}, {"d_ai", p.d_ai}};
  for (const auto& [key, value] : derived) {
    if (auto v = read<double>(j, key, where)) {
      if (std::abs(*v - value) > 1e-9 * value) {
        throw ValidationError(where + ": '" + key + "' disagrees with the geometry of d_ae, d_au, d_ie");
      }
    }
  }

  const std::pair<const char*, double*> scalars[] = {
      {"psi_au", &p.psi_au}, {"psi_ae", &p.psi_ae}, {"psi_ai", &p.psi_ai}, {"psi_iu", &p.psi_iu},
      {"psi_ie", &p.psi_ie}, {"K_au", &p.K_au},     {"K_ae", &p.K_ae},     {"K_ai", &p.K_ai},
      {"K_iu", &p.K_iu},     {"K_ie", &p.K_ie},     {"r", &p.r}};
  for (const auto& [key, dst] : scalars) {
    if (auto v = read<double>(j, key, where)) *dst = *v;
  }
  p.validate();
  return p;
}

Json train_config_to_json(const nn::TrainConfig& c) {
  return Json{{"learning_rate", c.learning_rate},
              {"beta1", c.beta1},
              {"beta2", c.beta2},
              {"adam_epsilon", c.adam_epsilon},
              {"batch_size", c.batch_size},
              {"max_epochs", c.max_epochs},
              {"early_stop_epoch", c.early_stop_epoch},
              {"split", c.split},
              {"seed", c.seed},
              {"hidden", c.hidden},
              {"encoding", nn::to_string(c.encoding)},
              {"batch_norm", c.batch_norm},
              {"input_bn_epsilon", c.input_bn_epsilon},
              {"hidden_bn_epsilon", c.hidden_bn_epsilon},
              {"bn_momentum", c.bn_momentum}};
}

nn::TrainConfig train_config_from_json(const Json& j, const nn::TrainConfig& base) {
  const std::string where = "train";
  require_keys(j,
               {"learning_rate", "beta1", "beta2", "adam_epsilon", "batch_size", "max_epochs", "early_stop_epoch",
                "split", "seed", "hidden", "encoding", "batch_norm", "input_bn_epsilon", "hidden_bn_epsilon",
                "bn_momentum"},
               where);
  nn::TrainConfig c = base;
  if (auto v = read<double>(j, "learning_rate", where)) c.learning_rate = *v;
  if (auto v = read<double>(j, "beta1", where)) c.beta1 = *v;
  if (auto v = read<double>(j, "beta2", where)) c.beta2 = *v;
  if (auto v = read<double>(j, "adam_epsilon", where)) c.adam_epsilon = *v;
  if (auto v = read<int>(j, "batch_size", where)) c.batch_size = *v;
  if (auto v = read<int>(j, "max_epochs", where)) c.max_epochs = *v;
  if (auto v = read<int>(j, "early_stop_epoch", where)) c.early_stop_epoch = *v;
  if (auto v = read<double>(j, "split", where)) c.split = *v;
  if (auto v = read<std::uint64_t>(j, "seed", where)) c.seed = *v;
  if (j.contains("hidden")) {
    const Json& h = j.at("hidden");
    if (!h.is_array()) throw ValidationError(where + ": 'hidden' must be an array of widths");
    c.hidden.clear();
    for (const Json& w : h) {
      if (!w.is_number_integer()) throw ValidationError(where + ": 'hidden' must be an array of widths");
      c.hidden.push_back(w.get<int>());
    }
  }
  if (auto v = read<std::string>(j, "encoding", where)) c.encoding = nn::parse_encoding(*v);
  if (auto v = read<bool>(j, "batch_norm", where)) c.batch_norm = *v;
  if (auto v = read<double>(j, "input_bn_epsilon", where)) c.input_bn_epsilon = *v;
  if (auto v = read<double>(j, "hidden_bn_epsilon", where)) c.hidden_bn_epsilon = *v;
  if (auto v = read<double>(j, "bn_momentum", where)) c.bn_momentum = *v;
  c.validate();
  return c;
}

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("complex value must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json row_to_json(const CRow& v) { return vector_to_json(v.transpose()); }

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(row_to_json(m.row(r)));
  return out;
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("complex vector must be an array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

CRow row_from_json(const Json& j) { return vector_from_json(j).transpose(); }

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("complex matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const CVector row = vector_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != cols) throw ValidationError("complex matrix rows differ in length");
    m.row(r) = row.transpose();
  }
  return m;
}

}  // namespace irs
