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

// JSON mapping of the configuration types and complex arrays. Readers are
// strict: unknown keys and wrong types raise ValidationError.

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "irs/channel.hpp"
#include "irs/linalg.hpp"
#include "irs/neural.hpp"

namespace irs {

using Json = nlohmann::json;

/// Throws ValidationError naming `where` if `j` is not an object or has a
/// key outside `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

/// Linear powers, the three free distances and the derived ones.
Json params_to_json(const SystemParams& p);

/// Starts from `base` and overrides the keys present. Powers may be given
/// linear (P_t, sigma_u_sq, sigma_e_sq, eta0) or logarithmic (P_t_dbm,
/// sigma_u_sq_dbm, sigma_e_sq_dbm, eta0_db), not both. Derived distances,
/// when present, must agree with the geometry. The result is validated.
SystemParams params_from_json(const Json& j, const SystemParams& base = SystemParams::defaults());

Json train_config_to_json(const nn::TrainConfig& cfg);
nn::TrainConfig train_config_from_json(const Json& j, const nn::TrainConfig& base = {});

/// Complex numbers as [re, im] pairs; matrices as arrays of rows.
Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);
Json vector_to_json(const CVector& v);
Json row_to_json(const CRow& v);
Json matrix_to_json(const CMatrix& m);
CVector vector_from_json(const Json& j);
CRow row_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);

}  // namespace irs
