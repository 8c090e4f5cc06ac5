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
#include <vector>

#include "irs/channel.hpp"
#include "irs/irsopt.hpp"
#include "irs/rates.hpp"

namespace irs {

struct AltOptOptions {
  int max_iter = 20;
  double epsilon = 1e-4;  // bits/s/Hz
  int randomization_count = 500;
  std::uint64_t seed = 0;
  sdp::SdpOptions sdp;
};

struct AltOptResult {
  Beamformer f;
  PhaseVector phase;
  /// False when the scheme uses zero reflection (no IRS); `phase` is then
  /// all-zero angles and carries no meaning.
  bool irs_active = true;
  RateReport rate;
  std::vector<double> trace;  // secrecy rate after each iteration
  int iterations = 0;
  bool converged = false;

  /// The reflection vector the rate was computed with.
  CVector reflection() const;
};

/// Alternating optimization from theta = 0: beamformer step, then phase step
/// with the keep-incumbent rule, until the secrecy margin improves by less
/// than epsilon or max_iter is reached. A last beamformer step for the final
/// phase closes the run. Throws SolverError tagged with the iteration index
/// when a relaxation fails.
AltOptResult alternate(const ChannelSet& ch, const SystemParams& params, const AltOptOptions& opts);

/// Beamformer step with zero reflection; the IRS contributes nothing.
AltOptResult baseline_no_irs(const ChannelSet& ch, const SystemParams& params);

/// Beamformer frozen from baseline_no_irs, then one phase step whose
/// incumbent is zero reflection.
AltOptResult baseline_ap_mev(const ChannelSet& ch, const SystemParams& params, const AltOptOptions& opts);

}  // namespace irs
