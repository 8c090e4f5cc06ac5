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

#include "irs/channel.hpp"
#include "irs/linalg.hpp"

namespace irs {

/// IRS reflection coefficients phi_n = exp(j theta_n), theta_n in [0, 2*pi).
class PhaseVector {
 public:
  PhaseVector() = default;

  /// Angles are wrapped into [0, 2*pi). Throws ValidationError on non-finite input.
  static PhaseVector from_angles(const RVector& theta);
  static PhaseVector zeros(int n);
  /// Projects each coefficient onto the unit circle (zero maps to 1).
  static PhaseVector from_coefficients(const CVector& coeffs);

  const RVector& theta() const { return theta_; }
  const CVector& phi() const { return phi_; }
  int size() const { return static_cast<int>(theta_.size()); }

 private:
  RVector theta_;
  CVector phi_;
};

double wrap_angle(double theta);

struct Beamformer {
  CVector f;  // M x 1

  double power() const { return f.squaredNorm(); }
};

/// Rates in bits/s/Hz; secrecy = max(0, user - eve).
struct RateReport {
  double user = 0.0;
  double eve = 0.0;
  double secrecy = 0.0;

  /// user - eve without clamping.
  double margin() const { return user - eve; }
};

/// h_irs * diag(reflection) * G + h_direct. `reflection` may be any complex
/// vector (zero reflection models an absent IRS).
CRow effective_channel(const CRow& h_irs, const CVector& reflection, const CMatrix& G,
                       const CRow& h_direct);
CRow effective_channel(const CRow& h_irs, const PhaseVector& phase, const CMatrix& G,
                       const CRow& h_direct);

/// The same quantity as reflection^T * (diag(h_irs) * G) + h_direct.
CRow effective_channel_vectorized(const CRow& h_irs, const CVector& reflection,
                                  const CMatrix& G, const CRow& h_direct);

RateReport secrecy_rate(const ChannelSet& ch, const CVector& f, const CVector& reflection,
                        const SystemParams& params);
RateReport secrecy_rate(const ChannelSet& ch, const Beamformer& f, const PhaseVector& phase,
                        const SystemParams& params);

/// (1 + SNR_u) / (1 + SNR_e); log2 of it is the unclamped secrecy margin.
double snr_ratio(const ChannelSet& ch, const CVector& f, const CVector& reflection,
                 const SystemParams& params);

}  // namespace irs
