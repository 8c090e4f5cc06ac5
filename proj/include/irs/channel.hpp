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

#include "irs/linalg.hpp"
#include "irs/rng.hpp"

namespace irs {

double db_to_linear(double db);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

struct Geometry {
  double d_eu = 0.0;
  double d_iu = 0.0;
  double d_ai = 0.0;
};

/// AP, eavesdropper and user on one line; the IRS sits d_ie off the
/// eavesdropper. Throws ValidationError for d_au <= d_ae, d_ae <= 0, d_ie <= 0.
Geometry derive_geometry(double d_ae, double d_au, double d_ie);

/// eta0 * (d0 / d)^psi. Throws ValidationError for d <= 0.
double path_loss(double d, double psi, double eta0, double d0);

/// System dimensions, powers, geometry and fading constants. All powers are
/// stored linear (watts); dB accessors are provided for reporting.
struct SystemParams {
  int M = 4;
  int N = 25;
  double P_t = 0.1;
  double sigma_u_sq = 1e-11;
  double sigma_e_sq = 1e-11;

  double d_ae = 145.0;
  double d_au = 150.0;
  double d_ie = 5.0;
  double d_eu = 5.0;
  double d_iu = 0.0;
  double d_ai = 0.0;

  double eta0 = 1e-3;
  double d0 = 1.0;
  double psi_au = 3.0;
  double psi_ae = 3.0;
  double psi_ai = 2.2;
  double psi_iu = 3.0;
  double psi_ie = 3.0;

  double K_au = 1.0;
  double K_ae = 1.0;
  double K_ai = 1.0;
  double K_iu = 1.0;
  double K_ie = 1.0;

  double r = 0.95;

  /// M=4, N=25, P_t=20 dBm, noise -80 dBm, d_ae=145 m, d_au=150 m, d_ie=5 m.
  static SystemParams defaults();

  /// Sets the three free distances and recomputes the derived ones.
  void set_geometry(double ae, double au, double ie);

  double pt_dbm() const { return watts_to_dbm(P_t); }
  void set_pt_dbm(double dbm) { P_t = dbm_to_watts(dbm); }

  double loss_au() const { return path_loss(d_au, psi_au, eta0, d0); }
  double loss_ae() const { return path_loss(d_ae, psi_ae, eta0, d0); }
  double loss_ai() const { return path_loss(d_ai, psi_ai, eta0, d0); }
  double loss_iu() const { return path_loss(d_iu, psi_iu, eta0, d0); }
  double loss_ie() const { return path_loss(d_ie, psi_ie, eta0, d0); }

  /// Throws ValidationError on any violated invariant.
  void validate() const;
};

struct ChannelSet {
  CMatrix G;   // N x M, AP -> IRS
  CRow h_au;   // 1 x M
  CRow h_ae;   // 1 x M
  CRow h_iu;   // 1 x N
  CRow h_ie;   // 1 x N
  std::uint64_t seed = 0;

  /// Dimensions against params and finiteness. Throws ValidationError.
  void check(const SystemParams& params) const;
};

/// One realization of the five channels.
///
/// The AP-side pair (h_au, h_ae) shares a 2x2 correlation [[1, r], [r, 1]]
/// in its scattered part, applied per antenna by Cholesky coloring. Every
/// link is Rician: sqrt(K/(1+K)) LOS + sqrt(1/(1+K)) NLOS with unit-modulus
/// LOS entries sharing one random phase per link, then scaled by the square
/// root of the link's path loss.
ChannelSet sample_channels(const SystemParams& params, Rng& rng);

}  // namespace irs
