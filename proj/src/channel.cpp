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

#include "irs/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irs/error.hpp"

namespace irs {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

Geometry derive_geometry(double d_ae, double d_au, double d_ie) {
  if (!(d_ae > 0.0)) throw ValidationError("geometry: d_ae must be positive");
  if (!(d_ie > 0.0)) throw ValidationError("geometry: d_ie must be positive");
  if (!(d_au > d_ae)) {
    throw ValidationError("geometry: d_au must exceed d_ae (eavesdropper-user gap must be positive)");
  }
  Geometry g;
  g.d_eu = d_au - d_ae;
  g.d_iu = std::sqrt(d_ie * d_ie + g.d_eu * g.d_eu);
  g.d_ai = std::sqrt(d_ae * d_ae + d_ie * d_ie);
  return g;
}

double path_loss(double d, double psi, double eta0, double d0) {
  if (!(d > 0.0)) throw ValidationError("path_loss: distance must be positive");
  return eta0 * std::pow(d0 / d, psi);
}

SystemParams SystemParams::defaults() {
  SystemParams p;
  p.set_pt_dbm(20.0);
  p.sigma_u_sq = dbm_to_watts(-80.0);
  p.sigma_e_sq = dbm_to_watts(-80.0);
  p.eta0 = db_to_linear(-30.0);
  p.set_geometry(145.0, 150.0, 5.0);
  return p;
}

void SystemParams::set_geometry(double ae, double au, double ie) {
  const Geometry g = derive_geometry(ae, au, ie);
  d_ae = ae;
  d_au = au;
  d_ie = ie;
  d_eu = g.d_eu;
  d_iu = g.d_iu;
  d_ai = g.d_ai;
}

void SystemParams::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("SystemParams: " + what); };
  if (M < 1) fail("M must be >= 1");
  if (N < 1) fail("N must be >= 1");
  if (!(P_t > 0.0) || !std::isfinite(P_t)) fail("P_t must be positive");
  if (!(sigma_u_sq > 0.0) || !(sigma_e_sq > 0.0)) fail("noise variances must be positive");
  if (!(eta0 > 0.0) || !(d0 > 0.0)) fail("eta0 and d0 must be positive");
  if (!(r >= 0.0 && r < 1.0)) fail("correlation r must lie in [0, 1)");
  for (double k : {K_au, K_ae, K_ai, K_iu, K_ie}) {
    if (!(k >= 0.0) || !std::isfinite(k)) fail("Rician factors must be nonnegative");
  }
  const Geometry g = derive_geometry(d_ae, d_au, d_ie);
  if (g.d_eu != d_eu || g.d_iu != d_iu || g.d_ai != d_ai) {
    fail("derived distances do not match d_ae, d_au, d_ie");
  }
}

void ChannelSet::check(const SystemParams& params) const {
  const auto m = params.M;
  const auto n = params.N;
  if (G.rows() != n || G.cols() != m) throw ValidationError("ChannelSet: G must be N x M");
  if (h_au.size() != m || h_ae.size() != m) throw ValidationError("ChannelSet: h_au/h_ae must be 1 x M");
  if (h_iu.size() != n || h_ie.size() != n) throw ValidationError("ChannelSet: h_iu/h_ie must be 1 x N");
  const bool finite = G.allFinite() && h_au.allFinite() && h_ae.allFinite() &&
                      h_iu.allFinite() && h_ie.allFinite();
  if (!finite) throw ValidationError("ChannelSet: non-finite entry");
}

namespace {

cplx random_phase(Rng& rng) {
  return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
}

struct RicianWeights {
  double los;
  double nlos;
};

RicianWeights rician(double k) { return {std::sqrt(k / (1.0 + k)), std::sqrt(1.0 / (1.0 + k))}; }

}  // namespace

ChannelSet sample_channels(const SystemParams& params, Rng& rng) {
  params.validate();
  const int m = params.M;
  const int n = params.N;

  ChannelSet ch;
  ch.seed = rng.seed();
  ch.h_au.resize(m);
  ch.h_ae.resize(m);
  ch.G.resize(n, m);
  ch.h_iu.resize(n);
  ch.h_ie.resize(n);

  // AP-side pair: L = chol([[1, r], [r, 1]]).
  const double l21 = params.r;
  const double l22 = std::sqrt(1.0 - params.r * params.r);
  const cplx los_au = random_phase(rng);
  const cplx los_ae = random_phase(rng);
  const RicianWeights w_au = rician(params.K_au);
  const RicianWeights w_ae = rician(params.K_ae);
  const double a_au = std::sqrt(params.loss_au());
  const double a_ae = std::sqrt(params.loss_ae());
  for (int i = 0; i < m; ++i) {
    const cplx z1 = rng.complex_normal();
    const cplx z2 = rng.complex_normal();
    const cplx nlos_u = z1;
    const cplx nlos_e = l21 * z1 + l22 * z2;
    ch.h_au(i) = a_au * (w_au.los * los_au + w_au.nlos * nlos_u);
    ch.h_ae(i) = a_ae * (w_ae.los * los_ae + w_ae.nlos * nlos_e);
  }

  const cplx los_ai = random_phase(rng);
  const RicianWeights w_ai = rician(params.K_ai);
  const double a_ai = std::sqrt(params.loss_ai());
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      ch.G(i, j) = a_ai * (w_ai.los * los_ai + w_ai.nlos * rng.complex_normal());
    }
  }

  const cplx los_iu = random_phase(rng);
  const RicianWeights w_iu = rician(params.K_iu);
  const double a_iu = std::sqrt(params.loss_iu());
  for (int i = 0; i < n; ++i) ch.h_iu(i) = a_iu * (w_iu.los * los_iu + w_iu.nlos * rng.complex_normal());

  const cplx los_ie = random_phase(rng);
  const RicianWeights w_ie = rician(params.K_ie);
  const double a_ie = std::sqrt(params.loss_ie());
  for (int i = 0; i < n; ++i) ch.h_ie(i) = a_ie * (w_ie.los * los_ie + w_ie.nlos * rng.complex_normal());

  return ch;
}

}  // namespace irs
