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

#include "irs/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irs/error.hpp"

namespace irs {

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(theta, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

PhaseVector PhaseVector::from_angles(const RVector& theta) {
  if (!theta.allFinite()) throw ValidationError("PhaseVector: non-finite angle");
  PhaseVector p;
  p.theta_.resize(theta.size());
  p.phi_.resize(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    p.theta_(i) = wrap_angle(theta(i));
    p.phi_(i) = {std::cos(p.theta_(i)), std::sin(p.theta_(i))};
  }
  return p;
}

PhaseVector PhaseVector::zeros(int n) { return from_angles(RVector::Zero(n)); }

PhaseVector PhaseVector::from_coefficients(const CVector& coeffs) {
  RVector theta(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    theta(i) = coeffs(i) == cplx(0.0) ? 0.0 : std::arg(coeffs(i));
  }
  return from_angles(theta);
}

namespace {

void require_shapes(const CRow& h_irs, const CVector& reflection, const CMatrix& G,
                    const CRow& h_direct) {
  if (h_irs.size() != G.rows() || reflection.size() != G.rows() || h_direct.size() != G.cols()) {
    throw ValidationError("effective_channel: dimension mismatch");
  }
}

}  // namespace

CRow effective_channel(const CRow& h_irs, const CVector& reflection, const CMatrix& G,
                       const CRow& h_direct) {
  require_shapes(h_irs, reflection, G, h_direct);
  const CMatrix phi = reflection.asDiagonal();
  return h_irs * phi * G + h_direct;
}

CRow effective_channel(const CRow& h_irs, const PhaseVector& phase, const CMatrix& G,
                       const CRow& h_direct) {
  return effective_channel(h_irs, phase.phi(), G, h_direct);
}

CRow effective_channel_vectorized(const CRow& h_irs, const CVector& reflection,
                                  const CMatrix& G, const CRow& h_direct) {
  require_shapes(h_irs, reflection, G, h_direct);
  const CMatrix k = h_irs.transpose().asDiagonal() * G;
  return reflection.transpose() * k + h_direct;
}

namespace {

struct Snrs {
  double user;
  double eve;
};

Snrs snrs(const ChannelSet& ch, const CVector& f, const CVector& reflection,
          const SystemParams& params) {
  if (f.size() != ch.G.cols()) throw ValidationError("secrecy_rate: beamformer length != M");
  const CRow hu = effective_channel(ch.h_iu, reflection, ch.G, ch.h_au);
  const CRow he = effective_channel(ch.h_ie, reflection, ch.G, ch.h_ae);
  const cplx gu = (hu * f)(0);
  const cplx ge = (he * f)(0);
  return {std::norm(gu) / params.sigma_u_sq, std::norm(ge) / params.sigma_e_sq};
}

}  // namespace

RateReport secrecy_rate(const ChannelSet& ch, const CVector& f, const CVector& reflection,
                        const SystemParams& params) {
  const Snrs s = snrs(ch, f, reflection, params);
  RateReport r;
  r.user = std::log2(1.0 + s.user);
  r.eve = std::log2(1.0 + s.eve);
  r.secrecy = std::max(0.0, r.user - r.eve);
  return r;
}

RateReport secrecy_rate(const ChannelSet& ch, const Beamformer& f, const PhaseVector& phase,
                        const SystemParams& params) {
  return secrecy_rate(ch, f.f, phase.phi(), params);
}

double snr_ratio(const ChannelSet& ch, const CVector& f, const CVector& reflection,
                 const SystemParams& params) {
  const Snrs s = snrs(ch, f, reflection, params);
  return (1.0 + s.user) / (1.0 + s.eve);
}

}  // namespace irs
