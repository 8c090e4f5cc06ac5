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

#include "irs/altopt.hpp"

#include <cmath>
#include <string>

#include "irs/error.hpp"
#include "irs/txbf.hpp"

namespace irs {

CVector AltOptResult::reflection() const {
  if (irs_active) return phase.phi();
  return CVector::Zero(phase.size());
}

namespace {

PhaseStepOptions phase_options(const AltOptOptions& opts) {
  PhaseStepOptions p;
  p.randomization_count = opts.randomization_count;
  p.sdp = opts.sdp;
  return p;
}

}  // namespace

AltOptResult alternate(const ChannelSet& ch, const SystemParams& params, const AltOptOptions& opts) {
  params.validate();
  ch.check(params);
  if (opts.max_iter < 1) throw ValidationError("alternate: max_iter must be >= 1");

  Rng rng(opts.seed);
  const PhaseStepOptions step_opts = phase_options(opts);

  AltOptResult res;
  res.phase = PhaseVector::zeros(params.N);
  CVector reflection = res.phase.phi();

  double last_margin = 0.0;
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    res.f = optimize_beamformer(build_rayleigh_pair(ch, reflection, params), params.P_t);
    if (iter == 1) last_margin = secrecy_rate(ch, res.f.f, reflection, params).margin();

    const FractionalQuadratic fq = build_fractional(ch, res.f.f, params);
    PhaseStepResult step;
    try {
      step = optimize_phase(fq, reflection, step_opts, rng);
    } catch (const SolverError& e) {
      throw SolverError("alternate: iteration " + std::to_string(iter) + ": " + e.what());
    }
    if (step.accepted) {
      res.phase = step.phase;
      reflection = res.phase.phi();
    }

    res.rate = secrecy_rate(ch, res.f.f, reflection, params);
    res.trace.push_back(res.rate.secrecy);
    res.iterations = iter;

    const double margin = res.rate.margin();
    const bool small_step = margin - last_margin < opts.epsilon;
    last_margin = margin;
    if (small_step) {
      res.converged = true;
      break;
    }
  }

  // Closing beamformer step for the final phase, so (f, phase) is the
  // f-step optimum that any later re-evaluation of this phase reproduces.
  res.f = optimize_beamformer(build_rayleigh_pair(ch, reflection, params), params.P_t);
  res.rate = secrecy_rate(ch, res.f.f, reflection, params);
  res.trace.back() = res.rate.secrecy;
  return res;
}

AltOptResult baseline_no_irs(const ChannelSet& ch, const SystemParams& params) {
  params.validate();
  ch.check(params);
  AltOptResult res;
  res.irs_active = false;
  res.phase = PhaseVector::zeros(params.N);
  const CVector off = CVector::Zero(params.N);
  res.f = optimize_beamformer(build_rayleigh_pair(ch, off, params), params.P_t);
  res.rate = secrecy_rate(ch, res.f.f, off, params);
  res.trace.push_back(res.rate.secrecy);
  res.iterations = 1;
  res.converged = true;
  return res;
}

AltOptResult baseline_ap_mev(const ChannelSet& ch, const SystemParams& params, const AltOptOptions& opts) {
  AltOptResult res = baseline_no_irs(ch, params);
  Rng rng(opts.seed);
  const FractionalQuadratic fq = build_fractional(ch, res.f.f, params);
  const PhaseStepResult step = optimize_phase(fq, CVector::Zero(params.N), phase_options(opts), rng);
  if (step.accepted) {
    res.irs_active = true;
    res.phase = step.phase;
  }
  res.rate = secrecy_rate(ch, res.f.f, res.reflection(), params);
  res.trace.assign(1, res.rate.secrecy);
  return res;
}

}  // namespace irs
