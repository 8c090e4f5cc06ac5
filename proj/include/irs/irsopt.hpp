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
#include "irs/rates.hpp"
#include "irs/rng.hpp"
#include "irs/sdp.hpp"

namespace irs {

/// Phase-design objective for a fixed beamformer f, written over the lifted
/// vector v = [phi; 1]:
///
///   (v^H Gamma_U v + nu_U + 1) / (v^H Gamma_E v + nu_E + 1)
///
/// With K = diag(h_irs) G and F = conj(f) f^T, the top-left block of Gamma
/// is conj(K) F K^T / sigma^2, the off-diagonal blocks couple phi to the
/// direct link and the corner is zero; nu carries the direct-link SNR.
struct FractionalQuadratic {
  CMatrix gamma_u;
  CMatrix gamma_e;
  double nu_u = 0.0;
  double nu_e = 0.0;
  CMatrix K_u;  // N x M
  CMatrix K_e;  // N x M
  CMatrix F;    // M x M

  int elements() const { return static_cast<int>(K_u.rows()); }

  /// Objective at an arbitrary reflection vector (quadratic-form route).
  double objective(const CVector& reflection) const;

  /// Objective of the relaxed problem at a lifted matrix V.
  double lifted_objective(const CMatrix& v) const;
};

FractionalQuadratic build_fractional(const ChannelSet& ch, const CVector& f,
                                     const SystemParams& params);

struct LiftedSolution {
  CMatrix V;          // (N+1) x (N+1), unit diagonal
  double mu = 0.0;
  double objective = 0.0;  // relaxation optimum, an upper bound on the phase objective
  sdp::SdpSolution sdp;
};

/// The Charnes-Cooper form of the relaxation as one real block-diagonal SDP:
/// X = diag(embed(Z), mu) with Z = mu V.
sdp::SdpProblem relaxation_problem(const FractionalQuadratic& fq);

/// Solves the relaxation and maps back V = Z / mu. Throws SolverError when
/// the SDP does not reach Optimal.
LiftedSolution solve_relaxation(const FractionalQuadratic& fq, const sdp::SdpOptions& opts = {});

/// Draws `count` vectors xi ~ CN(0, V), projects xi_n / xi_{N+1} onto the
/// unit circle, scores every candidate and returns the best one (lowest
/// index on ties). Candidates are drawn serially and scored in parallel.
PhaseVector gaussian_randomization(const LiftedSolution& sol, const FractionalQuadratic& fq,
                                   int count, Rng& rng);

/// Candidate generation only; exposed for the randomization benchmarks and
/// feasibility tests.
std::vector<CVector> randomization_candidates(const CMatrix& v, int count, Rng& rng);

struct PhaseStepResult {
  CVector reflection;  // either the incumbent or the accepted candidate
  PhaseVector phase;   // valid when accepted or when the incumbent is unit-modulus
  bool accepted = false;
  double objective = 0.0;
  double relaxation_bound = 0.0;
};

struct PhaseStepOptions {
  int randomization_count = 500;
  sdp::SdpOptions sdp;
};

/// One phase update for fixed f: relaxation + randomization, keeping the
/// incumbent unless the best candidate strictly improves on it.
PhaseStepResult optimize_phase(const FractionalQuadratic& fq, const CVector& incumbent,
                               const PhaseStepOptions& opts, Rng& rng);

}  // namespace irs
