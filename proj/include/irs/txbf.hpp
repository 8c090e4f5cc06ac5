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

namespace irs {

/// Numerator and denominator matrices of the beamforming quotient
/// (f^H A f + 1) / (f^H B f + 1); each is a scaled outer product of an
/// effective channel, so both are rank <= 1 Hermitian PSD.
struct RayleighQuotientPair {
  CMatrix A;
  CMatrix B;
};

RayleighQuotientPair build_rayleigh_pair(const ChannelSet& ch, const CVector& reflection,
                                         const SystemParams& params);
RayleighQuotientPair build_rayleigh_pair(const ChannelSet& ch, const PhaseVector& phase,
                                         const SystemParams& params);

double quotient_value(const RayleighQuotientPair& pair, const CVector& f);

struct PencilEigen {
  double lambda_max = 0.0;
  CVector e_max;  // unit norm, global phase fixed
  int sweeps = 0;
};

/// Largest eigenpair of (B + I/P_t)^{-1} (A + I/P_t) without forming the
/// product: with B + I/P_t = L L^H, the Hermitian matrix
/// L^{-1} (A + I/P_t) L^{-H} is diagonalized by Jacobi and its top vector u
/// is mapped back as L^{-H} u.
PencilEigen max_generalized_eigen(const RayleighQuotientPair& pair, double P_t);

/// f = sqrt(P_t) e_max: maximizes the quotient over ||f||^2 <= P_t and
/// always spends the full budget. Throws SolverError on eigen-solver
/// non-convergence.
Beamformer optimize_beamformer(const RayleighQuotientPair& pair, double P_t);

/// Rotates v so that its first largest-magnitude entry is real and >= 0.
void fix_global_phase(CVector& v);

}  // namespace irs
