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

#include "irs/txbf.hpp"

#include <cmath>

#include "irs/error.hpp"

namespace irs {

RayleighQuotientPair build_rayleigh_pair(const ChannelSet& ch, const CVector& reflection,
                                         const SystemParams& params) {
  const CRow hu = effective_channel(ch.h_iu, reflection, ch.G, ch.h_au);
  const CRow he = effective_channel(ch.h_ie, reflection, ch.G, ch.h_ae);
  RayleighQuotientPair pair;
  pair.A = (hu.adjoint() * hu) / params.sigma_u_sq;
  pair.B = (he.adjoint() * he) / params.sigma_e_sq;
  return pair;
}

RayleighQuotientPair build_rayleigh_pair(const ChannelSet& ch, const PhaseVector& phase,
                                         const SystemParams& params) {
  return build_rayleigh_pair(ch, phase.phi(), params);
}

double quotient_value(const RayleighQuotientPair& pair, const CVector& f) {
  const double num = (f.adjoint() * pair.A * f)(0).real() + 1.0;
  const double den = (f.adjoint() * pair.B * f)(0).real() + 1.0;
  return num / den;
}

void fix_global_phase(CVector& v) {
  if (v.size() == 0) return;
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag == 0.0) return;
  v *= std::conj(v(best)) / best_mag;
  v(best) = best_mag;
}

PencilEigen max_generalized_eigen(const RayleighQuotientPair& pair, double P_t) {
  if (!(P_t > 0.0)) throw ValidationError("optimize_beamformer: P_t must be positive");
  const Eigen::Index m = pair.A.rows();
  if (pair.A.cols() != m || pair.B.rows() != m || pair.B.cols() != m) {
    throw ValidationError("optimize_beamformer: A and B must be square and equal-sized");
  }
  const CMatrix shift = CMatrix::Identity(m, m) / P_t;
  const CMatrix a_shifted = 0.5 * (pair.A + pair.A.adjoint()) + shift;
  const CMatrix b_shifted = 0.5 * (pair.B + pair.B.adjoint()) + shift;

  const Eigen::LLT<CMatrix> llt(b_shifted);
  if (llt.info() != Eigen::Success) throw SolverError("optimize_beamformer: B + I/P_t not positive definite");
  const CMatrix l = llt.matrixL();
  // K = L^{-1} A' L^{-H}
  const CMatrix left = l.triangularView<Eigen::Lower>().solve(a_shifted);
  const CMatrix k = l.triangularView<Eigen::Lower>().solve(left.adjoint()).adjoint();

  const HermitianEigen eig = jacobi_eigh(k);
  const CVector u = eig.vectors.col(m - 1);
  CVector e = l.adjoint().triangularView<Eigen::Upper>().solve(u);
  e.normalize();
  fix_global_phase(e);

  PencilEigen out;
  out.lambda_max = eig.values(m - 1);
  out.e_max = std::move(e);
  out.sweeps = eig.sweeps;
  return out;
}

Beamformer optimize_beamformer(const RayleighQuotientPair& pair, double P_t) {
  const PencilEigen top = max_generalized_eigen(pair, P_t);
  return Beamformer{std::sqrt(P_t) * top.e_max};
}

}  // namespace irs
