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

#include "irs/irsopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "irs/error.hpp"
#include "irs/kernels.hpp"

namespace irs {

namespace {

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

// Gamma for one receiver; `h_direct` is the 1 x M direct link.
CMatrix build_gamma(const CMatrix& k, const CMatrix& f_outer, const CRow& h_direct, double sigma_sq) {
  const Eigen::Index n = k.rows();
  CMatrix gamma = CMatrix::Zero(n + 1, n + 1);
  const CMatrix k_conj = k.conjugate();
  gamma.topLeftCorner(n, n) = k_conj * f_outer * k.transpose();
  gamma.topRightCorner(n, 1) = k_conj * f_outer * h_direct.transpose();
  gamma.bottomLeftCorner(1, n) = h_direct.conjugate() * f_outer * k.transpose();
  return hermitian_part(gamma / sigma_sq);
}

double quadratic(const CMatrix& gamma, const CVector& v) { return (v.adjoint() * gamma * v)(0).real(); }

}  // namespace

double FractionalQuadratic::objective(const CVector& reflection) const {
  const Eigen::Index n = K_u.rows();
  if (reflection.size() != n) throw ValidationError("FractionalQuadratic: reflection length != N");
  CVector v(n + 1);
  v.head(n) = reflection;
  v(n) = 1.0;
  return (quadratic(gamma_u, v) + nu_u + 1.0) / (quadratic(gamma_e, v) + nu_e + 1.0);
}

double FractionalQuadratic::lifted_objective(const CMatrix& v) const {
  const double num = (gamma_u.cwiseProduct(v.transpose())).sum().real() + nu_u + 1.0;
  const double den = (gamma_e.cwiseProduct(v.transpose())).sum().real() + nu_e + 1.0;
  return num / den;
}

FractionalQuadratic build_fractional(const ChannelSet& ch, const CVector& f, const SystemParams& params) {
  ch.check(params);
  if (f.size() != params.M) throw ValidationError("build_fractional: beamformer length != M");
  FractionalQuadratic fq;
  fq.K_u = ch.h_iu.transpose().asDiagonal() * ch.G;
  fq.K_e = ch.h_ie.transpose().asDiagonal() * ch.G;
  fq.F = f.conjugate() * f.transpose();
  fq.gamma_u = build_gamma(fq.K_u, fq.F, ch.h_au, params.sigma_u_sq);
  fq.gamma_e = build_gamma(fq.K_e, fq.F, ch.h_ae, params.sigma_e_sq);
  fq.nu_u = (ch.h_au.conjugate() * fq.F * ch.h_au.transpose())(0).real() / params.sigma_u_sq;
  fq.nu_e = (ch.h_ae.conjugate() * fq.F * ch.h_ae.transpose())(0).real() / params.sigma_e_sq;
  return fq;
}

sdp::SdpProblem relaxation_problem(const FractionalQuadratic& fq) {
  const Eigen::Index nc = fq.gamma_u.rows();  // N + 1
  const Eigen::Index n = 2 * nc + 1;
  const Eigen::Index mu = 2 * nc;

  sdp::SdpProblem p;
  p.C = RMatrix::Zero(n, n);
  p.C.topLeftCorner(2 * nc, 2 * nc) = 0.5 * sdp::embed_hermitian(fq.gamma_u);
  p.C(mu, mu) = fq.nu_u + 1.0;

  // tr(Gamma_E Z) + mu (nu_E + 1) = 1
  RMatrix cc = RMatrix::Zero(n, n);
  cc.topLeftCorner(2 * nc, 2 * nc) = 0.5 * sdp::embed_hermitian(fq.gamma_e);
  cc(mu, mu) = fq.nu_e + 1.0;
  p.A.push_back(std::move(cc));

  // Z_ii = mu for every diagonal entry of the lifted variable.
  for (Eigen::Index i = 0; i < nc; ++i) {
    RMatrix a = RMatrix::Zero(n, n);
    a(i, i) = 0.5;
    a(i + nc, i + nc) = 0.5;
    a(mu, mu) = -1.0;
    p.A.push_back(std::move(a));
  }
  p.b = RVector::Zero(static_cast<Eigen::Index>(p.A.size()));
  p.b(0) = 1.0;
  return p;
}

LiftedSolution solve_relaxation(const FractionalQuadratic& fq, const sdp::SdpOptions& opts) {
  const sdp::SdpProblem problem = relaxation_problem(fq);
  sdp::SdpSolution s = sdp::solve(problem, opts);
  if (s.status != sdp::SdpStatus::Optimal) {
    throw SolverError("solve_relaxation: SDP status " + sdp::to_string(s.status) + " after " +
                      std::to_string(s.iterations) + " iterations (gap " + std::to_string(s.gap) + ")");
  }
  const Eigen::Index nc = fq.gamma_u.rows();
  const double mu = s.X(2 * nc, 2 * nc);
  if (!(mu > 0.0)) throw SolverError("solve_relaxation: nonpositive Charnes-Cooper scale");

  LiftedSolution out;
  out.mu = mu;
  out.V = sdp::extract_hermitian(s.X.topLeftCorner(2 * nc, 2 * nc)) / mu;
  out.objective = s.primal_obj;
  out.sdp = std::move(s);
  return out;
}

std::vector<CVector> randomization_candidates(const CMatrix& v, int count, Rng& rng) {
  if (count < 1) throw ValidationError("gaussian_randomization: count must be >= 1");
  const Eigen::Index nc = v.rows();
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(v));
  // Eigenvalues at rounding level are zeroed so a rank-one V yields exactly
  // its own direction instead of sqrt(eps)-sized noise.
  const double floor = es.eigenvalues().cwiseAbs().maxCoeff() * static_cast<double>(nc) *
                       std::numeric_limits<double>::epsilon();
  const RVector root = es.eigenvalues().unaryExpr([floor](double l) { return l > floor ? std::sqrt(l) : 0.0; });
  const CMatrix factor = es.eigenvectors() * root.asDiagonal();

  std::vector<CVector> out;
  out.reserve(static_cast<std::size_t>(count));
  CVector r(nc);
  for (int c = 0; c < count; ++c) {
    for (Eigen::Index i = 0; i < nc; ++i) r(i) = rng.complex_normal();
    const CVector xi = factor * r;
    const cplx last = xi(nc - 1);
    const cplx ref = std::abs(last) > 0.0 ? last / std::abs(last) : cplx(1.0);
    CVector phi(nc - 1);
    for (Eigen::Index i = 0; i + 1 < nc; ++i) {
      const cplx e = xi(i) * std::conj(ref);
      const double mag = std::abs(e);
      phi(i) = mag > 0.0 ? e / mag : cplx(1.0);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

PhaseVector gaussian_randomization(const LiftedSolution& sol, const FractionalQuadratic& fq, int count,
                                   Rng& rng) {
  const std::vector<CVector> candidates = randomization_candidates(sol.V, count, rng);
  std::vector<double> values(candidates.size());
  kernels::evaluate_all(candidates.size(), values,
                        [&](std::size_t i) { return fq.objective(candidates[i]); });
  const std::size_t best = kernels::first_argmax(values);
  return PhaseVector::from_coefficients(candidates[best]);
}

PhaseStepResult optimize_phase(const FractionalQuadratic& fq, const CVector& incumbent,
                               const PhaseStepOptions& opts, Rng& rng) {
  const LiftedSolution sol = solve_relaxation(fq, opts.sdp);
  const PhaseVector candidate = gaussian_randomization(sol, fq, opts.randomization_count, rng);
  const double incumbent_value = fq.objective(incumbent);
  const double candidate_value = fq.objective(candidate.phi());

  PhaseStepResult out;
  out.relaxation_bound = sol.objective;
  if (candidate_value > incumbent_value) {
    out.reflection = candidate.phi();
    out.phase = candidate;
    out.accepted = true;
    out.objective = candidate_value;
  } else {
    out.reflection = incumbent;
    out.phase = PhaseVector::from_coefficients(incumbent);
    out.objective = incumbent_value;
  }
  return out;
}

}  // namespace irs
