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

#include "irs/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "irs/error.hpp"

namespace irs::sdp {

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal:
      return "optimal";
    case SdpStatus::MaxIter:
      return "max-iter";
    case SdpStatus::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

void SdpProblem::validate() const {
  const auto n = C.rows();
  if (n < 1 || C.cols() != n) throw ValidationError("SdpProblem: C must be square and nonempty");
  if (A.empty()) throw ValidationError("SdpProblem: at least one constraint required");
  if (b.size() != static_cast<Eigen::Index>(A.size())) {
    throw ValidationError("SdpProblem: b length must equal the constraint count");
  }
  auto symmetric = [](const RMatrix& m) { return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12; };
  if (!symmetric(C)) throw ValidationError("SdpProblem: C is not symmetric");
  for (const RMatrix& a : A) {
    if (a.rows() != n || a.cols() != n) throw ValidationError("SdpProblem: constraint shape mismatch");
    if (!symmetric(a)) throw ValidationError("SdpProblem: constraint matrix is not symmetric");
  }
  if (!C.allFinite() || !b.allFinite()) throw ValidationError("SdpProblem: non-finite data");
}

RMatrix embed_hermitian(const CMatrix& h) {
  if (!is_hermitian(h, 1e-12)) throw ValidationError("embed_hermitian: input is not Hermitian");
  const auto n = h.rows();
  RMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

CMatrix extract_hermitian(const RMatrix& x) {
  const auto n = x.rows() / 2;
  if (x.cols() != x.rows() || 2 * n != x.rows()) {
    throw ValidationError("extract_hermitian: expected an even square matrix");
  }
  const RMatrix re = 0.5 * (x.topLeftCorner(n, n) + x.bottomRightCorner(n, n));
  const RMatrix im = 0.5 * (x.bottomLeftCorner(n, n) - x.topRightCorner(n, n));
  CMatrix h(n, n);
  h.real() = 0.5 * (re + re.transpose());
  h.imag() = 0.5 * (im - im.transpose());
  return h;
}

void write_triplets(const SdpProblem& p, std::ostream& os) {
  os.precision(17);
  os << p.size() << ' ' << p.constraints() << '\n';
  for (Eigen::Index i = 0; i < p.b.size(); ++i) os << (i ? " " : "") << p.b(i);
  os << '\n';
  auto dump = [&](int index, const RMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = r; c < m.cols(); ++c) {
        if (m(r, c) != 0.0) os << index << ' ' << r + 1 << ' ' << c + 1 << ' ' << m(r, c) << '\n';
      }
    }
  };
  dump(0, p.C);
  for (std::size_t i = 0; i < p.A.size(); ++i) dump(static_cast<int>(i + 1), p.A[i]);
}

namespace {

struct Entry {
  Eigen::Index row;
  Eigen::Index col;
  double value;
};

// A constraint matrix kept both dense and as a full (both-triangle) entry
// list; the list is used whenever it is shorter than one row.
struct Operator {
  const RMatrix* dense = nullptr;
  std::vector<Entry> entries;
  bool sparse = false;

  double dot(const RMatrix& x) const {
    if (!sparse) return dense->cwiseProduct(x).sum();
    double s = 0.0;
    for (const Entry& e : entries) s += e.value * x(e.row, e.col);
    return s;
  }

  // W * A * W
  RMatrix sandwich(const RMatrix& w) const {
    if (!sparse) return w * (*dense) * w;
    RMatrix out = RMatrix::Zero(w.rows(), w.cols());
    for (const Entry& e : entries) out.noalias() += e.value * w.col(e.row) * w.row(e.col);
    return out;
  }
};

Operator make_operator(const RMatrix& a) {
  Operator op;
  op.dense = &a;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (a(r, c) != 0.0) op.entries.push_back({r, c, a(r, c)});
    }
  }
  op.sparse = static_cast<Eigen::Index>(op.entries.size()) <= a.rows();
  return op;
}

RMatrix symmetrize(const RMatrix& m) { return 0.5 * (m + m.transpose()); }

// Largest step alpha with X + alpha * dX PSD (infinity if unbounded), given
// the lower Cholesky factor of X.
double max_step(const RMatrix& chol_lower, const RMatrix& dx) {
  const auto l = chol_lower.triangularView<Eigen::Lower>();
  const RMatrix left = l.solve(dx);
  const RMatrix scaled = symmetrize(l.solve(left.transpose()));
  const Eigen::SelfAdjointEigenSolver<RMatrix> es(scaled, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

}  // namespace

SdpSolution solve(const SdpProblem& p, const SdpOptions& opts) {
  p.validate();
  const Eigen::Index n = p.C.rows();
  const int k = p.constraints();
  const double dn = static_cast<double>(n);

  std::vector<Operator> ops;
  ops.reserve(static_cast<std::size_t>(k));
  for (const RMatrix& a : p.A) ops.push_back(make_operator(a));

  // Internally: minimize Cmin.X, dual  sum y_i A_i + S = Cmin.
  const RMatrix cmin = -p.C;

  auto apply_a = [&](const RMatrix& x) {
    RVector out(k);
    for (int i = 0; i < k; ++i) out(i) = ops[static_cast<std::size_t>(i)].dot(x);
    return out;
  };
  auto apply_at = [&](const RVector& y) {
    RMatrix out = RMatrix::Zero(n, n);
    for (int i = 0; i < k; ++i) out.noalias() += y(i) * p.A[static_cast<std::size_t>(i)];
    return out;
  };

  double max_ratio = 0.0;
  double max_norm = p.C.norm();
  for (int i = 0; i < k; ++i) {
    const double an = p.A[static_cast<std::size_t>(i)].norm();
    max_ratio = std::max(max_ratio, (1.0 + std::abs(p.b(i))) / (1.0 + an));
    max_norm = std::max(max_norm, an);
  }
  const double xi = std::max({10.0, std::sqrt(dn), dn * max_ratio});
  const double eta = std::max({10.0, std::sqrt(dn), max_norm});

  RMatrix x = xi * RMatrix::Identity(n, n);
  RMatrix s = eta * RMatrix::Identity(n, n);
  RVector y = RVector::Zero(k);

  const double b_scale = 1.0 + p.b.cwiseAbs().maxCoeff();
  const double c_scale = 1.0 + p.C.cwiseAbs().maxCoeff();

  SdpSolution sol;
  sol.status = SdpStatus::MaxIter;

  for (int iter = 0; iter <= opts.max_iter; ++iter) {
    const RVector rp = p.b - apply_a(x);
    const RMatrix rd = cmin - s - apply_at(y);
    const double mu = x.cwiseProduct(s).sum() / dn;

    SdpIterate rec;
    rec.primal_obj = p.C.cwiseProduct(x).sum();
    rec.dual_obj = -p.b.dot(y);
    rec.mu = mu;
    rec.primal_residual = rp.cwiseAbs().maxCoeff();
    rec.dual_residual = rd.cwiseAbs().maxCoeff();

    sol.iterations = iter;
    const double gap = rec.dual_obj - rec.primal_obj;
    const bool converged = std::abs(gap) < opts.gap_tol * (1.0 + std::abs(rec.primal_obj)) &&
                           rec.primal_residual < opts.residual_tol &&
                           rec.dual_residual < opts.residual_tol * c_scale &&
                           x.cwiseProduct(s).sum() < opts.gap_tol * (1.0 + std::abs(rec.primal_obj));
    if (converged) {
      sol.history.push_back(rec);
      sol.status = SdpStatus::Optimal;
      break;
    }
    if (iter == opts.max_iter) {
      sol.history.push_back(rec);
      break;
    }
    if (!x.allFinite() || !s.allFinite() || x.norm() > 1e12 * xi * b_scale ||
        y.norm() > 1e12 * eta * c_scale) {
      sol.history.push_back(rec);
      sol.status = SdpStatus::Infeasible;
      break;
    }

    // Nesterov-Todd scaling: X = L L^T, L^T S L = Q diag(lambda) Q^T,
    // G = L Q diag(lambda)^{-1/4}, W = G G^T, so that W S W = X and both X
    // and S map to D = diag(lambda)^{1/2} in the scaled space.
    const Eigen::LLT<RMatrix> llt_x(x);
    const Eigen::LLT<RMatrix> llt_s(s);
    if (llt_x.info() != Eigen::Success || llt_s.info() != Eigen::Success) {
      sol.history.push_back(rec);
      break;
    }
    const RMatrix lx = llt_x.matrixL();
    const RMatrix ls = llt_s.matrixL();
    const Eigen::SelfAdjointEigenSolver<RMatrix> es(symmetrize(lx.transpose() * s * lx));
    const RVector lambda = es.eigenvalues().cwiseMax(std::numeric_limits<double>::min());
    const RVector d = lambda.cwiseSqrt();
    const RVector quarter = lambda.array().pow(-0.25);
    const RMatrix g = lx * es.eigenvectors() * quarter.asDiagonal();
    const RMatrix w = g * g.transpose();
    // G^{-1} = diag(lambda)^{1/4} Q^T L^{-1}
    const RMatrix lx_inv = lx.triangularView<Eigen::Lower>().solve(RMatrix::Identity(n, n));
    const RMatrix g_inv = lambda.array().pow(0.25).matrix().asDiagonal() * es.eigenvectors().transpose() * lx_inv;

    // Schur complement M_ij = A_i . (W A_j W).
    std::vector<RMatrix> waw(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) waw[static_cast<std::size_t>(j)] = ops[static_cast<std::size_t>(j)].sandwich(w);
    RMatrix schur(k, k);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i <= j; ++i) {
        const double v = ops[static_cast<std::size_t>(i)].dot(waw[static_cast<std::size_t>(j)]);
        schur(i, j) = v;
        schur(j, i) = v;
      }
    }
    Eigen::LLT<RMatrix> schur_llt(schur);
    Eigen::LDLT<RMatrix> schur_ldlt;
    const bool use_ldlt = schur_llt.info() != Eigen::Success;
    if (use_ldlt) schur_ldlt.compute(schur);

    const RMatrix wrdw = w * rd * w;
    const RVector a_wrdw = apply_a(wrdw);

    struct Direction {
      RMatrix dx;
      RVector dy;
      RMatrix ds;
    };
    // Scaled complementarity right-hand side rc (n x n, symmetric).
    auto direction = [&](const RMatrix& rc) {
      RMatrix kmat(n, n);
      for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) kmat(r, c) = 2.0 * rc(r, c) / (d(r) + d(c));
      }
      const RMatrix rhs_x = g * kmat * g.transpose();
      const RVector rhs = rp - apply_a(rhs_x) + a_wrdw;
      Direction dir;
      dir.dy = use_ldlt ? RVector(schur_ldlt.solve(rhs)) : RVector(schur_llt.solve(rhs));
      dir.ds = rd - apply_at(dir.dy);
      dir.dx = symmetrize(rhs_x - w * dir.ds * w);
      dir.ds = symmetrize(dir.ds);
      return dir;
    };
    auto step_lengths = [&](const Direction& dir) {
      const double ap = std::min(1.0, opts.step_fraction * max_step(lx, dir.dx));
      const double ad = std::min(1.0, opts.step_fraction * max_step(ls, dir.ds));
      return std::pair{ap, ad};
    };

    const RMatrix d2 = RMatrix(d.cwiseProduct(d).asDiagonal());
    const Direction pred = direction(-d2);
    const auto [ap_aff, ad_aff] = step_lengths(pred);
    const double mu_aff = (x + ap_aff * pred.dx).cwiseProduct(s + ad_aff * pred.ds).sum() / dn;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    const RMatrix dx_scaled = g_inv * pred.dx * g_inv.transpose();
    const RMatrix ds_scaled = g.transpose() * pred.ds * g;
    const RMatrix corr = symmetrize(dx_scaled * ds_scaled);
    const RMatrix rc = sigma * mu * RMatrix::Identity(n, n) - d2 - corr;
    const Direction dir = direction(rc);
    const auto [ap, ad] = step_lengths(dir);

    rec.alpha_primal = ap;
    rec.alpha_dual = ad;
    rec.sigma = sigma;
    sol.history.push_back(rec);

    if (ap < 1e-12 && ad < 1e-12) break;

    x = symmetrize(x + ap * dir.dx);
    y += ad * dir.dy;
    s = symmetrize(s + ad * dir.ds);
  }

  sol.X = x;
  sol.y = -y;
  sol.S = s;
  sol.primal_obj = p.C.cwiseProduct(x).sum();
  sol.dual_obj = -p.b.dot(y);
  sol.gap = sol.dual_obj - sol.primal_obj;
  sol.primal_residual = (p.b - apply_a(x)).cwiseAbs().maxCoeff();
  sol.dual_residual = (cmin - s - apply_at(y)).cwiseAbs().maxCoeff();
  return sol;
}

}  // namespace irs::sdp
