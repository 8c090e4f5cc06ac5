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

#include <iosfwd>
#include <string>
#include <vector>

#include "irs/linalg.hpp"

namespace irs::sdp {

/// maximize C.X  s.t.  A_i.X = b_i (i = 1..k),  X PSD.
struct SdpProblem {
  RMatrix C;
  std::vector<RMatrix> A;
  RVector b;

  int size() const { return static_cast<int>(C.rows()); }
  int constraints() const { return static_cast<int>(A.size()); }

  /// Symmetry (1e-12), k >= 1, n >= 1, consistent shapes. Throws ValidationError.
  void validate() const;
};

struct SdpOptions {
  double gap_tol = 1e-7;       // relative to 1 + |primal objective|
  double residual_tol = 1e-8;  // infinity norm of A(X) - b
  int max_iter = 200;
  double step_fraction = 0.98;
};

enum class SdpStatus { Optimal, MaxIter, Infeasible };

std::string to_string(SdpStatus s);

/// State at the start of an iteration, plus the step that was taken from it.
struct SdpIterate {
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double mu = 0.0;  // X.S / n
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double alpha_primal = 0.0;
  double alpha_dual = 0.0;
  double sigma = 0.0;
};

/// Maximization convention throughout: S = sum_i y_i A_i - C and the dual
/// objective b.y bounds the primal from above.
struct SdpSolution {
  RMatrix X;
  RVector y;
  RMatrix S;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double gap = 0.0;  // dual_obj - primal_obj
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  SdpStatus status = SdpStatus::MaxIter;
  std::vector<SdpIterate> history;
};

/// Primal-dual path following with Nesterov-Todd scaling and Mehrotra
/// predictor-corrector steps. Infeasible start from scaled identities;
/// fraction-to-boundary step rule. Deterministic.
SdpSolution solve(const SdpProblem& p, const SdpOptions& opts = {});

/// [[Re H, -Im H], [Im H, Re H]]. Throws ValidationError unless H is
/// Hermitian within 1e-12.
RMatrix embed_hermitian(const CMatrix& h);

/// Inverse of the embedding on its range; for a general symmetric 2n x 2n
/// matrix returns the Hermitian part ((X11 + X22) + j (X21 - X12)) / 2.
CMatrix extract_hermitian(const RMatrix& x);

/// Plain-text dump: a header line "n k", a line with b, then one line per
/// nonzero of the upper triangle "matrix row col value" where matrix 0 is C
/// and matrix i is A_i (1-based); row and col are 1-based.
void write_triplets(const SdpProblem& p, std::ostream& os);

}  // namespace irs::sdp
