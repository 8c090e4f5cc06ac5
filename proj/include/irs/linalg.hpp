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

#include <Eigen/Dense>
#include <complex>

namespace irs {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRow = Eigen::RowVectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct HermitianEigen {
  RVector values;   // ascending
  CMatrix vectors;  // columns, orthonormal
  int sweeps = 0;
};

/// Cyclic Jacobi eigen-decomposition of a Hermitian matrix.
///
/// Sweeps rotate every off-diagonal pair until the off-diagonal Frobenius
/// norm falls below `tol * max(1, ||A||_F)`. Throws SolverError after
/// `max_sweeps` sweeps without convergence, reporting the sweep count.
HermitianEigen jacobi_eigh(const CMatrix& a, double tol = 1e-12, int max_sweeps = 100);

bool is_hermitian(const CMatrix& a, double tol);

/// max |A - A^H| over entries.
double hermitian_defect(const CMatrix& a);

}  // namespace irs
