// Copyright 2026 The qpartsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPARTSEP_EIGEN_HPP
#define QPARTSEP_EIGEN_HPP

#include <vector>

#include "qpartsep/complex_matrix.hpp"
#include "qpartsep/tolerances.hpp"

namespace qpartsep {

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Self-contained cyclic Jacobi rotations, iterated until the off-diagonal
/// Frobenius norm drops to eig_tol or 100 sweeps elapse. Throws NotHermitian
/// when the input exceeds herm_tol, NoConvergence when sweeps run out.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const Tolerances& tol = {});

namespace detail {

/// Core iteration with an explicit sweep budget. Assumes (and enforces by
/// symmetrization) an exactly Hermitian working copy.
std::vector<double> jacobi_eigenvalues(ComplexMatrix m, double eig_tol,
                                       int max_sweeps);

}  // namespace detail

}  // namespace qpartsep

#endif  // QPARTSEP_EIGEN_HPP
