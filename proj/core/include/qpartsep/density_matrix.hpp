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

#ifndef QPARTSEP_DENSITY_MATRIX_HPP
#define QPARTSEP_DENSITY_MATRIX_HPP

#include "qpartsep/complex_matrix.hpp"
#include "qpartsep/tolerances.hpp"

namespace qpartsep {

/// N-qubit mixed state: a Hermitian, unit-trace, positive-semidefinite
/// 2^N x 2^N matrix. Values are treated as immutable after construction and
/// are safe to share across threads.
struct DensityMatrix {
  int n_qubits = 0;
  ComplexMatrix mat;
};

/// 2^n_qubits; throws OutOfRange unless 1 <= n_qubits <= 30.
int qubit_dimension(int n_qubits);

/// Checks, in order: dimension is 2^N, Hermiticity, unit trace, positivity.
/// Throws the error named after the first failed check; NotPositive carries
/// the minimum eigenvalue. The positivity check runs the full eigensolver,
/// so cost grows as dim^3.
DensityMatrix validate_density(const ComplexMatrix& mat, int n_qubits,
                               const Tolerances& tol = {});

}  // namespace qpartsep

#endif  // QPARTSEP_DENSITY_MATRIX_HPP
