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

#include "qpartsep/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "qpartsep/eigen.hpp"

namespace qpartsep {

int qubit_dimension(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw OutOfRange("n_qubits must be in [1, 30], got " +
                     std::to_string(n_qubits));
  }
  return 1 << n_qubits;
}

DensityMatrix validate_density(const ComplexMatrix& mat, int n_qubits,
                               const Tolerances& tol) {
  ensure_valid(tol);
  const int dim = qubit_dimension(n_qubits);
  if (mat.dim() != dim) {
    std::ostringstream msg;
    msg << "matrix dim " << mat.dim() << " does not equal 2^" << n_qubits
        << " = " << dim;
    throw DimensionMismatch(msg.str());
  }

  const double defect = hermiticity_defect(mat);
  if (defect > tol.herm_tol) {
    std::ostringstream msg;
    msg << "not Hermitian: max |a(i,j) - conj(a(j,i))| = " << defect
        << " exceeds herm_tol = " << tol.herm_tol;
    throw NotHermitian(msg.str());
  }

  const Complex tr = trace(mat);
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace_tol) {
    std::ostringstream msg;
    msg << "trace is " << tr.real();
    if (tr.imag() != 0.0) msg << " + " << tr.imag() << "i";
    msg << ", |trace - 1| exceeds trace_tol = " << tol.trace_tol;
    throw TraceNotOne(msg.str());
  }

  const auto eigs = hermitian_eigenvalues(mat, tol);
  if (eigs.front() < -tol.psd_tol) {
    std::ostringstream msg;
    msg << "not positive semidefinite: min eigenvalue " << eigs.front()
        << " below -psd_tol = " << -tol.psd_tol;
    throw NotPositive(msg.str(), eigs.front());
  }

  return DensityMatrix{n_qubits, mat};
}

}  // namespace qpartsep
