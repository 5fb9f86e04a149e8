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

#ifndef QPARTSEP_TOLERANCES_HPP
#define QPARTSEP_TOLERANCES_HPP

#include "qpartsep/errors.hpp"

namespace qpartsep {

/// Numerical tolerances shared by validation, the eigensolver, and verdicts.
/// Defaults are sized for dense matrices up to dim 256.
struct Tolerances {
  double herm_tol = 1e-10;   // max |a(i,j) - conj(a(j,i))|
  double trace_tol = 1e-10;  // |trace - 1|
  double psd_tol = 1e-9;     // min eigenvalue >= -psd_tol
  double eig_tol = 1e-12;    // Jacobi off-diagonal Frobenius norm target
};

inline void ensure_valid(const Tolerances& tol) {
  if (tol.herm_tol < 0 || tol.trace_tol < 0 || tol.psd_tol < 0 ||
      tol.eig_tol < 0) {
    throw OutOfRange("tolerances must be nonnegative");
  }
}

}  // namespace qpartsep

#endif  // QPARTSEP_TOLERANCES_HPP
