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

#include "qpartsep/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qpartsep {
namespace detail {

std::vector<double> jacobi_eigenvalues(ComplexMatrix m, double eig_tol,
                                       int max_sweeps) {
  const int n = m.dim();

  // Symmetrize exactly so the diagonal stays real through the rotations.
  for (int i = 0; i < n; ++i) {
    m(i, i) = Complex(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    double off2 = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off2 += 2.0 * std::norm(m(i, j));
    }
    if (std::sqrt(off2) <= eig_tol) {
      std::vector<double> eigs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) eigs[i] = m(i, i).real();
      std::sort(eigs.begin(), eigs.end());
      return eigs;
    }
    if (sweep == max_sweeps) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = m(p, q);
        const double beta = std::abs(b);
        if (beta == 0.0) continue;
        const Complex phase = b / beta;

        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * beta);
        double t;
        if (std::abs(tau) > 1e150) {
          t = 1.0 / (2.0 * tau);
        } else {
          const double sgn = tau >= 0.0 ? 1.0 : -1.0;
          t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = (t * c) * phase;

        // A <- U^dagger A U with U = [[c, s], [-conj(s), c]] on rows/cols
        // (p, q); the rotation annihilates m(p, q).
        for (int k = 0; k < n; ++k) {
          const Complex rp = m(p, k);
          const Complex rq = m(q, k);
          m(p, k) = c * rp - s * rq;
          m(q, k) = std::conj(s) * rp + c * rq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex cp = m(k, p);
          const Complex cq = m(k, q);
          m(k, p) = c * cp - std::conj(s) * cq;
          m(k, q) = s * cp + c * cq;
        }
        m(p, q) = Complex(0.0, 0.0);
        m(q, p) = Complex(0.0, 0.0);
        m(p, p) = Complex(m(p, p).real(), 0.0);
        m(q, q) = Complex(m(q, q).real(), 0.0);
      }
    }
  }

  throw NoConvergence(
      "jacobi eigensolver: off-diagonal norm still above eig_tol after " +
      std::to_string(max_sweeps) + " sweeps");
}

}  // namespace detail

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const Tolerances& tol) {
  ensure_valid(tol);
  if (a.dim() == 0) {
    throw DimensionMismatch("hermitian_eigenvalues: empty matrix");
  }
  const double defect = hermiticity_defect(a);
  if (defect > tol.herm_tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |a(i,j) - conj(a(j,i))| = " << defect
        << " exceeds herm_tol = " << tol.herm_tol;
    throw NotHermitian(msg.str());
  }
  return detail::jacobi_eigenvalues(a, tol.eig_tol, 100);
}

}  // namespace qpartsep
