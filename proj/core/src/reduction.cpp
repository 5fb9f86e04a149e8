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

#include "qpartsep/reduction.hpp"

#include <cmath>
#include <sstream>

#include "qpartsep/eigen.hpp"

namespace qpartsep {

std::array<std::uint32_t, 4> subsplit_row_indices(const SubSplit& ss) {
  const int n = ss.parent().n();
  auto mask_of = [n](const std::vector<int>& qubits) {
    std::uint32_t m = 0;
    for (int q : qubits) m |= 1u << (n - q);
    return m;
  };
  const std::uint32_t rp = mask_of(ss.r_prime());
  const std::uint32_t rd = mask_of(ss.r_dprime());
  const std::uint32_t sp = mask_of(ss.s_prime());
  const std::uint32_t sd = mask_of(ss.s_dprime());

  // Bit of every primed qubit is the block bit, of every double-primed qubit
  // its complement.
  std::array<std::uint32_t, 4> rows{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rows[2 * i + j] = (i ? rp : rd) | (j ? sp : sd);
    }
  }
  return rows;
}

ComplexMatrix submatrix(const DensityMatrix& rho, const SubSplit& ss) {
  if (ss.parent().n() != rho.n_qubits) {
    throw DimensionMismatch("submatrix: sub-split over " +
                            std::to_string(ss.parent().n()) +
                            " qubits applied to a " +
                            std::to_string(rho.n_qubits) + "-qubit state");
  }
  const auto rows = subsplit_row_indices(ss);
  ComplexMatrix out(4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      out(a, b) = rho.mat(static_cast<int>(rows[a]), static_cast<int>(rows[b]));
    }
  }
  return out;
}

ReducedState reduce(const DensityMatrix& rho, const Partition& p) {
  if (p.n() != rho.n_qubits) {
    throw DimensionMismatch("reduce: partition over " + std::to_string(p.n()) +
                            " qubits applied to a " +
                            std::to_string(rho.n_qubits) + "-qubit state");
  }
  ComplexMatrix acc(4);
  for (const SubSplit& ss : enumerate_subsplits(p)) {
    acc += submatrix(rho, ss);
  }

  // The sum of the disjoint submatrices of a density matrix is again a
  // density matrix; a negative eigenvalue here means the arithmetic broke.
  const Tolerances tol{};
  const auto eigs = detail::jacobi_eigenvalues(acc, tol.eig_tol, 100);
  if (eigs.front() < -tol.psd_tol) {
    std::ostringstream msg;
    msg << "reduce: internal error, reduction has min eigenvalue "
        << eigs.front();
    throw NotPositive(msg.str(), eigs.front());
  }

  return ReducedState{p, std::move(acc)};
}

std::vector<PureReductionTerm> reduce_pure(std::span<const Complex> amplitudes,
                                           const Partition& p) {
  const std::size_t dim = std::size_t{1} << p.n();
  if (amplitudes.size() != dim) {
    throw DimensionMismatch("reduce_pure: " + std::to_string(amplitudes.size()) +
                            " amplitudes for a " + std::to_string(p.n()) +
                            "-qubit partition (expected " +
                            std::to_string(dim) + ")");
  }
  double norm2 = 0.0;
  for (const Complex& c : amplitudes) norm2 += std::norm(c);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw NotNormalized("reduce_pure: amplitude norm is " +
                        std::to_string(std::sqrt(norm2)));
  }

  std::vector<PureReductionTerm> terms;
  for (SubSplit& ss : enumerate_subsplits(p)) {
    const auto rows = subsplit_row_indices(ss);
    PureReductionTerm term{std::move(ss), 0.0, {}, false};
    double weight = 0.0;
    for (int k = 0; k < 4; ++k) {
      term.state[k] = amplitudes[rows[k]];
      weight += std::norm(term.state[k]);
    }
    term.weight = weight;
    if (weight == 0.0) {
      term.is_zero = true;
    } else {
      const double inv = 1.0 / std::sqrt(weight);
      for (auto& c : term.state) c *= inv;
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace qpartsep
