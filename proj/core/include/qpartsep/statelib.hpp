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

#ifndef QPARTSEP_STATELIB_HPP
#define QPARTSEP_STATELIB_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qpartsep/complex_matrix.hpp"
#include "qpartsep/density_matrix.hpp"
#include "qpartsep/partition.hpp"

namespace qpartsep {

/// Two-qubit Werner state: singlet fraction x plus random fraction 1-x.
/// Diagonal ((1-x)/4, (1-x)/4 + x/2, (1-x)/4 + x/2, (1-x)/4) with -x/2 at
/// (01,10) and (10,01). Requires 0 <= x <= 1.
DensityMatrix werner(double x);

/// Two fixed three-qubit example states whose reductions across A|BC
/// (example_prime) and B|AC (example_dprime) are werner(x) entrywise.
/// Validity is asserted at construction.
DensityMatrix example_prime(double x);
DensityMatrix example_dprime(double x);

/// (|0...0> + |1...1>)/sqrt(2) amplitudes, length 2^n.
std::vector<Complex> ghz(int n);

/// Unit amplitude at the product basis string given by bits (qubit 1 first).
std::vector<Complex> basis_product(std::span<const int> bits);

/// Haar-like random pure state: normalized complex Gaussian amplitudes.
std::vector<Complex> random_pure(int n, std::uint64_t seed);

/// Convex mixture of `rank` random pure projectors with Dirichlet-uniform
/// weights (normalized exponential draws).
DensityMatrix random_mixed(int n, int rank, std::uint64_t seed);

/// Mixture of `terms` product states across p: random mixed factors on the
/// two blocks, tensored in the reordered basis, then relabeled back to the
/// natural qubit order. Separable across p by construction.
DensityMatrix random_partition_separable(const Partition& p, int terms,
                                         std::uint64_t seed);

/// |psi><psi| for normalized amplitudes (within 1e-10, else NotNormalized).
DensityMatrix projector(std::span<const Complex> amplitudes, int n_qubits);

struct ConstructorBlock {
  double weight = 0.0;  // in (0, 1]
  ComplexMatrix sigma;  // 4x4 bipartite density matrix
};

/// Recipe for a partially inseparable state: one 4x4 block per canonical
/// sub-split of the partition, listed in enumerate_subsplits order, with
/// weights summing to 1.
struct ConstructorSpec {
  Partition partition;
  std::vector<ConstructorBlock> blocks;
};

/// Places weight_m * sigma_m on sub-split m's basis strings and zero
/// elsewhere. The output is a valid N-qubit density matrix (a relabeled
/// direct sum of the weighted blocks) and reduces across spec.partition to
/// the mixture sum_m weight_m * sigma_m exactly.
DensityMatrix construct_inseparable(const ConstructorSpec& spec);

}  // namespace qpartsep

#endif  // QPARTSEP_STATELIB_HPP
