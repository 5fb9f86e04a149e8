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

#ifndef QPARTSEP_REDUCTION_HPP
#define QPARTSEP_REDUCTION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qpartsep/complex_matrix.hpp"
#include "qpartsep/density_matrix.hpp"
#include "qpartsep/partition.hpp"

namespace qpartsep {

/// 4x4 bipartite state obtained by reducing an N-qubit state across a
/// partition. Row index packs as 2*i + j where i is the r-block bit and j
/// the s-block bit; columns pack the same way.
struct ReducedState {
  Partition source_partition;
  ComplexMatrix mat;  // 4x4
};

/// One component of the pure-state decomposition of a reduction: the
/// amplitudes a pure state places on one sub-split's basis strings,
/// normalized, together with their squared norm.
struct PureReductionTerm {
  SubSplit subsplit;
  double weight = 0.0;            // squared norm of the raw component
  std::array<Complex, 4> state{};  // normalized; all zero when is_zero
  bool is_zero = false;
};

/// Basis strings addressed by a sub-split, in row order (i,j) =
/// (0,0),(0,1),(1,0),(1,1). Bit of qubit k in string (i,j): i on the primed
/// r part, 1-i on the double-primed r part, j on the primed s part, 1-j on
/// the double-primed s part. Across all sub-splits of one partition these
/// quadruples tile {0 .. 2^N - 1} exactly once.
std::array<std::uint32_t, 4> subsplit_row_indices(const SubSplit& ss);

/// The 4x4 submatrix of rho addressed by ss: out[(i,j),(u,v)] =
/// rho[x(i,j), x(u,v)] with x as in subsplit_row_indices. Hermitian whenever
/// rho is.
ComplexMatrix submatrix(const DensityMatrix& rho, const SubSplit& ss);

/// Sum of the 4x4 submatrices over all canonical sub-splits of p, in
/// enumeration order. The result is itself a bipartite density matrix; for
/// N = 2 it is rho unchanged. A positivity failure of the sum cannot happen
/// for valid input and surfaces as NotPositive (internal numerical
/// breakdown).
ReducedState reduce(const DensityMatrix& rho, const Partition& p);

/// Pure-state route to the same reduction: one term per canonical sub-split,
/// aligned positionally with enumerate_subsplits. Amplitudes must be
/// normalized within 1e-10 (else NotNormalized). The weighted sum of the
/// term projectors equals reduce() of the projector of `amplitudes`.
std::vector<PureReductionTerm> reduce_pure(std::span<const Complex> amplitudes,
                                           const Partition& p);

}  // namespace qpartsep

#endif  // QPARTSEP_REDUCTION_HPP
