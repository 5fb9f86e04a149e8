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

#ifndef QPARTSEP_PPT_HPP
#define QPARTSEP_PPT_HPP

#include <array>
#include <string>
#include <vector>

#include "qpartsep/reduction.hpp"
#include "qpartsep/tolerances.hpp"

namespace qpartsep {

/// NPT_INSEPARABLE certifies the state is inseparable (and entangled) across
/// the partition. PPT_INCONCLUSIVE only means the necessary condition
/// passed; for N >= 3 the reduction is lossy, so it proves nothing about
/// separability of the original state.
enum class PptClassification { NPT_INSEPARABLE, PPT_INCONCLUSIVE };

std::string to_string(PptClassification c);

struct PptVerdict {
  Partition partition;
  std::array<double, 4> pt_eigenvalues{};  // ascending; sums to 1
  double min_eig = 0.0;
  PptClassification classification = PptClassification::PPT_INCONCLUSIVE;
  double tolerance_used = 0.0;
};

/// Partial transpose of a 4x4 bipartite matrix, taken on the first (r-block)
/// factor: out[(i,j),(u,v)] = m[(u,j),(i,v)]. Involution; preserves trace
/// exactly and Hermiticity.
ComplexMatrix partial_transpose(const ComplexMatrix& m);

/// Classifies the reduced state: NPT_INSEPARABLE iff the minimum eigenvalue
/// of the partial transpose lies below -psd_tol. Boundary cases classify as
/// PPT_INCONCLUSIVE so the verdict never over-claims inseparability.
PptVerdict ppt_verdict(const ReducedState& rs, const Tolerances& tol = {});

/// One verdict per partition from enumerate_partitions(rho.n_qubits), in
/// enumeration order.
std::vector<PptVerdict> scan_partitions(const DensityMatrix& rho,
                                        const Tolerances& tol = {});

}  // namespace qpartsep

#endif  // QPARTSEP_PPT_HPP
