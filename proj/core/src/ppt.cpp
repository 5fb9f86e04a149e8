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

#include "qpartsep/ppt.hpp"

#include <algorithm>

#include "qpartsep/eigen.hpp"

namespace qpartsep {

std::string to_string(PptClassification c) {
  return c == PptClassification::NPT_INSEPARABLE ? "NPT_INSEPARABLE"
                                                 : "PPT_INCONCLUSIVE";
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.dim() != 4) {
    throw DimensionMismatch("partial_transpose: expected a 4x4 matrix, got " +
                            std::to_string(m.dim()) + "x" +
                            std::to_string(m.dim()));
  }
  // Transpose on the first (r-block) factor. For 2x2 factors the spectrum is
  // the same for either choice.
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          out(2 * i + j, 2 * u + v) = m(2 * u + j, 2 * i + v);
        }
      }
    }
  }
  return out;
}

PptVerdict ppt_verdict(const ReducedState& rs, const Tolerances& tol) {
  ensure_valid(tol);
  const auto eigs = hermitian_eigenvalues(partial_transpose(rs.mat), tol);
  PptVerdict v{rs.source_partition,
               {eigs[0], eigs[1], eigs[2], eigs[3]},
               eigs[0],
               PptClassification::PPT_INCONCLUSIVE,
               tol.psd_tol};
  if (v.min_eig < -tol.psd_tol) {
    v.classification = PptClassification::NPT_INSEPARABLE;
  }
  return v;
}

std::vector<PptVerdict> scan_partitions(const DensityMatrix& rho,
                                        const Tolerances& tol) {
  std::vector<PptVerdict> verdicts;
  for (const Partition& p : enumerate_partitions(rho.n_qubits)) {
    verdicts.push_back(ppt_verdict(reduce(rho, p), tol));
  }
  return verdicts;
}

}  // namespace qpartsep
