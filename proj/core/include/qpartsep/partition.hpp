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

#ifndef QPARTSEP_PARTITION_HPP
#define QPARTSEP_PARTITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpartsep/complex_matrix.hpp"
#include "qpartsep/density_matrix.hpp"

namespace qpartsep {

/// Ordered bipartition of the qubit index set {1..N} into an r block and an
/// s block. Blocks are nonempty, disjoint, strictly ascending, and cover
/// {1..N}. Construction validates all of that and throws PartitionError.
class Partition {
 public:
  Partition(int n, std::vector<int> r_block, std::vector<int> s_block);

  int n() const { return n_; }
  const std::vector<int>& r_block() const { return r_; }
  const std::vector<int>& s_block() const { return s_; }

  /// Bitmask with bit (q-1) set for every qubit q in the r block.
  std::uint32_t r_mask() const;

  /// The partition with the two blocks exchanged.
  Partition swapped() const;

  bool operator==(const Partition& other) const = default;

 private:
  int n_;
  std::vector<int> r_;
  std::vector<int> s_;
};

/// Refinement of a partition: each block splits into a primed and a
/// double-primed part. Canonical form pins the smallest qubit of each block
/// into the primed part, so the primed parts are never empty and every
/// distinct 4x4 submatrix is enumerated exactly once.
class SubSplit {
 public:
  /// Primed parts are derived as the block minus the given double-primed
  /// part; throws PartitionError if the canonical-form rules are violated.
  SubSplit(Partition parent, std::vector<int> r_dprime,
           std::vector<int> s_dprime);

  const Partition& parent() const { return parent_; }
  const std::vector<int>& r_prime() const { return r_prime_; }
  const std::vector<int>& r_dprime() const { return r_dprime_; }
  const std::vector<int>& s_prime() const { return s_prime_; }
  const std::vector<int>& s_dprime() const { return s_dprime_; }

  bool operator==(const SubSplit& other) const = default;

 private:
  Partition parent_;
  std::vector<int> r_prime_, r_dprime_, s_prime_, s_dprime_;
};

/// All 2^(n-1) - 1 unordered bipartitions, each emitted once with qubit 1
/// normalized into the r block, ascending by r-block bitmask. Throws
/// PartitionError for n < 2.
std::vector<Partition> enumerate_partitions(int n);

/// All 2^(n-2) canonical sub-splits of p, ordered lexicographically by
/// (double-primed subset of the r block, double-primed subset of the s
/// block); the all-primed sub-split comes first.
std::vector<SubSplit> enumerate_subsplits(const Partition& p);

/// Basis relabeling pi for p: bit t of pi(b) is bit sigma(t) of b, where
/// sigma lists the r block followed by the s block. Length 2^n.
std::vector<std::uint32_t> basis_permutation(const Partition& p);

/// The 0/1 unitary S with S|i_1 ... i_N> = |i_{r_1} .. i_{r_P} i_{s_1} ..
/// i_{s_{N-P}}>: qubit r_t moves to slot t, qubit s_t to slot P + t.
ComplexMatrix permutation_matrix(const Partition& p);

/// S rho S^dagger. Trace and spectrum are preserved exactly up to rounding.
DensityMatrix reorder(const DensityMatrix& rho, const Partition& p);

/// Inverse relabeling: reorder_inverse(reorder(rho, p), p) == rho entrywise.
DensityMatrix reorder_inverse(const DensityMatrix& rho, const Partition& p);

/// Parses `block "|" block` where a block is a comma- or space-separated
/// list of 1-based indices, or contiguous capital letters with A=1, B=2, ...
/// Whitespace-insensitive. The qubit count is the total number of indices.
Partition parse_partition_label(std::string_view text);

/// Letter form ("AC|BD") when n <= 26, otherwise numeric ("1,3|2,4").
std::string partition_label(const Partition& p);

}  // namespace qpartsep

#endif  // QPARTSEP_PARTITION_HPP
