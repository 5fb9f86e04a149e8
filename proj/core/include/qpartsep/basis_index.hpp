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

#ifndef QPARTSEP_BASIS_INDEX_HPP
#define QPARTSEP_BASIS_INDEX_HPP

#include <cstdint>
#include <span>
#include <string>

#include "qpartsep/errors.hpp"

namespace qpartsep {

/// Index into the 2^N-dimensional standard product basis. Qubit 1 owns the
/// most significant of the N bits: |i_1 i_2 ... i_N> has value
/// i_1 * 2^(N-1) + ... + i_N.
struct BasisIndex {
  std::uint32_t value = 0;
  int n_qubits = 0;

  /// Local state of the given qubit (1-based).
  int bit(int qubit) const {
    if (qubit < 1 || qubit > n_qubits) {
      throw OutOfRange("qubit index " + std::to_string(qubit) +
                       " outside [1, " + std::to_string(n_qubits) + "]");
    }
    return static_cast<int>((value >> (n_qubits - qubit)) & 1u);
  }

  BasisIndex with_bit(int qubit, int b) const {
    if (b != 0 && b != 1) throw OutOfRange("bit must be 0 or 1");
    if (qubit < 1 || qubit > n_qubits) {
      throw OutOfRange("qubit index " + std::to_string(qubit) +
                       " outside [1, " + std::to_string(n_qubits) + "]");
    }
    const std::uint32_t mask = 1u << (n_qubits - qubit);
    return {b ? (value | mask) : (value & ~mask), n_qubits};
  }

  /// Composes an index from per-qubit bits, qubit 1 first.
  static BasisIndex from_bits(std::span<const int> bits) {
    BasisIndex out{0, static_cast<int>(bits.size())};
    for (int b : bits) {
      if (b != 0 && b != 1) throw OutOfRange("bit must be 0 or 1");
      out.value = (out.value << 1) | static_cast<std::uint32_t>(b);
    }
    return out;
  }

  std::string bit_string() const {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 1; q <= n_qubits; ++q) s[q - 1] = bit(q) ? '1' : '0';
    return s;
  }

  bool operator==(const BasisIndex&) const = default;
};

}  // namespace qpartsep

#endif  // QPARTSEP_BASIS_INDEX_HPP
