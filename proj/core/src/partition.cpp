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

#include "qpartsep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qpartsep {

namespace {

void check_ascending_in_range(const std::vector<int>& block, int n,
                              const char* name) {
  if (block.empty()) {
    throw PartitionError(std::string(name) + " block must be nonempty");
  }
  int prev = 0;
  for (int q : block) {
    if (q < 1 || q > n) {
      throw PartitionError(std::string(name) + " block index " +
                           std::to_string(q) + " outside [1, " +
                           std::to_string(n) + "]");
    }
    if (q <= prev) {
      throw PartitionError(std::string(name) +
                           " block must be strictly ascending");
    }
    prev = q;
  }
}

// Ascending subset check; both inputs ascending.
bool is_subset(const std::vector<int>& sub, const std::vector<int>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::vector<int> set_minus(const std::vector<int>& super,
                           const std::vector<int>& sub) {
  std::vector<int> out;
  out.reserve(super.size() - sub.size());
  std::set_difference(super.begin(), super.end(), sub.begin(), sub.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

Partition::Partition(int n, std::vector<int> r_block, std::vector<int> s_block)
    : n_(n), r_(std::move(r_block)), s_(std::move(s_block)) {
  if (n_ < 2) {
    throw PartitionError("a partition needs n >= 2 qubits, got n = " +
                         std::to_string(n_));
  }
  check_ascending_in_range(r_, n_, "r");
  check_ascending_in_range(s_, n_, "s");
  if (r_.size() + s_.size() != static_cast<std::size_t>(n_)) {
    throw PartitionError("blocks must cover all " + std::to_string(n_) +
                         " qubits exactly once");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (int q : r_) seen[q] = true;
  for (int q : s_) {
    if (seen[q]) {
      throw PartitionError("qubit " + std::to_string(q) +
                           " appears in both blocks");
    }
    seen[q] = true;
  }
  // Sizes add to n and there are no duplicates, so coverage follows.
}

std::uint32_t Partition::r_mask() const {
  std::uint32_t mask = 0;
  for (int q : r_) mask |= 1u << (q - 1);
  return mask;
}

Partition Partition::swapped() const { return Partition(n_, s_, r_); }

SubSplit::SubSplit(Partition parent, std::vector<int> r_dprime,
                   std::vector<int> s_dprime)
    : parent_(std::move(parent)),
      r_dprime_(std::move(r_dprime)),
      s_dprime_(std::move(s_dprime)) {
  const auto& r = parent_.r_block();
  const auto& s = parent_.s_block();
  if (!is_subset(r_dprime_, r) || !is_subset(s_dprime_, s)) {
    throw PartitionError(
        "double-primed parts must be ascending subsets of their blocks");
  }
  if (!r_dprime_.empty() && r_dprime_.front() == r.front()) {
    throw PartitionError(
        "canonical form pins the smallest r-block qubit into the primed part");
  }
  if (!s_dprime_.empty() && s_dprime_.front() == s.front()) {
    throw PartitionError(
        "canonical form pins the smallest s-block qubit into the primed part");
  }
  r_prime_ = set_minus(r, r_dprime_);
  s_prime_ = set_minus(s, s_dprime_);
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 2) {
    throw PartitionError("enumerate_partitions needs n >= 2, got n = " +
                         std::to_string(n));
  }
  // Qubit 1 is normalized into the r block; the remaining qubits range over
  // all proper subsets. Iterating the subset mask ascending makes the output
  // ascending by r-block bitmask.
  const std::uint32_t count = (1u << (n - 1)) - 1;
  std::vector<Partition> out;
  out.reserve(count);
  for (std::uint32_t rest = 0; rest < count; ++rest) {
    std::vector<int> r{1};
    std::vector<int> s;
    for (int q = 2; q <= n; ++q) {
      if (rest >> (q - 2) & 1u) {
        r.push_back(q);
      } else {
        s.push_back(q);
      }
    }
    out.emplace_back(n, std::move(r), std::move(s));
  }
  return out;
}

std::vector<SubSplit> enumerate_subsplits(const Partition& p) {
  const auto& r = p.r_block();
  const auto& s = p.s_block();
  const int fr = static_cast<int>(r.size()) - 1;  // choosable r-block qubits
  const int fs = static_cast<int>(s.size()) - 1;
  std::vector<SubSplit> out;
  out.reserve(std::size_t{1} << (fr + fs));
  for (std::uint32_t mr = 0; mr < (1u << fr); ++mr) {
    std::vector<int> r_dp;
    for (int t = 0; t < fr; ++t) {
      if (mr >> (fr - 1 - t) & 1u) r_dp.push_back(r[t + 1]);
    }
    for (std::uint32_t ms = 0; ms < (1u << fs); ++ms) {
      std::vector<int> s_dp;
      for (int t = 0; t < fs; ++t) {
        if (ms >> (fs - 1 - t) & 1u) s_dp.push_back(s[t + 1]);
      }
      out.emplace_back(p, r_dp, std::move(s_dp));
    }
  }
  return out;
}

std::vector<std::uint32_t> basis_permutation(const Partition& p) {
  const int n = p.n();
  std::vector<int> sigma;  // slot t (0-based) receives qubit sigma[t]
  sigma.reserve(n);
  sigma.insert(sigma.end(), p.r_block().begin(), p.r_block().end());
  sigma.insert(sigma.end(), p.s_block().begin(), p.s_block().end());

  const std::uint32_t dim = 1u << n;
  std::vector<std::uint32_t> pi(dim);
  for (std::uint32_t b = 0; b < dim; ++b) {
    std::uint32_t out = 0;
    for (int t = 0; t < n; ++t) {
      const std::uint32_t bit = (b >> (n - sigma[t])) & 1u;
      out |= bit << (n - 1 - t);
    }
    pi[b] = out;
  }
  return pi;
}

ComplexMatrix permutation_matrix(const Partition& p) {
  const auto pi = basis_permutation(p);
  ComplexMatrix s(static_cast<int>(pi.size()));
  for (std::uint32_t b = 0; b < pi.size(); ++b) {
    s(static_cast<int>(pi[b]), static_cast<int>(b)) = 1.0;
  }
  return s;
}

DensityMatrix reorder(const DensityMatrix& rho, const Partition& p) {
  if (p.n() != rho.n_qubits) {
    throw DimensionMismatch("reorder: partition over " + std::to_string(p.n()) +
                            " qubits applied to a " +
                            std::to_string(rho.n_qubits) + "-qubit state");
  }
  const auto pi = basis_permutation(p);
  const int dim = rho.mat.dim();
  ComplexMatrix out(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      out(static_cast<int>(pi[i]), static_cast<int>(pi[j])) = rho.mat(i, j);
    }
  }
  return DensityMatrix{rho.n_qubits, std::move(out)};
}

DensityMatrix reorder_inverse(const DensityMatrix& rho, const Partition& p) {
  if (p.n() != rho.n_qubits) {
    throw DimensionMismatch("reorder_inverse: partition over " +
                            std::to_string(p.n()) + " qubits applied to a " +
                            std::to_string(rho.n_qubits) + "-qubit state");
  }
  const auto pi = basis_permutation(p);
  const int dim = rho.mat.dim();
  ComplexMatrix out(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      out(i, j) = rho.mat(static_cast<int>(pi[i]), static_cast<int>(pi[j]));
    }
  }
  return DensityMatrix{rho.n_qubits, std::move(out)};
}

namespace {

std::vector<int> parse_block(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (tokens.empty()) {
    throw PartitionError("empty block in partition label");
  }

  const bool letters =
      std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
        return std::all_of(t.begin(), t.end(),
                           [](char c) { return c >= 'A' && c <= 'Z'; });
      });

  std::vector<int> indices;
  if (letters) {
    for (const std::string& t : tokens) {
      for (char c : t) indices.push_back(c - 'A' + 1);
    }
  } else {
    for (const std::string& t : tokens) {
      std::size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(t, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != t.size() || value < 1) {
        throw PartitionError("bad qubit index '" + t + "' in partition label");
      }
      indices.push_back(value);
    }
  }

  std::sort(indices.begin(), indices.end());
  for (std::size_t k = 1; k < indices.size(); ++k) {
    if (indices[k] == indices[k - 1]) {
      throw PartitionError("duplicate qubit index " +
                           std::to_string(indices[k]) + " in partition label");
    }
  }
  return indices;
}

}  // namespace

Partition parse_partition_label(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos ||
      text.find('|', bar + 1) != std::string_view::npos) {
    throw PartitionError("partition label must contain exactly one '|'");
  }
  auto r = parse_block(text.substr(0, bar));
  auto s = parse_block(text.substr(bar + 1));
  const int n = static_cast<int>(r.size() + s.size());
  return Partition(n, std::move(r), std::move(s));
}

std::string partition_label(const Partition& p) {
  std::ostringstream out;
  auto emit = [&](const std::vector<int>& block) {
    if (p.n() <= 26) {
      for (int q : block) out << static_cast<char>('A' + q - 1);
    } else {
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k > 0) out << ',';
        out << block[k];
      }
    }
  };
  emit(p.r_block());
  out << '|';
  emit(p.s_block());
  return out.str();
}

}  // namespace qpartsep
