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

#include "qpartsep/statelib.hpp"

#include <cmath>
#include <string>

#include "qpartsep/reduction.hpp"
#include "qpartsep/rng.hpp"

namespace qpartsep {

namespace {

void check_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw OutOfRange(std::string(name) + " must lie in [0, 1], got " +
                     std::to_string(x));
  }
}

std::vector<Complex> random_unit_vector(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  do {
    for (auto& c : v) {
      c = rng.complex_normal();
      norm2 += std::norm(c);
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : v) c *= inv;
  return v;
}

std::vector<double> dirichlet_weights(Rng& rng, int count) {
  std::vector<double> w(static_cast<std::size_t>(count));
  double sum = 0.0;
  for (auto& x : w) {
    x = rng.exponential();
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return w;
}

ComplexMatrix outer(std::span<const Complex> v) {
  ComplexMatrix m(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      m(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(v[j]);
    }
  }
  return m;
}

ComplexMatrix mixed_matrix(Rng& rng, int n, int rank) {
  const std::size_t dim = std::size_t{1} << n;
  const auto weights = dirichlet_weights(rng, rank);
  ComplexMatrix acc(static_cast<int>(dim));
  for (int k = 0; k < rank; ++k) {
    const auto psi = random_unit_vector(rng, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        acc(static_cast<int>(i), static_cast<int>(j)) +=
            weights[k] * psi[i] * std::conj(psi[j]);
      }
    }
  }
  return acc;
}

}  // namespace

DensityMatrix werner(double x) {
  check_unit_interval(x, "x");
  const double corner = (1.0 - x) / 4.0;
  const double middle = (1.0 - x) / 4.0 + x / 2.0;
  ComplexMatrix m(4);
  m(0, 0) = corner;
  m(1, 1) = middle;
  m(2, 2) = middle;
  m(3, 3) = corner;
  m(1, 2) = -x / 2.0;
  m(2, 1) = -x / 2.0;
  return DensityMatrix{2, std::move(m)};
}

DensityMatrix example_prime(double x) {
  check_unit_interval(x, "x");
  const double q = (1.0 - x) / 4.0;
  const double h = x / 2.0;
  ComplexMatrix m(8);
  m(1, 1) = q;
  m(2, 2) = q;
  m(3, 3) = h;
  m(4, 4) = h;
  m(3, 4) = -h;
  m(4, 3) = -h;
  m(5, 5) = q;
  m(6, 6) = q;
  return validate_density(m, 3);
}

DensityMatrix example_dprime(double x) {
  check_unit_interval(x, "x");
  const double q = (1.0 - x) / 4.0;
  const double h = x / 2.0;
  ComplexMatrix m(8);
  m(1, 1) = q;
  m(2, 2) = h;
  m(5, 5) = h;
  m(2, 5) = -h;
  m(5, 2) = -h;
  m(3, 3) = q;
  m(4, 4) = q;
  m(6, 6) = q;
  return validate_density(m, 3);
}

std::vector<Complex> ghz(int n) {
  const std::size_t dim = static_cast<std::size_t>(qubit_dimension(n));
  std::vector<Complex> amps(dim);
  const double a = 1.0 / std::sqrt(2.0);
  amps.front() = a;
  amps.back() = a;
  return amps;
}

std::vector<Complex> basis_product(std::span<const int> bits) {
  if (bits.empty()) throw OutOfRange("basis_product needs at least one qubit");
  std::size_t index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw OutOfRange("bits must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(b);
  }
  std::vector<Complex> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return amps;
}

std::vector<Complex> random_pure(int n, std::uint64_t seed) {
  const std::size_t dim = static_cast<std::size_t>(qubit_dimension(n));
  Rng rng(seed);
  return random_unit_vector(rng, dim);
}

DensityMatrix random_mixed(int n, int rank, std::uint64_t seed) {
  qubit_dimension(n);
  if (rank < 1) {
    throw OutOfRange("rank must be at least 1, got " + std::to_string(rank));
  }
  Rng rng(seed);
  return DensityMatrix{n, mixed_matrix(rng, n, rank)};
}

DensityMatrix random_partition_separable(const Partition& p, int terms,
                                         std::uint64_t seed) {
  if (terms < 1) {
    throw OutOfRange("terms must be at least 1, got " + std::to_string(terms));
  }
  const int n = p.n();
  const int nr = static_cast<int>(p.r_block().size());
  const int ns = static_cast<int>(p.s_block().size());
  Rng rng(seed);
  const auto weights = dirichlet_weights(rng, terms);

  // Mixture of products in the basis where the r block leads, then relabel
  // back to the natural qubit order.
  ComplexMatrix acc(qubit_dimension(n));
  for (int a = 0; a < terms; ++a) {
    ComplexMatrix product =
        kron(mixed_matrix(rng, nr, 2), mixed_matrix(rng, ns, 2));
    product *= weights[a];
    acc += product;
  }
  return reorder_inverse(DensityMatrix{n, std::move(acc)}, p);
}

DensityMatrix projector(std::span<const Complex> amplitudes, int n_qubits) {
  const std::size_t dim = static_cast<std::size_t>(qubit_dimension(n_qubits));
  if (amplitudes.size() != dim) {
    throw DimensionMismatch("projector: " + std::to_string(amplitudes.size()) +
                            " amplitudes for " + std::to_string(n_qubits) +
                            " qubits (expected " + std::to_string(dim) + ")");
  }
  double norm2 = 0.0;
  for (const Complex& c : amplitudes) norm2 += std::norm(c);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw NotNormalized("projector: amplitude norm is " +
                        std::to_string(std::sqrt(norm2)));
  }
  return DensityMatrix{n_qubits, outer(amplitudes)};
}

DensityMatrix construct_inseparable(const ConstructorSpec& spec) {
  const auto subsplits = enumerate_subsplits(spec.partition);
  if (spec.blocks.size() != subsplits.size()) {
    throw StateSpecError("constructor needs " +
                         std::to_string(subsplits.size()) +
                         " blocks for this partition, got " +
                         std::to_string(spec.blocks.size()));
  }
  double weight_sum = 0.0;
  for (std::size_t m = 0; m < spec.blocks.size(); ++m) {
    const double w = spec.blocks[m].weight;
    if (!(w > 0.0 && w <= 1.0)) {
      throw StateSpecError("block " + std::to_string(m) + " weight " +
                           std::to_string(w) + " outside (0, 1]");
    }
    weight_sum += w;
    validate_density(spec.blocks[m].sigma, 2);
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw StateSpecError("block weights sum to " + std::to_string(weight_sum) +
                         ", expected 1");
  }

  ComplexMatrix out(qubit_dimension(spec.partition.n()));
  for (std::size_t m = 0; m < subsplits.size(); ++m) {
    const auto rows = subsplit_row_indices(subsplits[m]);
    const double w = spec.blocks[m].weight;
    const ComplexMatrix& sigma = spec.blocks[m].sigma;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        out(static_cast<int>(rows[a]), static_cast<int>(rows[b])) =
            w * sigma(a, b);
      }
    }
  }
  return DensityMatrix{spec.partition.n(), std::move(out)};
}

}  // namespace qpartsep
