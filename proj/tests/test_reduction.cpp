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

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "qpartsep/eigen.hpp"
#include "qpartsep/ppt.hpp"
#include "qpartsep/reduction.hpp"
#include "qpartsep/statelib.hpp"

using namespace qpartsep;

namespace {

// Marker state whose (row, col) entry encodes the row and column indices, so
// submatrix extraction can be checked against explicit basis strings. Not a
// physical state; built directly to bypass validation.
DensityMatrix marker_state(int n) {
  const int dim = 1 << n;
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(i, j);
  }
  return DensityMatrix{n, std::move(m)};
}

DensityMatrix maximally_mixed(int n) {
  const int dim = 1 << n;
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / dim;
  return DensityMatrix{n, std::move(m)};
}

ComplexMatrix bell_projector() {
  ComplexMatrix m(4);
  m(0, 0) = 0.5;
  m(0, 3) = 0.5;
  m(3, 0) = 0.5;
  m(3, 3) = 0.5;
  return m;
}

}  // namespace

TEST_CASE("sub-split row indices reproduce the quoted basis strings") {
  // [(AC),0] || [(B),(D)] addresses strings 0001, 0100, 1011, 1110.
  const Partition p = parse_partition_label("AC|BD");
  const SubSplit ss(p, {}, {4});
  CHECK(subsplit_row_indices(ss) ==
        std::array<std::uint32_t, 4>{0b0001, 0b0100, 0b1011, 0b1110});

  const DensityMatrix rho = marker_state(4);
  const ComplexMatrix sub = submatrix(rho, ss);
  CHECK(sub(0, 0) == Complex(1, 1));
  CHECK(sub(0, 1) == Complex(1, 4));
  CHECK(sub(2, 3) == Complex(11, 14));
  CHECK(sub(3, 3) == Complex(14, 14));
}

TEST_CASE("the four sub-splits of AC|BD address the documented index sets") {
  const Partition p = parse_partition_label("AC|BD");
  const auto subsplits = enumerate_subsplits(p);
  REQUIRE(subsplits.size() == 4);
  const std::array<std::array<std::uint32_t, 4>, 4> expected{{
      {0b0000, 0b0101, 0b1010, 0b1111},
      {0b0001, 0b0100, 0b1011, 0b1110},
      {0b0010, 0b0111, 0b1000, 0b1101},
      {0b0011, 0b0110, 0b1001, 0b1100},
  }};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(subsplit_row_indices(subsplits[k]) == expected[k]);
  }
}

TEST_CASE("sub-split index sets tile the whole basis exactly once") {
  for (int n = 2; n <= 7; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      std::set<std::uint32_t> seen;
      for (const SubSplit& ss : enumerate_subsplits(p)) {
        for (std::uint32_t row : subsplit_row_indices(ss)) {
          CHECK(seen.insert(row).second);
        }
      }
      CHECK(seen.size() == (1u << n));
    }
  }
}

TEST_CASE("submatrix of the maximally mixed state is I/2^N") {
  const DensityMatrix rho = maximally_mixed(4);
  for (const SubSplit& ss :
       enumerate_subsplits(parse_partition_label("AB|CD"))) {
    ComplexMatrix expected = ComplexMatrix::identity(4);
    expected *= 1.0 / 16.0;
    CHECK(max_abs_diff(submatrix(rho, ss), expected) == 0.0);
  }
}

TEST_CASE("submatrix of the GHZ projector keeps only the matched strings") {
  const DensityMatrix rho = projector(ghz(3), 3);
  const Partition p = parse_partition_label("A|BC");
  const auto subsplits = enumerate_subsplits(p);
  // All-primed sub-split sees strings 000, 011, 100, 111; the GHZ amplitudes
  // live on 000 and 111, giving half the Bell projector pattern.
  const ComplexMatrix sub0 = submatrix(rho, subsplits[0]);
  CHECK(max_abs_diff(sub0, bell_projector()) < 1e-15);
  // The complementary sub-split sees no amplitude at all.
  const ComplexMatrix sub1 = submatrix(rho, subsplits[1]);
  CHECK(max_abs_diff(sub1, ComplexMatrix(4)) == 0.0);
}

TEST_CASE("reduction of the first example state is the Werner state") {
  for (int k = 0; k <= 10; ++k) {
    const double x = k / 10.0;
    const ReducedState rs =
        reduce(example_prime(x), parse_partition_label("A|BC"));
    CHECK(max_abs_diff(rs.mat, werner(x).mat) == 0.0);
  }
}

TEST_CASE("reduction of the second example state across B|AC is Werner") {
  for (int k = 0; k <= 10; ++k) {
    const double x = k / 10.0;
    const ReducedState rs =
        reduce(example_dprime(x), parse_partition_label("B|AC"));
    CHECK(max_abs_diff(rs.mat, werner(x).mat) == 0.0);
  }
}

TEST_CASE("reduction of the maximally mixed state is I/4") {
  for (int n = 2; n <= 6; ++n) {
    const DensityMatrix rho = maximally_mixed(n);
    for (const Partition& p : enumerate_partitions(n)) {
      ComplexMatrix expected = ComplexMatrix::identity(4);
      expected *= 0.25;
      CHECK(max_abs_diff(reduce(rho, p).mat, expected) < 1e-15);
    }
  }
}

TEST_CASE("reduction of the GHZ state is the Bell projector on every cut") {
  const DensityMatrix rho = projector(ghz(3), 3);
  for (const Partition& p : enumerate_partitions(3)) {
    const ReducedState rs = reduce(rho, p);
    CHECK(max_abs_diff(rs.mat, bell_projector()) < 1e-15);
    const auto eigs = hermitian_eigenvalues(partial_transpose(rs.mat));
    CHECK(std::abs(eigs.front() + 0.5) < 1e-9);
  }
}

TEST_CASE("two-qubit reduction is the state itself") {
  const DensityMatrix rho = random_mixed(2, 3, 70);
  const ReducedState rs = reduce(rho, parse_partition_label("A|B"));
  CHECK(max_abs_diff(rs.mat, rho.mat) == 0.0);
}

TEST_CASE("reduction preserves trace and produces valid bipartite states") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const DensityMatrix rho = random_mixed(n, 1 + static_cast<int>(seed % 4),
                                             200 + seed);
      for (const Partition& p : enumerate_partitions(n)) {
        const ReducedState rs = reduce(rho, p);
        CHECK(std::abs(trace(rs.mat) - Complex(1.0, 0.0)) < 1e-12);
        CHECK(hermiticity_defect(rs.mat) < 1e-12);
        CHECK_NOTHROW(validate_density(rs.mat, 2));
      }
    }
  }
}

TEST_CASE("reduction is linear in the state") {
  const Partition p = parse_partition_label("AB|CD");
  const DensityMatrix a = random_mixed(4, 3, 81);
  const DensityMatrix b = random_mixed(4, 2, 82);
  const double alpha = 0.375;
  ComplexMatrix mix = alpha * a.mat;
  mix += (1.0 - alpha) * b.mat;
  const ComplexMatrix lhs = reduce(DensityMatrix{4, mix}, p).mat;
  ComplexMatrix rhs = alpha * reduce(a, p).mat;
  rhs += (1.0 - alpha) * reduce(b, p).mat;
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("swapping the blocks transposes the reduction") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_mixed(4, 3, 90 + seed);
    for (const Partition& p : enumerate_partitions(4)) {
      const auto eig_rs = hermitian_eigenvalues(reduce(rho, p).mat);
      const auto eig_sr = hermitian_eigenvalues(reduce(rho, p.swapped()).mat);
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(eig_rs[k] - eig_sr[k]) < 1e-9);
      }
    }
  }
}

TEST_CASE("pure-state terms reproduce the reduction of the projector") {
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto amps = random_pure(n, 300 + seed);
      const DensityMatrix rho = projector(amps, n);
      for (const Partition& p : enumerate_partitions(n)) {
        const auto terms = reduce_pure(amps, p);
        CHECK(terms.size() == (1u << (n - 2)));
        ComplexMatrix sum(4);
        double weight_total = 0.0;
        for (const PureReductionTerm& t : terms) {
          weight_total += t.weight;
          for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
              sum(a, b) += t.weight * t.state[a] * std::conj(t.state[b]);
            }
          }
        }
        CHECK(std::abs(weight_total - 1.0) < 1e-12);
        CHECK(max_abs_diff(sum, reduce(rho, p).mat) < 1e-12);
      }
    }
  }
}

TEST_CASE("pure-state terms align positionally with enumerate_subsplits") {
  const Partition p = parse_partition_label("AC|BD");
  const auto amps = random_pure(4, 95);
  const auto terms = reduce_pure(amps, p);
  const auto subsplits = enumerate_subsplits(p);
  REQUIRE(terms.size() == subsplits.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    CHECK(terms[k].subsplit == subsplits[k]);
  }
}

TEST_CASE("GHZ across A|BC puts all weight on the all-primed term") {
  const auto terms = reduce_pure(ghz(3), parse_partition_label("A|BC"));
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].weight == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!terms[0].is_zero);
  CHECK(terms[1].weight == 0.0);
  CHECK(terms[1].is_zero);
  for (const Complex& c : terms[1].state) CHECK(c == Complex(0.0, 0.0));
}

TEST_CASE("a basis product state yields a single unit-weight |00> term") {
  const std::vector<int> bits{0, 0, 0, 0};
  const auto amps = basis_product(bits);
  for (const Partition& p : enumerate_partitions(4)) {
    const auto terms = reduce_pure(amps, p);
    CHECK(terms[0].weight == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(terms[0].state[0] == Complex(1.0, 0.0));
    for (std::size_t k = 1; k < terms.size(); ++k) {
      CHECK(terms[k].is_zero);
    }
  }
}

TEST_CASE("reduce_pure rejects unnormalized amplitudes") {
  std::vector<Complex> amps(8, Complex(0.5, 0.0));
  amps[0] = 1.0;  // norm > 1
  CHECK_THROWS_AS(reduce_pure(amps, parse_partition_label("A|BC")),
                  NotNormalized);
  CHECK_THROWS_AS(reduce_pure(std::vector<Complex>(4, Complex(0.5, 0.0)),
                              parse_partition_label("A|BC")),
                  DimensionMismatch);
}

TEST_CASE("reduce checks its qubit counts") {
  const DensityMatrix rho = random_mixed(3, 2, 99);
  CHECK_THROWS_AS(reduce(rho, parse_partition_label("A|BCD")),
                  DimensionMismatch);
  CHECK_THROWS_AS(submatrix(rho, SubSplit(parse_partition_label("A|BCD"), {},
                                          {})),
                  DimensionMismatch);
}
