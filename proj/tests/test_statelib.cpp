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

#include "doctest.h"
#include "qpartsep/eigen.hpp"
#include "qpartsep/ppt.hpp"
#include "qpartsep/rng.hpp"
#include "qpartsep/statelib.hpp"

using namespace qpartsep;

TEST_CASE("Werner entries at the endpoints and the midpoint") {
  SUBCASE("x = 0 is maximally mixed") {
    ComplexMatrix expected = ComplexMatrix::identity(4);
    expected *= 0.25;
    CHECK(max_abs_diff(werner(0.0).mat, expected) == 0.0);
  }
  SUBCASE("x = 1 is the singlet projector") {
    const ComplexMatrix m = werner(1.0).mat;
    CHECK(m(0, 0) == Complex(0.0, 0.0));
    CHECK(m(1, 1) == Complex(0.5, 0.0));
    CHECK(m(2, 2) == Complex(0.5, 0.0));
    CHECK(m(3, 3) == Complex(0.0, 0.0));
    CHECK(m(1, 2) == Complex(-0.5, 0.0));
    CHECK(m(2, 1) == Complex(-0.5, 0.0));
  }
  SUBCASE("x = 0.5") {
    const ComplexMatrix m = werner(0.5).mat;
    CHECK(m(0, 0) == Complex(0.125, 0.0));
    CHECK(m(1, 1) == Complex(0.375, 0.0));
    CHECK(m(2, 2) == Complex(0.375, 0.0));
    CHECK(m(3, 3) == Complex(0.125, 0.0));
    CHECK(m(1, 2) == Complex(-0.25, 0.0));
  }
}

TEST_CASE("Werner states are valid across the whole range") {
  for (int k = 0; k <= 10; ++k) {
    CHECK_NOTHROW(validate_density(werner(k / 10.0).mat, 2));
  }
  CHECK_THROWS_AS(werner(-0.01), OutOfRange);
  CHECK_THROWS_AS(werner(1.01), OutOfRange);
}

TEST_CASE("example states carry the printed entry patterns") {
  const double x = 0.7;
  const double q = (1.0 - x) / 4.0;
  const double h = x / 2.0;

  const ComplexMatrix prime = example_prime(x).mat;
  CHECK(prime(0, 0) == Complex(0.0, 0.0));
  CHECK(prime(1, 1) == Complex(q, 0.0));
  CHECK(prime(2, 2) == Complex(q, 0.0));
  CHECK(prime(3, 3) == Complex(h, 0.0));
  CHECK(prime(3, 4) == Complex(-h, 0.0));
  CHECK(prime(4, 3) == Complex(-h, 0.0));
  CHECK(prime(4, 4) == Complex(h, 0.0));
  CHECK(prime(5, 5) == Complex(q, 0.0));
  CHECK(prime(6, 6) == Complex(q, 0.0));
  CHECK(prime(7, 7) == Complex(0.0, 0.0));

  const ComplexMatrix dprime = example_dprime(x).mat;
  CHECK(dprime(0, 0) == Complex(0.0, 0.0));
  CHECK(dprime(1, 1) == Complex(q, 0.0));
  CHECK(dprime(2, 2) == Complex(h, 0.0));
  CHECK(dprime(2, 5) == Complex(-h, 0.0));
  CHECK(dprime(5, 2) == Complex(-h, 0.0));
  CHECK(dprime(5, 5) == Complex(h, 0.0));
  CHECK(dprime(3, 3) == Complex(q, 0.0));
  CHECK(dprime(4, 4) == Complex(q, 0.0));
  CHECK(dprime(6, 6) == Complex(q, 0.0));
  CHECK(dprime(7, 7) == Complex(0.0, 0.0));
}

TEST_CASE("example states at x = 0 have zero singlet blocks") {
  const ComplexMatrix m = example_prime(0.0).mat;
  for (int i = 0; i < 8; ++i) {
    const double expected = (i == 0 || i == 3 || i == 4 || i == 7) ? 0.0 : 0.25;
    CHECK(m(i, i) == Complex(expected, 0.0));
  }
  CHECK(m(3, 4) == Complex(0.0, 0.0));
}

TEST_CASE("GHZ amplitudes sit at the all-zero and all-one strings") {
  const auto amps = ghz(3);
  REQUIRE(amps.size() == 8);
  const double a = 1.0 / std::sqrt(2.0);
  CHECK(amps[0] == Complex(a, 0.0));
  CHECK(amps[7] == Complex(a, 0.0));
  for (int k = 1; k < 7; ++k) CHECK(amps[k] == Complex(0.0, 0.0));
}

TEST_CASE("basis_product places a single unit amplitude") {
  const std::vector<int> bits{1, 0, 1};
  const auto amps = basis_product(bits);
  REQUIRE(amps.size() == 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(amps[k] == Complex(k == 0b101 ? 1.0 : 0.0, 0.0));
  }
  CHECK_THROWS_AS(basis_product(std::vector<int>{0, 2}), OutOfRange);
}

TEST_CASE("random generators are reproducible bit for bit") {
  CHECK(random_pure(4, 99) == random_pure(4, 99));
  CHECK(random_pure(4, 99) != random_pure(4, 100));
  CHECK(random_mixed(3, 4, 7).mat == random_mixed(3, 4, 7).mat);
  const Partition p = parse_partition_label("A|BC");
  CHECK(random_partition_separable(p, 5, 3).mat ==
        random_partition_separable(p, 5, 3).mat);
}

TEST_CASE("random pure states are normalized") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    double norm2 = 0.0;
    for (const Complex& c : random_pure(3, seed)) norm2 += std::norm(c);
    CHECK(std::abs(norm2 - 1.0) < 1e-12);
  }
}

TEST_CASE("random mixed states validate and respect the rank bound") {
  const DensityMatrix rho = random_mixed(3, 4, 11);
  CHECK_NOTHROW(validate_density(rho.mat, 3));
  const auto eigs = hermitian_eigenvalues(rho.mat);
  int nonzero = 0;
  for (double e : eigs) {
    if (e > 1e-9) ++nonzero;
  }
  CHECK(nonzero <= 4);
  CHECK_THROWS_AS(random_mixed(3, 0, 1), OutOfRange);
}

TEST_CASE("partition-separable samples validate and stay PPT") {
  const Partition p = parse_partition_label("A|BC");
  const DensityMatrix rho = random_partition_separable(p, 5, 17);
  CHECK_NOTHROW(validate_density(rho.mat, 3));
  const PptVerdict v = ppt_verdict(reduce(rho, p));
  CHECK(v.classification == PptClassification::PPT_INCONCLUSIVE);
  CHECK_THROWS_AS(random_partition_separable(p, 0, 1), OutOfRange);
}

TEST_CASE("constructed states reduce back to the block mixture") {
  // Split the Werner state at x = 0.9 into two equal halves.
  const Partition p = parse_partition_label("B|AC");
  ComplexMatrix half = werner(0.9).mat;  // used for both blocks
  ConstructorSpec spec{p, {{0.5, half}, {0.5, half}}};
  const DensityMatrix rho = construct_inseparable(spec);
  CHECK_NOTHROW(validate_density(rho.mat, 3));

  const ReducedState rs = reduce(rho, p);
  CHECK(max_abs_diff(rs.mat, werner(0.9).mat) < 1e-15);
  CHECK(ppt_verdict(rs).classification == PptClassification::NPT_INSEPARABLE);

  // The scan reports the same cut under its normalized label.
  bool flagged = false;
  for (const PptVerdict& v : scan_partitions(rho)) {
    if (v.partition == p || v.partition == p.swapped()) {
      flagged = v.classification == PptClassification::NPT_INSEPARABLE;
    }
  }
  CHECK(flagged);
}

TEST_CASE("constructing from identity blocks rebuilds the mixed state") {
  for (int n = 3; n <= 4; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      const std::size_t count = enumerate_subsplits(p).size();
      ComplexMatrix sigma = ComplexMatrix::identity(4);
      sigma *= 0.25;
      ConstructorSpec spec{p, {}};
      for (std::size_t m = 0; m < count; ++m) {
        spec.blocks.push_back({1.0 / static_cast<double>(count), sigma});
      }
      const DensityMatrix rho = construct_inseparable(spec);
      ComplexMatrix expected = ComplexMatrix::identity(1 << n);
      expected *= 1.0 / (1 << n);
      CHECK(max_abs_diff(rho.mat, expected) < 1e-15);
    }
  }
}

TEST_CASE("constructor round-trips random blocks through reduce") {
  Rng rng(5);
  const Partition p = parse_partition_label("AC|BD");
  const auto count = enumerate_subsplits(p).size();
  ConstructorSpec spec{p, {}};
  std::vector<double> weights(count);
  double sum = 0.0;
  for (auto& w : weights) {
    w = rng.exponential() + 1e-3;
    sum += w;
  }
  for (std::size_t m = 0; m < count; ++m) {
    spec.blocks.push_back(
        {weights[m] / sum, random_mixed(2, 2, 400 + m).mat});
  }
  const DensityMatrix rho = construct_inseparable(spec);
  ComplexMatrix mixture(4);
  for (const auto& b : spec.blocks) {
    ComplexMatrix scaled = b.sigma;
    scaled *= b.weight;
    mixture += scaled;
  }
  CHECK(max_abs_diff(reduce(rho, p).mat, mixture) < 1e-12);
}

TEST_CASE("the constructed spectrum is the union of scaled block spectra") {
  const Partition p = parse_partition_label("A|BC");
  ConstructorSpec spec{p,
                       {{0.25, random_mixed(2, 2, 501).mat},
                        {0.75, random_mixed(2, 3, 502).mat}}};
  const DensityMatrix rho = construct_inseparable(spec);
  std::vector<double> expected;
  for (const auto& b : spec.blocks) {
    for (double e : hermitian_eigenvalues(b.sigma)) {
      expected.push_back(b.weight * e);
    }
  }
  std::sort(expected.begin(), expected.end());
  const auto eigs = hermitian_eigenvalues(rho.mat);
  REQUIRE(eigs.size() == expected.size());
  for (std::size_t k = 0; k < eigs.size(); ++k) {
    CHECK(std::abs(eigs[k] - expected[k]) < 1e-9);
  }
}

TEST_CASE("constructor rejects malformed specs") {
  const Partition p = parse_partition_label("A|BC");
  ComplexMatrix sigma = ComplexMatrix::identity(4);
  sigma *= 0.25;

  SUBCASE("wrong block count") {
    ConstructorSpec spec{p, {{1.0, sigma}}};
    CHECK_THROWS_AS(construct_inseparable(spec), StateSpecError);
  }
  SUBCASE("weights must sum to one") {
    ConstructorSpec spec{p, {{0.5, sigma}, {0.4, sigma}}};
    CHECK_THROWS_AS(construct_inseparable(spec), StateSpecError);
  }
  SUBCASE("zero weights are forbidden") {
    ConstructorSpec spec{p, {{1.0, sigma}, {0.0, sigma}}};
    CHECK_THROWS_AS(construct_inseparable(spec), StateSpecError);
  }
  SUBCASE("blocks must be valid bipartite states") {
    ComplexMatrix bad(4);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    ConstructorSpec spec{p, {{0.5, sigma}, {0.5, bad}}};
    CHECK_THROWS_AS(construct_inseparable(spec), NotPositive);
  }
}

TEST_CASE("projector rejects unnormalized amplitudes") {
  std::vector<Complex> amps(8, Complex(1.0, 0.0));
  CHECK_THROWS_AS(projector(amps, 3), NotNormalized);
  CHECK_THROWS_AS(projector(ghz(3), 4), DimensionMismatch);
}
