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

#ifndef QPARTSEP_RNG_HPP
#define QPARTSEP_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace qpartsep {

/// Seeded generator used by all random state sampling. Backed by
/// std::mt19937_64 with hand-rolled output transforms (uniform mapping,
/// Box-Muller, inverse-CDF exponential) so a seed produces the same stream
/// everywhere the engine does. Not thread-safe; each thread owns its own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller.
  double normal();

  /// Exponential with rate 1.
  double exponential();

  std::complex<double> complex_normal();

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace qpartsep

#endif  // QPARTSEP_RNG_HPP
