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

#ifndef QPARTSEP_COMPLEX_MATRIX_HPP
#define QPARTSEP_COMPLEX_MATRIX_HPP

#include <cassert>
#include <complex>
#include <vector>

#include "qpartsep/errors.hpp"

namespace qpartsep {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension (must be positive).
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int row, int col) {
    assert(row >= 0 && row < dim_ && col >= 0 && col < dim_);
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }
  const Complex& operator()(int row, int col) const {
    assert(row >= 0 && row < dim_ && col >= 0 && col < dim_);
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(double scale);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(double scale, ComplexMatrix m);

/// Matrix product; both factors must share one dimension.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// Kronecker product. Row index of the result is (row of a) major,
/// (row of b) minor, matching the basis-index bit order.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

/// max_ij |a(i,j) - conj(a(j,i))|.
double hermiticity_defect(const ComplexMatrix& a);

/// max_ij |a(i,j) - b(i,j)|; throws on dimension mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qpartsep

#endif  // QPARTSEP_COMPLEX_MATRIX_HPP
