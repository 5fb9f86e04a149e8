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

#include "qpartsep/complex_matrix.hpp"

#include <algorithm>
#include <cstddef>

namespace qpartsep {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim <= 0) {
    throw DimensionMismatch("matrix dimension must be positive, got " +
                            std::to_string(dim));
  }
  entries_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (dim_ != other.dim_) {
    throw DimensionMismatch("matrix sum: dims " + std::to_string(dim_) +
                            " and " + std::to_string(other.dim_));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator*(double scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mat_mul: dims " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = std::conj(a(j, i));
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int ia = 0; ia < na; ++ia) {
    for (int ja = 0; ja < na; ++ja) {
      const Complex f = a(ia, ja);
      if (f == Complex(0.0, 0.0)) continue;
      for (int ib = 0; ib < nb; ++ib) {
        for (int jb = 0; jb < nb; ++jb) {
          out(ia * nb + ib, ja * nb + jb) = f * b(ib, jb);
        }
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex t(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double hermiticity_defect(const ComplexMatrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("max_abs_diff: dims " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

}  // namespace qpartsep
