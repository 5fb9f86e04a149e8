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

#ifndef QPARTSEP_ERRORS_HPP
#define QPARTSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpartsep {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class TraceNotOne : public Error {
 public:
  using Error::Error;
};

/// Positivity check failed; carries the offending minimum eigenvalue.
class NotPositive : public Error {
 public:
  NotPositive(const std::string& msg, double min_eigenvalue)
      : Error(msg), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

/// Malformed partition or sub-split: bad blocks, bad label syntax, or a
/// qubit-count mismatch.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Invalid block list for the inseparable-state constructor.
class StateSpecError : public Error {
 public:
  using Error::Error;
};

/// Scalar parameter outside its documented range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace qpartsep

#endif  // QPARTSEP_ERRORS_HPP
