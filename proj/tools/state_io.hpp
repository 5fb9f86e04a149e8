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

#ifndef QPARTSEP_TOOLS_STATE_IO_HPP
#define QPARTSEP_TOOLS_STATE_IO_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpartsep/complex_matrix.hpp"
#include "qpartsep/density_matrix.hpp"
#include "qpartsep/ppt.hpp"
#include "qpartsep/statelib.hpp"

namespace qpartsep::cli {

/// Input file is not a well-formed state/spec file (bad JSON, missing or
/// mistyped fields, wrong matrix shape, qubit count over the CLI cap).
class FileFormatError : public Error {
 public:
  using Error::Error;
};

/// Largest state the CLI accepts: 2^12 x 2^12 entries.
inline constexpr int kMaxQubits = 12;

struct StateMetadata {
  std::string name;
  std::string source;
  nlohmann::json parameters;  // free-form object

  bool operator==(const StateMetadata&) const = default;
};

/// On-disk state format: {"n_qubits": N, "matrix": [[[re, im], ...], ...],
/// "metadata": {...}?}. Serialized doubles round-trip exactly.
struct StateFile {
  int n_qubits = 0;
  ComplexMatrix matrix;
  std::optional<StateMetadata> metadata;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& field);

StateFile parse_state_json(const nlohmann::json& j);
StateFile read_state(std::istream& in);
nlohmann::json state_to_json(const StateFile& sf);
void write_state(std::ostream& out, const StateFile& sf);

StateFile to_state_file(const DensityMatrix& rho, std::string name,
                        std::string source, nlohmann::json parameters);

struct ReportRecord {
  std::string label;
  ComplexMatrix reduced;  // 4x4
  std::array<double, 4> pt_eigenvalues{};
  double min_eig = 0.0;
  PptClassification classification = PptClassification::PPT_INCONCLUSIVE;
};

/// One record per requested partition plus the verdict tolerance.
struct Report {
  std::string state;
  double tolerance = 0.0;
  std::vector<ReportRecord> records;
};

ReportRecord record_from_verdict(const PptVerdict& v,
                                 const ComplexMatrix& reduced);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
void write_report_text(std::ostream& out, const Report& r,
                       bool show_reduced_matrix);

/// Constructor spec format: {"partition": "B|AC",
/// "blocks": [{"weight": w, "sigma": [[[re, im], ...] x4]}, ...]}.
ConstructorSpec parse_constructor_spec(const nlohmann::json& j);

}  // namespace qpartsep::cli

#endif  // QPARTSEP_TOOLS_STATE_IO_HPP
