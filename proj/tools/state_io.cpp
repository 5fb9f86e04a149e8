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

#include "state_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "qpartsep/partition.hpp"

namespace qpartsep::cli {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw FileFormatError("field '" + field + "' must be a nonempty array of rows");
  }
  const std::size_t dim = j.size();
  ComplexMatrix m(static_cast<int>(dim));
  for (std::size_t row = 0; row < dim; ++row) {
    const json& jrow = j[row];
    if (!jrow.is_array() || jrow.size() != dim) {
      throw FileFormatError("field '" + field + "' row " + std::to_string(row) +
                            " has " + std::to_string(jrow.size()) +
                            " entries, expected " + std::to_string(dim));
    }
    for (std::size_t col = 0; col < dim; ++col) {
      const json& e = jrow[col];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw FileFormatError("field '" + field + "' entry (" +
                              std::to_string(row) + ", " + std::to_string(col) +
                              ") must be a [re, im] pair");
      }
      m(static_cast<int>(row), static_cast<int>(col)) =
          Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

StateFile parse_state_json(const json& j) {
  if (!j.is_object()) {
    throw FileFormatError("state file must be a JSON object");
  }
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw FileFormatError("field 'n_qubits' missing or not an integer");
  }
  const int n = j["n_qubits"].get<int>();
  if (n < 1 || n > kMaxQubits) {
    throw FileFormatError("field 'n_qubits' is " + std::to_string(n) +
                          "; supported range is 1 to " +
                          std::to_string(kMaxQubits));
  }
  if (!j.contains("matrix")) {
    throw FileFormatError("field 'matrix' missing");
  }
  StateFile sf;
  sf.n_qubits = n;
  sf.matrix = matrix_from_json(j["matrix"], "matrix");
  const int dim = 1 << n;
  if (sf.matrix.dim() != dim) {
    throw FileFormatError("field 'matrix' is " +
                          std::to_string(sf.matrix.dim()) + "x" +
                          std::to_string(sf.matrix.dim()) + " but n_qubits = " +
                          std::to_string(n) + " needs " + std::to_string(dim) +
                          "x" + std::to_string(dim));
  }
  if (j.contains("metadata")) {
    const json& md = j["metadata"];
    if (!md.is_object()) {
      throw FileFormatError("field 'metadata' must be an object");
    }
    StateMetadata meta;
    if (md.contains("name")) meta.name = md["name"].get<std::string>();
    if (md.contains("source")) meta.source = md["source"].get<std::string>();
    if (md.contains("parameters")) meta.parameters = md["parameters"];
    sf.metadata = std::move(meta);
  }
  return sf;
}

StateFile read_state(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FileFormatError(std::string("not valid JSON: ") + e.what());
  }
  return parse_state_json(j);
}

json state_to_json(const StateFile& sf) {
  json j;
  j["n_qubits"] = sf.n_qubits;
  j["matrix"] = matrix_to_json(sf.matrix);
  if (sf.metadata) {
    json md;
    if (!sf.metadata->name.empty()) md["name"] = sf.metadata->name;
    if (!sf.metadata->source.empty()) md["source"] = sf.metadata->source;
    if (!sf.metadata->parameters.is_null()) {
      md["parameters"] = sf.metadata->parameters;
    }
    j["metadata"] = std::move(md);
  }
  return j;
}

void write_state(std::ostream& out, const StateFile& sf) {
  out << state_to_json(sf).dump(2) << "\n";
}

StateFile to_state_file(const DensityMatrix& rho, std::string name,
                        std::string source, json parameters) {
  StateFile sf;
  sf.n_qubits = rho.n_qubits;
  sf.matrix = rho.mat;
  sf.metadata = StateMetadata{std::move(name), std::move(source),
                              std::move(parameters)};
  return sf;
}

ReportRecord record_from_verdict(const PptVerdict& v,
                                 const ComplexMatrix& reduced) {
  return ReportRecord{partition_label(v.partition), reduced, v.pt_eigenvalues,
                      v.min_eig, v.classification};
}

json report_to_json(const Report& r) {
  json j;
  j["state"] = r.state;
  j["tolerance"] = r.tolerance;
  json parts = json::array();
  for (const ReportRecord& rec : r.records) {
    json p;
    p["label"] = rec.label;
    p["min_eig"] = rec.min_eig;
    p["classification"] = to_string(rec.classification);
    p["pt_eigenvalues"] = rec.pt_eigenvalues;
    p["reduced"] = matrix_to_json(rec.reduced);
    parts.push_back(std::move(p));
  }
  j["partitions"] = std::move(parts);
  return j;
}

Report report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("state") || !j.contains("partitions") ||
      !j["partitions"].is_array()) {
    throw FileFormatError("report must be an object with 'state' and 'partitions'");
  }
  Report r;
  r.state = j["state"].get<std::string>();
  if (j.contains("tolerance")) r.tolerance = j["tolerance"].get<double>();
  for (const json& p : j["partitions"]) {
    ReportRecord rec;
    rec.label = p.at("label").get<std::string>();
    rec.min_eig = p.at("min_eig").get<double>();
    const auto cls = p.at("classification").get<std::string>();
    if (cls == "NPT_INSEPARABLE") {
      rec.classification = PptClassification::NPT_INSEPARABLE;
    } else if (cls == "PPT_INCONCLUSIVE") {
      rec.classification = PptClassification::PPT_INCONCLUSIVE;
    } else {
      throw FileFormatError("unknown classification '" + cls + "'");
    }
    const json& eigs = p.at("pt_eigenvalues");
    if (!eigs.is_array() || eigs.size() != 4) {
      throw FileFormatError("field 'pt_eigenvalues' must have 4 entries");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      rec.pt_eigenvalues[k] = eigs[k].get<double>();
    }
    if (p.contains("reduced")) {
      rec.reduced = matrix_from_json(p["reduced"], "reduced");
    }
    r.records.push_back(std::move(rec));
  }
  return r;
}

namespace {

void print_matrix(std::ostream& out, const ComplexMatrix& m,
                  const char* indent) {
  std::ostringstream os;
  os << std::setprecision(6);
  for (int i = 0; i < m.dim(); ++i) {
    os << indent;
    for (int j = 0; j < m.dim(); ++j) {
      const Complex e = m(i, j);
      os << "(" << e.real() << (e.imag() < 0 ? "" : "+") << e.imag() << "i)";
      if (j + 1 < m.dim()) os << "  ";
    }
    os << "\n";
  }
  out << os.str();
}

}  // namespace

void write_report_text(std::ostream& out, const Report& r,
                       bool show_reduced_matrix) {
  out << "state: " << r.state << "\n";
  out << "verdict tolerance: " << r.tolerance << "\n";
  std::size_t npt = 0;
  std::vector<std::string> npt_labels;
  for (const ReportRecord& rec : r.records) {
    out << "partition " << rec.label << ": " << to_string(rec.classification);
    if (rec.classification == PptClassification::NPT_INSEPARABLE) {
      out << " -- reduction is entangled; the state is " << rec.label
          << "-inseparable and entangled";
      ++npt;
      npt_labels.push_back(rec.label);
    } else {
      out << " -- reduction satisfies PPT; proves nothing about " << rec.label
          << "-separability of the input";
    }
    out << "\n";
    out << "  min PT eigenvalue: " << rec.min_eig << "\n";
    out << "  PT eigenvalues:";
    for (double e : rec.pt_eigenvalues) out << " " << e;
    out << "\n";
    if (show_reduced_matrix) {
      out << "  reduced state:\n";
      print_matrix(out, rec.reduced, "    ");
    }
  }
  out << "summary: " << npt << " of " << r.records.size()
      << " partitions NPT_INSEPARABLE";
  if (npt > 0) {
    out << " (";
    for (std::size_t k = 0; k < npt_labels.size(); ++k) {
      if (k) out << ", ";
      out << npt_labels[k];
    }
    out << ")";
  }
  out << "\n";
}

ConstructorSpec parse_constructor_spec(const json& j) {
  if (!j.is_object() || !j.contains("partition") || !j.contains("blocks")) {
    throw FileFormatError(
        "constructor spec must be an object with 'partition' and 'blocks'");
  }
  if (!j["partition"].is_string()) {
    throw FileFormatError("field 'partition' must be a string label");
  }
  Partition p = parse_partition_label(j["partition"].get<std::string>());
  if (p.n() > kMaxQubits) {
    throw FileFormatError("partition spans " + std::to_string(p.n()) +
                          " qubits; supported range is 2 to " +
                          std::to_string(kMaxQubits));
  }
  if (!j["blocks"].is_array()) {
    throw FileFormatError("field 'blocks' must be an array");
  }
  std::vector<ConstructorBlock> blocks;
  std::size_t idx = 0;
  for (const json& b : j["blocks"]) {
    if (!b.is_object() || !b.contains("weight") || !b["weight"].is_number() ||
        !b.contains("sigma")) {
      throw FileFormatError("block " + std::to_string(idx) +
                            " must be {\"weight\": w, \"sigma\": [...]}");
    }
    ConstructorBlock block;
    block.weight = b["weight"].get<double>();
    block.sigma = matrix_from_json(b["sigma"], "sigma");
    if (block.sigma.dim() != 4) {
      throw FileFormatError("block " + std::to_string(idx) +
                            " sigma must be 4x4");
    }
    blocks.push_back(std::move(block));
    ++idx;
  }
  return ConstructorSpec{std::move(p), std::move(blocks)};
}

}  // namespace qpartsep::cli
