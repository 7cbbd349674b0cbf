// JSON serialization for families, tables, transcripts, and reports.
// Complex numbers are emitted as [re, im] pairs; matrices row-major.

#pragma once

#include "rsp/division_algebra.hpp"
#include "rsp/frames.hpp"
#include "rsp/protocols.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

namespace rsp {

using json = nlohmann::json;

inline constexpr int kTranscriptVersion = 1;

inline json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const Vec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_json(v(i)));
  return arr;
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json real_matrix_to_json(const RealMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RealMat real_matrix_from_json(const json& j) {
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) throw std::invalid_argument("matrix JSON: empty");
  Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  RealMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j.at(r).size()) != cols) {
      throw std::invalid_argument("matrix JSON: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

// Frame families round-trip losslessly: entries are integers.
inline json family_to_json(const FrameFamily& f) {
  json mats = json::array();
  for (const RealMat& m : f.mats) mats.push_back(real_matrix_to_json(m));
  return json{{"dim", f.dim}, {"matrices", std::move(mats)}};
}

inline FrameFamily family_from_json(const json& j) {
  FrameFamily f;
  f.dim = j.at("dim").get<Eigen::Index>();
  for (const json& m : j.at("matrices")) f.mats.push_back(real_matrix_from_json(m));
  return f;
}

inline FrameFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  json j;
  in >> j;
  return family_from_json(j);
}

inline json table_to_json(const MultiplicationTable& t) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < t.dim(); ++i)
    for (Eigen::Index j = 0; j < t.dim(); ++j)
      entries.push_back(json{{"i", i}, {"j", j}, {"k", t.target(i, j)}, {"sign", t.sign(i, j)}});
  return json{{"dim", t.dim()}, {"entries", std::move(entries)}};
}

inline json report_to_json(const FrameReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"max_residual", c.max_residual}});
  }
  return json{{"tolerance", r.tol}, {"checks", std::move(checks)}, {"overall_pass", r.overall_pass}};
}

inline json reconciliation_to_json(const ReconciliationReport& r) {
  json matches = json::array();
  for (const MatrixMatch& m : r.matches) {
    json entry{{"sign", m.sign}, {"residual", m.residual}};
    if (m.index >= 0) {
      entry["index"] = m.index;
    } else {
      entry["index"] = nullptr;
    }
    matches.push_back(std::move(entry));
  }
  return json{{"matches", std::move(matches)},
              {"full_correspondence", r.full_correspondence}};
}

inline json verdict_to_json(const DimensionVerdict& v) {
  return json{{"dim", v.dim},
              {"realizable", v.realizable},
              {"radon_number", v.radon_number},
              {"obstruction_note", v.obstruction_note}};
}

// The transcript carries exactly one classical Alice-to-Bob field: "outcome".
inline json transcript_to_json(const ProtocolTranscript& t) {
  json basis = json::array();
  for (const StateVector& b : t.measurement_basis) basis.push_back(to_json(b.amps()));
  json probs = json::array();
  for (Eigen::Index i = 0; i < t.probabilities.size(); ++i) probs.push_back(t.probabilities(i));
  json j{{"transcript_version", kTranscriptVersion},
         {"scheme", scheme_name(t.scheme)},
         {"dim", t.dim},
         {"target", to_json(t.target.amps())},
         {"measurement_basis", std::move(basis)},
         {"probabilities", std::move(probs)},
         {"outcome", t.outcome},
         {"correction", to_json(t.correction)},
         {"bob_state", to_json(t.bob_state.amps())},
         {"fidelity", t.fidelity}};
  if (t.alice_pre_rotation) {
    j["alice_pre_rotation"] = to_json(*t.alice_pre_rotation);
  }
  return j;
}

}  // namespace rsp
