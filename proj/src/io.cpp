// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace biloewner {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidArgumentError(where + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InvalidArgumentError(where + ": expected a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw InvalidArgumentError(where + ": rows must be nonempty arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw InvalidArgumentError(where + ": ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c], where);
  }
  return m;
}

Vector complex_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InvalidArgumentError(where + ": expected a nonempty list");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = complex_from_json(j[i], where);
  return v;
}

Json complex_vector_to_json(const Vector& v) {
  Json list = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) list.push_back(complex_to_json(v(i)));
  return list;
}

namespace {

const Json& require_key(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgumentError(where + ": missing key \"" + key + "\"");
  return *it;
}

}  // namespace

Json system_to_json(const BilinearSystem& sys) {
  Json j;
  j["E"] = matrix_to_json(sys.E);
  j["A"] = matrix_to_json(sys.A);
  j["N"] = matrix_to_json(sys.N);
  j["B"] = matrix_to_json(sys.B);
  j["C"] = matrix_to_json(sys.C);
  return j;
}

BilinearSystem system_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgumentError("system: expected a JSON object");
  BilinearSystem sys;
  sys.E = matrix_from_json(require_key(j, "E", "system"), "system.E");
  sys.A = matrix_from_json(require_key(j, "A", "system"), "system.A");
  sys.N = matrix_from_json(require_key(j, "N", "system"), "system.N");
  const Matrix b = matrix_from_json(require_key(j, "B", "system"), "system.B");
  if (b.cols() != 1) throw InvalidArgumentError("system.B: expected a column (n x 1)");
  sys.B = b.col(0);
  const Matrix c = matrix_from_json(require_key(j, "C", "system"), "system.C");
  if (c.rows() != 1) throw InvalidArgumentError("system.C: expected a row (1 x n)");
  sys.C = c.row(0);
  require_consistent(sys);
  return sys;
}

Json generator_to_json(const GeneratorPair& gen) {
  Json j;
  j["lambda"] = complex_vector_to_json(gen.lambda);
  j["R"] = complex_vector_to_json(gen.R);
  j["mu"] = complex_vector_to_json(gen.mu);
  j["L"] = complex_vector_to_json(gen.L);
  return j;
}

GeneratorPair generator_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgumentError("generator: expected a JSON object");
  GeneratorPair gen;
  gen.lambda = complex_vector_from_json(require_key(j, "lambda", "generator"), "generator.lambda");
  gen.R = complex_vector_from_json(require_key(j, "R", "generator"), "generator.R");
  gen.mu = complex_vector_from_json(require_key(j, "mu", "generator"), "generator.mu");
  gen.L = complex_vector_from_json(require_key(j, "L", "generator"), "generator.L");
  if (j.contains("strict_imaginary")) gen.strict_imaginary = j["strict_imaginary"].get<bool>();
  require_consistent(gen);
  return gen;
}

Json tuples_to_json(const MultiTupleSet& tuples) {
  auto side = [](const std::vector<MultiTuple>& list) {
    Json out = Json::array();
    for (const auto& t : list) {
      Json pts = Json::array();
      for (const Complex& p : t.points) pts.push_back(complex_to_json(p));
      out.push_back(std::move(pts));
    }
    return out;
  };
  Json j;
  j["left"] = side(tuples.left);
  j["right"] = side(tuples.right);
  return j;
}

MultiTupleSet tuples_from_json(const Json& j) {
  auto side = [](const Json& list, const std::string& where) {
    if (!list.is_array()) throw InvalidArgumentError(where + ": expected a list of tuples");
    std::vector<MultiTuple> out;
    for (const auto& pts : list) {
      if (!pts.is_array() || pts.empty())
        throw InvalidArgumentError(where + ": tuples must be nonempty lists of [re, im]");
      MultiTuple t;
      for (const auto& p : pts) t.points.push_back(complex_from_json(p, where));
      out.push_back(std::move(t));
    }
    return out;
  };
  MultiTupleSet tuples;
  tuples.left = side(require_key(j, "left", "tuples"), "tuples.left");
  tuples.right = side(require_key(j, "right", "tuples"), "tuples.right");
  return tuples;
}

Json mm_rom_to_json(const MomentMatchingROM& rom) {
  Json j;
  j["Lw"] = matrix_to_json(rom.data.Lw);
  j["Lws"] = matrix_to_json(rom.data.Lws);
  j["T"] = matrix_to_json(rom.data.T);
  j["V"] = complex_vector_to_json(rom.data.V);
  j["W"] = matrix_to_json(rom.data.W);
  j["kappa"] = rom.kappa;
  j["rho"] = static_cast<int>(rom.rho());
  j["generator"] = generator_to_json(rom.gen);
  return j;
}

MomentMatchingROM mm_rom_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgumentError("mm rom: expected a JSON object");
  MomentMatchingROM rom;
  rom.data.Lw = matrix_from_json(require_key(j, "Lw", "mm rom"), "mm_rom.Lw");
  rom.data.Lws = matrix_from_json(require_key(j, "Lws", "mm rom"), "mm_rom.Lws");
  rom.data.T = matrix_from_json(require_key(j, "T", "mm rom"), "mm_rom.T");
  rom.data.V = complex_vector_from_json(require_key(j, "V", "mm rom"), "mm_rom.V");
  const Matrix w = matrix_from_json(require_key(j, "W", "mm rom"), "mm_rom.W");
  if (w.rows() != 1) throw InvalidArgumentError("mm_rom.W: expected a row");
  rom.data.W = w.row(0);
  rom.kappa = require_key(j, "kappa", "mm rom").get<int>();
  rom.gen = generator_from_json(require_key(j, "generator", "mm rom"));
  const auto rho = rom.gen.rho();
  if (rom.kappa < 1 || rom.data.Lw.rows() != rho ||
      rom.data.Lw.cols() != rho * rom.kappa || rom.data.Lws.rows() != rho ||
      rom.data.Lws.cols() != rho * rom.kappa || rom.data.T.rows() != rho ||
      rom.data.T.cols() != rho * rom.kappa || rom.data.V.size() != rho ||
      rom.data.W.size() != rho * rom.kappa)
    throw InvalidArgumentError("mm rom: inconsistent dimensions");
  rom.data.tuples = moment_tuples(rom.gen, rom.kappa);
  return rom;
}

Json validation_report_to_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  j["errors"] = report.errors;
  j["warnings"] = report.warnings;
  if (std::isfinite(report.spectral_abscissa))
    j["spectral_abscissa"] = report.spectral_abscissa;
  else
    j["spectral_abscissa"] = nullptr;
  return j;
}

Json equivalence_report_to_json(const EquivalenceReport& report) {
  Json j;
  j["kappa"] = report.kappa;
  j["tol"] = report.tol;
  j["pass"] = report.pass;
  j["max_abs"] = report.max_abs;
  j["max_rel"] = report.max_rel;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json je;
    je["i"] = e.i;
    je["j"] = e.j;
    je["k"] = e.k;
    je["left_a"] = complex_to_json(e.left_a);
    je["left_b"] = complex_to_json(e.left_b);
    je["right_a"] = complex_to_json(e.right_a);
    je["right_b"] = complex_to_json(e.right_b);
    je["abs_left"] = e.abs_left;
    je["rel_left"] = e.rel_left;
    je["abs_right"] = e.abs_right;
    je["rel_right"] = e.rel_right;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json interpolation_report_to_json(const InterpolationReport& report) {
  Json j;
  j["tol"] = report.tol;
  j["pass"] = report.pass;
  j["max_rel"] = report.max_rel;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json je;
    je["family"] = e.family;
    je["i"] = e.i;
    je["level"] = e.level;
    Json pts = Json::array();
    for (const Complex& p : e.points) pts.push_back(complex_to_json(p));
    je["points"] = std::move(pts);
    je["h_full"] = complex_to_json(e.h_full);
    je["h_rom"] = complex_to_json(e.h_rom);
    je["rel"] = e.rel;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json bridge_report_to_json(const BridgeReport& report) {
  Json j;
  j["samples"] = report.samples;
  j["tol"] = report.tol;
  j["max_field_rel"] = report.max_field_rel;
  j["max_output_rel"] = report.max_output_rel;
  j["pass"] = report.pass;
  return j;
}

Json metrics_to_json(const SteadyStateMetrics& metrics) {
  Json j;
  j["rms_abs"] = metrics.rms_abs;
  j["rms_rel"] = metrics.rms_rel;
  j["sup_abs"] = metrics.sup_abs;
  j["zero_reference"] = metrics.zero_reference;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(path + ": " + e.what());
  }
  return j;
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << j.dump(2) << "\n";
}

namespace {

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_trace_csv(const SimulationTrace& trace, std::ostream& os) {
  os << "t,u_re,u_im,y_re,y_im\n";
  for (std::size_t k = 0; k < trace.t.size(); ++k)
    os << full_precision(trace.t[k]) << "," << full_precision(trace.u[k].real()) << ","
       << full_precision(trace.u[k].imag()) << "," << full_precision(trace.y[k].real()) << ","
       << full_precision(trace.y[k].imag()) << "\n";
}

void save_trace_csv(const SimulationTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  write_trace_csv(trace, out);
}

SimulationTrace load_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  SimulationTrace trace;
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgumentError(path + ": empty trace file");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double vals[5];
    char comma;
    if (!(row >> vals[0])) throw InvalidArgumentError(path + ": malformed row \"" + line + "\"");
    for (int c = 1; c < 5; ++c)
      if (!(row >> comma >> vals[c]))
        throw InvalidArgumentError(path + ": malformed row \"" + line + "\"");
    trace.t.push_back(vals[0]);
    trace.u.emplace_back(vals[1], vals[2]);
    trace.y.emplace_back(vals[3], vals[4]);
  }
  if (trace.t.size() < 2) throw InvalidArgumentError(path + ": trace needs at least two samples");
  return trace;
}

}  // namespace biloewner
