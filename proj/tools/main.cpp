// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: validate, tf eval, reduce blf, reduce mm,
// check kappa, check interpolation, simulate, compare, demo.
// Exit codes: 0 success, 1 domain error or failed check (machine-readable
// JSON error on stderr for hard errors), 2 usage error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "biloewner/io.hpp"
#include "biloewner/lofuncs.hpp"
#include "biloewner/pencil.hpp"
#include "biloewner/rom.hpp"
#include "biloewner/sim.hpp"
#include "biloewner/synth.hpp"
#include "biloewner/volterra.hpp"

namespace {

using namespace biloewner;

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Vector parse_complex_list(const std::string& text, const std::string& where) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(where + ": " + e.what());
  }
  return complex_vector_from_json(j, where);
}

int run_validate(const std::string& system_path, const std::string& generator_path,
                 int kappa_max) {
  const BilinearSystem sys = system_from_json(load_json(system_path));
  std::optional<GeneratorPair> gen;
  if (!generator_path.empty()) gen = generator_from_json(load_json(generator_path));
  const ValidationReport report =
      validate_system(sys, gen.has_value() ? &*gen : nullptr, kappa_max);
  std::cout << validation_report_to_json(report).dump(2) << "\n";
  return report.ok() ? 0 : 1;
}

int run_tf_eval(const std::string& system_path, const std::string& points_path, int level,
                int max_level, const std::string& out_path) {
  const BilinearSystem sys = system_from_json(load_json(system_path));
  const Json pts = load_json(points_path);
  if (!pts.is_array()) throw InvalidArgumentError("points: expected a JSON list of tuples");
  std::vector<std::vector<Complex>> grid;
  for (std::size_t g = 0; g < pts.size(); ++g) {
    if (!pts[g].is_array())
      throw InvalidArgumentError("points: tuple " + std::to_string(g) + " is not a list");
    std::vector<Complex> tuple;
    for (const auto& p : pts[g])
      tuple.push_back(complex_from_json(p, "points[" + std::to_string(g) + "]"));
    grid.push_back(std::move(tuple));
  }
  if (level <= 0) level = grid.empty() ? 1 : static_cast<int>(grid[0].size());
  const std::vector<Complex> values = eval_tf_grid(sys, level, grid, max_level);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw InvalidArgumentError("cannot write " + out_path);
    os = &file;
  }
  for (int c = 1; c <= level; ++c) *os << "s" << c << "_re,s" << c << "_im,";
  *os << "h_re,h_im\n";
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (const Complex& p : grid[g])
      *os << full_precision(p.real()) << "," << full_precision(p.imag()) << ",";
    *os << full_precision(values[g].real()) << "," << full_precision(values[g].imag()) << "\n";
  }
  return 0;
}

int run_reduce_blf(const std::string& system_path, const std::string& generator_path,
                   const std::string& tuples_path, int kappa, double svd_tol,
                   std::optional<int> max_order, const std::string& out_path) {
  const BilinearSystem sys = system_from_json(load_json(system_path));
  MultiTupleSet tuples;
  Json meta;
  meta["method"] = "blf";
  meta["svd_rel_tol"] = svd_tol;
  if (!tuples_path.empty()) {
    tuples = tuples_from_json(load_json(tuples_path));
  } else {
    if (generator_path.empty())
      throw InvalidArgumentError("reduce blf: provide --generator with --kappa, or --tuples");
    const GeneratorPair gen = generator_from_json(load_json(generator_path));
    tuples = blf_tuples(gen, kappa);
    meta["kappa"] = kappa;
    meta["generator"] = generator_to_json(gen);
  }
  const LoewnerData data = assemble_loewner(sys, tuples);
  const BilinearSystem rom = blf_rom(data, svd_tol, max_order);
  meta["order"] = static_cast<int>(rom.order());
  meta["tuples"] = tuples_to_json(tuples);

  Json out = system_to_json(rom);
  out["meta"] = std::move(meta);
  save_json(out, out_path);
  std::cout << "wrote order-" << rom.order() << " bilinear ROM to " << out_path << "\n";
  return 0;
}

int run_reduce_mm(const std::string& system_path, const std::string& generator_path, int kappa,
                  const std::string& out_path) {
  const BilinearSystem sys = system_from_json(load_json(system_path));
  const GeneratorPair gen = generator_from_json(load_json(generator_path));
  const MomentMatchingROM rom = build_mm_rom(sys, gen, kappa);
  save_json(mm_rom_to_json(rom), out_path);
  std::cout << "wrote order-" << rom.rho() << " moment-matching ROM (kappa " << kappa << ") to "
            << out_path << "\n";
  return 0;
}

void require_same_generator(const GeneratorPair& a, const GeneratorPair& b) {
  const double tol = 1e-12;
  bool same = a.rho() == b.rho();
  for (Eigen::Index i = 0; same && i < a.rho(); ++i)
    same = std::abs(a.lambda(i) - b.lambda(i)) <= tol && std::abs(a.R(i) - b.R(i)) <= tol &&
           std::abs(a.mu(i) - b.mu(i)) <= tol && std::abs(a.L(i) - b.L(i)) <= tol;
  if (!same)
    throw InvalidArgumentError("check kappa: the ROM file was built at a different generator");
}

int run_check_kappa(const std::string& a_path, const std::string& b_path,
                    const std::string& generator_path, int kappa, double tol) {
  const BilinearSystem sys_a = system_from_json(load_json(a_path));
  const GeneratorPair gen = generator_from_json(load_json(generator_path));
  const Json jb = load_json(b_path);
  EquivalenceReport report;
  if (jb.contains("Lw")) {
    // b is a moment-matching ROM: its truncated series come straight from the
    // data matrices.
    const MomentMatchingROM rom = mm_rom_from_json(jb);
    require_same_generator(gen, rom.gen);
    report = compare_series(loewner_series(sys_a, gen, std::min(kappa, rom.kappa)),
                            mm_series(rom), tol);
  } else {
    report = kappa_equivalence(sys_a, system_from_json(jb), gen, kappa, tol);
  }
  std::cout << equivalence_report_to_json(report).dump(2) << "\n";
  return report.pass ? 0 : 1;
}

int run_check_interpolation(const std::string& system_path, const std::string& rom_path,
                            const std::string& generator_path, int kappa, double tol) {
  const BilinearSystem sys = system_from_json(load_json(system_path));
  const BilinearSystem rom = system_from_json(load_json(rom_path));
  const GeneratorPair gen = generator_from_json(load_json(generator_path));
  const InterpolationReport report = interpolation_check(sys, rom, gen, kappa, tol);
  std::cout << interpolation_report_to_json(report).dump(2) << "\n";
  return report.pass ? 0 : 1;
}

int run_simulate(const std::string& system_path, const std::string& mm_rom_path,
                 const std::string& generator_path, const std::string& zeta0_text,
                 const std::string& x0_text, double horizon, double dt,
                 const std::string& out_path) {
  const GeneratorPair gen = generator_from_json(load_json(generator_path));
  const Vector zeta0 = parse_complex_list(zeta0_text, "zeta0");
  const std::vector<Complex> u = generator_signal(gen, zeta0, uniform_grid(horizon, dt));

  SimulationTrace trace;
  if (!system_path.empty()) {
    const BilinearSystem sys = system_from_json(load_json(system_path));
    Vector x0 = Vector::Zero(sys.order());
    if (!x0_text.empty()) x0 = parse_complex_list(x0_text, "x0");
    trace = simulate_bilinear(sys, u, x0, dt);
  } else {
    const MomentMatchingROM rom = mm_rom_from_json(load_json(mm_rom_path));
    Vector x0 = Vector::Zero(rom.rho());
    if (!x0_text.empty()) x0 = parse_complex_list(x0_text, "x0");
    trace = simulate_mm(rom, u, x0, dt);
  }
  if (out_path.empty()) {
    write_trace_csv(trace, std::cout);
  } else {
    save_trace_csv(trace, out_path);
    std::cout << "wrote " << trace.t.size() << " samples to " << out_path << "\n";
  }
  return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path, double fraction) {
  const SteadyStateMetrics metrics =
      steady_state_compare(load_trace_csv(a_path), load_trace_csv(b_path), fraction);
  std::cout << metrics_to_json(metrics).dump(2) << "\n";
  return 0;
}

int run_demo(const std::string& out_dir) {
  // Fixed seed and step so repeated runs are identical.
  const std::uint64_t seed = 20260810ull;
  const int n = 8;
  const int rho = 2;
  const int kappa = 2;
  const double dt = 1e-3;
  const double horizon = 20.0;

  std::filesystem::create_directories(out_dir);
  const auto path = [&](const char* name) { return out_dir + "/" + name; };

  const BilinearSystem sys = random_stable_system(seed, n);
  const GeneratorPair gen = random_imaginary_generator(seed + 1, rho);
  save_json(system_to_json(sys), path("system.json"));
  save_json(generator_to_json(gen), path("generator.json"));

  std::cout << "== validate ==\n";
  const ValidationReport vreport = validate_system(sys, &gen);
  std::cout << validation_report_to_json(vreport).dump(2) << "\n";
  if (!vreport.ok()) return 1;

  std::cout << "== reduce blf (kappa " << kappa << ") ==\n";
  const LoewnerData data = assemble_loewner(sys, blf_tuples(gen, kappa));
  const BilinearSystem rom = blf_rom(data, 1e-12);
  Json rom_json = system_to_json(rom);
  rom_json["meta"] = Json{{"method", "blf"}, {"kappa", kappa}, {"svd_rel_tol", 1e-12},
                          {"order", static_cast<int>(rom.order())},
                          {"tuples", tuples_to_json(data.tuples)}};
  save_json(rom_json, path("rom_blf.json"));
  std::cout << "order " << rom.order() << "\n";

  std::cout << "== check interpolation ==\n";
  const InterpolationReport ireport = interpolation_check(sys, rom, gen, kappa, 1e-8);
  std::cout << interpolation_report_to_json(ireport).dump(2) << "\n";

  std::cout << "== check kappa (original vs BLF ROM) ==\n";
  const EquivalenceReport eq_blf = kappa_equivalence(sys, rom, gen, kappa, 1e-8);
  std::cout << equivalence_report_to_json(eq_blf).dump(2) << "\n";

  std::cout << "== reduce mm + check kappa (original vs MM series) ==\n";
  const MomentMatchingROM mm = build_mm_rom(sys, gen, kappa);
  save_json(mm_rom_to_json(mm), path("rom_mm.json"));
  const EquivalenceReport eq_mm =
      compare_series(loewner_series(sys, gen, kappa), mm_series(mm), 1e-8);
  std::cout << equivalence_report_to_json(eq_mm).dump(2) << "\n";

  std::cout << "== kappa=1 bridge ==\n";
  const BridgeReport bridge = kappa1_bridge_check(sys, gen);
  std::cout << bridge_report_to_json(bridge).dump(2) << "\n";

  std::cout << "== simulate full vs MM ROM ==\n";
  Vector zeta0 = Vector::Constant(rho, Complex(0.01, 0.0));
  const std::vector<Complex> u = generator_signal(gen, zeta0, uniform_grid(horizon, dt));
  const SimulationTrace full_trace =
      simulate_bilinear(sys, u, Vector::Zero(n), dt);
  const SimulationTrace mm_trace = simulate_mm(mm, u, Vector::Zero(rho), dt);
  save_trace_csv(full_trace, path("trace_full.csv"));
  save_trace_csv(mm_trace, path("trace_mm.csv"));
  const SteadyStateMetrics metrics = steady_state_compare(full_trace, mm_trace);
  std::cout << metrics_to_json(metrics).dump(2) << "\n";

  Json summary;
  summary["validate"] = validation_report_to_json(vreport);
  summary["interpolation"] = interpolation_report_to_json(ireport);
  summary["kappa_blf"] = equivalence_report_to_json(eq_blf);
  summary["kappa_mm"] = equivalence_report_to_json(eq_mm);
  summary["bridge"] = bridge_report_to_json(bridge);
  summary["steady_state"] = metrics_to_json(metrics);
  save_json(summary, path("reports.json"));
  std::cout << "artifacts in " << out_dir << "\n";

  const bool ok = ireport.pass && eq_blf.pass && eq_mm.pass && bridge.pass;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model-order reduction for SISO bilinear systems (Loewner pencil and "
               "truncated Loewner-function moment matching)"};
  app.require_subcommand(1);
  int rc = 0;

  // validate
  auto* validate = app.add_subcommand("validate", "validate a system (and optional generator)");
  std::string v_system, v_generator;
  int v_kappa_max = kDefaultResonanceScanOrder;
  validate->add_option("--system", v_system, "system JSON file")->required();
  validate->add_option("--generator", v_generator, "generator JSON file");
  validate->add_option("--kappa-max", v_kappa_max, "resonance scan order");
  validate->callback([&] { rc = run_validate(v_system, v_generator, v_kappa_max); });

  // tf eval
  auto* tf = app.add_subcommand("tf", "generalized transfer functions");
  tf->require_subcommand(1);
  auto* tf_eval = tf->add_subcommand("eval", "evaluate H_l on a grid of point tuples (CSV out)");
  std::string t_system, t_points, t_out;
  int t_level = 0, t_max_level = kDefaultMaxChainLevel;
  tf_eval->add_option("--system", t_system, "system JSON file")->required();
  tf_eval->add_option("--points", t_points, "JSON list of point tuples")->required();
  tf_eval->add_option("--level", t_level, "tuple length l (default: inferred)");
  tf_eval->add_option("--max-level", t_max_level, "level cap");
  tf_eval->add_option("--out", t_out, "output CSV path (default: stdout)");
  tf_eval->callback([&] { rc = run_tf_eval(t_system, t_points, t_level, t_max_level, t_out); });

  // reduce blf / reduce mm
  auto* reduce = app.add_subcommand("reduce", "build reduced-order models");
  reduce->require_subcommand(1);
  auto* blf = reduce->add_subcommand("blf", "interpolatory bilinear-Loewner ROM");
  std::string r_system, r_generator, r_tuples, r_out;
  int r_kappa = 1;
  double r_svd_tol = kDefaultSvdRelTol;
  int r_max_order = 0;
  blf->add_option("--system", r_system, "system JSON file")->required();
  blf->add_option("--generator", r_generator, "generator JSON file");
  blf->add_option("--kappa", r_kappa, "tuple depth");
  blf->add_option("--tuples", r_tuples, "explicit multi-tuple JSON file");
  blf->add_option("--svd-tol", r_svd_tol, "relative SVD truncation threshold");
  blf->add_option("--max-order", r_max_order, "cap on the reduced order (0 = none)");
  blf->add_option("--out", r_out, "output ROM JSON file")->required();
  blf->callback([&] {
    rc = run_reduce_blf(r_system, r_generator, r_tuples, r_kappa, r_svd_tol,
                        r_max_order > 0 ? std::optional<int>(r_max_order) : std::nullopt, r_out);
  });
  auto* mm = reduce->add_subcommand("mm", "moment-matching ROM from truncated Loewner functions");
  std::string m_system, m_generator, m_out;
  int m_kappa = 1;
  mm->add_option("--system", m_system, "system JSON file")->required();
  mm->add_option("--generator", m_generator, "generator JSON file")->required();
  mm->add_option("--kappa", m_kappa, "truncation order")->required();
  mm->add_option("--out", m_out, "output ROM JSON file")->required();
  mm->callback([&] { rc = run_reduce_mm(m_system, m_generator, m_kappa, m_out); });

  // check kappa / check interpolation
  auto* check = app.add_subcommand("check", "equivalence and interpolation checks");
  check->require_subcommand(1);
  auto* kappa = check->add_subcommand("kappa", "kappa-Loewner equivalence of two models");
  std::string k_a, k_b, k_generator;
  int k_kappa = 1;
  double k_tol = 1e-8;
  kappa->add_option("--a", k_a, "first system JSON file")->required();
  kappa->add_option("--b", k_b, "second system or MM-ROM JSON file")->required();
  kappa->add_option("--generator", k_generator, "generator JSON file")->required();
  kappa->add_option("--kappa", k_kappa, "comparison order")->required();
  kappa->add_option("--tol", k_tol, "relative coefficient tolerance");
  kappa->callback([&] { rc = run_check_kappa(k_a, k_b, k_generator, k_kappa, k_tol); });
  auto* interp = check->add_subcommand("interpolation", "interpolation conditions of a ROM");
  std::string i_system, i_rom, i_generator;
  int i_kappa = 1;
  double i_tol = 1e-8;
  interp->add_option("--system", i_system, "full system JSON file")->required();
  interp->add_option("--rom", i_rom, "ROM JSON file (system schema)")->required();
  interp->add_option("--generator", i_generator, "generator JSON file")->required();
  interp->add_option("--kappa", i_kappa, "tuple depth")->required();
  interp->add_option("--tol", i_tol, "relative tolerance");
  interp->callback(
      [&] { rc = run_check_interpolation(i_system, i_rom, i_generator, i_kappa, i_tol); });

  // simulate
  auto* simulate = app.add_subcommand("simulate", "integrate a model under a generator signal");
  std::string s_system, s_mm_rom, s_generator, s_zeta0, s_x0, s_out;
  double s_horizon = 60.0, s_dt = kDefaultDt;
  simulate->add_option("--system", s_system, "bilinear system or BLF ROM JSON file");
  simulate->add_option("--mm-rom", s_mm_rom, "moment-matching ROM JSON file");
  simulate->add_option("--generator", s_generator, "generator JSON file")->required();
  simulate->add_option("--zeta0", s_zeta0, "generator initial condition, e.g. [[0.01,0]]")
      ->required();
  simulate->add_option("--x0", s_x0, "initial state (default: zero)");
  simulate->add_option("--horizon", s_horizon, "simulation horizon (seconds)");
  simulate->add_option("--dt", s_dt, "fixed step size");
  simulate->add_option("--out", s_out, "output CSV path (default: stdout)");
  simulate->callback([&] {
    if (s_system.empty() == s_mm_rom.empty())
      throw CLI::ValidationError("simulate", "provide exactly one of --system or --mm-rom");
    rc = run_simulate(s_system, s_mm_rom, s_generator, s_zeta0, s_x0, s_horizon, s_dt, s_out);
  });

  // compare
  auto* compare = app.add_subcommand("compare", "steady-state metrics between two trace CSVs");
  std::string c_a, c_b;
  double c_fraction = kDefaultTransientFraction;
  compare->add_option("--a", c_a, "reference trace CSV")->required();
  compare->add_option("--b", c_b, "other trace CSV")->required();
  compare->add_option("--transient-fraction", c_fraction, "fraction of the horizon to discard");
  compare->callback([&] { rc = run_compare(c_a, c_b, c_fraction); });

  // demo
  auto* demo = app.add_subcommand("demo", "end-to-end pipeline on a built-in seeded system");
  std::string d_out_dir = "demo_out";
  demo->add_option("--out-dir", d_out_dir, "artifact directory");
  demo->callback([&] { rc = run_demo(d_out_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const biloewner::Error& e) {
    Json err;
    err["error"] = e.kind();
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "InternalError";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return rc;
}
