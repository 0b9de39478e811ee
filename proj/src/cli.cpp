#include "nlsnf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nlsnf/acceptance.hpp"
#include "nlsnf/amplitude.hpp"
#include "nlsnf/errors.hpp"
#include "nlsnf/field_io.hpp"
#include "nlsnf/hamiltonians.hpp"
#include "nlsnf/linearized_operator.hpp"
#include "nlsnf/nls_simulator.hpp"
#include "nlsnf/normal_form.hpp"
#include "nlsnf/obstruction.hpp"

namespace nlsnf::cli {

namespace {

using nlohmann::json;

constexpr int kMaxTruncation = 4096;

const std::vector<std::string> kSubcommands = {"spectrum", "normal-form", "obstruct", "hamiltonian",
                                               "simulate", "growth",      "verify-all"};

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError(std::string(what) + ": cannot parse '" + std::string(text) + "'");
  }
  return v;
}

// "A,B" -> (A, B).
std::pair<std::string, std::string> split_pair(const std::string& text, std::string_view what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ValidationError(std::string(what) + " expects two comma-separated values");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

Amplitude amplitude_from_modulus(double c_mod, double phase) {
  if (!std::isfinite(c_mod) || !(c_mod > 0.0)) throw ValidationError("--c-mod must be positive");
  if (!std::isfinite(phase)) throw ValidationError("--phase must be finite");
  return Amplitude(std::polar(c_mod, phase));
}

void check_truncation(int K) {
  if (K < 0 || K > kMaxTruncation) {
    throw ValidationError("--K must lie in [0, " + std::to_string(kMaxTruncation) + "]");
  }
}

json report_header(std::string_view command, json parameters) {
  return {{"tool", kVersion}, {"command", command}, {"parameters", std::move(parameters)}};
}

// Flags from a JSON config file are spliced in ahead of the command-line
// flags; with TakeLast the command line wins.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config requires a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;

  std::ifstream in(*path);
  if (!in) throw ValidationError("cannot open config file " + *path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw ValidationError("cannot parse config " + *path + ": " + e.what());
  }
  if (!cfg.is_object()) throw ValidationError("config file must hold a JSON object");

  const auto sub = std::find_first_of(rest.begin(), rest.end(), kSubcommands.begin(), kSubcommands.end());
  if (sub == rest.end()) return rest;

  std::vector<std::string> injected;
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back(flag);
    } else if (value.is_string()) {
      injected.push_back(flag);
      injected.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      injected.push_back(flag);
      injected.push_back(value.dump());
    } else {
      throw ValidationError("config key '" + key + "' must be a string, number or boolean");
    }
  }
  rest.insert(sub + 1, injected.begin(), injected.end());
  return rest;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  double c_mod = 0.0;
  int K = kDefaultTruncation;
  bool as_json = false;
  bool as_csv = false;
};

int run_spectrum(const SpectrumArgs& a, std::ostream& out) {
  check_truncation(a.K);
  const Amplitude amp = amplitude_from_modulus(a.c_mod, 0.0);
  const auto spectrum = spectrum_analytic(amp, a.K);
  if (a.as_json) {
    json rows = json::array();
    for (const auto& ev : spectrum) {
      rows.push_back({{"k", ev.k},
                      {"re", ev.lambda.real()},
                      {"im", ev.lambda.imag()},
                      {"regime", to_string(classify_mode(ev.k, amp.modulus()))},
                      {"algebraic_multiplicity", ev.algebraic_multiplicity},
                      {"geometric_multiplicity", ev.geometric_multiplicity}});
    }
    json report = report_header("spectrum", {{"c_mod", a.c_mod}, {"K", a.K}});
    report["rows"] = std::move(rows);
    io::dump(out, report);
    return kOk;
  }
  out << "k,re_lambda,im_lambda,regime\n";
  for (const auto& ev : spectrum) {
    out << ev.k << ',' << io::format_double(ev.lambda.real()) << ','
        << io::format_double(ev.lambda.imag()) << ',' << to_string(classify_mode(ev.k, amp.modulus()))
        << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------- normal-form

struct NormalFormArgs {
  double c_mod = 0.0;
  int K = kDefaultTruncation;
  bool verify = false;
  double tol = 1e-10;
};

double quad_darboux_error(const DarbouxQuad& quad) {
  double worst = 0.0;
  const auto n = quad.vectors.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double expected = 0.0;
      if (i / 2 == j / 2 && i != j) expected = (i % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(omega(quad.vectors[i], quad.vectors[j]) - expected));
    }
  }
  return worst;
}

int run_normal_form(const NormalFormArgs& a, std::ostream& out) {
  check_truncation(a.K);
  const Amplitude amp = amplitude_from_modulus(a.c_mod, 0.0);
  amp.require_admissible();
  json modes = json::array();
  double max_block = 0.0;
  double max_darboux = 0.0;
  for (int k = 0; k <= a.K; ++k) {
    const DarbouxQuad quad = darboux_quad(k, amp, a.K);
    const Eigen::MatrixXd block = normal_block(k, amp);
    json rows = json::array();
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < block.cols(); ++j) row.push_back(block(i, j));
      rows.push_back(std::move(row));
    }
    const cplx lambda = analytic_eigenvalue(k, amp.modulus());
    json entry = {{"mode", k},
                  {"regime", to_string(quad.regime)},
                  {"lambda", io::complex_to_json(lambda)},
                  {"block", std::move(rows)}};
    if (a.verify) {
      const double dev = verify_normal_block(k, amp, a.K);
      const double darboux = quad_darboux_error(quad);
      max_block = std::max(max_block, dev);
      max_darboux = std::max(max_darboux, darboux);
      entry["max_block_deviation"] = dev;
      entry["darboux_max_error"] = darboux;
      if (k >= 1) {
        const double gap = l2_norm(quad.alpha(1) - basis_vector({BasisFamily::XiPrime, k}, a.K));
        entry["asymptotic_bound"] = static_cast<double>(k) * k * gap;
      } else {
        entry["asymptotic_bound"] = nullptr;
      }
    }
    modes.push_back(std::move(entry));
  }
  json params = {{"c_mod", a.c_mod}, {"K", a.K}, {"verify", a.verify}};
  if (a.verify) params["tol"] = a.tol;
  json report = report_header("normal-form", std::move(params));
  report["modes"] = std::move(modes);
  bool passed = true;
  if (a.verify) {
    passed = max_block <= a.tol && max_darboux <= a.tol;
    report["max_block_deviation"] = max_block;
    report["darboux_max_error"] = max_darboux;
    report["passed"] = passed;
  }
  io::dump(out, report);
  return passed ? kOk : kNumerical;
}

// ---------------------------------------------------------------- obstruct

struct ObstructArgs {
  double c_mod = 0.0;
  int K = kDefaultTruncation;
  bool as_json = false;  // output is always JSON
};

int run_obstruct(const ObstructArgs& a, std::ostream& out) {
  check_truncation(a.K);
  const Amplitude amp = amplitude_from_modulus(a.c_mod, 0.0);
  const ObstructionReport r = obstruction_report(amp, a.K);
  json report = report_header("obstruct", {{"c_mod", a.c_mod}, {"K", a.K}});
  report["c_mod"] = r.c_mod;
  report["K"] = r.K;
  report["real_pairs"] = r.real_pairs;
  report["imaginary_pairs_reported"] = r.imaginary_pairs_reported;
  report["jordan_at_zero"] = r.jordan_at_zero;
  report["verdict"] = to_string(r.verdict);
  io::dump(out, report);
  return kOk;
}

// ------------------------------------------------------------- hamiltonian

struct HamiltonianArgs {
  std::string which;
  std::string field;
  std::string c;
};

int run_hamiltonian(const HamiltonianArgs& a, std::ostream& out) {
  const HamiltonianName name = parse_hamiltonian_name(a.which);
  const SpectralField phi = io::read_field(a.field);
  std::optional<Amplitude> amp;
  json params = {{"which", a.which}, {"field", a.field}};
  if (!a.c.empty()) {
    const auto [re, im] = split_pair(a.c, "--c");
    amp.emplace(cplx{parse_number(re, "--c"), parse_number(im, "--c")});
    params["c"] = io::complex_to_json(amp->value());
  }
  const HamiltonianValue v = evaluate(name, phi, amp ? &*amp : nullptr);
  json report = report_header("hamiltonian", std::move(params));
  report["name"] = to_string(v.name);
  report["value"] = io::complex_to_json(v.value);
  io::dump(out, report);
  return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  double c_mod = 0.0;
  double phase = 0.0;
  double T = 1.0;
  double dt = 1e-4;
  int K = kDefaultTruncation;
  int N = 512;
  int stride = 100;
  std::string perturb;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  check_truncation(a.K);
  SimConfig cfg;
  cfg.K = a.K;
  cfg.N = a.N;
  cfg.dt = a.dt;
  cfg.T = a.T;
  cfg.stride = a.stride;
  cfg.seed = a.seed;
  cfg.validate();
  const Amplitude amp = amplitude_from_modulus(a.c_mod, a.phase);

  SpectralField phi0 = amp.potential(a.K);
  json params = {{"c_mod", a.c_mod}, {"phase", a.phase}, {"T", a.T},          {"dt", a.dt},
                 {"K", a.K},         {"N", a.N},         {"stride", a.stride}, {"seed", a.seed},
                 {"noise", a.noise}};
  if (!a.perturb.empty()) {
    const auto [ks, es] = split_pair(a.perturb, "--perturb");
    const double kd = parse_number(ks, "--perturb mode");
    const double eps = parse_number(es, "--perturb amplitude");
    if (kd != std::floor(kd)) throw ValidationError("--perturb mode must be an integer");
    const int k = static_cast<int>(kd);
    phi0 += eps * basis_vector({BasisFamily::XiPrime, k}, a.K);
    params["perturb"] = {{"k", k}, {"eps", eps}};
  }
  if (a.noise != 0.0) phi0 += random_smooth_field(a.K, std::min(a.K, 8), a.noise, a.seed);

  const Trajectory tr = evolve(cfg, phi0);

  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv << "t,H,H1";
  for (int k = -a.K; k <= a.K; ++k) csv << ",abs_z_" << k;
  csv << '\n';
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    csv << io::format_double(tr.t[i]) << ',' << io::format_double(tr.monitors[i].H) << ','
        << io::format_double(tr.monitors[i].H1);
    for (int k = -a.K; k <= a.K; ++k) csv << ',' << io::format_double(std::abs(tr.samples[i].z(k)));
    csv << '\n';
  }

  if (a.out_path.empty()) {
    out << csv.str();
    return kOk;
  }
  std::ofstream file(a.out_path);
  if (!file) throw ValidationError("cannot write " + a.out_path);
  file << csv.str();

  const Monitor m0 = tr.monitors.front();
  double drift_h = 0.0;
  double drift_h1 = 0.0;
  for (const Monitor& m : tr.monitors) {
    drift_h = std::max(drift_h, std::abs(m.H - m0.H) / std::max(1e-300, std::abs(m0.H)));
    drift_h1 = std::max(drift_h1, std::abs(m.H1 - m0.H1) / std::max(1e-300, std::abs(m0.H1)));
  }
  params["out"] = a.out_path;
  json report = report_header("simulate", std::move(params));
  report["steps"] = cfg.steps();
  report["samples"] = tr.t.size();
  report["H_drift"] = drift_h;
  report["H1_drift"] = drift_h1;
  io::dump(out, report);
  return kOk;
}

// ------------------------------------------------------------------ growth

struct GrowthArgs {
  double c_mod = 0.0;
  double phase = 0.0;
  int k = 1;
  double eps = 0.0;
  double T = 1.0;
  double dt = 1e-4;
  int K = kDefaultTruncation;
  int N = 512;
  double tol = 0.02;
};

int run_growth(const GrowthArgs& a, std::ostream& out) {
  check_truncation(a.K);
  const Amplitude amp = amplitude_from_modulus(a.c_mod, a.phase);
  SimConfig cfg;
  cfg.K = a.K;
  cfg.N = a.N;
  cfg.dt = a.dt;
  cfg.T = a.T;
  const double eps = a.eps > 0.0 ? a.eps : 1e-7 * amp.modulus();
  const GrowthMeasurement g = growth_rate(amp, a.k, eps, cfg);
  json report = report_header("growth", {{"c_mod", a.c_mod},
                                         {"phase", a.phase},
                                         {"k", a.k},
                                         {"eps", eps},
                                         {"T", a.T},
                                         {"dt", a.dt},
                                         {"K", a.K},
                                         {"N", a.N},
                                         {"tol", a.tol}});
  report["analytic"] = g.analytic;
  report["measured"] = g.measured;
  report["rel_err"] = g.rel_err;
  report["window_start"] = g.window_start;
  report["window_end"] = g.window_end;
  report["samples_in_window"] = g.samples_in_window;
  report["passed"] = g.rel_err <= a.tol;
  io::dump(out, report);
  return g.rel_err <= a.tol ? kOk : kNumerical;
}

// -------------------------------------------------------------- verify-all

struct VerifyArgs {
  int K = 0;
  bool skip_growth = false;
  bool as_json = false;
};

int run_verify_all(const VerifyArgs& a, std::ostream& out) {
  if (a.K < 0 || a.K > 512) throw ValidationError("--K must lie in [1, 512]");
  acceptance::Options opts;
  opts.K = a.K;
  opts.skip_growth = a.skip_growth || a.K > 0;
  const auto results = acceptance::run_all(opts);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (a.as_json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"skipped", r.skipped},
                      {"detail", r.detail}});
    }
    json report = report_header("verify-all", {{"K", a.K}, {"skip_growth", opts.skip_growth}});
    report["criteria"] = std::move(rows);
    report["passed"] = all;
    io::dump(out, report);
  } else {
    for (const auto& r : results) {
      char line[64];
      std::snprintf(line, sizeof line, "[%s] %2d %-22s %7.2fs  ",
                    r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL"), r.id, r.name.c_str(), r.seconds);
      out << line << r.detail << '\n';
    }
    out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
  }
  return all ? kOk : kNumerical;
}

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear stability, Darboux normal form and Birkhoff obstruction for the focusing NLS "
               "near constant potentials",
               "nlsnf"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with flag values; command-line flags take precedence");

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Analytic spectrum of L_c, one row per mode");
  sp->add_option("--c-mod", spectrum.c_mod, "|c|")->required();
  sp->add_option("--K", spectrum.K, "truncation");
  auto* sp_json = sp->add_flag("--json", spectrum.as_json, "JSON output");
  sp->add_flag("--csv", spectrum.as_csv, "CSV output (default)")->excludes(sp_json);

  NormalFormArgs nf;
  auto* nfc = app.add_subcommand("normal-form", "Darboux normal-form blocks of L_c");
  nfc->add_option("--c-mod", nf.c_mod, "|c|")->required();
  nfc->add_option("--K", nf.K, "truncation");
  nfc->add_flag("--verify", nf.verify, "check each block and the Darboux relations");
  nfc->add_option("--tol", nf.tol, "tolerance for --verify");

  ObstructArgs ob;
  auto* obc = app.add_subcommand("obstruct", "Verdict on gauge-invariant Birkhoff coordinates");
  obc->add_option("--c-mod", ob.c_mod, "|c|")->required();
  obc->add_option("--K", ob.K, "truncation");
  obc->add_flag("--json", ob.as_json, "JSON output (always on)");

  HamiltonianArgs ham;
  auto* hc = app.add_subcommand("hamiltonian", "Evaluate H, H1, H2 or Hc on a field file");
  hc->add_option("--which", ham.which, "H, H1, H2 or Hc")->required();
  hc->add_option("--field", ham.field, "field JSON file")->required();
  hc->add_option("--c", ham.c, "amplitude RE,IM (needed for Hc)");

  SimulateArgs sim;
  auto* sc = app.add_subcommand("simulate", "Split-step integration of the focusing NLS");
  sc->add_option("--c-mod", sim.c_mod, "|c|")->required();
  sc->add_option("--phase", sim.phase, "arg c");
  sc->add_option("--T", sim.T, "final time");
  sc->add_option("--dt", sim.dt, "time step");
  sc->add_option("--K", sim.K, "truncation");
  sc->add_option("--N", sim.N, "grid size");
  sc->add_option("--stride", sim.stride, "steps between samples");
  sc->add_option("--perturb", sim.perturb, "k,eps: add eps xi'_k");
  sc->add_option("--noise", sim.noise, "amplitude of a random smooth perturbation");
  sc->add_option("--seed", sim.seed, "seed for --noise");
  sc->add_option("--out", sim.out_path, "CSV output file (stdout if omitted)");

  GrowthArgs gr;
  auto* gc = app.add_subcommand("growth", "Measured instability rate of one mode");
  gc->add_option("--c-mod", gr.c_mod, "|c|")->required();
  gc->add_option("--phase", gr.phase, "arg c");
  gc->add_option("--k", gr.k, "mode (pi k < |c|)");
  gc->add_option("--eps", gr.eps, "initial perturbation size (default 1e-7 |c|)");
  gc->add_option("--T", gr.T, "longest integration time");
  gc->add_option("--dt", gr.dt, "time step");
  gc->add_option("--K", gr.K, "truncation");
  gc->add_option("--N", gr.N, "grid size");
  gc->add_option("--tol", gr.tol, "relative tolerance");

  VerifyArgs va;
  auto* vc = app.add_subcommand("verify-all", "Run the acceptance suite");
  vc->add_option("--K", va.K, "quick mode at this truncation (growth checks skipped)");
  vc->add_flag("--skip-growth", va.skip_growth, "skip the growth-rate measurements");
  vc->add_flag("--json", va.as_json, "JSON output");

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ConversionError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (sp->parsed()) return run_spectrum(spectrum, out);
    if (nfc->parsed()) return run_normal_form(nf, out);
    if (obc->parsed()) return run_obstruct(ob, out);
    if (hc->parsed()) return run_hamiltonian(ham, out);
    if (sc->parsed()) return run_simulate(sim, out);
    if (gc->parsed()) return run_growth(gr, out);
    if (vc->parsed()) return run_verify_all(va, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  err << app.help();
  return kUsage;
}

}  // namespace nlsnf::cli
