#ifndef PLAP_CLI_HPP
#define PLAP_CLI_HPP

// Command-line front end:
//
//   plap solve    --d 1 --p 2 --potential box:A=1,R=1 --alpha 1
//   plap sweep    --d 2 --p 2 --potential gaussian:A=0.159,s=1 --alphas 0.8,0.4,0.2
//   plap sobolev  --d 1 --p 3
//   plap fit      --d 1 --p 2 --in sweep.csv --potential gaussian:A=0.399,s=1
//   plap validate
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 I/O error.
// Non-convergence is reported in the output, not through the exit code.

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plap/asymptotics.hpp"
#include "plap/errors.hpp"
#include "plap/io.hpp"
#include "plap/potential.hpp"
#include "plap/sobolev.hpp"
#include "plap/solver.hpp"
#include "plap/validate.hpp"

namespace plap {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitData = 3, kExitIo = 4 };

struct RunConfig {
  std::string mode;
  int d = 1;
  double p = 2.0;
  std::string potential = "gaussian:A=1,s=1";
  double alpha = 1.0;
  std::optional<std::string> alphas;  // comma separated; empty string = no couplings
  std::optional<std::size_t> grid_n;
  std::optional<double> grid_l;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::string format;                 // csv | json; default per mode
  std::optional<std::string> in;
  std::optional<double> integral;
  unsigned threads = 0;
  bool fixed_domain = false;
  double guard = 600.0;

  void validate() const {
    if (d < 1) throw ConfigError("--d must be >= 1");
    if (!(p > 1.0)) throw ConfigError("--p must be > 1");
    if (!format.empty() && format != "csv" && format != "json") throw ConfigError("--format must be csv or json");
    if ((mode == "solve" || mode == "sobolev" || mode == "fit") && format == "csv")
      throw ConfigError(mode + " writes json only");
    if (grid_n && *grid_n < kMinGridNodes) throw ConfigError("--grid-n too small");
    if (grid_l && !(*grid_l > 0.0)) throw ConfigError("--grid-l must be positive");
    if (tol && !(*tol > 0.0)) throw ConfigError("--tol must be positive");
  }
};

namespace detail {

inline std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    if (!parse_double(item, v)) throw ParseError("--alphas: bad number '" + std::string(item) + "'", pos);
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

inline SolverConfig solver_config(const RunConfig& rc) {
  SolverConfig c;
  c.p = rc.p;
  if (rc.tol) c.tol_residual = *rc.tol;
  c.domain = rc.fixed_domain ? DomainPolicy::fixed : DomainPolicy::adaptive;
  c.exponent_guard = rc.guard;
  return c;
}

inline SweepOptions sweep_options(const RunConfig& rc) {
  SweepOptions o;
  o.nodes = rc.grid_n;
  o.extent = rc.grid_l;
  o.threads = rc.threads;
  return o;
}

inline void require_positive_integral(double I) {
  if (!(I > 0.0))
    throw DomainError("int V = " + format_double(I) + " <= 0; the weak-coupling limits need int V > 0");
}

inline json run_solve(const RunConfig& rc) {
  const PotentialDescriptor desc = parse_potential(rc.potential);
  const auto profile = std::make_shared<const RadialProfile>(desc);
  const SolverConfig cfg = solver_config(rc);
  if (!(rc.alpha > 0.0)) throw ConfigError("--alpha must be positive");
  GridSpec spec;
  if (rc.p >= rc.d) {
    if (rc.p == rc.d && rc.d >= 2) require_positive_integral(*profile, rc.d);
    const double I = reference_integral(*profile, rc.d);
    spec = sweep_grid(*profile, rc.d, rc.p, rc.alpha, I, sweep_options(rc), cfg);
  } else {
    // Hardy regime: no natural length, take a generous multiple of the support
    spec.dimension = rc.d;
    spec.kind = rc.d == 1 ? Coordinate::line : Coordinate::radial;
    spec.extent = rc.grid_l ? *rc.grid_l : 64.0 * profile->support_radius();
    spec.nodes = rc.grid_n ? *rc.grid_n : 4097;
  }
  SolverConfig c = cfg;
  if (spec.kind == Coordinate::log_radius) {
    c.init = InitKind::test_function;
  } else {
    c.init_width = std::max(spec.extent / 8.0, profile->length_scale());
  }
  const Potential pot = sample_potential(build_grid(spec), profile, rc.alpha);
  const GroundState gs = solve_lambda(pot, c);
  json j = to_json(gs);
  j["d"] = rc.d;
  j["p"] = rc.p;
  j["alpha"] = rc.alpha;
  j["potential"] = format_potential(desc);
  j["integral"] = pot.integral / rc.alpha;
  j["grid"] = {{"kind", std::string(to_string(spec.kind))}, {"nodes", spec.nodes}, {"extent", spec.extent}};
  if (!std::isnan(profile->analytic_integral(rc.d))) j["analytic_integral"] = profile->analytic_integral(rc.d);
  return j;
}

inline SweepResult run_sweep_result(const RunConfig& rc) {
  const PotentialDescriptor desc = parse_potential(rc.potential);
  const std::vector<double> alphas = rc.alphas ? parse_alpha_list(*rc.alphas) : default_alphas(rc.d, rc.p);
  return sweep(desc, rc.d, rc.p, alphas, solver_config(rc), sweep_options(rc));
}

inline json run_fit(const RunConfig& rc) {
  if (!rc.in) throw ConfigError("fit needs --in <sweep.csv>");
  const auto records = parse_csv(read_file(*rc.in));
  double I = 0.0;
  if (rc.integral) {
    I = *rc.integral;
  } else {
    const RadialProfile V(parse_potential(rc.potential));
    require_positive_integral(V, rc.d);
    I = reference_integral(V, rc.d);
  }
  require_positive_integral(I);
  FitResult f = rc.p == rc.d ? fit_critical(records, rc.d, I) : fit_subcritical(records, rc.d, rc.p, I);
  return to_json(f);
}

inline std::string render(const json& j) { return j.dump(2) + '\n'; }

inline void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.out) {
    write_file(*rc.out, text);
  } else {
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write to standard output");
  }
}

inline void add_common(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--d", rc.d, "spatial dimension");
  cmd->add_option("--p", rc.p, "exponent p > 1");
  cmd->add_option("--out", rc.out, "output file (default stdout)");
  cmd->add_option("--format", rc.format, "csv | json");
}

inline void add_problem(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--potential", rc.potential, "tag:key=val,... (gaussian, box, mix, hardy, file)");
  cmd->add_option("--grid-n", rc.grid_n, "node count");
  cmd->add_option("--grid-l", rc.grid_l, "domain extent L");
  cmd->add_option("--tol", rc.tol, "residual tolerance");
  cmd->add_flag("--fixed-domain", rc.fixed_domain, "do not grow the domain");
  cmd->add_option("--guard", rc.guard, "overflow guard on d * log L for p = d");
}

}  // namespace detail

/// Dispatches one command. Never throws; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig rc;
  CLI::App app{"p-Laplacian weak-coupling solver", "plap"};
  app.require_subcommand(1);
  auto* solve = app.add_subcommand("solve", "lowest eigenvalue for one coupling");
  auto* sweep_cmd = app.add_subcommand("sweep", "eigenvalues over a list of couplings");
  auto* sobolev = app.add_subcommand("sobolev", "sharp Sobolev interpolation constant");
  auto* fit = app.add_subcommand("fit", "extract the weak-coupling limit from a sweep csv");
  auto* validate = app.add_subcommand("validate", "run the invariant suite");
  for (auto* c : {solve, sweep_cmd, sobolev, fit, validate}) detail::add_common(c, rc);
  for (auto* c : {solve, sweep_cmd}) detail::add_problem(c, rc);
  fit->add_option("--potential", rc.potential, "potential, used for I_h when --integral is absent");
  solve->add_option("--alpha", rc.alpha, "coupling");
  sweep_cmd->add_option("--alphas", rc.alphas, "comma separated couplings");
  sweep_cmd->add_option("--threads", rc.threads, "worker threads (0: all cores)");
  fit->add_option("--in", rc.in, "sweep csv")->required();
  fit->add_option("--integral", rc.integral, "I_h override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    rc.mode = app.get_subcommands().front()->get_name();
    rc.validate();
    if (rc.mode == "solve") {
      detail::emit(rc, detail::render(detail::run_solve(rc)), out);
    } else if (rc.mode == "sweep") {
      const SweepResult s = detail::run_sweep_result(rc);
      detail::emit(rc, rc.format == "json" ? detail::render(to_json(s)) : emit_csv(s.records), out);
    } else if (rc.mode == "sobolev") {
      detail::emit(rc, detail::render(to_json(sobolev_entry(rc.d, rc.p))), out);
    } else if (rc.mode == "fit") {
      detail::emit(rc, detail::render(detail::run_fit(rc)), out);
    } else {
      const auto checks = run_validation();
      json arr = json::array();
      bool all = true;
      for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"threshold", c.threshold}});
        all = all && c.passed;
      }
      detail::emit(rc, detail::render({{"passed", all}, {"checks", arr}}), out);
      return all ? kExitOk : kExitData;
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {  // config, usage, parse
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace plap

#endif  // PLAP_CLI_HPP
