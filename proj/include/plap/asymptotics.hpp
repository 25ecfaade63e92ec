#ifndef PLAP_ASYMPTOTICS_HPP
#define PLAP_ASYMPTOTICS_HPP

// Coupling sweeps alpha -> lambda(alpha V), rescaled minimizers and the
// extraction of the weak-coupling limits
//   p > d:  alpha^{-p/(p-d)} lambda        -> E(I)
//   p = d:  alpha^{1/(d-1)} log(1/|lambda|) -> d omega_d^{1/(d-1)} I^{-1/(d-1)}

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "plap/closed_forms.hpp"
#include "plap/errors.hpp"
#include "plap/functional.hpp"
#include "plap/grid.hpp"
#include "plap/potential.hpp"
#include "plap/sobolev.hpp"
#include "plap/solver.hpp"

namespace plap {

struct SweepRecord {
  double alpha = 0.0;
  double lambda = 0.0;
  double grad_norm_p = 0.0;  // ||grad u||_p
  double sup_u = 0.0;        // ||u||_inf
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  double domain_extent = 0.0;

  bool operator==(const SweepRecord&) const = default;
};

/// Grid policy for sweeps. Unset overrides mean "derive from alpha".
struct SweepOptions {
  // p > d
  double extent_factor = 8.0;       // L0 = factor * alpha^{-1/(p-d)}
  std::size_t min_cells = 2048;     // cells across L0 at least
  double cells_per_length = 8.0;    // spacing <= length_scale(V) / this
  // p = d
  double log_spacing = 0.02;        // dt
  double inner_margin = 8.0;        // t_min = log(length_scale(V)) - margin
  // both
  std::optional<std::size_t> nodes;
  std::optional<double> extent;     // L, or e^{t_max} for log-radius grids
  unsigned threads = 0;             // 0: hardware concurrency
};

struct SweepResult {
  int d = 1;
  double p = 2.0;
  std::string potential;        // canonical descriptor
  double integral = 0.0;        // I_h of V (alpha = 1) on the grid of the smallest alpha
  std::vector<SweepRecord> records;  // alpha descending
  std::vector<GroundState> states;   // parallel to records; empty after a CSV round trip
  std::shared_ptr<const RadialProfile> profile;
};

inline std::string_view regime_name(int d, double p) {
  return p == static_cast<double>(d) ? "critical" : "subcritical";
}

/// Geometric default couplings: 12 points on [1e-3, 0.3] for p > d, ratio
/// 2^{-1/2} on [0.05, 0.8] for p = d.
inline std::vector<double> default_alphas(int d, double p) {
  std::vector<double> a;
  if (p == static_cast<double>(d)) {
    for (int k = 0; k <= 8; ++k) a.push_back(0.8 * std::pow(2.0, -0.5 * k));
  } else {
    const double hi = 0.3, lo = 1e-3;
    const int n = 12;
    for (int k = 0; k < n; ++k) a.push_back(hi * std::pow(lo / hi, static_cast<double>(k) / (n - 1)));
  }
  return a;
}

namespace detail {

/// Quadrature integral of V (or |V|) on a fine reference grid covering its support.
inline double reference_integral(const RadialProfile& V, int d, bool absolute = false) {
  GridSpec s;
  s.dimension = d;
  s.kind = d == 1 ? Coordinate::line : Coordinate::radial;
  s.extent = 4.0 * V.support_radius();
  s.nodes = static_cast<std::size_t>(std::ceil(s.extent / V.length_scale() * 64.0)) + 1;
  auto g = build_grid(s);
  auto v = sample_potential(g, V).values;
  if (absolute)
    for (double& x : v) x = std::abs(x);
  return quadrature(*g, v);
}

/// I_h > 0 beyond quadrature rounding, as both limit theorems require.
inline void require_positive_integral(const RadialProfile& V, int d) {
  const double I = reference_integral(V, d);
  if (!(I > 1e-10 * reference_integral(V, d, true)))
    throw DomainError("potential has int V = " + format_double(I) +
                      ", not positive; the weak-coupling limits need int V > 0");
}

inline GridSpec sweep_grid(const RadialProfile& V, int d, double p, double alpha, double I,
                           const SweepOptions& opt, const SolverConfig& cfg) {
  GridSpec s;
  s.dimension = d;
  if (p == static_cast<double>(d)) {
    const double t_turn = critical_log_beta(alpha, d, I);
    const double t_max = opt.extent ? std::log(*opt.extent) : 1.5 * t_turn + 10.0;
    if (d * t_max > cfg.exponent_guard)
      throw ConfigError("sweep: alpha = " + detail::format_double(alpha) +
                        " needs d*t_max above the overflow guard; raise the guard or drop this coupling");
    s.kind = Coordinate::log_radius;
    s.t_min = std::min(std::log(V.length_scale()) - opt.inner_margin, t_max - 1.0);
    s.extent = std::exp(t_max);
    s.nodes = opt.nodes ? *opt.nodes
                        : static_cast<std::size_t>(std::ceil((t_max - s.t_min) / opt.log_spacing)) + 1;
    return s;
  }
  s.kind = d == 1 ? Coordinate::line : Coordinate::radial;
  const double L = opt.extent ? *opt.extent
                              : std::max(opt.extent_factor * std::pow(alpha, -1.0 / (p - d)),
                                         4.0 * V.support_radius());
  s.extent = L;
  if (opt.nodes) {
    s.nodes = *opt.nodes;
  } else {
    const double h = std::min(V.length_scale() / opt.cells_per_length, L / static_cast<double>(opt.min_cells));
    const auto cells = static_cast<std::size_t>(std::ceil(L / h));
    s.nodes = (d == 1 ? 2 * cells : cells) + 1;
  }
  return s;
}

inline SweepRecord make_record(double alpha, const GroundState& gs, double p) {
  SweepRecord r;
  r.alpha = alpha;
  r.lambda = gs.lambda;
  r.grad_norm_p = std::pow(gs.energy.kinetic, 1.0 / p);
  r.sup_u = gs.energy.sup_norm;
  r.residual = gs.residual;
  r.iterations = gs.iterations;
  r.converged = gs.converged;
  r.domain_extent = gs.domain_extent;
  return r;
}

}  // namespace detail

/// One ground state per coupling. Solves run concurrently; the result does
/// not depend on the thread count.
inline SweepResult sweep(const PotentialDescriptor& desc, int d, double p, std::vector<double> alphas,
                         const SolverConfig& cfg, const SweepOptions& opt = {}) {
  if (d < 1) throw ConfigError("sweep: dimension must be >= 1");
  SolverConfig base = cfg;
  base.p = p;
  base.validate();
  for (double a : alphas)
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("sweep: couplings must be positive");
  std::sort(alphas.begin(), alphas.end(), std::greater<>());
  if (std::adjacent_find(alphas.begin(), alphas.end()) != alphas.end())
    throw ConfigError("sweep: couplings must be distinct");
  if (p < static_cast<double>(d) && d == 1) throw ConfigError("sweep: p > 1 = d required");
  const bool critical = p == static_cast<double>(d);
  if (critical && d < 2) throw ConfigError("sweep: p = d requires d >= 2");

  SweepResult out;
  out.d = d;
  out.p = p;
  out.potential = format_potential(desc);
  out.profile = std::make_shared<const RadialProfile>(desc);
  if (alphas.empty()) return out;

  if (p >= static_cast<double>(d)) detail::require_positive_integral(*out.profile, d);
  const double I_ref = detail::reference_integral(*out.profile, d);
  std::vector<GridSpec> specs;
  for (double a : alphas) specs.push_back(detail::sweep_grid(*out.profile, d, p, a, I_ref, opt, base));

  const std::size_t n = alphas.size();
  out.states.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        SolverConfig c = base;
        if (critical) {
          c.init = InitKind::test_function;
        } else {
          c.init_width = specs[i].extent / 8.0;
        }
        auto grid = build_grid(specs[i]);
        out.states[i] = solve_lambda(sample_potential(grid, out.profile, alphas[i]), c);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < n; ++i) out.records.push_back(detail::make_record(alphas[i], out.states[i], p));
  const GroundState& last = out.states.back();
  out.integral = quadrature(*last.field.grid, sample_potential(last.field.grid, out.profile, 1.0).values);
  return out;
}

/// Potential of record i on the grid its ground state lives on.
inline Potential record_potential(const SweepResult& s, std::size_t i) {
  if (i >= s.states.size() || !s.profile) throw UsageError("record_potential: sweep carries no states");
  return sample_potential(s.states[i].field.grid, s.profile, s.records[i].alpha);
}

// ---------------------------------------------------------------------------
// Rescaled minimizers

namespace detail {

/// Linear interpolation of a field at a coordinate: x for line grids, r for
/// radial and log-radius grids. Zero outside the domain.
inline double interpolate(const Field& f, double x) {
  const Grid& g = *f.grid;
  const auto nodes = g.nodes();
  double c = x;
  if (g.kind() == Coordinate::radial) {
    c = std::abs(x);
  } else if (g.kind() == Coordinate::log_radius) {
    const double r = std::abs(x);
    if (r <= std::exp(nodes.front())) return f.values.front();
    c = std::log(r);
  }
  if (c < nodes.front() || c > nodes.back()) return 0.0;
  const double h = nodes[1] - nodes[0];
  const auto k = std::min(static_cast<std::size_t>((c - nodes.front()) / h), g.size() - 2);
  const double s = (c - nodes[k]) / (nodes[k + 1] - nodes[k]);
  return (1.0 - s) * f.values[k] + s * f.values[k + 1];
}

}  // namespace detail

/// f_alpha(x) = alpha^{-d/(p(p-d))} u_alpha(alpha^{-1/(p-d)} x) on the state's
/// grid contracted by alpha^{1/(p-d)}; nodes map to nodes, so no resampling.
inline Field rescale_minimizer(const GroundState& state, double alpha, int d, double p) {
  if (!(p > d)) throw DomainError("rescale_minimizer: requires p > d");
  if (!(alpha > 0.0)) throw DomainError("rescale_minimizer: requires alpha > 0");
  const Grid& g = *state.field.grid;
  if (g.kind() == Coordinate::log_radius) throw DomainError("rescale_minimizer: needs a line or radial grid");
  GridSpec s = g.spec();
  s.nodes = g.size();
  s.extent *= std::pow(alpha, 1.0 / (p - d));
  const double amp = std::pow(alpha, -d / (p * (p - d)));
  std::vector<double> v(state.field.values);
  for (double& x : v) x *= amp;
  return Field(build_grid(s), std::move(v));
}

/// Same, interpolated onto a reference grid.
inline Field rescale_minimizer(const GroundState& state, double alpha, int d, double p, const GridPtr& reference) {
  const Field f = rescale_minimizer(state, alpha, d, p);
  const bool by_radius = reference->kind() == Coordinate::log_radius;
  std::vector<double> v(reference->size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = detail::interpolate(f, by_radius ? reference->radius(i) : reference->nodes()[i]);
  return Field(reference, std::move(v));
}

/// ||f - ref||_p + max_i |f_i - ref_i| after shifting ref so both maxima sit
/// on the same node.
inline double minimizer_distance(const Field& f, const Field& reference, double p) {
  if (!f.grid || !reference.grid || f.size() != reference.size() ||
      f.grid->kind() != reference.grid->kind() || f.grid->spec().extent != reference.grid->spec().extent)
    throw UsageError("minimizer_distance: fields must share a grid");
  const auto arg = [](const std::vector<double>& v) {
    return static_cast<std::ptrdiff_t>(std::max_element(v.begin(), v.end()) - v.begin());
  };
  const std::ptrdiff_t shift = arg(f.values) - arg(reference.values);
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  std::vector<double> diff(f.size());
  double sup = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t j = i - shift;
    const double r = (j >= 0 && j < n) ? reference.values[static_cast<std::size_t>(j)] : 0.0;
    diff[static_cast<std::size_t>(i)] = f.values[static_cast<std::size_t>(i)] - r;
    sup = std::max(sup, std::abs(diff[static_cast<std::size_t>(i)]));
  }
  return norm_p(*f.grid, diff, p) + sup;
}

// ---------------------------------------------------------------------------
// Limits

struct FitResult {
  Regime regime = Regime::subcritical;
  int d = 1;
  double p = 2.0;
  double integral = 0.0;
  double limit = 0.0;
  std::vector<double> coefficients;  // subcritical: r0, c, c2, s; critical: g0, c1
  double prediction = 0.0;
  double relative_error = 0.0;
  std::string method;                // least-squares | aitken
  double window_spread = 0.0;        // max |limit change| when one end point is dropped
  std::vector<double> alphas;
  std::vector<double> values;        // the rescaled sequence that was fitted
};

namespace detail {

struct LineFit {
  double intercept = 0.0, slope = 0.0, sse = 0.0;
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - f.intercept - f.slope * x[i];
    f.sse += e * e;
  }
  return f;
}

struct PowerFit {
  double r0 = 0.0, c = 0.0, c2 = 0.0, s = 0.0;
  std::string method;
};

// r(alpha) = r0 + c alpha^s + c2 alpha^{2s}, s scanned over 2^{k/16},
// k = -64..32. The second term needs 6 points, so at least two degrees of
// freedom remain.
inline PowerFit fit_power_correction(const std::vector<double>& a, const std::vector<double>& r) {
  const auto n = static_cast<Eigen::Index>(a.size());
  const Eigen::Index cols = n >= 6 ? 3 : 2;
  const Eigen::Map<const Eigen::VectorXd> y(r.data(), n);
  PowerFit best;
  double best_sse = std::numeric_limits<double>::infinity();
  int best_k = 0;
  const int kmin = -64, kmax = 32;
  Eigen::MatrixXd X(n, cols);
  for (int k = kmin; k <= kmax; ++k) {
    const double s = std::pow(2.0, k / 16.0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = std::pow(a[static_cast<std::size_t>(i)], s);
      X(i, 0) = 1.0;
      X(i, 1) = x;
      if (cols == 3) X(i, 2) = x * x;
    }
    const Eigen::VectorXd c = X.colPivHouseholderQr().solve(y);
    const double sse = (X * c - y).squaredNorm();
    if (sse < best_sse) {
      best_sse = sse;
      best = {c(0), c(1), cols == 3 ? c(2) : 0.0, s, "least-squares"};
      best_k = k;
    }
  }
  if (best_k == kmin || best_k == kmax) {
    // exponent pinned to the scan boundary: Aitken on the three smallest couplings
    const std::size_t m = r.size();
    const double r1 = r[m - 3], r2 = r[m - 2], r3 = r[m - 1];
    const double den = (r3 - r2) - (r2 - r1);
    if (den != 0.0 && best_sse > 0.0) {
      best.r0 = r3 - (r3 - r2) * (r3 - r2) / den;
      best.method = "aitken";
    }
  }
  return best;
}

inline std::vector<SweepRecord> fit_set(const std::vector<SweepRecord>& records) {
  std::vector<SweepRecord> out;
  for (const auto& r : records)
    if (r.converged) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.alpha > y.alpha; });
  if (out.size() < 3) throw UsageError("fit: need at least 3 converged records");
  return out;
}

template <class Fit>
double spread(const std::vector<SweepRecord>& recs, double limit, Fit&& fit) {
  if (recs.size() < 4) return 0.0;
  const std::vector<SweepRecord> head(recs.begin(), recs.end() - 1), tail(recs.begin() + 1, recs.end());
  return std::max(std::abs(fit(head) - limit), std::abs(fit(tail) - limit));
}

}  // namespace detail

/// Extrapolates r(alpha) = lambda alpha^{-p/(p-d)} to alpha -> 0.
inline FitResult fit_subcritical(const std::vector<SweepRecord>& records, int d, double p, double I) {
  if (!(p > d)) throw DomainError("fit_subcritical: requires p > d");
  const auto recs = detail::fit_set(records);
  const auto limit_of = [&](const std::vector<SweepRecord>& rs, detail::PowerFit* full) {
    std::vector<double> a, r;
    for (const auto& x : rs) {
      a.push_back(x.alpha);
      r.push_back(x.lambda * std::pow(x.alpha, -p / (p - d)));
    }
    const auto f = detail::fit_power_correction(a, r);
    if (full) *full = f;
    return f.r0;
  };
  FitResult out;
  out.regime = Regime::subcritical;
  out.d = d;
  out.p = p;
  out.integral = I;
  detail::PowerFit f;
  out.limit = limit_of(recs, &f);
  out.coefficients = {f.r0, f.c, f.c2, f.s};
  out.method = f.method;
  out.prediction = predicted_lambda_subcritical(1.0, d, p, I);
  out.relative_error = std::abs(out.limit - out.prediction) / std::abs(out.prediction);
  out.window_spread = detail::spread(recs, out.limit, [&](const auto& rs) { return limit_of(rs, nullptr); });
  for (const auto& x : recs) {
    out.alphas.push_back(x.alpha);
    out.values.push_back(x.lambda * std::pow(x.alpha, -p / (p - d)));
  }
  return out;
}

/// Fits g(alpha) = alpha^{1/(d-1)} log(1/|lambda|) = g0 + c1 alpha^{1/d}.
inline FitResult fit_critical(const std::vector<SweepRecord>& records, int d, double I) {
  if (d < 2) throw DomainError("fit_critical: requires d >= 2");
  const auto recs = detail::fit_set(records);
  for (const auto& r : recs)
    if (!(r.lambda < 0.0)) throw DataError("fit_critical: lambda >= 0 at alpha = " + detail::format_double(r.alpha));
  const auto g_of = [d](const SweepRecord& r) { return std::pow(r.alpha, 1.0 / (d - 1.0)) * -std::log(-r.lambda); };
  const auto fit = [&](const std::vector<SweepRecord>& rs) {
    std::vector<double> x, y;
    for (const auto& r : rs) {
      x.push_back(std::pow(r.alpha, 1.0 / d));
      y.push_back(g_of(r));
    }
    return detail::least_squares(x, y);
  };
  FitResult out;
  out.regime = Regime::critical;
  out.d = d;
  out.p = d;
  out.integral = I;
  const auto f = fit(recs);
  out.limit = f.intercept;
  out.coefficients = {f.intercept, f.slope};
  out.method = "least-squares";
  out.prediction = predicted_log_rate_critical(d, I);
  out.relative_error = std::abs(out.limit - out.prediction) / std::abs(out.prediction);
  out.window_spread = detail::spread(recs, out.limit, [&](const auto& rs) { return fit(rs).intercept; });
  for (const auto& r : recs) {
    out.alphas.push_back(r.alpha);
    out.values.push_back(g_of(r));
  }
  return out;
}

enum class Quantity { grad_norm, sup_norm };

/// Least-squares slope of log q against log alpha over converged records,
/// q = ||grad u||_p or ||u||_inf^p.
inline double exponent_regression(const std::vector<SweepRecord>& records, Quantity q, int d, double p) {
  if (!(p > d)) throw DomainError("exponent_regression: requires p > d");
  std::vector<double> x, y;
  for (const auto& r : records) {
    if (!r.converged) continue;
    const double v = q == Quantity::grad_norm ? r.grad_norm_p : std::pow(r.sup_u, p);
    if (!(v > 0.0)) throw DataError("exponent_regression: non-positive quantity");
    x.push_back(std::log(r.alpha));
    y.push_back(std::log(v));
  }
  if (x.size() < 2) throw UsageError("exponent_regression: need at least 2 converged records");
  return detail::least_squares(x, y).slope;
}

/// sup_{|x| <= rho} u^d - 1 after scaling u so that u(rho) = 1.
inline double oscillation_diagnostic(const GroundState& state, double rho, int d) {
  const Field& f = state.field;
  if (!f.grid) throw UsageError("oscillation_diagnostic: empty state");
  if (f.grid->kind() == Coordinate::line) throw DomainError("oscillation_diagnostic: needs a radial state");
  const double at = detail::interpolate(f, rho);
  if (!(at > 0.0)) throw DataError("oscillation_diagnostic: u(rho) <= 0");
  double sup = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.grid->radius(i) <= rho) sup = std::max(sup, std::pow(f.values[i] / at, d) - 1.0);
  return sup;
}

// ---------------------------------------------------------------------------
// Upper bounds by explicit trial states

struct UpperBound {
  double alpha = 0.0;
  double lambda = 0.0;
  double bound = 0.0;  // Rayleigh quotient of the trial state on the same grid
  bool holds = false;  // lambda <= bound
};

/// Trial state for record i: the scaled optimal 1D profile (d = 1) or a
/// scaled Gaussian (d >= 2) for p > d, v_beta for p = d. Both live on the
/// record's own grid, so lambda <= bound is exact for a true minimizer.
inline UpperBound test_function_bound(const SweepResult& s, std::size_t i) {
  if (i >= s.states.size()) throw UsageError("test_function_bound: sweep carries no states");
  const auto& rec = s.records[i];
  const GroundState& gs = s.states[i];
  const GridPtr& grid = gs.field.grid;
  const Potential pot = record_potential(s, i);
  const double I = s.integral;
  if (!(I > 0.0)) throw DomainError("test_function_bound: requires int V > 0");
  Field trial;
  if (s.p == static_cast<double>(s.d)) {
    const double outer = std::log(grid->spec().extent);
    const double log_beta = std::min(critical_log_beta(rec.alpha, s.d, I), 0.9 * outer);
    trial = critical_test_function(std::exp(log_beta), grid).field;
    trial.values.back() = 0.0;
  } else if (s.d == 1) {
    const auto m = explicit_minimizer_1d(I, s.p);
    trial = scaled_test_field(grid, [m](double r) { return m(r); }, rec.alpha, s.p);
  } else {
    const double w = std::pow(I, -1.0 / (s.p - s.d));
    trial = scaled_test_field(grid, [w](double r) { return std::exp(-0.5 * r * r / (w * w)); }, rec.alpha, s.p);
  }
  UpperBound b;
  b.alpha = rec.alpha;
  b.lambda = rec.lambda;
  b.bound = eval_Q(*grid, trial.values, pot, s.p).rayleigh;
  b.holds = rec.lambda <= b.bound;
  return b;
}

inline std::vector<UpperBound> test_function_bounds(const SweepResult& s) {
  std::vector<UpperBound> out;
  for (std::size_t i = 0; i < s.states.size(); ++i)
    if (s.records[i].converged) out.push_back(test_function_bound(s, i));
  return out;
}

/// lambda_i / alpha_i non-increasing in alpha, with absolute slack.
inline bool monotone_ratio(const std::vector<SweepRecord>& records, double slack = 1e-10) {
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& big = records[i];
    const auto& small = records[i + 1];
    if (big.lambda / big.alpha > small.lambda / small.alpha + slack) return false;
  }
  return true;
}

}  // namespace plap

#endif  // PLAP_ASYMPTOTICS_HPP
