#ifndef PLAP_SOLVER_HPP
#define PLAP_SOLVER_HPP

// Ground states of the discrete Rayleigh quotient Q_V[u] / ||u||_p^p.
//
// The iteration is a projected descent on the unit p-sphere:
//
//   d   = -P(u)^{-1} grad R(u)
//   u  <- |u + tau d| / || u + tau d ||_p
//
// with tau chosen by Armijo backtracking on R. P(u) is the tridiagonal
// matrix p(p-1) [D^T diag(m |g|^{p-2}) D + |R| diag(w |u|^{p-2})], i.e. the
// Hessian of the kinetic term shifted by the current Rayleigh value, with
// floors on |g| and |u| where p != 2 makes it degenerate. Without it the
// iteration count grows like N^2.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plap/closed_forms.hpp"
#include "plap/errors.hpp"
#include "plap/functional.hpp"
#include "plap/grid.hpp"
#include "plap/potential.hpp"

namespace plap {

enum class DomainPolicy { fixed, adaptive };
enum class InitKind { gaussian, test_function };

struct SolverConfig {
  double p = 2.0;
  int max_iter = 50000;
  double tol_rel = 1e-10;       // relative Rayleigh change over `window` iterations
  double tol_residual = 1e-6;   // scale-free EL residual, see detail::scaled_residual
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  int window = 50;
  InitKind init = InitKind::gaussian;
  double init_width = 1.0;      // u0 = exp(-|x|^2 / (2 width^2))
  std::vector<double> epsilon_schedule{1e-2, 1e-4, 1e-8};  // p < 2, times max |grad u|
  DomainPolicy domain = DomainPolicy::adaptive;
  double tol_dom = 1e-4;
  int max_doublings = 6;
  double exponent_guard = 600.0;  // log-radius grids keep d * t_max below this
  bool record_history = false;

  void validate() const {
    if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("solver: p must be > 1");
    if (max_iter < 1) throw ConfigError("solver: max_iter must be positive");
    if (!(tol_rel > 0.0) || !(tol_residual > 0.0) || !(tol_dom > 0.0))
      throw ConfigError("solver: tolerances must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ConfigError("solver: armijo_c must lie in (0,1)");
    if (!(backtrack > 0.0 && backtrack < 1.0)) throw ConfigError("solver: backtrack must lie in (0,1)");
    if (window < 1) throw ConfigError("solver: window must be positive");
    if (!(init_width > 0.0)) throw ConfigError("solver: init_width must be positive");
    if (p < 2.0 && epsilon_schedule.empty()) throw ConfigError("solver: p < 2 needs an epsilon schedule");
    for (double e : epsilon_schedule)
      if (!(e > 0.0)) throw ConfigError("solver: epsilon schedule entries must be positive");
    if (max_doublings < 0) throw ConfigError("solver: max_doublings must be >= 0");
  }
};

struct GroundState {
  double lambda = 0.0;
  Field field;                 // ||u||_p = 1, u >= 0
  int iterations = 0;
  double residual = 0.0;       // scale-free EL residual, see detail::scaled_residual
  bool converged = false;
  bool domain_converged = true;
  double domain_extent = 0.0;
  EnergyBreakdown energy;
  bool radial_restricted = false;
  bool used_fallback = false;
  std::vector<double> history;  // Rayleigh value per accepted step (record_history)
};

namespace detail {

inline double abs_pow(double x, double p) {
  x = std::abs(x);
  if (p == 2.0) return x * x;
  if (p == 3.0) return x * x * x;
  if (p == 4.0) return (x * x) * (x * x);
  return std::pow(x, p);
}

inline double fast_signed_pow(double x, double q) {
  if (q == 1.0) return x;
  if (q == 2.0) return x * std::abs(x);
  if (q == 3.0) return x * x * x;
  return std::copysign(std::pow(std::abs(x), q), x);
}

/// Everything the descent needs about one iterate. Norm is not assumed to be 1.
struct Evaluation {
  double kinetic = 0.0;  // regularized when epsilon > 0
  double potential = 0.0;
  double norm_pp = 0.0;
  double rayleigh = 0.0;
};

class RayleighProblem {
 public:
  RayleighProblem(const Potential& pot, double p) : grid_(*pot.grid), pot_(pot), p_(p) {}

  const Grid& grid() const { return grid_; }
  double p() const { return p_; }

  Evaluation evaluate(std::span<const double> u, double eps) const {
    const auto inv = grid_.inverse_spacing();
    const auto m = grid_.cell_weights();
    const auto w = grid_.weights();
    Evaluation e;
    if (eps == 0.0) {
      for (std::size_t c = 0; c < m.size(); ++c) e.kinetic += m[c] * abs_pow((u[c + 1] - u[c]) * inv[c], p_);
    } else {
      const double e2 = eps * eps, ep = std::pow(eps, p_);
      for (std::size_t c = 0; c < m.size(); ++c) {
        const double g = (u[c + 1] - u[c]) * inv[c];
        e.kinetic += m[c] * (std::pow(g * g + e2, 0.5 * p_) - ep);
      }
    }
    const auto& V = pot_.values;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double up = abs_pow(u[i], p_);
      e.norm_pp += w[i] * up;
      if (V[i] != 0.0) e.potential += w[i] * V[i] * up;
    }
    if (pot_.point != 0.0) e.potential += pot_.point * abs_pow(u[grid_.origin_index()], p_);
    e.rayleigh = (e.kinetic - e.potential) / e.norm_pp;
    return e;
  }

  /// grad R = (grad Q - R grad N) / N, zero on Dirichlet nodes.
  void rayleigh_gradient(std::span<const double> u, double eps, const Evaluation& e, std::vector<double>& g) const {
    const auto inv = grid_.inverse_spacing();
    const auto m = grid_.cell_weights();
    const auto w = grid_.weights();
    const double p = p_;
    g.assign(u.size(), 0.0);
    const double e2 = eps * eps;
    for (std::size_t c = 0; c < m.size(); ++c) {
      const double s = (u[c + 1] - u[c]) * inv[c];
      const double phi = eps == 0.0 ? fast_signed_pow(s, p - 1.0) : std::pow(s * s + e2, 0.5 * (p - 2.0)) * s;
      const double flux = p * m[c] * phi * inv[c];
      g[c] -= flux;
      g[c + 1] += flux;
    }
    const auto& V = pot_.values;
    for (std::size_t i = 0; i < u.size(); ++i)
      g[i] -= p * w[i] * (V[i] + e.rayleigh) * fast_signed_pow(u[i], p - 1.0);
    if (pot_.point != 0.0) {
      const std::size_t o = grid_.origin_index();
      g[o] -= p * pot_.point * fast_signed_pow(u[o], p - 1.0);
    }
    const double inv_n = 1.0 / e.norm_pp;
    for (std::size_t i = 0; i < u.size(); ++i) g[i] = grid_.is_dirichlet(i) ? 0.0 : g[i] * inv_n;
  }

  /// Solves P d = rhs for the shifted kinetic Hessian described at the top of this file.
  void precondition(std::span<const double> u, double shift, double eps, std::span<const double> rhs,
                    std::vector<double>& out) const {
    const std::size_t n = u.size();
    const auto inv = grid_.inverse_spacing();
    const auto m = grid_.cell_weights();
    const auto w = grid_.weights();
    const double p = p_;
    const double scale = p * (p - 1.0);

    double gmax = 0.0, umax = 0.0;
    for (std::size_t c = 0; c + 1 < n; ++c) gmax = std::max(gmax, std::abs(u[c + 1] - u[c]) * inv[c]);
    for (double x : u) umax = std::max(umax, std::abs(x));
    // p < 2: the true weights blow up at zero, keep the floor tiny
    const double floor = p < 2.0 ? 1e-10 : 1e-8;
    const double dg2 = std::pow(std::max(eps, floor * gmax), 2.0);
    const double du2 = std::pow(floor * umax, 2.0);

    diag_.assign(n, 0.0);
    off_.assign(n, 0.0);  // off_[c] couples c and c+1
    for (std::size_t c = 0; c + 1 < n; ++c) {
      const double s = (u[c + 1] - u[c]) * inv[c];
      const double a = p == 2.0 ? 1.0 : std::pow(s * s + dg2, 0.5 * (p - 2.0));
      const double k = scale * m[c] * a * inv[c] * inv[c];
      diag_[c] += k;
      diag_[c + 1] += k;
      off_[c] = -k;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double b = p == 2.0 ? 1.0 : std::pow(u[i] * u[i] + du2, 0.5 * (p - 2.0));
      diag_[i] += scale * w[i] * shift * b;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!grid_.is_dirichlet(i)) continue;
      diag_[i] = 1.0;
      if (i > 0) off_[i - 1] = 0.0;
      if (i + 1 < n) off_[i] = 0.0;
    }
    // Thomas algorithm
    out.assign(rhs.begin(), rhs.end());
    cp_.assign(n, 0.0);
    double b0 = diag_[0];
    cp_[0] = off_[0] / b0;
    out[0] /= b0;
    for (std::size_t i = 1; i < n; ++i) {
      const double denom = diag_[i] - off_[i - 1] * cp_[i - 1];
      cp_[i] = (i + 1 < n) ? off_[i] / denom : 0.0;
      out[i] = (out[i] - off_[i - 1] * out[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) out[i] -= cp_[i] * out[i + 1];
    for (std::size_t i = 0; i < n; ++i)
      if (grid_.is_dirichlet(i)) out[i] = 0.0;
  }

  double normalize(std::vector<double>& u) const {
    const auto w = grid_.weights();
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * abs_pow(u[i], p_);
    if (!(s > 0.0) || !std::isfinite(s)) throw NumericalError("solver: cannot normalize iterate");
    const double n = std::pow(s, 1.0 / p_);
    for (double& x : u) x /= n;
    return n;
  }

 private:
  const Grid& grid_;
  const Potential& pot_;
  double p_;
  mutable std::vector<double> diag_, off_, cp_;
};

struct DescentOutcome {
  std::vector<double> u;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

/// EL defect relative to the size of its terms, all in the dual norm:
///   ||k - v - lambda u^{p-1}|| / (||k|| + ||v|| + |lambda| ||u^{p-1}||)
/// with k the discrete p-Laplacian and v the potential term, nodewise divided
/// by the weights. Scale free, so it behaves on exponentially weighted grids.
inline double scaled_residual(const Grid& grid, std::span<const double> u, const Potential& pot, double p,
                              double lambda) {
  const auto kin = assemble_gradient(grid, u, zero_potential(pot.grid), p, 0.0);
  const auto w = grid.weights();
  const double q = p / (p - 1.0);
  double sr = 0.0, sk = 0.0, sv = 0.0, sl = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (grid.is_dirichlet(i) || w[i] <= 0.0) continue;
    const double up = fast_signed_pow(u[i], p - 1.0);
    const double k = kin[i] / (p * w[i]);
    double v = pot.values[i] * up;
    if (i == grid.origin_index() && pot.point != 0.0) v += pot.point * up / w[i];
    const double l = lambda * up;
    sr += w[i] * std::pow(std::abs(k - v - l), q);
    sk += w[i] * std::pow(std::abs(k), q);
    sv += w[i] * std::pow(std::abs(v), q);
    sl += w[i] * std::pow(std::abs(l), q);
  }
  const double denom = std::pow(sk, 1.0 / q) + std::pow(sv, 1.0 / q) + std::pow(sl, 1.0 / q);
  if (!(denom > 0.0)) return 0.0;
  return std::pow(sr, 1.0 / q) / denom;
}

inline DescentOutcome descend(const Potential& pot, std::vector<double> u, const SolverConfig& cfg,
                              std::vector<double>* history) {
  const Grid& grid = *pot.grid;
  const double p = cfg.p;
  RayleighProblem prob(pot, p);

  for (std::size_t i = 0; i < u.size(); ++i) u[i] = grid.is_dirichlet(i) ? 0.0 : std::abs(u[i]);
  prob.normalize(u);

  std::vector<double> stages;
  // p < 2: continuation through the epsilon schedule, then the exact flux,
  // which is continuous for every p > 1
  if (p < 2.0) stages = cfg.epsilon_schedule;
  stages.push_back(0.0);

  DescentOutcome out;
  std::vector<double> grad, dir, trial;
  const auto inv = grid.inverse_spacing();
  int iters_left = cfg.max_iter;
  bool stalled = false;

  for (std::size_t stage = 0; stage < stages.size(); ++stage) {
    const bool last = stage + 1 == stages.size();
    double gmax = 0.0;
    for (std::size_t c = 0; c + 1 < u.size(); ++c) gmax = std::max(gmax, std::abs(u[c + 1] - u[c]) * inv[c]);
    const double eps = stages[stage] * gmax;

    Evaluation cur = prob.evaluate(u, eps);
    std::vector<double> window;
    window.reserve(static_cast<std::size_t>(iters_left) + 1);
    window.push_back(cur.rayleigh);
    double tau = 1.0;

    while (iters_left > 0) {
      if (!std::isfinite(cur.rayleigh)) throw NumericalError("solver: Rayleigh quotient is not finite");

      const std::size_t k = window.size() - 1;
      const std::size_t W = static_cast<std::size_t>(cfg.window);
      const bool stagnant = k >= W && std::abs(window[k - W] - cur.rayleigh) <=
                                          cfg.tol_rel * std::max(std::abs(cur.rayleigh),
                                                                 std::numeric_limits<double>::min());
      if (stagnant) {
        if (!last) break;
        out.residual = scaled_residual(grid, u, pot, p, prob.evaluate(u, 0.0).rayleigh);
        if (out.residual <= cfg.tol_residual) {
          out.converged = true;
          break;
        }
      }

      prob.rayleigh_gradient(u, eps, cur, grad);
      for (double& x : grad) x = -x;
      prob.precondition(u, std::max(std::abs(cur.rayleigh), std::numeric_limits<double>::min()), eps, grad, dir);
      double slope = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) slope -= grad[i] * dir[i];
      if (!(slope < 0.0)) {
        // preconditioned direction lost descent; fall back to the raw gradient
        dir = grad;
        slope = 0.0;
        for (double x : grad) slope -= x * x;
        if (slope == 0.0) break;
      }

      tau = std::min(1.0, 4.0 * tau);
      const double noise = 1e-15 * (std::abs(cur.kinetic) + std::abs(cur.potential)) / cur.norm_pp;
      bool accepted = false;
      Evaluation next;
      while (tau > 1e-14) {
        trial.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
          trial[i] = grid.is_dirichlet(i) ? 0.0 : std::abs(u[i] + tau * dir[i]);
        prob.normalize(trial);
        next = prob.evaluate(trial, eps);
        const double decrease_bound = cfg.armijo_c * tau * slope;
        if (next.rayleigh <= cur.rayleigh + decrease_bound ||
            (next.rayleigh <= cur.rayleigh && -decrease_bound <= noise)) {
          accepted = true;
          break;
        }
        tau *= cfg.backtrack;
      }
      --iters_left;
      ++out.iterations;
      if (!accepted) {  // no representable decrease left
        stalled = true;
        break;
      }
      u.swap(trial);
      cur = next;
      window.push_back(cur.rayleigh);
      if (history) history->push_back(cur.rayleigh);
    }
    if (last && !out.converged) {
      out.residual = scaled_residual(grid, u, pot, p, prob.evaluate(u, 0.0).rayleigh);
      // a stall at rounding level with a small residual is convergence
      out.converged = stalled && out.residual <= cfg.tol_residual;
    }
  }
  out.u = std::move(u);
  return out;
}

inline bool sign_changing(const Potential& pot) {
  return std::any_of(pot.values.begin(), pot.values.end(), [](double x) { return x < 0.0; });
}

}  // namespace detail

/// Deterministic starting fields.
inline std::vector<double> gaussian_init(const Grid& grid, double width) {
  std::vector<double> u(grid.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = grid.radius(i) / width;
    u[i] = std::exp(-0.5 * r * r);
  }
  return u;
}

/// The upper-bound test function for the current coupling: v_beta for p = d,
/// a Gaussian at the predicted length scale for p > d.
inline std::vector<double> test_function_init(const Grid& grid, const Potential& pot, double p) {
  const int d = grid.dimension();
  const double I = pot.integral;
  if (!(I > 0.0)) return gaussian_init(grid, 1.0);
  if (p == static_cast<double>(d) && d >= 2) {
    const double outer = std::log(grid.spec().extent);
    const double log_beta = std::min(critical_log_beta(1.0, d, I), 0.8 * outer);
    if (!(log_beta > 0.0)) return gaussian_init(grid, 1.0);
    std::vector<double> u(grid.size());
    const double beta = std::exp(log_beta);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = critical_test_profile(beta, grid.radius(i));
    return u;
  }
  const double width = std::min(2.0 * std::pow(I, -1.0 / std::max(p - d, 1e-3)), 0.25 * grid.spec().extent);
  return gaussian_init(grid, width);
}

namespace detail {

inline GroundState finish(const Potential& pot, const SolverConfig& cfg, DescentOutcome&& run,
                          std::vector<double>&& history) {
  GroundState gs;
  gs.field = Field(pot.grid, std::move(run.u));
  gs.energy = eval_Q(*pot.grid, gs.field.values, pot, cfg.p);
  gs.lambda = gs.energy.rayleigh;
  gs.iterations = run.iterations;
  gs.residual = run.residual;
  gs.converged = run.converged;
  gs.domain_extent = pot.grid->spec().extent;
  gs.radial_restricted = pot.grid->dimension() >= 2 && sign_changing(pot);
  gs.history = std::move(history);
  return gs;
}

inline GroundState solve_on_grid(const Potential& pot, const SolverConfig& cfg, std::vector<double> init) {
  std::vector<double> history;
  auto run = descend(pot, std::move(init), cfg, cfg.record_history ? &history : nullptr);
  GroundState gs = finish(pot, cfg, std::move(run), std::move(history));

  const int d = pot.grid->dimension();
  if (gs.lambda >= 0.0 && pot.integral > 0.0 && cfg.p >= d && cfg.init != InitKind::test_function) {
    // the upper-bound test functions guarantee a negative state exists
    std::vector<double> h2;
    auto retry = descend(pot, test_function_init(*pot.grid, pot, cfg.p), cfg, cfg.record_history ? &h2 : nullptr);
    GroundState alt = finish(pot, cfg, std::move(retry), std::move(h2));
    alt.iterations += gs.iterations;
    alt.used_fallback = true;
    if (alt.lambda < gs.lambda) return alt;
  }
  return gs;
}

/// Larger domain with the same spacing; returns nullopt when the log-radius
/// exponent guard forbids growing.
inline std::optional<GridSpec> extended_spec(const Grid& grid, const SolverConfig& cfg) {
  GridSpec s = grid.spec();
  const std::size_t n = grid.size();
  switch (s.kind) {
    case Coordinate::line:
    case Coordinate::radial:
      s.extent *= 2.0;
      s.nodes = 2 * n - 1;
      return s;
    case Coordinate::log_radius: {
      // beyond the turning radius u decays exponentially in r, so a fixed
      // stretch in t is plenty; half the span would soon hit the guard
      const double h = grid.nodes()[1] - grid.nodes()[0];
      const std::size_t extra = std::min((n - 1) / 2, static_cast<std::size_t>(std::ceil(20.0 / h)));
      const double t_max = grid.nodes().back() + static_cast<double>(extra) * h;
      if (s.dimension * t_max > cfg.exponent_guard) return std::nullopt;
      s.extent = std::exp(t_max);
      s.nodes = n + extra;
      return s;
    }
  }
  return std::nullopt;
}

/// Copies u onto the extended grid (nodes coincide). The new outer region is
/// filled by continuing the decay rate of the old outer quarter; exact zeros
/// would sit where the p < 2 Hessian is singular.
inline std::vector<double> prolong(const Grid& from, std::span<const double> u, const Grid& to) {
  std::vector<double> out(to.size(), 0.0);
  const bool line = from.kind() == Coordinate::line;
  const std::size_t shift = line ? (to.size() - from.size()) / 2 : 0;
  for (std::size_t i = 0; i < u.size(); ++i) out[i + shift] = u[i];

  // one outward ray per side: (old origin index, direction)
  const std::size_t o_old = from.origin_index();
  const std::size_t half = line ? o_old : from.size() - 1;  // old distance origin -> boundary
  const std::size_t o_new = o_old + shift;
  const std::size_t half_new = line ? (to.size() - 1) / 2 : to.size() - 1;
  const int sides = line ? 2 : 1;
  for (int side = 0; side < sides; ++side) {
    const auto at = [&](std::size_t j) -> std::size_t { return side == 0 ? o_new + j : o_new - j; };
    const std::size_t j1 = (3 * half) / 4, j2 = (7 * half) / 8;
    if (j2 <= j1) continue;
    const double a = out[at(j1)], b = out[at(j2)];
    if (!(a > 0.0 && b > 0.0 && b < a)) continue;
    const double rate = std::log(a / b) / static_cast<double>(j2 - j1);
    for (std::size_t j = j2 + 1; j < half_new; ++j) out[at(j)] = b * std::exp(-rate * static_cast<double>(j - j2));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (to.is_dirichlet(i)) out[i] = 0.0;
  return out;
}

}  // namespace detail

/// Lowest eigenvalue of the discrete problem for the potential on its grid.
/// With the adaptive domain policy the domain is doubled (spacing kept) until
/// lambda changes by less than tol_dom relative.
inline GroundState solve_lambda(const Potential& pot, const SolverConfig& cfg) {
  cfg.validate();
  if (!pot.grid) throw UsageError("solve_lambda: potential has no grid");
  const Grid& grid = *pot.grid;
  detail::check_energy_grid(grid, cfg.p);

  std::vector<double> init = cfg.init == InitKind::test_function ? test_function_init(grid, pot, cfg.p)
                                                                 : gaussian_init(grid, cfg.init_width);
  GroundState gs = detail::solve_on_grid(pot, cfg, std::move(init));
  if (cfg.domain == DomainPolicy::fixed || !pot.resamplable()) return gs;

  gs.domain_converged = false;
  Potential current = pot;
  for (int k = 0; k < cfg.max_doublings; ++k) {
    const auto spec = detail::extended_spec(*current.grid, cfg);
    if (!spec) break;
    auto bigger = build_grid(*spec);
    Potential next = current.resample(bigger);
    auto warm = detail::prolong(*current.grid, gs.field.values, *bigger);
    GroundState gs2 = detail::solve_on_grid(next, cfg, std::move(warm));
    const double change = std::abs(gs2.lambda - gs.lambda);
    gs2.iterations += gs.iterations;
    gs2.used_fallback = gs2.used_fallback || gs.used_fallback;
    gs = std::move(gs2);
    gs.domain_converged = false;
    current = std::move(next);
    if (change <= cfg.tol_dom * std::abs(gs.lambda)) {
      gs.domain_converged = true;
      break;
    }
  }
  return gs;
}

struct EResult {
  double E = 0.0;
  GroundState state;
};

struct EGridOptions {
  std::size_t nodes = 8192;
  double extent_factor = 16.0;  // L0 = factor * v^{-1/(p-d)}
};

/// E(v) = inf ||grad u||_p^p - v |u(0)|^p over ||u||_p = 1, on a symmetric
/// line grid (d = 1) or a radial grid (d >= 2).
inline EResult solve_E(double v, int d, const SolverConfig& cfg, const EGridOptions& opts = {}) {
  const double p = cfg.p;
  if (!(p > d)) throw ConfigError("solve_E: requires p > d");
  if (!(v > 0.0)) throw ConfigError("solve_E: requires v > 0");
  GridSpec spec;
  spec.dimension = d;
  spec.kind = d == 1 ? Coordinate::line : Coordinate::radial;
  spec.nodes = opts.nodes;
  spec.extent = opts.extent_factor * std::pow(v, -1.0 / (p - d));
  auto grid = build_grid(spec);
  SolverConfig c = cfg;
  c.init_width = spec.extent / 8.0;
  EResult out;
  out.state = solve_lambda(point_potential(grid, v), c);
  out.E = out.state.lambda;
  return out;
}

}  // namespace plap

#endif  // PLAP_SOLVER_HPP
