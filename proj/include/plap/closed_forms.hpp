#ifndef PLAP_CLOSED_FORMS_HPP
#define PLAP_CLOSED_FORMS_HPP

// Exact constants, explicit solutions, predicted weak-coupling asymptotics and
// analytic test functions. Everything here is closed form; the numerically
// computed Sobolev constant for d >= 2 lives in sobolev.hpp.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "plap/errors.hpp"
#include "plap/functional.hpp"
#include "plap/grid.hpp"
#include "plap/potential.hpp"

namespace plap {

enum class Regime { subcritical, critical };

inline std::string_view to_string(Regime r) { return r == Regime::subcritical ? "subcritical" : "critical"; }

struct AsymptoticPrediction {
  Regime regime = Regime::subcritical;
  int d = 1;
  double p = 2.0;
  double integral = 0.0;
  /// subcritical: lim alpha^{-p/(p-d)} lambda; critical: lim alpha^{1/(d-1)} log(1/|lambda|)
  double coefficient = 0.0;
};

/// Sharp constant c in int |grad u|^p >= c int |u|^p / |x|^p, d > p.
inline double hardy_constant(int d, double p) {
  if (!(static_cast<double>(d) > p)) throw DomainError("hardy_constant: requires d > p");
  return std::pow((d - p) / p, p);
}

/// E(v) in one dimension: -(p-1) (v/2)^{p/(p-1)}.
inline double E_closed_1d(double v, double p) {
  if (!(p > 1.0)) throw DomainError("E_closed_1d: requires p > 1");
  if (v < 0.0) throw DomainError("E_closed_1d: requires v >= 0");
  return -(p - 1.0) * std::pow(0.5 * v, p / (p - 1.0));
}

/// E(v) = -((p-d)/p) (d/p)^{d/(p-d)} (S v)^{p/(p-d)}.
inline double E_from_sobolev(double v, int d, double p, double S) {
  if (!(p > d)) throw DomainError("E_from_sobolev: requires p > d");
  if (v < 0.0 || !(S > 0.0)) throw DomainError("E_from_sobolev: requires v >= 0, S > 0");
  const double q = p - d;
  return -(q / p) * std::pow(static_cast<double>(d) / p, d / q) * std::pow(S * v, p / q);
}

/// Inverse of E_from_sobolev at v = 1:
///   S = |E(1)|^{(p-d)/p} (p/(p-d))^{(p-d)/p} (p/d)^{d/p}.
inline double sobolev_from_E1(double E1, int d, double p) {
  if (!(p > d)) throw DomainError("sobolev_from_E1: requires p > d");
  if (!(E1 < 0.0)) throw DataError("sobolev_from_E1: E(1) must be negative");
  const double q = p - d;
  return std::pow(-E1, q / p) * std::pow(p / q, q / p) * std::pow(p / d, d / p);
}

/// Minimizer of E(v) for d = 1: u(x) = u0 exp(-kappa |x|), ||u||_p = 1.
struct ExplicitMinimizer1D {
  double v = 1.0;
  double p = 2.0;
  double kappa = 0.0;       // decay rate
  double amplitude = 0.0;   // u(0)
  double multiplier = 0.0;  // (p-1)(v/2)^{p/(p-1)} > 0
  double energy = 0.0;      // E(v) = -multiplier

  double operator()(double x) const { return amplitude * std::exp(-kappa * std::abs(x)); }
  double derivative(double x) const {
    return x == 0.0 ? 0.0 : -std::copysign(kappa, x) * (*this)(x);
  }
  /// (p-1)|u'|^p - multiplier u^p, zero for x != 0.
  double first_integral(double x) const {
    return (p - 1.0) * std::pow(std::abs(derivative(x)), p) - multiplier * std::pow((*this)(x), p);
  }
};

inline ExplicitMinimizer1D explicit_minimizer_1d(double v, double p) {
  if (!(v > 0.0) || !(p > 1.0)) throw DomainError("explicit_minimizer_1d: requires v > 0, p > 1");
  ExplicitMinimizer1D m;
  m.v = v;
  m.p = p;
  m.multiplier = (p - 1.0) * std::pow(0.5 * v, p / (p - 1.0));
  m.kappa = std::pow(m.multiplier / (p - 1.0), 1.0 / p);
  // int u0^p e^{-p kappa |x|} dx = 2 u0^p / (p kappa) = 1
  m.amplitude = std::pow(0.5 * p * m.kappa, 1.0 / p);
  m.energy = -m.multiplier;
  return m;
}

/// Predicted alpha^{p/(p-d)} E(I) for a known Sobolev constant S.
inline double predicted_lambda_subcritical(double alpha, int d, double p, double I, double S) {
  if (!(p > d)) throw DomainError("predicted_lambda_subcritical: requires p > d");
  if (!(I > 0.0)) throw DomainError("predicted_lambda_subcritical: requires int V > 0");
  return std::pow(alpha, p / (p - d)) * E_from_sobolev(I, d, p, S);
}

/// d omega_d^{1/(d-1)} I^{-1/(d-1)}.
inline double predicted_log_rate_critical(int d, double I) {
  if (d < 2) throw DomainError("predicted_log_rate_critical: requires d >= 2");
  if (!(I > 0.0)) throw DomainError("predicted_log_rate_critical: requires int V > 0");
  const double e = 1.0 / (d - 1.0);
  return d * std::pow(omega(d), e) * std::pow(I, -e);
}

/// p = d capacity of B_rho inside B_R: omega_d (log(R/rho))^{1-d}.
inline double capacity_annulus(double rho, double R, int d) {
  if (!(rho > 0.0) || !(R > rho)) throw DomainError("capacity_annulus: requires R > rho > 0");
  return omega(d) * std::pow(std::log(R / rho), 1.0 - d);
}

/// v_beta(r) = 1 for r <= 1, (1 - log r / log beta)_+ outside.
inline double critical_test_profile(double beta, double r) {
  if (r <= 1.0) return 1.0;
  return std::max(0.0, 1.0 - std::log(r) / std::log(beta));
}

/// log beta(alpha) = (omega_d / (alpha (1 - eps) I))^{1/(d-1)}: the radius at
/// which the continuum energy bound of v_beta vanishes.
inline double critical_log_beta(double alpha, int d, double I, double eps = 0.0) {
  if (d < 2) throw DomainError("critical_log_beta: requires d >= 2");
  if (!(alpha > 0.0) || !(I > 0.0)) throw DomainError("critical_log_beta: requires alpha, I > 0");
  return std::pow(omega(d) / (alpha * (1.0 - eps) * I), 1.0 / (d - 1.0));
}

struct CriticalTestFunction {
  Field field;
  double exact_kinetic = 0.0;  // omega_d (log beta)^{1-d}
};

inline CriticalTestFunction critical_test_function(double beta, const GridPtr& grid) {
  if (!(beta > 1.0)) throw DomainError("critical_test_function: requires beta > 1");
  if (grid->kind() == Coordinate::line) throw DomainError("critical_test_function: needs a radial grid");
  if (grid->spec().extent < beta) throw DomainError("critical_test_function: grid extent below beta");
  CriticalTestFunction out;
  out.field = sample(grid, [beta](double r) { return critical_test_profile(beta, r); });
  out.exact_kinetic = capacity_annulus(1.0, beta, grid->dimension());
  return out;
}

/// v_alpha(x) = alpha^{d/(p(p-d))} phi(alpha^{1/(p-d)} |x|) sampled on `grid`,
/// zero on Dirichlet nodes so it lies in the solver's trial space.
inline Field scaled_test_field(const GridPtr& grid, const std::function<double(double)>& phi, double alpha,
                               double p) {
  const int d = grid->dimension();
  if (!(p > d)) throw DomainError("scaled_test_field: requires p > d");
  const double amp = std::pow(alpha, d / (p * (p - d)));
  const double k = std::pow(alpha, 1.0 / (p - d));
  Field f = sample(grid, [&](double r) { return amp * phi(k * r); });
  for (std::size_t i = 0; i < f.size(); ++i)
    if (grid->is_dirichlet(i)) f.values[i] = 0.0;
  return f;
}

struct ScaledTestBound {
  double q_value = 0.0;  // Q_{alpha V}[v_alpha]
  double norm = 0.0;     // ||v_alpha||_p
  Field v_alpha;
};

/// Q_{alpha V}[v_alpha] where v_alpha is phi rescaled onto the grid obtained
/// by stretching phi's grid by alpha^{-1/(p-d)}. The stretch maps nodes to
/// nodes, so ||v_alpha||_p = ||phi||_p up to rounding.
inline ScaledTestBound subcritical_test_bound(const Field& phi, const RadialProfile& V, double alpha, double p) {
  const Grid& base = *phi.grid;
  const int d = base.dimension();
  if (!(p > d)) throw DomainError("subcritical_test_bound: requires p > d");
  if (base.kind() == Coordinate::log_radius) throw DomainError("subcritical_test_bound: needs line or radial grid");
  GridSpec spec = base.spec();
  spec.nodes = base.size();
  spec.extent = base.spec().extent * std::pow(alpha, -1.0 / (p - d));
  auto grid = build_grid(spec);
  const double amp = std::pow(alpha, d / (p * (p - d)));
  std::vector<double> v(phi.values);
  for (double& x : v) x *= amp;
  ScaledTestBound out;
  out.v_alpha = Field(grid, std::move(v));
  const Potential pot = sample_potential(grid, V, alpha);
  out.q_value = eval_Q(*grid, out.v_alpha.values, pot, p).q_value;
  out.norm = norm_p(*grid, out.v_alpha.values, p);
  return out;
}

}  // namespace plap

#endif  // PLAP_CLOSED_FORMS_HPP
