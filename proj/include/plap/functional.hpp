#ifndef PLAP_FUNCTIONAL_HPP
#define PLAP_FUNCTIONAL_HPP

// Discrete energy Q_V[u] = sum_c m_c |g_c|^p - sum_i w_i V_i |u_i|^p,
// its gradient, and the Euler-Lagrange residual of
//   -Delta_p u - V |u|^{p-2} u = lambda |u|^{p-2} u.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "plap/errors.hpp"
#include "plap/grid.hpp"
#include "plap/potential.hpp"

namespace plap {

struct EnergyBreakdown {
  double kinetic = 0.0;         // ||grad u||_p^p
  double potential_term = 0.0;  // int V |u|^p
  double q_value = 0.0;         // kinetic - potential_term
  double p_norm_p = 0.0;        // ||u||_p^p
  double sup_norm = 0.0;        // max |u_i|
  double rayleigh = 0.0;        // q_value / p_norm_p
};

namespace detail {

inline void check_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("exponent p must be > 1");
}

inline void check_energy_grid(const Grid& grid, double p) {
  check_exponent(p);
  if (grid.kind() == Coordinate::log_radius && p != static_cast<double>(grid.dimension()))
    throw ConfigError("log-radius grids carry the Dirichlet energy only for p = d");
}

/// sign(x) |x|^{q}
inline double signed_pow(double x, double q) { return std::copysign(std::pow(std::abs(x), q), x); }

}  // namespace detail

inline double norm_p(const Grid& grid, std::span<const double> u, double p) {
  detail::check_exponent(p);
  if (u.size() != grid.size()) throw UsageError("norm_p: length mismatch");
  const auto w = grid.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * std::pow(std::abs(u[i]), p);
  return std::pow(s, 1.0 / p);
}

inline double sup_norm(std::span<const double> u) {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return m;
}

/// sum_c m_c |g_c|^p. With epsilon > 0 the integrand is
/// (g^2 + eps^2)^{p/2} - eps^p, whose gradient is the regularized flux.
inline double dirichlet_energy(const Grid& grid, std::span<const double> u, double p, double epsilon = 0.0) {
  detail::check_energy_grid(grid, p);
  if (u.size() != grid.size()) throw UsageError("dirichlet_energy: length mismatch");
  const auto inv = grid.inverse_spacing();
  const auto m = grid.cell_weights();
  double s = 0.0;
  if (epsilon == 0.0) {
    for (std::size_t c = 0; c < m.size(); ++c) s += m[c] * std::pow(std::abs(u[c + 1] - u[c]) * inv[c], p);
  } else {
    const double e2 = epsilon * epsilon;
    const double ep = std::pow(epsilon, p);
    for (std::size_t c = 0; c < m.size(); ++c) {
      const double g = (u[c + 1] - u[c]) * inv[c];
      s += m[c] * (std::pow(g * g + e2, 0.5 * p) - ep);
    }
  }
  return s;
}

inline double potential_energy(const Potential& pot, std::span<const double> u, double p) {
  const Grid& grid = *pot.grid;
  if (u.size() != grid.size()) throw UsageError("potential_energy: length mismatch");
  const auto w = grid.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (pot.values[i] != 0.0) s += w[i] * pot.values[i] * std::pow(std::abs(u[i]), p);
  if (pot.point != 0.0) s += pot.point * std::pow(std::abs(u[grid.origin_index()]), p);
  return s;
}

inline EnergyBreakdown eval_Q(const Grid& grid, std::span<const double> u, const Potential& pot, double p) {
  if (pot.grid.get() != &grid && pot.grid->size() != grid.size())
    throw UsageError("eval_Q: potential lives on a different grid");
  EnergyBreakdown e;
  e.kinetic = dirichlet_energy(grid, u, p);
  e.potential_term = potential_energy(pot, u, p);
  e.q_value = e.kinetic - e.potential_term;
  e.p_norm_p = std::pow(norm_p(grid, u, p), p);
  e.sup_norm = sup_norm(u);
  e.rayleigh = e.p_norm_p > 0.0 ? e.q_value / e.p_norm_p : 0.0;
  return e;
}

namespace detail {

// Nodal gradient of Q. epsilon = 0 uses the exact flux |g|^{p-2} g, which is
// continuous for every p > 1.
inline std::vector<double> assemble_gradient(const Grid& grid, std::span<const double> u, const Potential& pot,
                                             double p, double epsilon) {
  const auto inv = grid.inverse_spacing();
  const auto m = grid.cell_weights();
  const auto w = grid.weights();
  std::vector<double> g(u.size(), 0.0);

  const double e2 = epsilon * epsilon;
  for (std::size_t c = 0; c < m.size(); ++c) {
    const double slope = (u[c + 1] - u[c]) * inv[c];
    const double phi = epsilon == 0.0 ? signed_pow(slope, p - 1.0)
                                      : std::pow(slope * slope + e2, 0.5 * (p - 2.0)) * slope;
    const double flux = p * m[c] * phi * inv[c];
    g[c] -= flux;
    g[c + 1] += flux;
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    if (pot.values[i] != 0.0) g[i] -= p * w[i] * pot.values[i] * signed_pow(u[i], p - 1.0);
  if (pot.point != 0.0) {
    const std::size_t o = grid.origin_index();
    g[o] -= p * pot.point * signed_pow(u[o], p - 1.0);
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    if (grid.is_dirichlet(i)) g[i] = 0.0;
  return g;
}

}  // namespace detail

/// Gradient of the discrete Q with respect to the nodal values. Entries at
/// Dirichlet nodes are zero. For p < 2 an epsilon > 0 is required; the flux
/// becomes (g^2 + eps^2)^{(p-2)/2} g.
inline std::vector<double> grad_Q(const Grid& grid, std::span<const double> u, const Potential& pot, double p,
                                  double epsilon = 0.0) {
  detail::check_energy_grid(grid, p);
  if (u.size() != grid.size()) throw UsageError("grad_Q: length mismatch");
  if (epsilon < 0.0) throw ConfigError("grad_Q: epsilon must be >= 0");
  if (p < 2.0 && epsilon == 0.0) throw ConfigError("grad_Q: p < 2 needs epsilon > 0");
  return detail::assemble_gradient(grid, u, pot, p, epsilon);
}

/// Dual-norm Euler-Lagrange defect, normalized by ||u||_p^{p-1}:
///   r_i = grad_i / (p w_i) - lambda |u_i|^{p-2} u_i,
///   residual = (sum_i w_i |r_i|^{p'})^{1/p'} / ||u||_p^{p-1},  p' = p/(p-1),
/// over free nodes with positive weight. Zero exactly at a discrete critical point.
inline double el_residual(const Grid& grid, std::span<const double> u, const Potential& pot, double p,
                          double lambda) {
  detail::check_energy_grid(grid, p);
  if (u.size() != grid.size()) throw UsageError("el_residual: length mismatch");
  const auto g = detail::assemble_gradient(grid, u, pot, p, 0.0);
  const auto w = grid.weights();
  const double q = p / (p - 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (grid.is_dirichlet(i) || w[i] <= 0.0) continue;
    const double r = g[i] / (p * w[i]) - lambda * detail::signed_pow(u[i], p - 1.0);
    s += w[i] * std::pow(std::abs(r), q);
  }
  const double n = norm_p(grid, u, p);
  if (n == 0.0) throw DataError("el_residual: zero field");
  return std::pow(s, 1.0 / q) / std::pow(n, p - 1.0);
}

}  // namespace plap

#endif  // PLAP_FUNCTIONAL_HPP
