#ifndef PLAP_VALIDATE_HPP
#define PLAP_VALIDATE_HPP

// Self-checks: gradient against finite differences, exact identities and
// inequalities that any correct build must satisfy. Used by `plap validate`.

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "plap/closed_forms.hpp"
#include "plap/functional.hpp"
#include "plap/grid.hpp"
#include "plap/io.hpp"
#include "plap/potential.hpp"

namespace plap {

/// Smooth random field: a few positive Gaussian bumps plus a broad envelope,
/// zero on Dirichlet nodes. Deterministic for a given seed.
inline std::vector<double> random_smooth_field(const Grid& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const double L = grid.kind() == Coordinate::log_radius ? std::exp(grid.nodes().back()) : grid.spec().extent;
  struct Bump {
    double a, c, w;
  };
  std::vector<Bump> bumps;
  for (int k = 0; k < 4; ++k) bumps.push_back({0.2 + U(rng), (U(rng) - 0.5) * 0.6 * L, (0.05 + 0.2 * U(rng)) * L});
  std::vector<double> u(grid.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = grid.kind() == Coordinate::line ? grid.nodes()[i] : grid.radius(i);
    double s = 0.0;
    for (const auto& b : bumps) s += b.a * std::exp(-0.5 * (x - b.c) * (x - b.c) / (b.w * b.w));
    u[i] = grid.is_dirichlet(i) ? 0.0 : s;
  }
  return u;
}

/// Largest relative mismatch between grad_Q . v and the central difference of
/// Q along v, over `directions` random smooth directions. Step h = 1e-6
/// relative to the field's sup norm. epsilon enters both sides.
inline double gradient_check(const Potential& pot, double p, double epsilon, int directions, std::uint64_t seed) {
  const Grid& grid = *pot.grid;
  std::mt19937_64 rng(seed);
  const auto u = random_smooth_field(grid, rng);
  const auto g = grad_Q(grid, u, pot, p, epsilon);
  const auto Q = [&](const std::vector<double>& x) {
    return dirichlet_energy(grid, x, p, epsilon) - potential_energy(pot, x, p);
  };
  const double h = 1e-6 * sup_norm(u);
  double worst = 0.0;
  std::vector<double> plus(u.size()), minus(u.size());
  for (int k = 0; k < directions; ++k) {
    // difference of two smooth fields: sign-changing, not parallel to u
    auto v = random_smooth_field(grid, rng);
    const auto w = random_smooth_field(grid, rng);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
    double analytic = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      plus[i] = u[i] + h * v[i];
      minus[i] = u[i] - h * v[i];
      analytic += g[i] * v[i];
    }
    const double fd = (Q(plus) - Q(minus)) / (2.0 * h);
    const double scale = std::max({std::abs(analytic), std::abs(fd), 1e-300});
    worst = std::max(worst, std::abs(fd - analytic) / scale);
  }
  return worst;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured quantity
  double threshold = 0.0;  // bound it was held to
};

namespace detail {

inline CheckResult check(std::string name, double value, double threshold) {
  return {std::move(name), value <= threshold, value, threshold};
}

inline GridPtr line_grid(std::size_t n, double L) {
  GridSpec s;
  s.kind = Coordinate::line;
  s.nodes = n;
  s.extent = L;
  return build_grid(s);
}

inline GridPtr radial_grid(int d, std::size_t n, double L) {
  GridSpec s;
  s.dimension = d;
  s.kind = Coordinate::radial;
  s.nodes = n;
  s.extent = L;
  return build_grid(s);
}

}  // namespace detail

/// The quick invariant suite behind `plap validate`.
inline std::vector<CheckResult> run_validation() {
  using detail::check;
  std::vector<CheckResult> out;
  const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };

  out.push_back(check("omega_2 = 2 pi", rel(omega(2), 2.0 * std::numbers::pi), 1e-14));
  out.push_back(check("omega_3 = 4 pi", rel(omega(3), 4.0 * std::numbers::pi), 1e-14));

  double chain = 0.0;
  for (double p : {1.5, 2.0, 3.0, 4.0})
    for (double v : {0.5, 1.0, 2.0}) chain = std::max(chain, rel(E_from_sobolev(v, 1, p, 0.5 * p), E_closed_1d(v, p)));
  out.push_back(check("E_from_sobolev(v,1,p,p/2) = E_closed_1d(v,p)", chain, 1e-12));
  out.push_back(check("sobolev_from_E1 inverts at (1,2)", rel(sobolev_from_E1(E_closed_1d(1.0, 2.0), 1, 2.0), 1.0),
                      1e-12));
  out.push_back(check("capacity scale invariance",
                      rel(capacity_annulus(3.0, 3.0 * std::exp(2.0), 3), capacity_annulus(1.0, std::exp(2.0), 3)),
                      1e-12));

  const RadialProfile gauss(parse_potential("gaussian:A=1,s=1"));
  const std::pair<int, double> cases[] = {{1, 2.0}, {1, 3.0}, {2, 2.0}, {2, 3.0}};
  std::uint64_t seed = 1;
  for (auto [d, p] : cases) {
    auto g = d == 1 ? detail::line_grid(257, 6.0) : detail::radial_grid(d, 257, 6.0);
    const double err = gradient_check(sample_potential(g, gauss), p, 0.0, 20, seed++);
    out.push_back(check("grad_Q finite differences d=" + std::to_string(d) + " p=" + detail::format_double(p), err,
                        1e-5));
  }
  {
    auto g = detail::line_grid(257, 6.0);
    const double err = gradient_check(sample_potential(g, gauss), 1.5, 1e-2, 20, seed++);
    out.push_back(check("grad_Q finite differences d=1 p=1.5 eps=1e-2", err, 1e-4));
  }

  {
    auto g = detail::line_grid(513, 5.0);
    std::mt19937_64 rng(7);
    const auto u = random_smooth_field(*g, rng);
    auto cu = u;
    for (double& x : cu) x *= 2.5;
    const Potential V = sample_potential(g, gauss);
    const double a = eval_Q(*g, u, V, 3.0).q_value, b = eval_Q(*g, cu, V, 3.0).q_value;
    out.push_back(check("q_value p-homogeneity", rel(b, std::pow(2.5, 3.0) * a), 1e-12));
  }

  {
    const auto m = explicit_minimizer_1d(1.0, 2.0);
    auto g = detail::line_grid(4097, 40.0);
    const Field u = sample(g, [&](double r) { return m(r); });
    const double res = el_residual(*g, u.values, point_potential(g, 1.0), 2.0, -m.multiplier);
    out.push_back(check("explicit 1D minimizer EL residual (N=4096)", res, 1e-3));
  }

  {
    std::vector<SweepRecord> recs(2);
    recs[0] = {0.3, -0.0170422506201, 0.1144, 1.0 / 3.0, 1.1e-11, 69, true, 144.0};
    recs[1] = {0.1, -2.5e-3, 0.047, 0.2159, 4.7e-12, 158, false, 0.1 + 0.2};
    out.push_back(check("csv round trip", parse_csv(emit_csv(recs)) == recs ? 0.0 : 1.0, 0.0));
  }
  return out;
}

}  // namespace plap

#endif  // PLAP_VALIDATE_HPP
