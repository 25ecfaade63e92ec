#ifndef PLAP_TESTS_ORACLES_HPP
#define PLAP_TESTS_ORACLES_HPP

// Independent references for the linear case p = 2.

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "plap/potential.hpp"

namespace oracle {

/// Lowest eigenvalue of -u'' - V u on the line with V = 1 on |x| < 1:
/// k tan k = sqrt(1 - k^2), lambda = k^2 - 1.
inline double square_well_lambda() {
  double lo = 1e-9, hi = 1.0 - 1e-15;
  const auto f = [](double k) { return k * std::tan(k) - std::sqrt(1.0 - k * k); };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double k = 0.5 * (lo + hi);
  return k * k - 1.0;
}

/// Smallest eigenvalue of the discrete p = 2 quotient, assembled from the grid
/// weights alone: (A - W V) u = lambda W u, symmetrized by W^{-1/2}.
inline double discrete_lowest(const plap::Potential& pot) {
  const plap::Grid& g = *pot.grid;
  const auto w = g.weights();
  const auto m = g.cell_weights();
  const auto x = g.nodes();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!g.is_dirichlet(i)) free.push_back(i);
  const auto n = static_cast<Eigen::Index>(free.size());
  Eigen::VectorXd diag(n), off(n > 0 ? n - 1 : 0);
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::size_t i = free[static_cast<std::size_t>(k)];
    double a = 0.0;
    if (i > 0) a += m[i - 1] / ((x[i] - x[i - 1]) * (x[i] - x[i - 1]));
    if (i + 1 < g.size()) a += m[i] / ((x[i + 1] - x[i]) * (x[i + 1] - x[i]));
    diag[k] = a / w[i] - pot.values[i] - (i == g.origin_index() ? pot.point / w[i] : 0.0);
    if (k + 1 < n) {
      const double c = m[i] / ((x[i + 1] - x[i]) * (x[i + 1] - x[i]));
      off[k] = -c / std::sqrt(w[i] * w[i + 1]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

}  // namespace oracle

#endif  // PLAP_TESTS_ORACLES_HPP
