#ifndef PLAP_GRID_HPP
#define PLAP_GRID_HPP

// One-dimensional computational grids for radially symmetric problems in R^d.
//
// Three coordinate kinds are supported:
//   line        symmetric 1D grid on [-L, L] with a node at x = 0 (d = 1)
//   radial      r in [0, L] with a node at r = 0; measure omega_d r^{d-1} dr
//   log_radius  t = log r in [t_min, log L]; measure omega_d e^{d t} dt
//
// Nodal quadrature weights are trapezoid weights of the measure. Energies of
// the form sum |du|^p over cells use per-cell weights: the exact measure of
// the cell for line/radial grids (so piecewise-linear profiles have exact
// Dirichlet energy), and omega_d * dt for log-radius grids, where the p = d
// Dirichlet energy is conformally flat in t.

#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plap/errors.hpp"

namespace plap {

/// Surface area of the unit sphere in R^d, 2 pi^{d/2} / Gamma(d/2).
inline double omega(int d) {
  if (d < 1) throw DomainError("omega: dimension must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

enum class Coordinate { line, radial, log_radius };

inline std::string_view to_string(Coordinate c) {
  switch (c) {
    case Coordinate::line: return "line";
    case Coordinate::radial: return "radial";
    case Coordinate::log_radius: return "log-radius";
  }
  return "?";
}

struct GridSpec {
  int dimension = 1;
  Coordinate kind = Coordinate::line;
  std::size_t nodes = 1025;
  double extent = 10.0;   // outer radius or half-width L
  double t_min = -10.0;   // log_radius only
};

inline constexpr std::size_t kMinGridNodes = 3;

class Grid {
 public:
  explicit Grid(const GridSpec& spec) : spec_(spec) {
    if (spec_.dimension < 1) throw ConfigError("grid: dimension must be >= 1");
    if (!(spec_.extent > 0.0) || !std::isfinite(spec_.extent))
      throw ConfigError("grid: extent must be positive and finite");
    if (spec_.nodes < kMinGridNodes)
      throw ConfigError("grid: need at least " + std::to_string(kMinGridNodes) + " nodes");
    switch (spec_.kind) {
      case Coordinate::line: build_line(); break;
      case Coordinate::radial: build_radial(); break;
      case Coordinate::log_radius: build_log_radius(); break;
    }
  }

  const GridSpec& spec() const noexcept { return spec_; }
  Coordinate kind() const noexcept { return spec_.kind; }
  int dimension() const noexcept { return spec_.dimension; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t cells() const noexcept { return nodes_.size() - 1; }

  /// Coordinate values (x, r or t).
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> midpoints() const noexcept { return midpoints_; }
  std::span<const double> inverse_spacing() const noexcept { return inv_spacing_; }
  /// Measure attached to each cell for gradient energies.
  std::span<const double> cell_weights() const noexcept { return cell_weights_; }

  /// Euclidean distance |x| of node i from the origin.
  double radius(std::size_t i) const {
    switch (spec_.kind) {
      case Coordinate::line: return std::abs(nodes_[i]);
      case Coordinate::radial: return nodes_[i];
      case Coordinate::log_radius: return std::exp(nodes_[i]);
    }
    return 0.0;
  }

  /// Node carrying u(0). For log-radius grids this is the innermost node,
  /// which stands for the whole ball of radius e^{t_min}.
  std::size_t origin_index() const noexcept { return origin_; }

  /// Nodes held at zero (truncation boundary).
  bool is_dirichlet(std::size_t i) const noexcept {
    if (i + 1 == nodes_.size()) return true;
    return i == 0 && spec_.kind == Coordinate::line;
  }

  /// Total measure of the truncated domain, exact.
  double domain_measure() const {
    const double L = spec_.extent;
    const int d = spec_.dimension;
    if (spec_.kind == Coordinate::line) return 2.0 * L;
    return omega(d) * std::pow(L, d) / d;
  }

 private:
  void build_line() {
    if (spec_.nodes % 2 == 0) ++spec_.nodes;  // keep a node at x = 0
    const std::size_t n = spec_.nodes;
    const double h = 2.0 * spec_.extent / static_cast<double>(n - 1);
    const std::size_t mid = (n - 1) / 2;
    nodes_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      nodes_[i] = (static_cast<double>(i) - static_cast<double>(mid)) * h;
    nodes_[mid] = 0.0;
    weights_.assign(n, h);
    weights_.front() = weights_.back() = 0.5 * h;
    origin_ = mid;
    finish_cells([](double a, double b) { return b - a; });
  }

  void build_radial() {
    const std::size_t n = spec_.nodes;
    const int d = spec_.dimension;
    const double h = spec_.extent / static_cast<double>(n - 1);
    const double w = omega(d);
    nodes_.resize(n);
    weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      nodes_[i] = static_cast<double>(i) * h;
      weights_[i] = w * std::pow(nodes_[i], d - 1) * h;
    }
    nodes_.back() = spec_.extent;
    weights_.front() *= 0.5;
    weights_.back() = 0.5 * w * std::pow(spec_.extent, d - 1) * h;
    origin_ = 0;
    finish_cells([w, d](double a, double b) { return w * (std::pow(b, d) - std::pow(a, d)) / d; });
  }

  void build_log_radius() {
    const double t_max = std::log(spec_.extent);
    if (!(spec_.t_min < t_max)) throw ConfigError("grid: log-radius requires t_min < log L");
    const std::size_t n = spec_.nodes;
    const int d = spec_.dimension;
    const double h = (t_max - spec_.t_min) / static_cast<double>(n - 1);
    const double w = omega(d);
    nodes_.resize(n);
    weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      nodes_[i] = spec_.t_min + static_cast<double>(i) * h;
      weights_[i] = w * std::exp(d * nodes_[i]) * h;
    }
    nodes_.back() = t_max;
    weights_.front() *= 0.5;
    weights_.back() = 0.5 * w * std::exp(d * t_max) * h;
    // u is extended as a constant into the inner ball
    weights_.front() += w * std::exp(d * spec_.t_min) / d;
    origin_ = 0;
    finish_cells([w](double a, double b) { return w * (b - a); });
  }

  template <class CellMeasure>
  void finish_cells(CellMeasure measure) {
    const std::size_t m = nodes_.size() - 1;
    midpoints_.resize(m);
    inv_spacing_.resize(m);
    cell_weights_.resize(m);
    for (std::size_t c = 0; c < m; ++c) {
      midpoints_[c] = 0.5 * (nodes_[c] + nodes_[c + 1]);
      inv_spacing_[c] = 1.0 / (nodes_[c + 1] - nodes_[c]);
      cell_weights_[c] = measure(nodes_[c], nodes_[c + 1]);
    }
  }

  GridSpec spec_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> midpoints_;
  std::vector<double> inv_spacing_;
  std::vector<double> cell_weights_;
  std::size_t origin_ = 0;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr build_grid(const GridSpec& spec) { return std::make_shared<const Grid>(spec); }

/// Samples on a grid. The grid is shared and immutable.
struct Field {
  GridPtr grid;
  std::vector<double> values;

  Field() = default;
  explicit Field(GridPtr g) : grid(std::move(g)), values(grid ? grid->size() : 0, 0.0) {}
  Field(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    if (!grid || values.size() != grid->size()) throw UsageError("field: length does not match grid");
    for (double x : values)
      if (!std::isfinite(x)) throw NumericalError("field: non-finite value");
  }

  std::size_t size() const noexcept { return values.size(); }
};

template <class F>
Field sample(const GridPtr& grid, F&& profile_of_radius) {
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = profile_of_radius(grid->radius(i));
  return Field(grid, std::move(v));
}

inline double quadrature(const Grid& grid, std::span<const double> samples) {
  if (samples.size() != grid.size()) throw UsageError("quadrature: length mismatch");
  const auto w = grid.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) s += w[i] * samples[i];
  return s;
}

/// Staggered |u_{i+1} - u_i| / (x_{i+1} - x_i), one value per cell.
inline std::vector<double> gradient_magnitudes(const Grid& grid, std::span<const double> u) {
  if (u.size() != grid.size()) throw UsageError("gradient_magnitudes: length mismatch");
  const auto inv = grid.inverse_spacing();
  std::vector<double> g(grid.cells());
  for (std::size_t c = 0; c < g.size(); ++c) g[c] = std::abs(u[c + 1] - u[c]) * inv[c];
  return g;
}

}  // namespace plap

#endif  // PLAP_GRID_HPP
