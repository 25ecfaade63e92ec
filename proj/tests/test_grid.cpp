#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "plap/functional.hpp"
#include "plap/grid.hpp"

using namespace plap;

namespace {

GridPtr make(Coordinate kind, int d, std::size_t n, double L, double t_min = -10.0) {
  GridSpec s;
  s.dimension = d;
  s.kind = kind;
  s.nodes = n;
  s.extent = L;
  s.t_min = t_min;
  return build_grid(s);
}

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

}  // namespace

TEST(Grid, LineNodesAndWeights) {
  auto g = make(Coordinate::line, 1, 5, 2.0);
  const std::vector<double> nodes{-2, -1, 0, 1, 2}, weights{0.5, 1, 1, 1, 0.5};
  ASSERT_EQ(g->size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_DOUBLE_EQ(g->nodes()[i], nodes[i]);
    EXPECT_DOUBLE_EQ(g->weights()[i], weights[i]);
  }
  EXPECT_EQ(g->origin_index(), 2u);
  EXPECT_TRUE(g->is_dirichlet(0));
  EXPECT_TRUE(g->is_dirichlet(4));
  EXPECT_FALSE(g->is_dirichlet(2));
}

TEST(Grid, LineForcesNodeAtZero) {
  auto g = make(Coordinate::line, 1, 6, 1.0);
  EXPECT_EQ(g->size() % 2, 1u);
  EXPECT_EQ(g->nodes()[g->origin_index()], 0.0);
}

TEST(Grid, RadialTrapezoidWeights) {
  auto g = make(Coordinate::radial, 2, 3, 1.0);
  EXPECT_DOUBLE_EQ(g->nodes()[0], 0.0);
  EXPECT_DOUBLE_EQ(g->nodes()[1], 0.5);
  EXPECT_DOUBLE_EQ(g->nodes()[2], 1.0);
  EXPECT_DOUBLE_EQ(g->weights()[0], 0.0);
  EXPECT_NEAR(g->weights()[1], std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(g->weights()[2], std::numbers::pi / 2, 1e-15);
}

TEST(Grid, LogRadiusUniformInT) {
  auto g = make(Coordinate::log_radius, 2, 3, std::exp(1.0), -1.0);
  EXPECT_DOUBLE_EQ(g->nodes()[0], -1.0);
  EXPECT_NEAR(g->nodes()[1], 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(g->nodes()[2], 1.0);
  EXPECT_FALSE(g->is_dirichlet(0));  // Neumann inside
  EXPECT_TRUE(g->is_dirichlet(2));
}

TEST(Grid, InvalidSpecsAreConfigErrors) {
  EXPECT_THROW(make(Coordinate::line, 1, 5, 0.0), ConfigError);
  EXPECT_THROW(make(Coordinate::line, 1, 5, -1.0), ConfigError);
  EXPECT_THROW(make(Coordinate::radial, 2, 2, 1.0), ConfigError);
  EXPECT_THROW(make(Coordinate::log_radius, 2, 16, 1.0, 3.0), ConfigError);
  EXPECT_THROW(make(Coordinate::radial, 0, 16, 1.0), ConfigError);
}

TEST(Grid, WeightsPositiveNodesIncreasing) {
  for (auto kind : {Coordinate::line, Coordinate::radial, Coordinate::log_radius}) {
    auto g = make(kind, kind == Coordinate::line ? 1 : 3, 65, 10.0, -3.0);
    for (std::size_t i = 0; i + 1 < g->size(); ++i) EXPECT_LT(g->nodes()[i], g->nodes()[i + 1]);
    for (std::size_t i = 0; i < g->size(); ++i)
      if (!(kind == Coordinate::radial && i == 0)) EXPECT_GT(g->weights()[i], 0.0);
    for (double m : g->cell_weights()) EXPECT_GT(m, 0.0);
  }
}

TEST(Quadrature, ConstantOnLineIsExact) {
  auto g = make(Coordinate::line, 1, 5, 2.0);
  EXPECT_DOUBLE_EQ(quadrature(*g, ones(5)), 4.0);
  EXPECT_EQ(quadrature(*g, std::vector<double>(5, 0.0)), 0.0);
  auto big = make(Coordinate::line, 1, 1001, 3.7);
  EXPECT_NEAR(quadrature(*big, ones(big->size())), 7.4, 1e-12);
}

TEST(Quadrature, RadialConvergesAtSecondOrder) {
  // int_{|x|<1} (1 - |x|^2) dx = pi / 2
  std::vector<double> err;
  for (std::size_t n : {33u, 65u, 129u, 257u}) {
    auto g = make(Coordinate::radial, 2, n, 1.0);
    const Field f = sample(g, [](double r) { return 1.0 - r * r; });
    err.push_back(std::abs(quadrature(*g, f.values) - std::numbers::pi / 2));
  }
  for (std::size_t k = 0; k + 1 < err.size(); ++k) EXPECT_GE(std::log2(err[k] / err[k + 1]), 1.9);
  auto g3 = make(Coordinate::radial, 3, 2049, 2.0);
  EXPECT_NEAR(quadrature(*g3, ones(2049)), g3->domain_measure(), 1e-5 * g3->domain_measure());
}

TEST(Quadrature, LengthMismatchIsUsageError) {
  auto g = make(Coordinate::line, 1, 5, 2.0);
  EXPECT_THROW(quadrature(*g, ones(4)), UsageError);
}

TEST(Gradient, HatFunction) {
  auto g = make(Coordinate::line, 1, 801, 4.0);
  const Field u = sample(g, [](double r) { return std::max(0.0, 1.0 - r); });
  const auto gm = gradient_magnitudes(*g, u.values);
  ASSERT_EQ(gm.size(), g->size() - 1);
  for (std::size_t c = 0; c < gm.size(); ++c) {
    const double m = g->midpoints()[c];
    EXPECT_NEAR(gm[c], std::abs(m) < 1.0 ? 1.0 : 0.0, 1e-12) << m;
  }
}

TEST(Gradient, ConstantAndLinear) {
  auto g = make(Coordinate::line, 1, 101, 3.0);
  for (double x : gradient_magnitudes(*g, ones(g->size()))) EXPECT_EQ(x, 0.0);
  std::vector<double> lin(g->nodes().begin(), g->nodes().end());
  for (double x : gradient_magnitudes(*g, lin)) EXPECT_NEAR(x, 1.0, 1e-12);
  EXPECT_THROW(gradient_magnitudes(*g, ones(3)), UsageError);
}

TEST(Grid, LogRadiusDirichletIdentityAtPEqualsD) {
  // int |u'(r)|^d omega r^{d-1} dr = omega int |du/dt|^d dt
  const auto profile = [](double r) { return std::exp(-r * r); };
  for (int d : {2, 3}) {
    auto radial = make(Coordinate::radial, d, 20001, 8.0);
    auto logr = make(Coordinate::log_radius, d, 20001, 8.0, -8.0);
    const double a = dirichlet_energy(*radial, sample(radial, profile).values, d);
    const double b = dirichlet_energy(*logr, sample(logr, profile).values, d);
    EXPECT_NEAR(b / a, 1.0, 0.01) << d;
  }
}

TEST(Field, Invariants) {
  auto g = make(Coordinate::line, 1, 5, 1.0);
  EXPECT_THROW(Field(g, std::vector<double>(4, 0.0)), UsageError);
  EXPECT_THROW(Field(g, std::vector<double>{0, 1, NAN, 1, 0}), NumericalError);
  EXPECT_NO_THROW(Field(g, std::vector<double>(5, 2.0)));
}

TEST(Omega, Values) {
  EXPECT_DOUBLE_EQ(omega(1), 2.0);
  EXPECT_NEAR(omega(2), 6.283185307179586, 1e-14);
  EXPECT_NEAR(omega(3), 12.566370614359172, 1e-13);
  EXPECT_THROW(omega(0), DomainError);
}
