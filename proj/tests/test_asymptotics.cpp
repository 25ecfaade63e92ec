#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "plap/asymptotics.hpp"
#include "plap/closed_forms.hpp"

using namespace plap;

namespace {

const char* kGauss1 = "gaussian:A=0.3989422804014327,s=1";  // int V = 1 in d = 1

SweepRecord rec(double alpha, double lambda) {
  SweepRecord r;
  r.alpha = alpha;
  r.lambda = lambda;
  r.grad_norm_p = 1.0;
  r.sup_u = 1.0;
  r.converged = true;
  return r;
}

SolverConfig base() { return SolverConfig{}; }

const SweepResult& small_sweep() {
  static const SweepResult s = [] {
    SweepOptions o;
    o.threads = 1;
    return sweep(parse_potential(kGauss1), 1, 2.0, {0.4, 0.2, 0.1, 0.05}, base(), o);
  }();
  return s;
}

GroundState radial_state(const std::function<double(double)>& f) {
  GridSpec s;
  s.dimension = 2;
  s.kind = Coordinate::radial;
  s.nodes = 201;
  s.extent = 10.0;
  GroundState gs;
  gs.field = sample(build_grid(s), f);
  return gs;
}

}  // namespace

TEST(Sweep, EmptyAlphaListGivesNoRecords) {
  const auto s = sweep(parse_potential(kGauss1), 1, 2.0, {}, base());
  EXPECT_TRUE(s.records.empty());
  EXPECT_TRUE(s.states.empty());
}

TEST(Sweep, RejectsBadInput) {
  EXPECT_THROW(sweep(parse_potential(kGauss1), 1, 2.0, {0.1, -0.1}, base()), ConfigError);
  EXPECT_THROW(sweep(parse_potential(kGauss1), 1, 2.0, {0.1, 0.1}, base()), ConfigError);
  EXPECT_THROW(sweep(parse_potential(kGauss1), 1, 1.0, {0.1}, base()), ConfigError);
  EXPECT_THROW(sweep(parse_potential("mix:A1=1,s1=1,A2=0.5,s2=2"), 1, 2.0, {0.1}, base()), DomainError);
}

TEST(Sweep, RecordsSortedConvergedAndNearPrediction) {
  const auto& s = small_sweep();
  ASSERT_EQ(s.records.size(), 4u);
  EXPECT_NEAR(s.integral, 1.0, 1e-6);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(s.records[i].converged);
    EXPECT_LT(s.records[i].lambda, 0.0);
    if (i) EXPECT_LT(s.records[i].alpha, s.records[i - 1].alpha);
  }
  const auto& last = s.records.back();
  EXPECT_NEAR(last.lambda / (-0.25 * last.alpha * last.alpha), 1.0, 0.10);
  EXPECT_TRUE(monotone_ratio(s.records));
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  SweepOptions o;
  o.threads = 3;
  const auto s = sweep(parse_potential(kGauss1), 1, 2.0, {0.4, 0.2, 0.1, 0.05}, base(), o);
  EXPECT_EQ(s.records, small_sweep().records);
}

TEST(Sweep, UpperBoundsHold) {
  for (const auto& b : test_function_bounds(small_sweep())) EXPECT_TRUE(b.holds) << b.alpha << " " << b.bound;
}

TEST(Sweep, CriticalSmallSweep) {
  SweepOptions o;
  o.threads = 1;
  const auto s = sweep(parse_potential("gaussian:A=0.15915494309189535,s=1"), 2, 2.0, {0.8, 0.4, 0.2}, base(), o);
  EXPECT_NEAR(s.integral, 1.0, 1e-3);
  for (const auto& r : s.records) {
    EXPECT_TRUE(r.converged);
    EXPECT_LT(r.lambda, 0.0);
  }
  EXPECT_TRUE(monotone_ratio(s.records));
  for (const auto& b : test_function_bounds(s)) EXPECT_TRUE(b.holds) << b.alpha;
  // ground states flatten as alpha decreases
  EXPECT_LT(oscillation_diagnostic(s.states[2], 1.0, 2), oscillation_diagnostic(s.states[0], 1.0, 2));
}

TEST(Monotone, DetectsViolation) {
  std::vector<SweepRecord> r{rec(0.4, -0.04), rec(0.2, -0.01), rec(0.1, -0.0025)};
  EXPECT_TRUE(monotone_ratio(r));
  r[2].lambda = -0.05;
  EXPECT_FALSE(monotone_ratio(r));
}

TEST(Rescale, IdentityAtAlphaOne) {
  const auto& st = small_sweep().states[0];
  const Field f = rescale_minimizer(st, 1.0, 1, 2.0);
  EXPECT_EQ(f.values, st.field.values);
  EXPECT_EQ(f.grid->spec().extent, st.field.grid->spec().extent);
}

TEST(Rescale, AmplitudeAndNorm) {
  const auto& st = small_sweep().states[0];
  const Field f = rescale_minimizer(st, 0.25, 1, 2.0);
  const std::size_t o = st.field.grid->origin_index();
  EXPECT_NEAR(f.values[o], 2.0 * st.field.values[o], 1e-15);
  EXPECT_NEAR(norm_p(*f.grid, f.values, 2.0), 1.0, 1e-12);
  EXPECT_THROW(rescale_minimizer(st, 0.25, 2, 2.0), DomainError);
  EXPECT_THROW(rescale_minimizer(st, 0.0, 1, 2.0), DomainError);
}

TEST(Distance, ZeroForSelfAndTranslate) {
  GridSpec s;
  s.nodes = 401;
  s.extent = 10.0;
  auto g = build_grid(s);
  const Field a = sample(g, [](double r) { return std::max(0.0, 1.0 - r); });
  EXPECT_EQ(minimizer_distance(a, a, 2.0), 0.0);
  std::vector<double> shifted(a.size(), 0.0);
  for (std::size_t i = 7; i < a.size(); ++i) shifted[i] = a.values[i - 7];
  EXPECT_EQ(minimizer_distance(Field(g, shifted), a, 2.0), 0.0);
  s.extent = 11.0;
  EXPECT_THROW(minimizer_distance(sample(build_grid(s), [](double) { return 1.0; }), a, 2.0), UsageError);
}

TEST(Distance, RescaledMinimizerApproachesExplicitProfile) {
  SweepOptions o;
  o.threads = 1;
  const double p = 3.0, alpha = 1e-3;
  const auto s = sweep(parse_potential(kGauss1), 1, p, {alpha}, base(), o);
  const Field f = rescale_minimizer(s.states[0], alpha, 1, p);
  const auto m = explicit_minimizer_1d(s.integral, p);
  Field ref = sample(f.grid, [&](double r) { return m(r); });
  const double n = norm_p(*f.grid, ref.values, p);
  for (double& x : ref.values) x /= n;
  EXPECT_LE(minimizer_distance(f, ref, p), 0.03);
}

TEST(Fit, SubcriticalSyntheticWithCorrection) {
  std::vector<SweepRecord> r;
  for (double a : default_alphas(1, 2.0)) r.push_back(rec(a, -0.25 * a * a * (1.0 + a)));
  const auto f = fit_subcritical(r, 1, 2.0, 1.0);
  EXPECT_NEAR(f.limit, -0.25, 1e-3);
  EXPECT_NEAR(f.prediction, -0.25, 1e-15);
  EXPECT_LE(f.relative_error, 4e-3);
}

TEST(Fit, SubcriticalExactPowerIsRecovered) {
  std::vector<SweepRecord> r;
  for (double a : {0.3, 0.1, 0.03, 0.01, 0.003}) r.push_back(rec(a, -0.7 * std::pow(a, 1.5)));
  EXPECT_NEAR(fit_subcritical(r, 1, 3.0, 1.0).limit, -0.7, 1e-9);
}

TEST(Fit, NeedsThreeConvergedRecords) {
  std::vector<SweepRecord> r{rec(0.3, -0.02), rec(0.1, -0.0025), rec(0.05, -6e-4)};
  r[1].converged = false;
  EXPECT_THROW(fit_subcritical(r, 1, 2.0, 1.0), UsageError);
  EXPECT_THROW(fit_subcritical(r, 2, 2.0, 1.0), DomainError);
}

TEST(Fit, CriticalSynthetic) {
  const double g0 = 4.0 * std::numbers::pi;
  std::vector<SweepRecord> exact, with_prefactor;
  for (int k = 2; k <= 9; ++k) {  // exp(-g0 / alpha) stays normal
    const double a = std::pow(2.0, -0.5 * k);
    exact.push_back(rec(a, -std::exp(-g0 / a)));
    with_prefactor.push_back(rec(a, -2.0 * std::exp(-g0 / a)));
  }
  EXPECT_NEAR(fit_critical(exact, 2, 1.0).limit, g0, 1e-6);
  EXPECT_NEAR(fit_critical(with_prefactor, 2, 1.0).limit / g0, 1.0, 0.02);
  exact[3].lambda = 1e-9;
  EXPECT_THROW(fit_critical(exact, 2, 1.0), DataError);
}

TEST(Exponents, ConstantDataHasZeroSlope) {
  std::vector<SweepRecord> r{rec(0.3, -0.02), rec(0.1, -0.0025), rec(0.05, -6e-4)};
  EXPECT_NEAR(exponent_regression(r, Quantity::grad_norm, 1, 2.0), 0.0, 1e-12);
  EXPECT_NEAR(exponent_regression(r, Quantity::sup_norm, 1, 2.0), 0.0, 1e-12);
  for (auto& x : r) x.grad_norm_p = 3.0 * std::pow(x.alpha, 0.5);
  EXPECT_NEAR(exponent_regression(r, Quantity::grad_norm, 1, 2.0), 0.5, 1e-12);
}

TEST(Exponents, SweepSlopesMatchScaling) {
  // ||grad u||_p ~ alpha^{1/(p-d)}, ||u||_inf^p ~ alpha^{d/(p-d)}; alpha >= 0.05
  // is still pre-asymptotic, the full range is checked by the acceptance run
  const auto& s = small_sweep();
  EXPECT_NEAR(exponent_regression(s.records, Quantity::grad_norm, 1, 2.0), 1.0, 0.2);
  EXPECT_NEAR(exponent_regression(s.records, Quantity::sup_norm, 1, 2.0), 1.0, 0.2);
}

TEST(Oscillation, Diagnostic) {
  EXPECT_NEAR(oscillation_diagnostic(radial_state([](double) { return 1.0; }), 2.0, 2), 0.0, 1e-15);
  const double v = oscillation_diagnostic(radial_state([](double r) { return std::exp(-r); }), 1.0, 2);
  EXPECT_NEAR(v, std::exp(2.0) - 1.0, 1e-12);
  EXPECT_THROW(oscillation_diagnostic(radial_state([](double r) { return r < 5 ? 1.0 : 0.0; }), 9.0, 2), DataError);
}
