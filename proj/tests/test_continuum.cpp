#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "berryc/continuum.hpp"

using namespace berryc;

namespace {

constexpr double kPi = std::numbers::pi;

StatePath constant_path(int m) {
  const Cvec v{Cplx{0.0, 0.0}, Cplx{1.0, 0.0}};
  return make_state_path(ParamGrid(2.0 * kPi, m), std::vector<Cvec>(m, v),
                         GaugeTag::periodic_smooth);
}

double max_link_arg(const StatePath& path) {
  double worst = 0.0;
  const int m = path.grid.size();
  for (int i = 0; i + 1 < m; ++i) {
    worst = std::max(worst, std::abs(principal_arg(inner(path.states[i], path.states[i + 1]))));
  }
  return worst;
}

}  // namespace

TEST_CASE("parallel transport makes link phases vanish") {
  const HamiltonianFamily f = spin_family({1.2, 1.0});
  const StatePath path = analytic_state_path(f, ParamGrid(2.0 * kPi, 128));
  const StatePath pt = fix_gauge(path, GaugeTag::parallel_transport);
  CHECK(pt.gauge == GaugeTag::parallel_transport);
  CHECK(max_link_arg(pt) <= 1e-14);
}

TEST_CASE("gauge fixing preserves the overlap product") {
  const HamiltonianFamily f = spin_family({0.8, 1.0});
  const StatePath path = build_state_path(f, ParamGrid(2.0 * kPi, 128));
  const OverlapProduct before = bargmann_product(path);
  for (GaugeTag mode : {GaugeTag::parallel_transport, GaugeTag::periodic_smooth}) {
    const OverlapProduct after = bargmann_product(fix_gauge(path, mode));
    CHECK(std::abs(after.log_modulus - before.log_modulus) <= 1e-13);
    CHECK(std::abs(wrap_angle(after.accumulated_phase - before.accumulated_phase)) <= 1e-13);
  }
}

TEST_CASE("periodic_smooth closes the path smoothly") {
  const double theta = 1.0;
  const HamiltonianFamily f = spin_family({theta, 1.0});
  const ParamGrid grid(2.0 * kPi, 256);
  const StatePath smooth = fix_gauge(build_state_path(f, grid), GaugeTag::periodic_smooth);

  // Every cyclic consecutive difference, including the seam, stays O(spacing).
  // |d/dphi n> has norm cos(theta/2).
  const double bound = 1.5 * grid.spacing() * std::cos(theta / 2.0);
  const int m = grid.size();
  for (int i = 0; i < m; ++i) {
    const Cvec& a = smooth.states[i];
    const Cvec& b = smooth.states[(i + 1) % m];
    double diff = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) diff += std::norm(b[r] - a[r]);
    CHECK(std::sqrt(diff) <= bound);
  }
}

TEST_CASE("periodic_smooth keeps the winding of a smooth input") {
  const HamiltonianFamily f = spin_family({0.4, 1.0});  // c close to 1, winding regime
  const ParamGrid grid(2.0 * kPi, 512);
  const StatePath path = analytic_state_path(f, grid);
  const StatePath refixed = fix_gauge(path, GaugeTag::periodic_smooth);
  const double before = bargmann_product(path).accumulated_phase;
  const double after = bargmann_product(refixed).accumulated_phase;
  CHECK(std::abs(after - before) <= 1e-10);
}

TEST_CASE("gamma of the analytic spin path matches i^n cos^2(theta/2)") {
  const double theta = kPi / 2.0;
  const double c = std::pow(std::cos(theta / 2.0), 2);
  const HamiltonianFamily f = spin_family({theta, 1.0});
  const StatePath path = analytic_state_path(f, ParamGrid(2.0 * kPi, 256));
  for (int order = 1; order <= 4; ++order) {
    const GammaSamples g = gamma_samples(path, order);
    const Cplx expected = std::pow(Cplx{0.0, 1.0}, order) * c;
    // The high derivatives sit closer to the 1/h^k roundoff floor.
    const double tol = order <= 2 ? 1e-8 : 5e-8;
    for (const Cplx& v : g.values) CHECK(std::abs(v - expected) <= tol);
  }
}

TEST_CASE("gamma of a constant path vanishes") {
  // The stencil weights do not cancel exactly in binary, so "zero" means
  // the rounding floor of the weight sum over h^k.
  for (int order = 1; order <= 4; ++order) {
    const GammaSamples g = gamma_samples(constant_path(64), order);
    for (const Cplx& v : g.values) CHECK(std::abs(v) <= 1e-10);
  }
}

TEST_CASE("gamma_1 is purely imaginary on smooth paths") {
  const HamiltonianFamily f = spin_family({2.2, 1.0});
  const StatePath path =
      fix_gauge(build_state_path(f, ParamGrid(2.0 * kPi, 512)), GaugeTag::periodic_smooth);
  const GammaSamples g = gamma_samples(path, 1);
  for (const Cplx& v : g.values) CHECK(std::abs(v.real()) <= 1e-8);
}

TEST_CASE("gamma precondition checks") {
  const HamiltonianFamily f = spin_family({1.0, 1.0});
  const StatePath raw = build_state_path(f, ParamGrid(2.0 * kPi, 64));
  CHECK_THROWS_AS(gamma_samples(raw, 1), std::invalid_argument);
  const StatePath tiny = fix_gauge(build_state_path(f, ParamGrid(2.0 * kPi, 8)),
                                   GaugeTag::periodic_smooth);
  CHECK_THROWS_AS(gamma_samples(tiny, 3), std::invalid_argument);
}

TEST_CASE("continuum cumulants reproduce the closed-form spin values") {
  const ParamGrid grid(2.0 * kPi, 512);
  {
    const HamiltonianFamily f = spin_family({kPi / 3.0, 1.0});
    const CumulantSet c = cumulants_continuum(analytic_state_path(f, grid));
    const std::array<double, 4> ref = spin_reference_cumulants(kPi / 3.0);
    const double two_pi = 2.0 * kPi;
    CHECK(std::abs(c.c1 - ref[0]) / two_pi <= 1e-6);
    CHECK(std::abs(c.c2 - ref[1]) / two_pi <= 1e-6);
    CHECK(std::abs(c.c3 - ref[2]) / two_pi <= 1e-6);
    CHECK(std::abs(c.c4 - ref[3]) / two_pi <= 1e-6);
    CHECK(c.route == Route::continuum);
  }
  {
    const CumulantSet c = cumulants_continuum(constant_path(512));
    CHECK(std::abs(c.c1) <= 1e-12);
    CHECK(std::abs(c.c2) <= 1e-12);
    CHECK(std::abs(c.c3) <= 1e-12);
    CHECK(std::abs(c.c4) <= 1e-12);
  }
  {
    // theta = pi sits at c = 0 where all four cumulants vanish (to the
    // derivative roundoff floor at this resolution).
    const HamiltonianFamily f = spin_family({kPi, 1.0});
    const CumulantSet c = cumulants_continuum(analytic_state_path(f, grid));
    const double tol = 2.0 * kPi * 1e-6;
    CHECK(std::abs(c.c1) <= tol);
    CHECK(std::abs(c.c2) <= tol);
    CHECK(std::abs(c.c3) <= tol);
    CHECK(std::abs(c.c4) <= tol);
  }
}

TEST_CASE("product and continuum routes agree on the same path") {
  for (double theta : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    const HamiltonianFamily f = spin_family({theta, 1.0});
    const ParamGrid grid(2.0 * kPi, 512);
    const StatePath path = analytic_state_path(f, grid);
    const auto [odd, even] = subsampled_products(path);
    const CumulantSet prod =
        cumulants_from_products(bargmann_product(path), odd, even, grid.spacing());
    const CumulantSet cont = cumulants_continuum(path);
    CHECK(std::abs(prod.c1 - cont.c1) <= 1e-4);
    CHECK(std::abs(prod.c2 - cont.c2) <= 1e-4);
    CHECK(std::abs(prod.c3 - cont.c3) <= 1e-4);
    CHECK(std::abs(prod.c4 - cont.c4) <= 1e-4);
  }
}

TEST_CASE("continuum route on an eigensolver path matches gauge-invariant parts") {
  const double theta = 0.7;  // c > 1/2: analytic and minimal windings differ by one cycle
  const HamiltonianFamily f = spin_family({theta, 1.0});
  const ParamGrid grid(2.0 * kPi, 512);
  const CumulantSet a = cumulants_continuum(analytic_state_path(f, grid));
  const CumulantSet b =
      cumulants_continuum(fix_gauge(build_state_path(f, grid), GaugeTag::periodic_smooth));
  CHECK(std::abs(wrap_angle(a.c1 - b.c1)) <= 1e-6);
  CHECK(std::abs(a.c2 - b.c2) <= 1e-6);
  CHECK(std::abs(a.c3 - b.c3) <= 1e-6);
  CHECK(std::abs(a.c4 - b.c4) <= 1e-6);
}

TEST_CASE("apply_gauge basics") {
  const HamiltonianFamily f = spin_family({1.3, 1.0});
  const ParamGrid grid(2.0 * kPi, 512);
  const StatePath path = analytic_state_path(f, grid);
  {
    const GaugeFunction zero(grid.period(), 0, {}, {});
    const StatePath same = apply_gauge(path, zero);
    CHECK(same.gauge == GaugeTag::raw);
    for (int i = 0; i < grid.size(); ++i) {
      CHECK(std::abs(inner(path.states[i], same.states[i]) - Cplx{1.0, 0.0}) <= 1e-14);
    }
  }
  {
    const GaugeFunction winding(grid.period(), 1, {}, {});
    const OverlapProduct before = bargmann_product(path);
    const OverlapProduct after = bargmann_product(apply_gauge(path, winding));
    CHECK(std::abs(after.log_modulus - before.log_modulus) <= 1e-13);
    CHECK(std::abs(wrap_angle(after.accumulated_phase - before.accumulated_phase)) <= 1e-13);
  }
  {
    const GaugeFunction wiggle(grid.period(), 0, {}, {0.3});
    StatePath twisted = apply_gauge(path, wiggle);
    twisted.gauge = GaugeTag::periodic_smooth;  // smooth periodic twist of a smooth path
    const CumulantSet base = cumulants_continuum(path);
    const CumulantSet moved = cumulants_continuum(twisted);
    CHECK(std::abs(moved.c2 - base.c2) <= 1e-6);
    CHECK(std::abs(moved.c3 - base.c3) <= 1e-6);
    CHECK(std::abs(moved.c4 - base.c4) <= 1e-6);
  }
}

TEST_CASE("gauge function derivatives are analytic and periodic") {
  const GaugeFunction g(2.0 * kPi, 2, {0.1, 0.0, 0.25}, {0.0, -0.2});
  // finite-difference cross-check of the closures
  const double h = 1e-6;
  for (double chi : {0.0, 0.9, 3.3, 5.9}) {
    const double fd1 = (g.beta(chi + h) - g.beta(chi - h)) / (2.0 * h);
    CHECK(std::abs(fd1 - g.derivative(chi, 1)) <= 1e-7);
    const double fd2 = (g.derivative(chi + h, 1) - g.derivative(chi - h, 1)) / (2.0 * h);
    CHECK(std::abs(fd2 - g.derivative(chi, 2)) <= 1e-6);
    const double fd3 = (g.derivative(chi + h, 2) - g.derivative(chi - h, 2)) / (2.0 * h);
    CHECK(std::abs(fd3 - g.derivative(chi, 3)) <= 1e-5);
  }
  CHECK(g.beta(2.0 * kPi) - g.beta(0.0) == doctest::Approx(4.0 * kPi));
  for (int order = 1; order <= 3; ++order) {
    CHECK(std::abs(g.derivative(2.0 * kPi, order) - g.derivative(0.0, order)) <= 1e-10);
  }
}

TEST_CASE("gauge audit: winding shifts C1 by 2*pi*m and nothing else") {
  const HamiltonianFamily f = spin_family({1.0, 1.0});
  const ParamGrid grid(2.0 * kPi, 512);
  {
    const GaugeFunction g(grid.period(), 1, {}, {});
    const GaugeAuditReport r = gauge_invariance_report(f, grid, g);
    CHECK(r.residual_c1 <= 1e-6);
    CHECK(r.max_residual_c234 <= 1e-6);
  }
  {
    const GaugeFunction g(grid.period(), 0, {0.2, 0.5}, {0.0, 0.0});
    const GaugeAuditReport r = gauge_invariance_report(f, grid, g);
    CHECK(r.residual_c1 <= 1e-6);
    CHECK(r.max_residual_c234 <= 1e-6);
  }
  {
    // Constant twist: a global phase, every delta vanishes to rounding.
    const GaugeFunction g(grid.period(), 0, {}, {});
    const GaugeAuditReport r = gauge_invariance_report(f, grid, g);
    CHECK(r.residual_c1 <= 1e-12);
    CHECK(r.max_residual_c234 <= 1e-12);
  }
}

TEST_CASE("gauge audit over random smooth twists") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-0.3, 0.3);
  const HamiltonianFamily f = spin_family({1.0, 1.0});
  const ParamGrid grid(2.0 * kPi, 512);
  const int windings[] = {-1, 0, 1, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const GaugeFunction g(grid.period(), windings[trial % 4],
                          {coef(rng), coef(rng), coef(rng)},
                          {coef(rng), coef(rng), coef(rng)});
    const GaugeAuditReport r = gauge_invariance_report(f, grid, g);
    CHECK(r.residual_c1 <= 1e-6);
    CHECK(r.max_residual_c234 <= 1e-6);
  }
}
