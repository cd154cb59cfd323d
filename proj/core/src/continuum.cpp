#include "berryc/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace berryc {

namespace {

constexpr double kImagResidueTol = 1e-8;

std::vector<Cvec> state_derivatives(const StatePath& path, int order) {
  const int m = path.grid.size();
  const std::size_t dim = path.states.front().size();
  const double h = path.grid.spacing();
  // Differentiate componentwise.
  std::vector<Cvec> out(static_cast<std::size_t>(m), Cvec(dim));
  std::vector<Cplx> comp(static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < dim; ++c) {
    for (int i = 0; i < m; ++i) comp[static_cast<std::size_t>(i)] = path.states[static_cast<std::size_t>(i)][c];
    const std::vector<Cplx> d = periodic_derivative(comp, order, h);
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)][c] = d[static_cast<std::size_t>(i)];
  }
  return out;
}

double require_real(Cplx value, const char* what) {
  if (std::abs(value.imag()) > kImagResidueTol) {
    std::ostringstream msg;
    msg << what << " has imaginary residue " << value.imag() << " above " << kImagResidueTol
        << "; gauge is not smooth or the grid is under-resolved";
    throw std::runtime_error(msg.str());
  }
  return value.real();
}

}  // namespace

GammaSamples gamma_samples(const StatePath& path, int order) {
  if (order < 1 || order > 4) {
    throw std::invalid_argument("gamma_samples: order must be 1..4");
  }
  if (path.gauge != GaugeTag::periodic_smooth) {
    throw std::invalid_argument(
        "gamma_samples: path must be in the periodic_smooth gauge to be differentiable");
  }
  const std::vector<Cvec> deriv = state_derivatives(path, order);
  GammaSamples g;
  g.order = order;
  g.values.resize(path.states.size());
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    g.values[i] = inner(path.states[i], deriv[i]);
  }
  return g;
}

CumulantSet cumulants_continuum(const StatePath& path) {
  const GammaSamples g1 = gamma_samples(path, 1);
  const GammaSamples g2 = gamma_samples(path, 2);
  const GammaSamples g3 = gamma_samples(path, 3);
  const GammaSamples g4 = gamma_samples(path, 4);

  const std::size_t m = g1.values.size();
  std::vector<Cplx> i1(m), i2(m), i3(m), i4(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Cplx a = g1.values[i];
    const Cplx b = g2.values[i];
    const Cplx c = g3.values[i];
    const Cplx d = g4.values[i];
    i1[i] = a;
    i2[i] = b - a * a;
    i3[i] = c - 3.0 * b * a + 2.0 * a * a * a;
    i4[i] = d - 3.0 * b * b - 4.0 * c * a + 12.0 * a * a * b - 6.0 * a * a * a * a;
  }
  const double period = path.grid.period();
  const Cplx j = Cplx{0.0, 1.0};
  const double c1 = require_real(-j * periodic_trapezoid(std::span<const Cplx>(i1), period), "C1");
  const double c2 = require_real(-periodic_trapezoid(std::span<const Cplx>(i2), period), "C2");
  const double c3 = require_real(j * periodic_trapezoid(std::span<const Cplx>(i3), period), "C3");
  const double c4 = require_real(periodic_trapezoid(std::span<const Cplx>(i4), period), "C4");
  return make_cumulant_set(c1, c2, c3, c4, Route::continuum, path.grid.size(),
                           path.grid.spacing());
}

GaugeAuditReport gauge_invariance_report(const HamiltonianFamily& family, const ParamGrid& grid,
                                         const GaugeFunction& g) {
  const StatePath base = family.analytic_state
                             ? analytic_state_path(family, grid)
                             : fix_gauge(build_state_path(family, grid), GaugeTag::periodic_smooth);

  StatePath twisted = apply_gauge(base, g);
  // The twist is smooth and periodic by the GaugeFunction contract, so the
  // twisted path stays differentiable.
  twisted.gauge = GaugeTag::periodic_smooth;

  GaugeAuditReport report;
  report.base = cumulants_continuum(base);
  report.twisted = cumulants_continuum(twisted);
  report.winding = g.winding();
  report.delta_c1 = report.twisted.c1 - report.base.c1;
  report.delta_c2 = report.twisted.c2 - report.base.c2;
  report.delta_c3 = report.twisted.c3 - report.base.c3;
  report.delta_c4 = report.twisted.c4 - report.base.c4;
  report.residual_c1 = std::abs(report.delta_c1 - 2.0 * std::numbers::pi * g.winding());
  report.max_residual_c234 =
      std::max({std::abs(report.delta_c2), std::abs(report.delta_c3), std::abs(report.delta_c4)});
  return report;
}

}  // namespace berryc
