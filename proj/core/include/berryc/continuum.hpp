#pragma once

#include "berryc/bargmann.hpp"
#include "berryc/gauge.hpp"

namespace berryc {

/// Samples of gamma_i(chi) = <psi(chi)| d^i/dchi^i |psi(chi)> on the grid.
struct GammaSamples {
  int order = 0;
  std::vector<Cplx> values;
};

/// gamma_i from fourth-order periodic finite differences of the state
/// sequence. Requires a differentiable gauge (tag periodic_smooth) and a
/// grid wide enough for the stencil.
GammaSamples gamma_samples(const StatePath& path, int order);

/// Per-cycle cumulants from the derivative integrals
///   C1 = -i I[g1],  C2 = -I[g2 - g1^2],
///   C3 =  i I[g3 - 3 g2 g1 + 2 g1^3],
///   C4 =    I[g4 - 3 g2^2 - 4 g3 g1 + 12 g1^2 g2 - 6 g1^4],
/// with I[.] the periodic quadrature over one cycle. Each result must be
/// real; an imaginary residue above 1e-8 signals a bad gauge or an
/// under-resolved grid and raises an error.
CumulantSet cumulants_continuum(const StatePath& path);

struct GaugeAuditReport {
  CumulantSet base;
  CumulantSet twisted;
  int winding = 0;
  double delta_c1 = 0.0;  // twisted - base
  double delta_c2 = 0.0;
  double delta_c3 = 0.0;
  double delta_c4 = 0.0;
  double residual_c1 = 0.0;       // |delta_c1 - 2*pi*winding|
  double max_residual_c234 = 0.0; // max of |delta_c2..4|
};

/// Compute continuum cumulants with and without the twist exp(i beta) and
/// report the shifts: the first cumulant must move by 2*pi*winding, the
/// higher ones not at all. The twisted path inherits differentiability from
/// the twist's periodic derivatives, so it is differentiated directly
/// rather than re-gauged (re-gauging would undo the twist).
GaugeAuditReport gauge_invariance_report(const HamiltonianFamily& family, const ParamGrid& grid,
                                         const GaugeFunction& g);

}  // namespace berryc
