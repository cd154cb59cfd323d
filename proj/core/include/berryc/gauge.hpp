#pragma once

#include <vector>

#include "berryc/state_path.hpp"

namespace berryc {

/// A smooth periodic phase twist
///   beta(chi) = 2*pi*winding*chi/period
///             + sum_j [ cos_coeffs[j-1] cos(2*pi*j*chi/period)
///                     + sin_coeffs[j-1] sin(2*pi*j*chi/period) ],
/// whose first three derivatives are periodic at the boundary by
/// construction, as required for the twist to leave C2..C4 untouched.
class GaugeFunction {
 public:
  GaugeFunction(double period, int winding, std::vector<double> cos_coeffs,
                std::vector<double> sin_coeffs);

  double beta(double chi) const;
  /// d^order beta / d chi^order, order 1..3, analytic.
  double derivative(double chi, int order) const;

  double period() const { return period_; }
  int winding() const { return winding_; }

 private:
  double period_;
  int winding_;
  std::vector<double> cos_coeffs_;
  std::vector<double> sin_coeffs_;
};

/// Multiply state I by exp(i beta(chi_I)). The result is tagged raw: the
/// caller decides whether the twisted path is still differentiable.
StatePath apply_gauge(const StatePath& path, const GaugeFunction& g);

/// Re-gauge a path.
///  - parallel_transport: rephase so every consecutive overlap is real
///    positive (the cycle phase then sits entirely in the closing link).
///  - periodic_smooth: parallel transport, then rotate state I by
///    exp(i * phi_tot * I / M) where phi_tot is the per-link accumulated
///    phase of the *input* path, so link phases are uniform and the path
///    closes smoothly. A smooth single-valued input keeps its winding; a raw
///    eigensolver path ends up in the minimal-winding smooth gauge.
/// The cyclic overlap product is unchanged either way.
StatePath fix_gauge(const StatePath& path, GaugeTag mode);

}  // namespace berryc
