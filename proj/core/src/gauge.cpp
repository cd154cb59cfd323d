#include "berryc/gauge.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "berryc/bargmann.hpp"

namespace berryc {

namespace {
constexpr double kPi = std::numbers::pi;
}

GaugeFunction::GaugeFunction(double period, int winding, std::vector<double> cos_coeffs,
                             std::vector<double> sin_coeffs)
    : period_(period),
      winding_(winding),
      cos_coeffs_(std::move(cos_coeffs)),
      sin_coeffs_(std::move(sin_coeffs)) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("GaugeFunction: period must be positive and finite");
  }
  for (double v : cos_coeffs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("GaugeFunction: non-finite coefficient");
  }
  for (double v : sin_coeffs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("GaugeFunction: non-finite coefficient");
  }
}

double GaugeFunction::beta(double chi) const {
  const double w = 2.0 * kPi / period_;
  double b = winding_ * w * chi;
  for (std::size_t j = 0; j < cos_coeffs_.size(); ++j) {
    b += cos_coeffs_[j] * std::cos(w * (j + 1) * chi);
  }
  for (std::size_t j = 0; j < sin_coeffs_.size(); ++j) {
    b += sin_coeffs_[j] * std::sin(w * (j + 1) * chi);
  }
  return b;
}

double GaugeFunction::derivative(double chi, int order) const {
  if (order < 1 || order > 3) {
    throw std::invalid_argument("GaugeFunction::derivative: order must be 1..3");
  }
  const double w = 2.0 * kPi / period_;
  double b = (order == 1) ? winding_ * w : 0.0;
  for (std::size_t j = 0; j < cos_coeffs_.size(); ++j) {
    const double wj = w * (j + 1);
    const double p = std::pow(wj, order);
    // d/dx cos -> -sin -> -cos -> sin
    const double term = (order == 1)   ? -std::sin(wj * chi)
                        : (order == 2) ? -std::cos(wj * chi)
                                       : std::sin(wj * chi);
    b += cos_coeffs_[j] * p * term;
  }
  for (std::size_t j = 0; j < sin_coeffs_.size(); ++j) {
    const double wj = w * (j + 1);
    const double p = std::pow(wj, order);
    // d/dx sin -> cos -> -sin -> -cos
    const double term = (order == 1)   ? std::cos(wj * chi)
                        : (order == 2) ? -std::sin(wj * chi)
                                       : -std::cos(wj * chi);
    b += sin_coeffs_[j] * p * term;
  }
  return b;
}

namespace {

// Uniform link phases pin only the per-link integrals of the connection
// Im<psi|d psi>; pointwise it still wobbles at O(spacing^2), which leaks
// into the imaginary part of derivative-based observables. Rephase by the
// cumulative trapezoid of the measured connection so it becomes pointwise
// constant. Each pass cuts the wobble by O(spacing^2); two passes park it
// at the rounding floor. Skipped (no-op) when the grid is too narrow for
// the derivative stencil.
void flatten_connection(const ParamGrid& grid, std::vector<Cvec>& states) {
  const int m = grid.size();
  const int width = 2 * periodic_fd_stencil(1).radius + 1;
  if (width * 4 >= m) return;
  const double h = grid.spacing();
  const std::size_t dim = states.front().size();

  for (int pass = 0; pass < 2; ++pass) {
    std::vector<double> a(static_cast<std::size_t>(m));
    std::vector<Cplx> comp(static_cast<std::size_t>(m));
    std::vector<Cplx> accum(static_cast<std::size_t>(m), Cplx{0.0, 0.0});
    for (std::size_t c = 0; c < dim; ++c) {
      for (int i = 0; i < m; ++i) comp[static_cast<std::size_t>(i)] = states[static_cast<std::size_t>(i)][c];
      const std::vector<Cplx> d = periodic_derivative(comp, 1, h);
      for (int i = 0; i < m; ++i) {
        accum[static_cast<std::size_t>(i)] += std::conj(comp[static_cast<std::size_t>(i)]) * d[static_cast<std::size_t>(i)];
      }
    }
    double mean = 0.0;
    for (int i = 0; i < m; ++i) {
      a[static_cast<std::size_t>(i)] = accum[static_cast<std::size_t>(i)].imag();
      mean += a[static_cast<std::size_t>(i)];
    }
    mean /= m;

    // beta' = mean - a, accumulated by the cyclic trapezoid; the use of the
    // exact mean makes beta close periodically to rounding.
    double beta = 0.0;
    for (int i = 0; i < m; ++i) {
      const Cplx rot = std::polar(1.0, beta);
      for (Cplx& v : states[static_cast<std::size_t>(i)]) v *= rot;
      const double da = (mean - a[static_cast<std::size_t>(i)]) +
                        (mean - a[static_cast<std::size_t>((i + 1) % m)]);
      beta += 0.5 * h * da;
    }
  }
}

}  // namespace

StatePath apply_gauge(const StatePath& path, const GaugeFunction& g) {
  std::vector<Cvec> states = path.states;
  for (int i = 0; i < path.grid.size(); ++i) {
    const Cplx phase = std::polar(1.0, g.beta(path.grid.point(i)));
    for (Cplx& c : states[static_cast<std::size_t>(i)]) c *= phase;
  }
  return make_state_path(path.grid, std::move(states), GaugeTag::raw);
}

StatePath fix_gauge(const StatePath& path, GaugeTag mode) {
  if (mode == GaugeTag::raw) {
    throw std::invalid_argument("fix_gauge: target gauge must be a fixed one");
  }
  const int m = path.grid.size();

  // Unreduced per-link phase of the input chain, needed for unwinding.
  const double phi_tot =
      (mode == GaugeTag::periodic_smooth) ? bargmann_product(path).accumulated_phase : 0.0;

  std::vector<Cvec> states = path.states;
  for (int i = 0; i + 1 < m; ++i) {
    const Cplx z = inner(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(i + 1)]);
    const double mod = std::abs(z);
    if (mod <= kOverlapFloor) {
      std::ostringstream msg;
      msg << "fix_gauge: overlap modulus " << mod << " at link " << i
          << " is at or below the sanity floor " << kOverlapFloor << "; refine the grid";
      throw std::runtime_error(msg.str());
    }
    const Cplx phase = std::conj(z) / mod;
    for (Cplx& c : states[static_cast<std::size_t>(i + 1)]) c *= phase;
  }
  if (mode == GaugeTag::periodic_smooth) {
    for (int i = 0; i < m; ++i) {
      const Cplx rot = std::polar(1.0, phi_tot * static_cast<double>(i) / m);
      for (Cplx& c : states[static_cast<std::size_t>(i)]) c *= rot;
    }
    flatten_connection(path.grid, states);
  }
  return make_state_path(path.grid, std::move(states), mode);
}

}  // namespace berryc
