#include "berryc/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace berryc {

namespace {
constexpr double kPi = std::numbers::pi;
}

HermitianMatrix two_level(double d0, double dx, double dy, double dz) {
  CMatrix m(2);
  m(0, 0) = Cplx{d0 + dz, 0.0};
  m(0, 1) = Cplx{dx, -dy};
  m(1, 0) = Cplx{dx, dy};
  m(1, 1) = Cplx{d0 - dz, 0.0};
  return HermitianMatrix(std::move(m));
}

HermitianMatrix family_derivative(const HamiltonianFamily& family, double chi) {
  if (family.derivative) return family.derivative(chi);
  constexpr double delta = 1e-5;
  const CMatrix hp = family.evaluate(chi + delta).matrix();
  const CMatrix hm = family.evaluate(chi - delta).matrix();
  CMatrix d(hp.dim());
  for (std::size_t r = 0; r < d.dim(); ++r)
    for (std::size_t c = 0; c < d.dim(); ++c) {
      // Symmetrize explicitly so rounding cannot trip the Hermitian check.
      const Cplx v = (hp(r, c) - hm(r, c)) / (2.0 * delta);
      d(r, c) = v;
    }
  for (std::size_t r = 0; r < d.dim(); ++r) {
    d(r, r) = Cplx{d(r, r).real(), 0.0};
    for (std::size_t c = r + 1; c < d.dim(); ++c) {
      const Cplx v = 0.5 * (d(r, c) + std::conj(d(c, r)));
      d(r, c) = v;
      d(c, r) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(d));
}

HamiltonianFamily spin_family(const SpinModelParams& params) {
  if (!(params.theta >= 0.0 && params.theta <= kPi)) {
    throw std::invalid_argument("spin_family: theta must lie in [0, pi]");
  }
  if (params.mu == 0.0 || !std::isfinite(params.mu)) {
    throw std::invalid_argument("spin_family: mu must be finite and nonzero");
  }
  const double theta = params.theta;
  const double mu = params.mu;

  HamiltonianFamily f;
  f.dim = 2;
  f.period = 2.0 * kPi;
  // The analytic state has energy +mu, i.e. the upper band for mu > 0.
  f.band_index = (mu > 0.0) ? 1 : 0;
  f.evaluate = [theta, mu](double phi) {
    return two_level(0.0, -mu * std::sin(theta) * std::cos(phi),
                     -mu * std::sin(theta) * std::sin(phi), -mu * std::cos(theta));
  };
  f.derivative = [theta, mu](double phi) {
    return two_level(0.0, mu * std::sin(theta) * std::sin(phi),
                     -mu * std::sin(theta) * std::cos(phi), 0.0);
  };
  f.analytic_state = [theta](double phi) { return spin_state_analytic(theta, phi); };
  return f;
}

Cvec spin_state_analytic(double theta, double phi) {
  return {Cplx{-std::sin(0.5 * theta), 0.0}, std::polar(std::cos(0.5 * theta), phi)};
}

std::array<double, 4> spin_reference_cumulants(double theta) {
  const double c = std::pow(std::cos(0.5 * theta), 2);
  const double c2 = c * c;
  const double c3 = c2 * c;
  const double c4 = c3 * c;
  const double two_pi = 2.0 * kPi;
  return {two_pi * c, two_pi * (c - c2), two_pi * (c - 3.0 * c2 + 2.0 * c3),
          two_pi * (c - 7.0 * c2 + 12.0 * c3 - 6.0 * c4)};
}

HamiltonianFamily rice_mele_family(const BlochModel& model) {
  if (model.t1 == 0.0 && model.t2 == 0.0 && model.delta == 0.0) {
    throw std::invalid_argument("rice_mele_family: t1, t2, delta must not all vanish");
  }
  if (!(model.lattice_constant > 0.0)) {
    throw std::invalid_argument("rice_mele_family: lattice constant must be positive");
  }
  const double t1 = model.t1;
  const double t2 = model.t2;
  const double delta = model.delta;
  const double L = model.lattice_constant;

  HamiltonianFamily f;
  f.dim = 2;
  f.period = 2.0 * kPi / L;
  f.band_index = 0;
  f.evaluate = [t1, t2, delta, L](double k) {
    return two_level(0.0, t1 + t2 * std::cos(k * L), t2 * std::sin(k * L), delta);
  };
  f.derivative = [t2, L](double k) {
    return two_level(0.0, -t2 * L * std::sin(k * L), t2 * L * std::cos(k * L), 0.0);
  };

  // Probe the direct gap 2|d(k)| on a coarse grid; carry a warning if it closes.
  constexpr int kProbe = 256;
  double min_gap = std::numeric_limits<double>::infinity();
  double min_k = 0.0;
  for (int i = 0; i < kProbe; ++i) {
    const double k = f.period * static_cast<double>(i) / kProbe;
    const double dx = t1 + t2 * std::cos(k * L);
    const double dy = t2 * std::sin(k * L);
    const double g = 2.0 * std::sqrt(dx * dx + dy * dy + delta * delta);
    if (g < min_gap) {
      min_gap = g;
      min_k = k;
    }
  }
  if (min_gap < kSpectralGapFloor) {
    std::ostringstream msg;
    msg << "gap closes to " << min_gap << " near k = " << min_k
        << "; the tracked band is ill-defined there";
    f.warning = msg.str();
  }
  return f;
}

}  // namespace berryc
