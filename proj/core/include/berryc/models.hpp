#pragma once

#include <array>
#include <functional>
#include <string>

#include "berryc/linalg.hpp"

namespace berryc {

/// Minimum spectral gap (between the tracked band and its neighbours) below
/// which adiabatic state tracking is refused.
inline constexpr double kSpectralGapFloor = 1e-8;

/// A Hamiltonian family along a closed curve parametrized by a scalar chi,
/// H(chi + period) = H(chi).
struct HamiltonianFamily {
  std::size_t dim = 0;
  double period = 0.0;
  int band_index = 0;  // which ascending eigenstate plays the tracked band
  std::function<HermitianMatrix(double)> evaluate;
  std::function<HermitianMatrix(double)> derivative;  // d/dchi H; empty -> finite differences
  /// Optional smooth, single-valued eigenstate family chi -> |psi(chi)>.
  /// When present it fixes a definite phase convention along the cycle.
  std::function<Cvec(double)> analytic_state;
  std::string warning;  // nonempty if construction spotted a problem (e.g. gap closure)
};

/// d0*I + dx*sigma_x + dy*sigma_y + dz*sigma_z (exactly Hermitian by construction).
HermitianMatrix two_level(double d0, double dx, double dy, double dz);

/// chi-derivative of a family, analytic when supplied, otherwise a central
/// difference with step 1e-5.
HermitianMatrix family_derivative(const HamiltonianFamily& family, double chi);

// ---------------------------------------------------------------------------
// Spin-1/2 in a precessing field
// ---------------------------------------------------------------------------

struct SpinModelParams {
  double theta = 0.0;  // polar angle of the field axis, radians in [0, pi]
  double mu = 1.0;     // coupling (energy scale); must be nonzero
};

/// H(phi) = -mu * (sin(theta)cos(phi) sx + sin(theta)sin(phi) sy + cos(theta) sz),
/// phi running over one cycle of length 2*pi. The tracked band is the one
/// continuously connected to the analytic state below.
HamiltonianFamily spin_family(const SpinModelParams& params);

/// The eigenstate (-sin(theta/2), e^{i phi} cos(theta/2)) of the precessing-field
/// Hamiltonian, smooth and single-valued in phi.
Cvec spin_state_analytic(double theta, double phi);

/// Closed-form per-cycle cumulants C1..C4 of the precessing-spin cycle.
/// With c = cos^2(theta/2) these are 2*pi times the first four cumulants of a
/// Bernoulli(c) variable: c, c-c^2, c-3c^2+2c^3, c-7c^2+12c^3-6c^4.
std::array<double, 4> spin_reference_cumulants(double theta);

// ---------------------------------------------------------------------------
// Two-band 1D Bloch models
// ---------------------------------------------------------------------------

struct BlochModel {
  double t1 = 0.0;     // intracell hopping
  double t2 = 0.0;     // intercell hopping
  double delta = 0.0;  // sublattice staggering
  double lattice_constant = 1.0;
};

/// H(k) = (t1 + t2 cos(kL)) sx + t2 sin(kL) sy + delta sz in the periodic
/// convention H(k + 2*pi/L) = H(k), both orbitals at the cell origin.
/// The tracked band defaults to the lower one. If the gap closes anywhere on
/// a probe grid the family carries a warning (state tracking will still
/// refuse to cross the gap floor).
HamiltonianFamily rice_mele_family(const BlochModel& model);

}  // namespace berryc
