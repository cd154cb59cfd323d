#pragma once

#include "berryc/continuum.hpp"

namespace berryc {

/// Uniform grid over the Brillouin zone, K_I = -pi/L + I * dK with
/// dK = 2*pi/(N_k * L), cyclic in the periodic Bloch convention.
class BZGrid {
 public:
  BZGrid(int n_k, double lattice_constant);

  int size() const { return n_k_; }
  double lattice_constant() const { return lattice_constant_; }
  double spacing() const;
  double point(int i) const;
  /// Grid metadata for the shared overlap/derivative machinery (the curve
  /// parameter is K, the cycle length 2*pi/L).
  ParamGrid param_grid() const;

 private:
  int n_k_;
  double lattice_constant_;
};

/// Ground-band (or chosen-band) eigenvectors across the Brillouin zone,
/// eigensolver phases, gauge raw.
StatePath bloch_path(const BlochModel& model, const BZGrid& grid, int band = 0);

/// Discrete Berry phase of the Bloch cycle, reduced to (-pi, pi].
double zak_phase(const BlochModel& model, const BZGrid& grid, int band = 0);

struct RestaPosition {
  std::vector<double> per_link;       // -(1/dK) Im ln <psi(K_I)|psi(K_{I+1})> per link
  double cycle_mean = 0.0;            // unreduced average over the cycle
  double cycle_mean_mod_lattice = 0.0;  // reduced into [0, L)
};

/// Single-link position expectation values and their cycle average. The
/// polarization is defined modulo the lattice constant; both the reduced and
/// the unreduced average are reported.
RestaPosition resta_position(const StatePath& path);

/// sigma^2_X = -(2 / (N_k dK^2)) * sum_I Re ln <psi(K_I)|psi(K_{I+1})>,
/// i.e. -(2 / (N_k dK^2)) times the log-modulus of the cyclic product.
double resta_spread_discrete(const StatePath& path);

struct SpreadResult {
  std::vector<double> per_k;  // sigma^2_X(K_I) = Re[-g2(K) + g1(K)^2]
  double average = 0.0;       // (L / 2*pi) * integral of per_k over the zone
  double discrete = 0.0;      // the product formula on the same path
};

/// Per-k spread from the derivative form and its zone average, plus the
/// discrete product value for comparison. Requires the periodic_smooth
/// gauge; a per-k imaginary residue above 1e-8 raises an error.
SpreadResult spread_bz_average(const StatePath& path);

}  // namespace berryc
