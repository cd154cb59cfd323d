#include "berryc/polarization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace berryc {

namespace {
constexpr double kPi = std::numbers::pi;
}

BZGrid::BZGrid(int n_k, double lattice_constant)
    : n_k_(n_k), lattice_constant_(lattice_constant) {
  if (n_k < 8 || n_k % 2 != 0) {
    std::ostringstream msg;
    msg << "BZGrid: N_k must be an even integer >= 8, got " << n_k;
    throw std::invalid_argument(msg.str());
  }
  if (!(lattice_constant > 0.0)) {
    throw std::invalid_argument("BZGrid: lattice constant must be positive");
  }
}

double BZGrid::spacing() const { return 2.0 * kPi / (n_k_ * lattice_constant_); }

double BZGrid::point(int i) const { return -kPi / lattice_constant_ + i * spacing(); }

ParamGrid BZGrid::param_grid() const { return ParamGrid(2.0 * kPi / lattice_constant_, n_k_); }

StatePath bloch_path(const BlochModel& model, const BZGrid& grid, int band) {
  HamiltonianFamily family = rice_mele_family(model);
  family.band_index = band;
  const int m = grid.size();
  std::vector<Cvec> states;
  states.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double k = grid.point(i);
    const EigDecomposition eig = hermitian_eig(family.evaluate(k));
    const double gap = eig.eigenvalues[1] - eig.eigenvalues[0];
    if (gap < kSpectralGapFloor) {
      std::ostringstream msg;
      msg << "bloch_path: gap " << gap << " closes at K = " << k << " (grid point " << i
          << "); the band is ill-defined";
      throw std::runtime_error(msg.str());
    }
    Cvec v(2);
    v[0] = eig.eigenvectors(0, static_cast<std::size_t>(band));
    v[1] = eig.eigenvectors(1, static_cast<std::size_t>(band));
    states.push_back(std::move(v));
  }
  return make_state_path(grid.param_grid(), std::move(states), GaugeTag::raw);
}

double zak_phase(const BlochModel& model, const BZGrid& grid, int band) {
  return discrete_berry_phase(bargmann_product(bloch_path(model, grid, band))).principal;
}

RestaPosition resta_position(const StatePath& path) {
  const int m = path.grid.size();
  const double dk = path.grid.spacing();
  const double lattice = 2.0 * kPi / path.grid.period();

  RestaPosition out;
  out.per_link.resize(static_cast<std::size_t>(m));
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const Cplx z = inner(path.states[static_cast<std::size_t>(i)],
                         path.states[static_cast<std::size_t>((i + 1) % m)]);
    if (std::abs(z) == 0.0) {
      std::ostringstream msg;
      msg << "resta_position: vanishing overlap at link " << i;
      throw std::runtime_error(msg.str());
    }
    const double arg = principal_arg(z);
    out.per_link[static_cast<std::size_t>(i)] = -arg / dk;
    acc += arg;
  }
  out.cycle_mean = -acc / (m * dk);
  double reduced = std::fmod(out.cycle_mean, lattice);
  if (reduced < 0.0) reduced += lattice;
  out.cycle_mean_mod_lattice = reduced;
  return out;
}

double resta_spread_discrete(const StatePath& path) {
  const OverlapProduct p = bargmann_product(path);
  const double dk = path.grid.spacing();
  return -2.0 * p.log_modulus / (p.factor_count * dk * dk);
}

SpreadResult spread_bz_average(const StatePath& path) {
  const GammaSamples g1 = gamma_samples(path, 1);
  const GammaSamples g2 = gamma_samples(path, 2);
  const std::size_t m = g1.values.size();

  SpreadResult out;
  out.per_k.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Cplx v = -g2.values[i] + g1.values[i] * g1.values[i];
    if (std::abs(v.imag()) > 1e-8) {
      std::ostringstream msg;
      msg << "spread_bz_average: per-k spread at grid point " << i << " has imaginary residue "
          << v.imag() << "; gauge is not smooth or the grid is under-resolved";
      throw std::runtime_error(msg.str());
    }
    out.per_k[i] = v.real();
  }
  const double period = path.grid.period();       // 2*pi / L
  const double lattice = 2.0 * kPi / period;
  out.average = (lattice / (2.0 * kPi)) *
                periodic_trapezoid(std::span<const double>(out.per_k), period);
  out.discrete = resta_spread_discrete(path);
  return out;
}

}  // namespace berryc
