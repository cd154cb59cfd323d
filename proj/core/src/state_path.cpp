#include "berryc/state_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace berryc {

ParamGrid::ParamGrid(double period, int size) : period_(period), size_(size) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("ParamGrid: period must be positive and finite");
  }
  if (size < 8 || size % 2 != 0) {
    std::ostringstream msg;
    msg << "ParamGrid: size must be an even integer >= 8, got " << size;
    throw std::invalid_argument(msg.str());
  }
}

StatePath make_state_path(ParamGrid grid, std::vector<Cvec> states, GaugeTag gauge) {
  if (static_cast<int>(states.size()) != grid.size()) {
    throw std::invalid_argument("make_state_path: one state per grid point required");
  }
  const std::size_t dim = states.front().size();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != dim) {
      throw std::invalid_argument("make_state_path: states have mixed dimensions");
    }
    const double n = norm(states[i]);
    if (std::abs(n - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg << "make_state_path: state " << i << " has norm " << n << " (not normalized)";
      throw std::invalid_argument(msg.str());
    }
  }
  return StatePath{grid, std::move(states), gauge};
}

StatePath build_state_path(const HamiltonianFamily& family, const ParamGrid& grid) {
  if (!family.evaluate) {
    throw std::invalid_argument("build_state_path: family has no evaluate closure");
  }
  const int band = family.band_index;
  std::vector<Cvec> states;
  states.reserve(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) {
    const double chi = grid.point(i);
    const EigDecomposition eig = hermitian_eig(family.evaluate(chi));
    const int dim = static_cast<int>(eig.eigenvalues.size());
    if (band < 0 || band >= dim) {
      throw std::invalid_argument("build_state_path: band index out of range");
    }
    const double below =
        band > 0 ? eig.eigenvalues[band] - eig.eigenvalues[band - 1]
                 : std::numeric_limits<double>::infinity();
    const double above =
        band + 1 < dim ? eig.eigenvalues[band + 1] - eig.eigenvalues[band]
                       : std::numeric_limits<double>::infinity();
    if (std::min(below, above) < kSpectralGapFloor) {
      std::ostringstream msg;
      msg << "build_state_path: spectral gap " << std::min(below, above)
          << " below the floor " << kSpectralGapFloor << " at chi = " << chi
          << " (grid point " << i << ")";
      throw std::runtime_error(msg.str());
    }
    Cvec v(static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) {
      v[static_cast<std::size_t>(r)] =
          eig.eigenvectors(static_cast<std::size_t>(r), static_cast<std::size_t>(band));
    }
    states.push_back(std::move(v));
  }
  return make_state_path(grid, std::move(states), GaugeTag::raw);
}

StatePath analytic_state_path(const HamiltonianFamily& family, const ParamGrid& grid) {
  if (!family.analytic_state) {
    throw std::invalid_argument("analytic_state_path: family has no analytic state closure");
  }
  std::vector<Cvec> states;
  states.reserve(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) states.push_back(family.analytic_state(grid.point(i)));
  return make_state_path(grid, std::move(states), GaugeTag::periodic_smooth);
}

}  // namespace berryc
