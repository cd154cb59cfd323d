#pragma once

#include <vector>

#include "berryc/models.hpp"

namespace berryc {

/// Uniform cyclic grid chi_I = I * (period / size), I = 0..size-1, with the
/// cyclic convention chi_size == chi_0. The size must be even and at least 8
/// (halving into odd/even subchains must stay meaningful).
class ParamGrid {
 public:
  ParamGrid(double period, int size);

  double period() const { return period_; }
  int size() const { return size_; }
  double spacing() const { return period_ / size_; }
  double point(int i) const { return spacing() * i; }

 private:
  double period_;
  int size_;
};

enum class GaugeTag { raw, parallel_transport, periodic_smooth };

/// Ordered band eigenvectors on a closed parameter grid.
struct StatePath {
  ParamGrid grid;
  std::vector<Cvec> states;
  GaugeTag gauge = GaugeTag::raw;
};

/// Validating constructor: one state per grid point, uniform dimension,
/// each normalized within 1e-12.
StatePath make_state_path(ParamGrid grid, std::vector<Cvec> states, GaugeTag gauge);

/// Sample the tracked band of the family on the grid with the eigensolver,
/// phases left exactly as the solver produced them (gauge raw). Refuses to
/// track across spectral gaps below the gap floor, naming the offending
/// grid point.
StatePath build_state_path(const HamiltonianFamily& family, const ParamGrid& grid);

/// Sample the family's analytic eigenstate closure on the grid. The result
/// is smooth and single-valued by construction and is tagged
/// periodic_smooth, preserving the closure's winding convention.
StatePath analytic_state_path(const HamiltonianFamily& family, const ParamGrid& grid);

}  // namespace berryc
