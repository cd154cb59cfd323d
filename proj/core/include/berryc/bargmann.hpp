#pragma once

#include <utility>

#include "berryc/state_path.hpp"

namespace berryc {

/// Overlaps with modulus at or below this floor make the per-link expansion
/// meaningless; operations refuse to proceed and advise a finer grid.
inline constexpr double kOverlapFloor = 0.1;

/// Cyclic product of consecutive overlaps, kept in log decomposition:
/// log_modulus accumulates ln|z_I| and accumulated_phase accumulates the
/// principal argument of each factor. The per-link phase sum is the
/// canonical lift of Im ln(product) as long as every link phase stays inside
/// (-pi, pi); the product itself fixes the phase only modulo 2*pi.
struct OverlapProduct {
  double log_modulus = 0.0;
  double accumulated_phase = 0.0;
  int factor_count = 0;
};

/// Full cyclic chain <psi_I | psi_{I+1}>, I = 0..M-1 with psi_M = psi_0.
OverlapProduct bargmann_product(const StatePath& path);

/// The two spacing-2 subchains: first element over the odd points
/// chi_1, chi_3, ..., second over the even points chi_0, chi_2, ....
/// Each traverses the full cycle with M/2 factors.
std::pair<OverlapProduct, OverlapProduct> subsampled_products(const StatePath& path);

enum class Route { product, continuum, operator_route };

enum class ExtractionMethod {
  /// Solve the Taylor relations of ln(product) at spacings h and 2h jointly;
  /// the leading error of every cumulant below the next unknown is removed.
  two_resolution,
  /// Leading-order closed forms at the same two spacings (second-order
  /// accurate in h for all four cumulants).
  closed_form,
};

/// Per-cycle cumulants with route provenance and grid metadata.
struct CumulantSet {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  Route route = Route::product;
  int grid_size = 0;
  double spacing = 0.0;
};

/// Validating constructor: all entries finite and the spread nonnegative
/// (within -1e-10).
CumulantSet make_cumulant_set(double c1, double c2, double c3, double c4, Route route,
                              int grid_size, double spacing);

/// Extract C1..C4 from the log decompositions of the full chain and the two
/// subchains. The expansion per spacing h reads
///   ln P(h) = i C1 - (h/2) C2 - i (h^2/6) C3 + (h^3/24) C4 + O(h^4),
/// evaluated at h = spacing (full chain) and h = 2*spacing (geometric mean
/// of the two subchains); the imaginary parts determine C1 and C3, the real
/// parts C2 and C4.
CumulantSet cumulants_from_products(const OverlapProduct& full, const OverlapProduct& odd,
                                    const OverlapProduct& even, double spacing,
                                    ExtractionMethod method = ExtractionMethod::two_resolution);

struct BerryPhaseResult {
  double principal = 0.0;  // -accumulated_phase reduced to (-pi, pi]
  double unreduced = 0.0;  // -accumulated_phase as summed per link
};

BerryPhaseResult discrete_berry_phase(const OverlapProduct& product);

}  // namespace berryc
