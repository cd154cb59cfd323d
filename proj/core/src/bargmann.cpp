#include "berryc/bargmann.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace berryc {

namespace {

OverlapProduct chain_product(const StatePath& path, int start, int stride, int count) {
  const int m = path.grid.size();
  OverlapProduct out;
  for (int n = 0; n < count; ++n) {
    const int i = (start + n * stride) % m;
    const int j = (start + (n + 1) * stride) % m;
    const Cplx z = inner(path.states[static_cast<std::size_t>(i)],
                         path.states[static_cast<std::size_t>(j)]);
    const double mod = std::abs(z);
    if (mod <= kOverlapFloor) {
      std::ostringstream msg;
      msg << "overlap modulus " << mod << " at link " << i << " -> " << j
          << " is at or below the sanity floor " << kOverlapFloor
          << "; refine the grid";
      throw std::runtime_error(msg.str());
    }
    out.log_modulus += std::log(mod);
    out.accumulated_phase += principal_arg(z);
    ++out.factor_count;
  }
  if (out.log_modulus > 1e-12) {
    std::ostringstream msg;
    msg << "overlap product modulus exp(" << out.log_modulus
        << ") exceeds 1; states are not consistently normalized";
    throw std::runtime_error(msg.str());
  }
  return out;
}

}  // namespace

OverlapProduct bargmann_product(const StatePath& path) {
  return chain_product(path, 0, 1, path.grid.size());
}

std::pair<OverlapProduct, OverlapProduct> subsampled_products(const StatePath& path) {
  const int m = path.grid.size();
  if (m % 2 != 0) {
    throw std::invalid_argument("subsampled_products: grid size must be even");
  }
  return {chain_product(path, 1, 2, m / 2), chain_product(path, 0, 2, m / 2)};
}

CumulantSet make_cumulant_set(double c1, double c2, double c3, double c4, Route route,
                              int grid_size, double spacing) {
  for (double v : {c1, c2, c3, c4}) {
    if (!std::isfinite(v)) {
      throw std::runtime_error("make_cumulant_set: non-finite cumulant");
    }
  }
  if (c2 < -1e-10) {
    std::ostringstream msg;
    msg << "make_cumulant_set: C2 = " << c2 << " violates variance positivity";
    throw std::runtime_error(msg.str());
  }
  return CumulantSet{c1, c2, c3, c4, route, grid_size, spacing};
}

CumulantSet cumulants_from_products(const OverlapProduct& full, const OverlapProduct& odd,
                                    const OverlapProduct& even, double spacing,
                                    ExtractionMethod method) {
  if (odd.factor_count != even.factor_count || 2 * odd.factor_count != full.factor_count) {
    throw std::invalid_argument(
        "cumulants_from_products: products do not come from the same path");
  }
  const double h = spacing;
  const double re_f = full.log_modulus;
  const double im_f = full.accumulated_phase;
  // Geometric mean of the two offset subchains, in log decomposition.
  const double re_c = 0.5 * (odd.log_modulus + even.log_modulus);
  const double im_c = 0.5 * (odd.accumulated_phase + even.accumulated_phase);

  // Shared leading combinations, both O(h^2) accurate:
  //   C3 = -(2/h^2) Im ln[(P_odd P_even)^{1/2} / P]
  //   C4 =  (8/h^3) Re ln[(P_odd P_even)^{1/4} / P]
  const double c3 = 2.0 * (im_f - im_c) / (h * h);
  const double c4 = 4.0 * (re_c - 2.0 * re_f) / (h * h * h);

  double c1 = im_f;
  double c2 = -2.0 * re_f / h;
  if (method == ExtractionMethod::two_resolution) {
    c1 += h * h * c3 / 6.0;
    c2 += h * h * c4 / 12.0;
  }
  return make_cumulant_set(c1, c2, c3, c4, Route::product, full.factor_count, spacing);
}

BerryPhaseResult discrete_berry_phase(const OverlapProduct& product) {
  return BerryPhaseResult{wrap_angle(-product.accumulated_phase), -product.accumulated_phase};
}

}  // namespace berryc
