#include "berryc/convergence.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace berryc {

double fit_convergence_order(std::span<const double> steps, std::span<const double> errors) {
  if (steps.size() != errors.size()) {
    throw std::invalid_argument("fit_convergence_order: size mismatch");
  }
  std::vector<double> x, y;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (errors[i] < 1e-14) continue;  // at the rounding floor, uninformative
    x.push_back(std::log(steps[i]));
    y.push_back(std::log(errors[i]));
  }
  if (x.size() < 2) {
    throw std::runtime_error("fit_convergence_order: fewer than two points above the floor");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace berryc
