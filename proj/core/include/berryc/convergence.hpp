#pragma once

#include <span>

namespace berryc {

/// Least-squares slope of log(error) against log(step): the apparent
/// convergence order of a refinement study. Points with error below 1e-14
/// (rounding floor) are skipped; at least two usable points are required.
double fit_convergence_order(std::span<const double> steps, std::span<const double> errors);

}  // namespace berryc
