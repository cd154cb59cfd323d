#include "berryc/operator_route.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace berryc {

namespace {

Cvec eigencolumn(const EigDecomposition& eig, int band) {
  const std::size_t n = eig.eigenvalues.size();
  Cvec v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = eig.eigenvectors(r, static_cast<std::size_t>(band));
  return v;
}

void require_nondegenerate(const EigDecomposition& eig, double chi) {
  for (std::size_t i = 0; i + 1 < eig.eigenvalues.size(); ++i) {
    const double gap = eig.eigenvalues[i + 1] - eig.eigenvalues[i];
    if (gap < kSpectralGapFloor) {
      std::ostringstream msg;
      msg << "spectrum degenerate at chi = " << chi << ": gap " << gap
          << " between levels " << i << " and " << i + 1 << " is below " << kSpectralGapFloor
          << "; the commutator equation does not determine those elements";
      throw std::runtime_error(msg.str());
    }
  }
}

}  // namespace

CMatrix CommutatorOperator::to_original_basis() const {
  const CMatrix& v = basis.eigenvectors;
  return v * matrix * v.adjoint();
}

CommutatorOperator solve_commutator(const HermitianMatrix& h, const HermitianMatrix& dh,
                                    const std::optional<std::vector<double>>& diagonal,
                                    double chi) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("solve_commutator: H and dH dimensions differ");
  }
  const EigDecomposition eig = hermitian_eig(h);
  require_nondegenerate(eig, chi);

  const std::size_t n = h.dim();
  const CMatrix v = eig.eigenvectors;
  const CMatrix w = v.adjoint() * dh.matrix() * v;  // dH in the eigenbasis

  const double scale = std::max(1.0, dh.matrix().max_abs());
  CMatrix o(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(w(j, j)) > 1e-10 * scale) {
      std::ostringstream msg;
      msg << "solve_commutator: dH has eigenbasis diagonal entry " << std::abs(w(j, j))
          << " at level " << j << "; i[H, O] has zero diagonal there, no solution exists";
      throw std::runtime_error(msg.str());
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const double de = eig.eigenvalues[j] - eig.eigenvalues[k];
      o(j, k) = Cplx{0.0, -1.0} * w(j, k) / de;
    }
  }
  if (diagonal) {
    if (diagonal->size() != n) {
      throw std::invalid_argument("solve_commutator: diagonal size mismatch");
    }
    for (std::size_t j = 0; j < n; ++j) o(j, j) = Cplx{(*diagonal)[j], 0.0};
  }
  // O_jk = -i (dH)_jk / (E_j - E_k) is Hermitian because dH is; verify.
  if (o.max_asymmetry() > 1e-12 * std::max(1.0, o.max_abs())) {
    throw std::runtime_error("solve_commutator: recovered operator failed the Hermiticity check");
  }
  return CommutatorOperator{std::move(o), std::move(eig),
                            diagonal ? DiagonalPolicy::user_supplied : DiagonalPolicy::zero, chi};
}

OperatorCumulants operator_cumulants(const CMatrix& op, const Cvec& psi) {
  if (op.max_asymmetry() > 1e-12 * std::max(1.0, op.max_abs())) {
    throw std::invalid_argument("operator_cumulants: operator is not Hermitian");
  }
  if (std::abs(norm(psi) - 1.0) > 1e-12) {
    throw std::invalid_argument("operator_cumulants: state is not normalized");
  }
  const Cvec v1 = op.apply(psi);
  const Cvec v2 = op.apply(v1);
  const Cvec v3 = op.apply(v2);
  const Cvec v4 = op.apply(v3);
  const double m1 = inner(psi, v1).real();
  const double m2 = inner(psi, v2).real();
  const double m3 = inner(psi, v3).real();
  const double m4 = inner(psi, v4).real();

  OperatorCumulants k;
  k.k1 = m1;
  k.k2 = m2 - m1 * m1;
  k.k3 = m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1;
  k.k4 = m4 - 3.0 * m2 * m2 - 4.0 * m3 * m1 + 12.0 * m1 * m1 * m2 - 6.0 * m1 * m1 * m1 * m1;
  return k;
}

OperatorProvider commutator_provider(const HamiltonianFamily& family) {
  return [family](double chi) {
    const HermitianMatrix h = family.evaluate(chi);
    const HermitianMatrix dh = family_derivative(family, chi);
    return solve_commutator(h, dh, std::nullopt, chi).to_original_basis();
  };
}

OperatorCycleResult cycle_cumulants_operator(const HamiltonianFamily& family,
                                             const ParamGrid& grid,
                                             const OperatorProvider& provider) {
  const int m = grid.size();
  std::vector<double> k1(static_cast<std::size_t>(m)), k2(static_cast<std::size_t>(m)),
      k3(static_cast<std::size_t>(m)), k4(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double chi = grid.point(i);
    const EigDecomposition eig = hermitian_eig(family.evaluate(chi));
    const Cvec psi = eigencolumn(eig, family.band_index);
    const CMatrix op = provider(chi);
    const OperatorCumulants k = operator_cumulants(op, psi);
    const std::size_t idx = static_cast<std::size_t>(i);
    k1[idx] = k.k1;
    k2[idx] = k.k2;
    // The overlap chain is generated by exp(i * dchi * (-O)); odd cumulants
    // of O enter with flipped sign.
    k3[idx] = -k.k3;
    k4[idx] = k.k4;
  }
  const double period = grid.period();
  const double i1 = periodic_trapezoid(std::span<const double>(k1), period);
  const double i2 = periodic_trapezoid(std::span<const double>(k2), period);
  const double i3 = periodic_trapezoid(std::span<const double>(k3), period);
  const double i4 = periodic_trapezoid(std::span<const double>(k4), period);

  OperatorCycleResult out;
  out.kappa1_integral = i1;
  out.cumulants =
      make_cumulant_set(i1, i2, i3, i4, Route::operator_route, grid.size(), grid.spacing());
  return out;
}

double c2_perturbation(const HamiltonianFamily& family, const ParamGrid& grid) {
  const int m = grid.size();
  const int band = family.band_index;
  std::vector<double> samples(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double chi = grid.point(i);
    const EigDecomposition eig = hermitian_eig(family.evaluate(chi));
    require_nondegenerate(eig, chi);
    const CMatrix v = eig.eigenvectors;
    const CMatrix w = v.adjoint() * family_derivative(family, chi).matrix() * v;
    double s = 0.0;
    for (std::size_t j = 0; j < eig.eigenvalues.size(); ++j) {
      if (static_cast<int>(j) == band) continue;
      const double de = eig.eigenvalues[j] - eig.eigenvalues[static_cast<std::size_t>(band)];
      s += std::norm(w(j, static_cast<std::size_t>(band))) / (de * de);
    }
    samples[static_cast<std::size_t>(i)] = s;
  }
  return periodic_trapezoid(std::span<const double>(samples), grid.period());
}

}  // namespace berryc
