#pragma once

#include <functional>
#include <optional>

#include "berryc/bargmann.hpp"

namespace berryc {

enum class DiagonalPolicy { zero, user_supplied };

/// The Hermitian solution O of dH/dchi = i [H, O], expressed in the energy
/// eigenbasis of H at the source parameter value. The commutator determines
/// only the off-diagonal part; the eigenbasis diagonal follows the policy.
struct CommutatorOperator {
  CMatrix matrix;         // in the eigenbasis of H
  EigDecomposition basis; // the eigenbasis used
  DiagonalPolicy policy = DiagonalPolicy::zero;
  double chi = 0.0;

  /// V * O * V^dag, the operator back in the original basis.
  CMatrix to_original_basis() const;
};

/// Solve dH = i [H, O] for O given H and dH at one parameter value.
/// Requires a non-degenerate spectrum (all level gaps above the gap floor)
/// and a dH whose eigenbasis diagonal vanishes (otherwise no solution
/// exists: i[H, .] has zero diagonal there).
CommutatorOperator solve_commutator(const HermitianMatrix& h, const HermitianMatrix& dh,
                                    const std::optional<std::vector<double>>& diagonal = std::nullopt,
                                    double chi = 0.0);

struct OperatorCumulants {
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
  double k4 = 0.0;
};

/// First four cumulants of a Hermitian operator in a normalized state, from
/// the moments m_n = <psi|O^n|psi> (repeated matrix application):
///   k1 = m1, k2 = m2 - m1^2, k3 = m3 - 3 m2 m1 + 2 m1^3,
///   k4 = m4 - 3 m2^2 - 4 m3 m1 + 12 m1^2 m2 - 6 m1^4.
OperatorCumulants operator_cumulants(const CMatrix& op, const Cvec& psi);

/// Yields the Hermitian operator (original basis) at a parameter value.
using OperatorProvider = std::function<CMatrix(double)>;

/// Provider backed by solve_commutator with the zero-diagonal policy.
OperatorProvider commutator_provider(const HamiltonianFamily& family);

struct OperatorCycleResult {
  /// Per-cycle cumulants of the operator route. The overlap chain of a
  /// conjugation-generated family is the characteristic function of the
  /// *negative* of the commutator solution, so odd operator cumulants enter
  /// the cycle cumulants with flipped sign; C2 and C4 are unaffected.
  /// The c1 slot holds kappa1_integral, which is the shifted first cumulant,
  /// not the Berry phase.
  CumulantSet cumulants;
  /// Integral over the cycle of <psi0|O|psi0> as supplied (no sign flip).
  double kappa1_integral = 0.0;
};

OperatorCycleResult cycle_cumulants_operator(const HamiltonianFamily& family,
                                             const ParamGrid& grid,
                                             const OperatorProvider& provider);

/// C2 via the perturbation-theory sum
///   C2 = integral dchi sum_{j != b} |<psi_j| dH |psi_b>|^2 / (E_j - E_b)^2.
double c2_perturbation(const HamiltonianFamily& family, const ParamGrid& grid);

}  // namespace berryc
