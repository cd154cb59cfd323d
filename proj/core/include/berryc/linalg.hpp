#pragma once

#include <complex>
#include <span>
#include <vector>

namespace berryc {

using Cplx = std::complex<double>;
using Cvec = std::vector<Cplx>;

/// Principal argument of a nonzero complex number, in (-pi, pi].
/// The branch convention puts the negative real axis at +pi.
/// Throws std::domain_error for z == 0.
double principal_arg(Cplx z);

/// Reduce an angle to the principal branch (-pi, pi].
double wrap_angle(double a);

/// Equal-weight quadrature for one period of a uniformly sampled periodic
/// integrand: (period / M) * sum(samples). Spectrally accurate for smooth
/// periodic functions. Requires at least two samples.
double periodic_trapezoid(std::span<const double> samples, double period);
Cplx periodic_trapezoid(std::span<const Cplx> samples, double period);

// ---------------------------------------------------------------------------
// Small dense complex vectors / matrices
// ---------------------------------------------------------------------------

/// <a|b> = sum_i conj(a_i) b_i
Cplx inner(const Cvec& a, const Cvec& b);
double norm(const Cvec& v);

/// Dense square complex matrix, row-major. Sized for small spectra
/// (a few levels), not for large-scale linear algebra.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Cplx{0.0, 0.0}) {}

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  CMatrix adjoint() const;
  Cvec apply(const Cvec& v) const;

  double max_abs() const;
  double frobenius_norm() const;
  /// max_{jk} |A_jk - conj(A_kj)|
  double max_asymmetry() const;

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator+(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator-(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator*(Cplx s, const CMatrix& x);

 private:
  std::size_t dim_ = 0;
  std::vector<Cplx> a_;
};

/// A validated self-adjoint matrix. Construction rejects input whose
/// asymmetry max|A_jk - conj(A_kj)| exceeds 1e-12 * max(1, max|A_jk|),
/// reporting the offending magnitude.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix m);

  std::size_t dim() const { return m_.dim(); }
  const Cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

struct EigDecomposition {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // orthonormal columns, column i pairs with eigenvalues[i]
};

/// Full eigendecomposition by cyclic Jacobi sweeps with complex plane
/// rotations. Deterministic for identical input; throws std::runtime_error
/// if the off-diagonal norm has not converged after the sweep cap.
EigDecomposition hermitian_eig(const HermitianMatrix& h);

// ---------------------------------------------------------------------------
// Periodic finite differences
// ---------------------------------------------------------------------------

/// Central stencil for the k-th derivative (k = 1..4) on a uniform grid,
/// fourth-order accurate. weights[radius + j] multiplies f_{i+j}; divide by
/// spacing^k.
struct FdStencil {
  int radius;
  std::vector<double> weights;
};
const FdStencil& periodic_fd_stencil(int derivative_order);

/// k-th derivative of a uniformly sampled periodic sequence (wrap-around
/// indexing). Requires the stencil width (2*radius + 1) to be below a
/// quarter of the sample count.
std::vector<Cplx> periodic_derivative(std::span<const Cplx> samples, int order, double spacing);

}  // namespace berryc
