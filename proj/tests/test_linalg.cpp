#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "berryc/linalg.hpp"

using namespace berryc;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = Cplx{u(rng), 0.0};
    for (std::size_t c = r + 1; c < n; ++c) {
      a(r, c) = Cplx{u(rng), u(rng)};
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

// Brute-force reconstruction V diag(E) V^dag, the oracle for the eigensolver.
CMatrix reconstruct(const EigDecomposition& eig) {
  const std::size_t n = eig.eigenvalues.size();
  CMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = Cplx{eig.eigenvalues[i], 0.0};
  return eig.eigenvectors * d * eig.eigenvectors.adjoint();
}

}  // namespace

TEST_CASE("principal_arg branch convention") {
  CHECK(principal_arg(Cplx{1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(principal_arg(Cplx{0.0, 1.0}) == doctest::Approx(kPi / 2.0));
  CHECK(principal_arg(Cplx{-1.0, 0.0}) == doctest::Approx(kPi));  // +pi, not -pi
  CHECK(principal_arg(Cplx{-1.0, -0.0}) == doctest::Approx(kPi));
  CHECK_THROWS_AS(principal_arg(Cplx{0.0, 0.0}), std::domain_error);
}

TEST_CASE("principal_arg round trip and conjugation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Cplx z{u(rng), u(rng)};
    if (std::abs(z) < 1e-6) continue;
    const double a = principal_arg(z);
    const Cplx back = std::polar(std::abs(z), a);
    CHECK(std::abs(back - z) <= 1e-14 * std::abs(z));
    if (std::abs(z.imag()) > 1e-12) {  // off the branch cut
      CHECK(principal_arg(std::conj(z)) == doctest::Approx(-a));
    }
  }
}

TEST_CASE("periodic_trapezoid basics") {
  std::vector<double> ones(10, 1.0);
  CHECK(periodic_trapezoid(std::span<const double>(ones), 2.0 * kPi) ==
        doctest::Approx(2.0 * kPi));

  std::vector<double> cosv(16), cos2v(16);
  for (int i = 0; i < 16; ++i) {
    const double x = 2.0 * kPi * i / 16.0;
    cosv[i] = std::cos(x);
    cos2v[i] = std::cos(x) * std::cos(x);
  }
  CHECK(std::abs(periodic_trapezoid(std::span<const double>(cosv), 2.0 * kPi)) <= 1e-14);
  // integral of cos^2 over one period is pi
  CHECK(std::abs(periodic_trapezoid(std::span<const double>(cos2v), 2.0 * kPi) - kPi) <= 1e-13);

  std::vector<double> one(1, 1.0);
  CHECK_THROWS_AS(periodic_trapezoid(std::span<const double>(one), 1.0), std::invalid_argument);
}

TEST_CASE("hermitian_eig diagonal and textbook 2x2") {
  {
    CMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    const EigDecomposition eig = hermitian_eig(HermitianMatrix(m));
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(0, 1)) == doctest::Approx(1.0));
  }
  {
    CMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    const EigDecomposition eig = hermitian_eig(HermitianMatrix(m));
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // up to phase
    Cvec lo{eig.eigenvectors(0, 0), eig.eigenvectors(1, 0)};
    Cvec hi{eig.eigenvectors(0, 1), eig.eigenvectors(1, 1)};
    Cvec ref_lo{Cplx{inv_sqrt2, 0.0}, Cplx{-inv_sqrt2, 0.0}};
    Cvec ref_hi{Cplx{inv_sqrt2, 0.0}, Cplx{inv_sqrt2, 0.0}};
    CHECK(std::abs(inner(ref_lo, lo)) == doctest::Approx(1.0));
    CHECK(std::abs(inner(ref_hi, hi)) == doctest::Approx(1.0));
  }
}

TEST_CASE("hermitian_eig random 4x4 reconstruction") {
  std::mt19937_64 rng(11);
  const CMatrix h = random_hermitian(rng, 4);
  const EigDecomposition eig = hermitian_eig(HermitianMatrix(h));
  const CMatrix back = reconstruct(eig);
  CHECK((back - h).max_abs() <= 1e-10 * std::max(1.0, h.max_abs()));
}

TEST_CASE("hermitian_eig reconstruction sweep d=2..8") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const CMatrix h = random_hermitian(rng, n);
    const EigDecomposition eig = hermitian_eig(HermitianMatrix(h));
    const double scale = std::max(1.0, h.max_abs());
    REQUIRE((reconstruct(eig) - h).max_abs() <= 1e-10 * scale);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      REQUIRE(eig.eigenvalues[i] <= eig.eigenvalues[i + 1]);
    }
    // orthonormal columns
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Cvec vi(n), vj(n);
        for (std::size_t r = 0; r < n; ++r) {
          vi[r] = eig.eigenvectors(r, i);
          vj[r] = eig.eigenvectors(r, j);
        }
        const double expected = (i == j) ? 1.0 : 0.0;
        REQUIRE(std::abs(inner(vi, vj) - Cplx{expected, 0.0}) <= 1e-12);
      }
    }
  }
}

TEST_CASE("hermitian_eig deterministic across calls") {
  std::mt19937_64 rng(31);
  const CMatrix h = random_hermitian(rng, 6);
  const EigDecomposition a = hermitian_eig(HermitianMatrix(h));
  const EigDecomposition b = hermitian_eig(HermitianMatrix(h));
  REQUIRE(std::memcmp(a.eigenvalues.data(), b.eigenvalues.data(),
                      a.eigenvalues.size() * sizeof(double)) == 0);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) REQUIRE(a.eigenvectors(r, c) == b.eigenvectors(r, c));
}

TEST_CASE("HermitianMatrix rejects asymmetric input with a report") {
  CMatrix m(2);
  m(0, 1) = Cplx{1.0, 0.0};
  m(1, 0) = Cplx{0.5, 0.0};
  CHECK_THROWS_WITH_AS(HermitianMatrix{m}, doctest::Contains("not self-adjoint"),
                       std::invalid_argument);
}

TEST_CASE("finite difference stencils hit analytic derivatives of e^{ix}") {
  const int m = 128;
  const double h = 2.0 * kPi / m;
  std::vector<Cplx> f(m);
  for (int i = 0; i < m; ++i) f[i] = std::polar(1.0, h * i);
  for (int order = 1; order <= 4; ++order) {
    const std::vector<Cplx> d = periodic_derivative(f, order, h);
    const Cplx expect_factor = std::pow(Cplx{0.0, 1.0}, order);
    for (int i = 0; i < m; ++i) {
      CHECK(std::abs(d[i] - expect_factor * f[i]) <= 1e-6);
    }
  }
}

TEST_CASE("periodic_derivative refuses too-narrow grids") {
  std::vector<Cplx> f(16, Cplx{1.0, 0.0});
  CHECK_THROWS_AS(periodic_derivative(f, 3, 0.1), std::invalid_argument);
}
