#ifndef BALLPROLATE_BALLPOLY_HPP
#define BALLPROLATE_BALLPOLY_HPP

// Ball polynomials r^m P~_k^{(0,beta)}(2r^2 - 1) Y(x^), beta = m + d/2 - 1.

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>

#include "harmonics.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace bpswf {

inline double radial_beta(int m, int d) { return m + 0.5 * d - 1.0; }

struct BallPolyIndex {
  int d = 2;
  int m = 0;
  int k = 0;
  int l = 1;

  int total_degree() const { return m + 2 * k; }
};

/// r^m P~_k(2r^2 - 1) with the orthonormal Jacobi polynomial. Its squared
/// L2(B^d) norm (times a unit harmonic) is 2^{-(beta+2)}.
inline double ball_poly_radial(int k, int m, int d, double r) {
  if (k < 0 || m < 0 || d < 1) throw std::domain_error("ball_poly_radial: bad index");
  const JacobiParams p{0.0, radial_beta(m, d)};
  return std::pow(r, m) * jacobi_p_normalized(k, p, 2.0 * r * r - 1.0);
}

/// Factor that turns ball_poly_radial into a unit-norm radial profile.
inline double ball_poly_unit_scale(int m, int d) { return std::pow(2.0, 0.5 * (radial_beta(m, d) + 2.0)); }

/// Unit-norm ball polynomial at x in B^d (d <= 3).
inline double ball_poly_eval(const BallPolyIndex& idx, std::span<const double> x) {
  if (idx.d < 1 || idx.d > 3) throw std::domain_error("ball_poly_eval: pointwise evaluation needs d <= 3");
  double r2 = 0.0;
  for (int i = 0; i < idx.d; ++i) r2 += x[i] * x[i];
  const double r = std::sqrt(r2);
  std::array<double, 3> u{1.0, 0.0, 0.0};
  if (r > 0.0)
    for (int i = 0; i < idx.d; ++i) u[i] = x[i] / r;
  const double y = sph_basis_eval(idx.d, idx.m, idx.l, std::span<const double>(u.data(), idx.d));
  return ball_poly_unit_scale(idx.m, idx.d) * ball_poly_radial(idx.k, idx.m, idx.d, r) * y;
}

/// (m + 2k)(m + 2k + d).
inline long long ball_poly_operator_eigenvalue(int k, int m, int d) {
  const long long n = m + 2LL * k;
  return n * (n + d);
}

/// Radial factor of the finite Fourier transform of the ball polynomial with
/// radial part ball_poly_radial(k, m, d, .):
///   int_{B^d} exp(-i c <x, tau y^>) r^m P~_k(2r^2-1) Y(x^) dx
///     = (2 pi)^{d/2} (-i)^m (-1)^k J_{2k+m+d/2}(c tau) / ((c tau)^{d/2} sqrt(h_k)) Y(y^).
inline std::complex<double> ball_poly_finite_fourier_radial(int k, int m, int d, double c, double tau) {
  if (!(tau >= 0.0) || !(c > 0.0)) throw std::domain_error("ball_poly_finite_fourier_radial: need c > 0, tau >= 0");
  const double beta = radial_beta(m, d);
  const double w = c * tau;
  const double order = 2.0 * k + m + 0.5 * d;
  // J_order(w) / w^{d/2} = w^{2k+m} S_order(w)
  const double core = std::pow(w, 2 * k + m) * bessel_j_scaled(order, w);
  const double mag = std::pow(2.0 * kPi, 0.5 * d) * (k % 2 ? -1.0 : 1.0) * core /
                     std::sqrt(jacobi_norm_sq(k, JacobiParams{0.0, beta}));
  static constexpr std::complex<double> phases[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return mag * phases[m % 4];
}

/// |int_0^1 y^{a+1} J_a(cxy) P_n^{(0,a)}(2y^2-1) dy - (-1)^n J_{2n+a+1}(cx)/(cx)|.
/// The integral is done in u = y^2 with a Gauss-Jacobi rule carrying u^a.
inline double hankel_jacobi_identity_residual(int n, double a, double c, double x) {
  if (n < 0) throw std::domain_error("hankel_jacobi_identity_residual: n must be >= 0");
  if (!(a > -1.0)) throw std::domain_error("hankel_jacobi_identity_residual: need a > -1");
  const double w = c * x;
  if (!(w > 0.0)) throw std::domain_error("hankel_jacobi_identity_residual: need cx > 0");
  const int nq = std::max(40, n + static_cast<int>(w) + 30);
  const QuadratureRule g = gauss_jacobi(nq, 0.0, a);
  const JacobiParams p{0.0, a};
  // y^{a+1} J_a(w y) dy = (1/2) u^a w^a S_a(w sqrt u) du, u = (1+t)/2
  const double pre = std::pow(w, a) * 0.5 * std::pow(0.5, a + 1.0);
  const double lhs = pre * integrate(g, [&](double t) {
                       const double u = 0.5 * (1.0 + t);
                       return bessel_j_scaled(a, w * std::sqrt(u)) * jacobi_p(n, p, t);
                     });
  const double rhs = (n % 2 ? -1.0 : 1.0) * bessel_j(2.0 * n + a + 1.0, w) / w;
  return std::abs(lhs - rhs);
}

}  // namespace bpswf

#endif  // BALLPROLATE_BALLPOLY_HPP
