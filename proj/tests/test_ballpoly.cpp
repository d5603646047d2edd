#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <ballprolate/ballpoly.hpp>

using namespace bpswf;

TEST(BallPoly, RadialDefinition) {
  // k = 0, m = 0: constant 1 / sqrt(h_0)
  EXPECT_NEAR(ball_poly_radial(0, 0, 2, 0.4), 1.0 / std::sqrt(2.0), 1e-15);
  // k = 1, m = 1, d = 2: r P~_1^{(0,1)}(2r^2 - 1), P_1^{(0,1)}(x) = (3x - 1)/2, h_1 = 1
  const double r = 0.5, x = 2 * r * r - 1;
  EXPECT_NEAR(ball_poly_radial(1, 1, 2, r), r * (3 * x - 1) / 2.0, 1e-15);
  EXPECT_THROW(ball_poly_radial(-1, 0, 2, 0.3), std::domain_error);
}

TEST(BallPoly, RadialOrthogonalityWithRScaling) {
  // int_0^1 r^{d-1} R_k R_j dr = delta_kj 2^{-(beta+2)}
  for (int d : {1, 2, 3})
    for (int m = 0; m <= (d == 1 ? 1 : 3); ++m) {
      const double beta = radial_beta(m, d);
      for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 5; ++j) {
          const double s = integrate_panels(
              [&](double r) { return std::pow(r, d - 1) * ball_poly_radial(k, m, d, r) * ball_poly_radial(j, m, d, r); },
              0.0, 1.0, 8, 30);
          EXPECT_NEAR(s, k == j ? std::pow(2.0, -(beta + 2)) : 0.0, 1e-12);
        }
      EXPECT_NEAR(ball_poly_unit_scale(m, d), std::pow(2.0, (beta + 2) / 2), 1e-15);
    }
}

TEST(BallPoly, UnitNormOrthonormalOnBall) {
  for (int d : {2, 3}) {
    const auto cub = ball_cubature(d, 30, 32);
    std::vector<BallPolyIndex> idx;
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; 2 * k + m <= 4; ++k)
        for (int l = 1; l <= harmonic_dim(d, m); ++l) idx.push_back({d, m, k, l});
    for (const auto& a : idx)
      for (const auto& b : idx) {
        const double s = integrate_ball(cub, [&](std::span<const double> x) { return ball_poly_eval(a, x) * ball_poly_eval(b, x); });
        const bool same = a.m == b.m && a.k == b.k && a.l == b.l;
        EXPECT_NEAR(s, same ? 1.0 : 0.0, 1e-10);
      }
  }
}

TEST(BallPoly, OperatorEigenvalue) {
  EXPECT_EQ(ball_poly_operator_eigenvalue(0, 0, 3), 0);
  EXPECT_EQ(ball_poly_operator_eigenvalue(1, 0, 3), 10);
  EXPECT_EQ(ball_poly_operator_eigenvalue(2, 1, 2), 35);
  EXPECT_EQ((BallPolyIndex{3, 2, 3, 1}).total_degree(), 8);
}

// Weak form of -div((I - x x^T) grad) on R(r) Y: radial part
// int_0^1 [(1 - r^2) R_a' R_b' + m(m+d-2) R_a R_b / r^2] r^{d-1} dr.
TEST(BallPoly, GalerkinMatrixOfDegenerateOperatorIsDiagonal) {
  const int d = 2;
  const double h = 1e-5;
  for (int m = 0; m <= 2; ++m) {
    const double unit2 = std::pow(ball_poly_unit_scale(m, d), 2);
    auto R = [&](int k, double r) { return ball_poly_radial(k, m, d, r); };
    auto dR = [&](int k, double r) { return (R(k, r + h) - R(k, r - h)) / (2 * h); };
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const double s = integrate_panels(
            [&](double r) {
              return ((1 - r * r) * dR(a, r) * dR(b, r) + m * (m + d - 2) * R(a, r) * R(b, r) / (r * r)) *
                     std::pow(r, d - 1);
            },
            0.0, 1.0, 10, 30);
        const double want = a == b ? static_cast<double>(ball_poly_operator_eigenvalue(a, m, d)) : 0.0;
        EXPECT_NEAR(unit2 * s, want, 1e-6 * std::max(1.0, want)) << "m=" << m << " a=" << a << " b=" << b;
      }
  }
}

TEST(BallPoly, FiniteFourierAgainstCubature) {
  const int d = 2;
  const double c = 3.0;
  const auto cub = ball_cubature(d, 40, 96);
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= 2; ++k)
      for (double tau : {0.25, 0.8}) {
        const std::array<double, 2> y{tau * 0.6, tau * 0.8};
        double re = 0, im = 0;
        for (std::size_t i = 0; i < cub.radial.size(); ++i)
          for (std::size_t a = 0; a < cub.directions.size(); ++a) {
            const double r = cub.radial.nodes[i];
            const auto& u = cub.directions[a];
            const double v = cub.radial.weights[i] * cub.dir_weights[a] * ball_poly_radial(k, m, d, r) *
                             sph_basis_eval(d, m, 1, std::span<const double>(u.data(), 2));
            const double ph = c * r * (u[0] * y[0] + u[1] * y[1]);
            re += v * std::cos(ph);
            im -= v * std::sin(ph);
          }
        const double yh[] = {0.6, 0.8};
        const std::complex<double> want =
            ball_poly_finite_fourier_radial(k, m, d, c, tau) * sph_basis_eval(d, m, 1, yh);
        EXPECT_NEAR(re, want.real(), 1e-9);
        EXPECT_NEAR(im, want.imag(), 1e-9);
      }
}

TEST(BallPoly, FiniteFourierLowestIndexAndSigns) {
  // k = m = 0, d = 2: 2 pi J_1(w) / w / sqrt(h_0)
  const double c = 2.0, tau = 0.7, w = c * tau;
  EXPECT_NEAR(ball_poly_finite_fourier_radial(0, 0, 2, c, tau).real(),
              2 * kPi * boost::math::cyl_bessel_j(1, w) / w / std::sqrt(2.0), 1e-14);
  // tau = 0 uses the J_nu(x)/x^nu limit
  EXPECT_NEAR(ball_poly_finite_fourier_radial(0, 0, 2, c, 0.0).real(), kPi / std::sqrt(2.0), 1e-14);
  // (-1)^k: small w keeps the Bessel factor positive
  const auto a = ball_poly_finite_fourier_radial(1, 0, 3, 1.0, 0.3);
  const auto b = ball_poly_finite_fourier_radial(2, 0, 3, 1.0, 0.3);
  EXPECT_LT(a.real() * b.real(), 0.0);
  // (-i)^m
  EXPECT_NEAR(ball_poly_finite_fourier_radial(0, 1, 2, 1.0, 0.5).real(), 0.0, 1e-15);
  EXPECT_THROW(ball_poly_finite_fourier_radial(0, 0, 2, 1.0, -0.1), std::domain_error);
}

TEST(BallPoly, HankelJacobiIdentity) {
  for (int n = 0; n <= 10; ++n)
    for (double a : {0.0, 0.5, 2.5, 10.0})
      for (double cx : {0.1, 1.0, 10.0, 50.0}) EXPECT_LT(hankel_jacobi_identity_residual(n, a, cx, 1.0), 1e-10);
  EXPECT_LT(hankel_jacobi_identity_residual(3, 2.5, 10.0, 0.7), 1e-10);
  EXPECT_LT(hankel_jacobi_identity_residual(0, 0.0, 1.0, 1e-6), 1e-15);
  EXPECT_THROW(hankel_jacobi_identity_residual(1, -1.0, 1.0, 1.0), std::domain_error);
}
