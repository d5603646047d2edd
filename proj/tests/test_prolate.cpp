#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include <ballprolate/prolate.hpp>

using namespace bpswf;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST(Prolate, ParamsValidation) {
  EXPECT_THROW((ProblemParams{0, 1.0, 0}.validate()), std::domain_error);
  EXPECT_THROW((ProblemParams{2, 0.0, 0}.validate()), std::domain_error);
  EXPECT_THROW((ProblemParams{2, -1.0, 0}.validate()), std::domain_error);
  EXPECT_THROW((ProblemParams{1, 1.0, 2}.validate()), std::domain_error);
  EXPECT_THROW((ProblemParams{2, 1.0, -1}.validate()), std::domain_error);
  EXPECT_THROW(solve_prolate({2, 1.0, 0}, -1), std::domain_error);
  EXPECT_THROW(build_radial_matrix({2, 1.0, 0}, 3), std::domain_error);
}

TEST(Prolate, DegeneratesToBallPolynomials) {
  for (int d : {1, 2, 3})
    for (int m = 0; m <= (d == 1 ? 1 : 3); ++m)
      for (const auto& p : solve_prolate_range({d, 1e-8, m}, 6)) {
        EXPECT_NEAR(p.chi, static_cast<double>(ball_poly_operator_eigenvalue(p.k, m, d)), 1e-8);
        EXPECT_NEAR(p.coeffs[p.k], 1.0, 1e-12);
      }
}

// d = 1 reduces to the classical prolates: even ones for m = 0, odd ones
// for m = 1. Frozen from scipy.special.pro_cv(0, n, c).
TEST(Prolate, OneDimensionalCharacteristicValues) {
  const double c1[] = {0.31900005514689334, 2.5930845799771327, 6.5334718005238237,
                       12.514462145094022,  20.508274362570884, 30.505404625322107};
  const double c5[] = {4.195128872616368,  12.911703245043881, 20.176914720533237,
                       26.587359607397389, 33.897096094467649, 43.358995921228143};
  for (int n = 0; n < 6; ++n) {
    const int m = n % 2, k = n / 2;
    EXPECT_NEAR(solve_prolate({1, 1.0, m}, k).chi, c1[n], 1e-11 * c1[n]) << n;
    EXPECT_NEAR(solve_prolate({1, 5.0, m}, k).chi, c5[n], 1e-11 * c5[n]) << n;
  }
}

// Concentration eigenvalues frozen from an independent Nystrom discretisation
// of the time-frequency limiting operator (mpmath, 200 nodes).
TEST(Prolate, ConcentrationEigenvaluesAgainstNystrom) {
  struct Case {
    int d, m;
    double c;
    std::vector<double> nu;
  };
  const std::vector<Case> cases{
      {1, 0, 1.0, {5.725817806378959e-01, 1.237479328465968e-03, 3.717928558065321e-08}},
      {1, 1, 1.0, {6.279127414980322e-02, 9.200977049568726e-06}},
      {2, 0, 1.0, {2.211148636497347e-01, 1.082981406031837e-04}},
      {2, 1, 5.0, {9.367169112780820e-01, 1.681880585435126e-01, 1.030531392481598e-03, 1.119066148517013e-06}},
      {3, 0, 2.0, {3.556406254848880e-01, 1.152232766996302e-03, 1.935852202049300e-07}},
      {2, 0, 5.0, {9.953423269079502e-01, 5.787705600126599e-01, 1.601798263895865e-02, 3.542233067883050e-05}},
  };
  for (const auto& cs : cases) {
    const auto ps = solve_prolate_range({cs.d, cs.c, cs.m}, static_cast<int>(cs.nu.size()) - 1);
    for (std::size_t k = 0; k < cs.nu.size(); ++k) {
      const auto s = hankel_eigenvalue(ps[k]);
      const double tol = cs.nu[k] > 1e-6 ? 1e-8 : 1e-5;
      EXPECT_NEAR(s.nu_Q, cs.nu[k], tol * cs.nu[k]) << "d=" << cs.d << " m=" << cs.m << " k=" << k;
      EXPECT_NEAR(s.alpha_rayleigh, s.alpha_H, 1e-9 * std::abs(s.alpha_H) + 1e-15);
      EXPECT_FALSE(s.flagged);
    }
  }
}

TEST(Prolate, ChiSandwich) {
  for (double c : {1.0, 5.0, 10.0})
    for (int d : {1, 2, 3})
      for (int m = 0; m <= (d == 1 ? 1 : 2); ++m)
        for (const auto& p : solve_prolate_range({d, c, m}, 8)) {
          const double chi0 = static_cast<double>(ball_poly_operator_eigenvalue(p.k, m, d));
          EXPECT_GE(p.chi, chi0 - 1e-10 * c * c);
          EXPECT_LE(p.chi, chi0 + c * c + 1e-10 * c * c);
        }
}

TEST(Prolate, TridiagonalMatchesWeakForm) {
  for (auto [d, m] : {std::pair{2, 0}, {3, 0}, {2, 1}, {3, 2}, {1, 1}})
    for (double c : {1.0, 7.0}) {
      const ProblemParams pp{d, c, m};
      const int K = 30;
      const auto op = build_radial_matrix(pp, K);
      const auto q = galerkin_matrix_quadrature(pp, K);
      for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
          const double a = i == j ? op.diagonal[i] : std::abs(i - j) == 1 ? op.off_diagonal[std::min(i, j)] : 0.0;
          EXPECT_NEAR(q[i][j], a, 1e-11 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST(Prolate, CoefficientsOrthonormalAndSigned) {
  const auto ps = solve_prolate_range({3, 6.0, 1}, 7);
  for (const auto& p : ps) {
    EXPECT_EQ(p.coeffs.size(), static_cast<std::size_t>(p.trunc));
    EXPECT_LE(p.tail_bound, 1e-12);
    // largest coefficient is positive
    std::size_t imax = 0;
    for (std::size_t j = 1; j < p.coeffs.size(); ++j)
      if (std::abs(p.coeffs[j]) > std::abs(p.coeffs[imax])) imax = j;
    EXPECT_GT(p.coeffs[imax], 0.0);
  }
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b)
      EXPECT_NEAR(dot(ps[a].coeffs, ps[b].coeffs), a == b ? 1.0 : 0.0, 1e-12);
}

TEST(Prolate, RangeAgreesWithSingleSolve) {
  const auto ps = solve_prolate_range({2, 4.0, 2}, 5);
  for (int k = 0; k <= 5; ++k) {
    const auto p = solve_prolate({2, 4.0, 2}, k);
    EXPECT_NEAR(p.chi, ps[k].chi, 1e-11 * p.chi);
    EXPECT_NEAR(std::abs(dot(p.coeffs, ps[k].coeffs)), 1.0, 1e-12);
  }
}

TEST(Prolate, RadialProfileHasUnitNorm) {
  for (int d : {1, 2, 3})
    for (int m = 0; m <= (d == 1 ? 1 : 2); ++m)
      for (int k : {0, 3}) {
        const auto p = solve_prolate({d, 3.0, m}, k);
        const double s = integrate_panels(
            [&](double r) { return std::pow(r, d - 1) * std::pow(prolate_eval_radial(p, r), 2); }, 0.0, 1.0, 8, 30);
        EXPECT_NEAR(s, 1.0, 1e-12) << d << ' ' << m << ' ' << k;
      }
  const auto p = solve_prolate({2, 1.0, 0}, 0);
  EXPECT_THROW(prolate_eval_radial(p, 1.5), std::domain_error);
  const double out[] = {0.9, 0.9};
  EXPECT_THROW(prolate_eval(p, 1, out), std::domain_error);
}

// The radial profile solves the ODE
// (1 - r^2) u'' + ((d-1)/r - (d+1) r) u' - (m(m+d-2)/r^2 + c^2 r^2) u = -chi u.
TEST(Prolate, RadialProfileSolvesTheOde) {
  for (auto [d, m] : {std::pair{2, 0}, {2, 2}, {3, 1}}) {
    const double c = 4.0;
    const auto p = solve_prolate({d, c, m}, 2);
    auto u = [&](double r) { return prolate_eval_radial(p, r); };
    const double h = 1e-4;
    for (double r : {0.2, 0.5, 0.8}) {
      const double u0 = u(r), up = (u(r + h) - u(r - h)) / (2 * h), upp = (u(r + h) - 2 * u0 + u(r - h)) / (h * h);
      const double lhs = (1 - r * r) * upp + ((d - 1) / r - (d + 1) * r) * up -
                         (m * (m + d - 2) / (r * r) + c * c * r * r) * u0;
      EXPECT_NEAR(lhs, -p.chi * u0, 2e-5 * p.chi) << d << ' ' << m << ' ' << r;
    }
  }
}

TEST(Prolate, MonotoneInIndexAndBandwidth) {
  for (int d : {1, 2, 3}) {
    const auto ps = solve_prolate_range({d, 4.0, 0}, 8);
    for (std::size_t k = 1; k < ps.size(); ++k) {
      EXPECT_GT(ps[k].chi, ps[k - 1].chi);
      EXPECT_LT(hankel_eigenvalue(ps[k]).nu_Q, hankel_eigenvalue(ps[k - 1]).nu_Q);
    }
    for (int k = 0; k < 4; ++k)
      EXPECT_LT(solve_prolate({d, 2.0, 1 % (d + 1)}, k).chi, solve_prolate({d, 3.0, 1 % (d + 1)}, k).chi);
  }
}

TEST(Prolate, EigenvaluesInUnitIntervalAndCommute) {
  for (double c : {0.5, 5.0, 12.0})
    for (const auto& p : solve_prolate_range({3, c, 1}, 6)) {
      const auto s = hankel_eigenvalue(p);
      EXPECT_GT(s.nu_Q, 0.0);
      EXPECT_LT(s.nu_Q, 1.0);
      EXPECT_LE(s.commutation_residual, 1e-8);
      // |mu| = sqrt(nu) (2 pi / c)^{d/2}
      EXPECT_NEAR(s.mu_modulus, std::sqrt(s.nu_Q) * std::pow(2 * kPi / c, 1.5), 1e-12 * s.mu_modulus);
    }
}

TEST(Prolate, SupNormAndCoefficientDecay) {
  const auto p = solve_prolate({2, 5.0, 1}, 2);
  const auto sn = sup_norm(p);
  EXPECT_GT(sn.radial_max, 0.0);
  EXPECT_NEAR(sn.radial_max, std::abs(prolate_eval_radial(p, sn.argmax_r)), 0.0);
  EXPECT_NEAR(sn.ball_max, sn.radial_max / std::sqrt(kPi), 1e-14);
  EXPECT_THROW(sup_norm(p, 100), std::domain_error);
  for (const auto& r : coeff_decay_report(p, hankel_eigenvalue(p)))
    if (r.condition_met) EXPECT_TRUE(r.pass) << r.note;
}

TEST(Prolate, FourierImage) {
  for (auto [d, m] : {std::pair{2, 0}, {2, 1}, {3, 0}}) {
    const auto r = fourier_image_check(solve_prolate({d, 2.0, m}, 1), 1, 3, 7, 48, d == 2 ? 96 : 48);
    EXPECT_TRUE(r.pass) << r.lhs << " vs " << r.rhs;
  }
  EXPECT_THROW(fourier_image_check(solve_prolate({1, 2.0, 0}, 0)), std::domain_error);
}
