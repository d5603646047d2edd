#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <ballprolate/tridiagonal.hpp>

using namespace bpswf;

namespace {
// Free Dirichlet Laplacian: 2 on the diagonal, -1 off; eigenvalues 2 - 2 cos(j pi / (n+1)).
SymTridiagonal laplacian(int n) {
  SymTridiagonal t;
  t.diag.assign(n, 2.0);
  t.off.assign(n - 1, -1.0);
  return t;
}
double lap_eig(int n, int j) { return 2.0 - 2.0 * std::cos((j + 1) * M_PI / (n + 1)); }
}  // namespace

TEST(Tridiagonal, SturmCountAndBisection) {
  const auto t = laplacian(30);
  EXPECT_EQ(sturm_count(t, 0.0), 0u);
  EXPECT_EQ(sturm_count(t, 4.0), 30u);
  for (int j : {0, 7, 29}) EXPECT_NEAR(kth_eigenvalue(t, j), lap_eig(30, j), 1e-14);
  EXPECT_THROW(kth_eigenvalue(t, 30), std::out_of_range);
}

TEST(Tridiagonal, QlMatchesClosedForm) {
  const auto t = laplacian(50);
  const auto ev = ql_eigenvalues(t);
  ASSERT_EQ(ev.size(), 50u);
  for (int j = 0; j < 50; ++j) EXPECT_NEAR(ev[j], lap_eig(50, j), 1e-13);
}

TEST(Tridiagonal, TwistedEigenvectorResidual) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-1, 1);
  SymTridiagonal t;
  for (int i = 0; i < 40; ++i) t.diag.push_back(i * i + U(rng));
  for (int i = 0; i < 39; ++i) t.off.push_back(3.0 * U(rng));
  for (std::size_t k : {0u, 5u, 39u}) {
    const double lam = kth_eigenvalue(t, k);
    const auto v = twisted_eigenvector(t, lam);
    double nrm = 0.0, res = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      nrm += v[i] * v[i];
      double r = t.diag[i] * v[i] - lam * v[i];
      if (i > 0) r += t.off[i - 1] * v[i - 1];
      if (i + 1 < v.size()) r += t.off[i] * v[i + 1];
      res = std::max(res, std::abs(r));
    }
    EXPECT_NEAR(nrm, 1.0, 1e-13);
    EXPECT_LT(res, 1e-11 * std::max(1.0, std::abs(lam)));
  }
}

TEST(Tridiagonal, Validation) {
  SymTridiagonal bad;
  bad.diag = {1.0, 2.0};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  SymTridiagonal empty;
  EXPECT_THROW(empty.validate(), std::invalid_argument);
}
