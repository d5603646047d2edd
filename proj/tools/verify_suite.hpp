#ifndef BALLPROLATE_TOOLS_VERIFY_SUITE_HPP
#define BALLPROLATE_TOOLS_VERIFY_SUITE_HPP

// Report families behind `ballprolate verify`, also driven by the acceptance
// binary. Each family returns flat BoundReports; `gating` decides which of
// them count towards the exit code.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <ballprolate/ballprolate.hpp>

namespace bpswf::suite {

using Reports = std::vector<BoundReport>;

/// Reports that are computed and printed but never fail a run.
inline bool gating(const BoundReport& r) { return r.name != "theorem_a"; }

inline bool passed(const Reports& rs) {
  for (const auto& r : rs)
    if (gating(r) && !r.pass) return false;
  return true;
}

inline void append(Reports& into, const Reports& more) { into.insert(into.end(), more.begin(), more.end()); }

inline std::vector<int> dims_for_m(int m) {
  std::vector<int> ds;
  for (int d = 1; d <= 3; ++d)
    if (harmonic_dim(d, m) > 0) ds.push_back(d);
  return ds;
}

// c -> 0: chi_k tends to (m+2k)(m+2k+d) and the coefficients to e_k.
inline Reports degeneration(bool quick) {
  Reports out;
  const int kmax = 10, mmax = 3;
  const double c = 1e-8;
  (void)quick;
  for (int m = 0; m <= mmax; ++m)
    for (int d : dims_for_m(m)) {
      const auto ps = solve_prolate_range({d, c, m}, kmax);
      for (const auto& p : ps) {
        const double target = static_cast<double>(ball_poly_operator_eigenvalue(p.k, m, d));
        auto r = make_report("degenerate_chi", std::abs(p.chi - target), 1e-8);
        out.push_back(with_params(r, d, c, m, p.k));
        double dev = 0.0;
        for (std::size_t j = 0; j < p.coeffs.size(); ++j)
          dev = std::max(dev, std::abs(p.coeffs[j] - (static_cast<int>(j) == p.k ? 1.0 : 0.0)));
        auto e = make_report("degenerate_coeffs", dev, 1e-8);
        out.push_back(with_params(e, d, c, m, p.k));
      }
    }
  return out;
}

// chi_k(0) <= chi_k(c) <= chi_k(0) + c^2.
inline Reports sandwich(bool quick) {
  Reports out;
  std::vector<double> cs{1.0, 5.0, 10.0};
  if (!quick) cs.push_back(20.0);
  for (double c : cs)
    for (int m = 0; m <= 3; ++m)
      for (int d : dims_for_m(m)) {
        for (const auto& p : solve_prolate_range({d, c, m}, 10)) {
          const double chi0 = static_cast<double>(ball_poly_operator_eigenvalue(p.k, m, d));
          const double tol = 1e-10 * c * c;
          auto lo = make_report("chi_sandwich_lower", chi0 - tol, p.chi);
          out.push_back(with_params(lo, d, c, m, p.k));
          auto hi = make_report("chi_sandwich_upper", p.chi, chi0 + c * c + tol);
          out.push_back(with_params(hi, d, c, m, p.k));
        }
      }
  return out;
}

// Recurrence-built tridiagonal matrix against the quadrature-assembled weak form.
inline Reports galerkin(bool quick) {
  struct Case {
    int d, m;
  };
  // beta = m + d/2 - 1 in {0, 0.5, 1, 2.5, 5}
  const std::array<Case, 5> cases{{{2, 0}, {3, 0}, {2, 1}, {3, 2}, {2, 5}}};
  const int K = 40;
  std::vector<double> cs{5.0};
  if (!quick) cs = {1.0, 5.0, 10.0};
  Reports out;
  for (double c : cs)
    for (auto [d, m] : cases) {
      const ProblemParams pp{d, c, m};
      const auto op = build_radial_matrix(pp, K);
      const auto q = galerkin_matrix_quadrature(pp, K);
      double worst = 0.0;
      for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
          double a = 0.0;
          if (i == j) a = op.diagonal[i];
          else if (std::abs(i - j) == 1) a = op.off_diagonal[std::min(i, j)];
          worst = std::max(worst, std::abs(a - q[i][j]) / std::max(1.0, std::abs(a)));
        }
      auto r = make_report("galerkin_entries", worst, 1e-11);
      r.note = "beta=" + std::to_string(pp.beta());
      out.push_back(with_params(r, d, c, m, -1));
    }
  return out;
}

// Relative residual of the finite Hankel eigenrelation.
inline Reports commutation(bool quick) {
  Reports out;
  std::vector<double> cs{1.0, 5.0};
  if (!quick) cs.push_back(10.0);
  for (double c : cs)
    for (int m = 0; m <= 2; ++m)
      for (int d : dims_for_m(m))
        for (const auto& p : solve_prolate_range({d, c, m}, 8)) {
          const auto s = hankel_eigenvalue(p);
          auto r = make_report("hankel_commutation", s.commutation_residual, 1e-8);
          out.push_back(with_params(r, d, c, m, p.k));
          auto q = make_report("nu_in_unit_interval", 0.0, s.nu_Q, true);
          q.pass = q.pass && s.nu_Q < 1.0;
          out.push_back(with_params(q, d, c, m, p.k));
        }
  return out;
}

inline Reports trace(bool quick) {
  const std::vector<std::pair<int, double>> grid{{1, 1.0}, {1, 5.0}, {2, 1.0}, {2, 5.0}, {3, 2.0}};
  (void)quick;
  Reports out;
  for (auto [d, c] : grid) out.push_back(trace_check(build_spectrum(d, c, 1e-6)));
  return out;
}

// Hilbert-Schmidt identity and Landau brackets.
inline Reports hs(bool quick) {
  Reports out;
  for (int d : {1, 2})
    for (double c : {1.0, 2.0}) {
      const auto t = build_spectrum(d, c, 1e-6);
      append(out, hs_check(t));
      for (double delta : {0.1, 0.5, 0.9})
        for (auto& r : counting_check(t, delta))
          if (r.name != "counting_leading") out.push_back(r);
    }
  if (!quick) {
    const auto t = build_spectrum(3, 5.0, 1e-6);
    append(out, hs_check(t));
  }
  return out;
}

// M_c(delta) for d = 2, c = 10 against the leading term c^2/4 = 25.
inline Reports counting(bool quick) {
  (void)quick;
  const auto t = build_spectrum(2, 10.0, 1e-6);
  Reports out = counting_check(t, 0.5);
  const auto M = static_cast<double>(count_above(t, 0.5));
  auto lo = make_report("counting_window_lower", 21.0, M);
  auto hi = make_report("counting_window_upper", M, 29.0);
  for (auto* r : {&lo, &hi}) {
    with_params(*r, 2, 10.0, -1, -1);
    r->note = "M=" + std::to_string(static_cast<long long>(M));
    out.push_back(*r);
  }
  return out;
}

inline Reports decay(bool quick) {
  Reports out = decay_bounds_check(1, 0, 1.0, 1, 8);
  if (!quick) append(out, decay_bounds_check(2, 1, 5.0, 4, 12));
  return out;
}

inline Reports supnorm(bool quick) {
  Reports out;
  std::vector<double> cs{1.0, 5.0};
  if (!quick) cs.push_back(10.0);
  for (int d : {2, 3})
    for (int m : {1, 2})
      for (double c : cs) append(out, supnorm_bounds_check(d, m, c, 0, 10));
  return out;
}

inline Reports coeffs(bool quick) {
  Reports out;
  std::vector<double> cs{5.0};
  if (!quick) cs.push_back(10.0);
  for (double c : cs)
    for (int m : {0, 1})
      for (const auto& p : solve_prolate_range({2, c, m}, 2)) {
        const auto s = hankel_eigenvalue(p);
        append(out, coeff_decay_report(p, s));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Identities

namespace detail {

inline std::array<double, 3> random_unit(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  std::array<double, 3> v{};
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    v[i] = N(rng);
    s += v[i] * v[i];
  }
  s = std::sqrt(s);
  for (int i = 0; i < d; ++i) v[i] /= s;
  return v;
}

inline std::span<const double> as_span(const std::array<double, 3>& v, int d) {
  return {v.data(), static_cast<std::size_t>(d)};
}

}  // namespace detail

/// Sphere Fourier factor against direct quadrature over S^{d-1}.
inline Reports identity_fourier_y() {
  Reports out;
  std::mt19937_64 rng(7);
  for (int d : {2, 3}) {
    const BallCubature cub = ball_cubature(d, 1, 96);
    for (int m = 0; m <= 3; ++m)
      for (double w : {0.5, 2.0, 7.0}) {
        const auto y = detail::random_unit(d, rng);
        std::complex<double> acc{};
        for (std::size_t a = 0; a < cub.directions.size(); ++a) {
          const auto& x = cub.directions[a];
          double dot = 0.0;
          for (int i = 0; i < d; ++i) dot += x[i] * y[i];
          acc += cub.dir_weights[a] * std::polar(1.0, -w * dot) * sph_basis_eval(d, m, 1, detail::as_span(x, d));
        }
        const auto want = sphere_fourier_factor(m, d, w) * sph_basis_eval(d, m, 1, detail::as_span(y, d));
        auto r = make_report("fourier_y", std::abs(acc - want), 1e-9);
        out.push_back(with_params(r, d, w, m, -1));
      }
  }
  return out;
}

inline Reports identity_hankel_jacobi() {
  Reports out;
  for (int n = 0; n <= 10; ++n)
    for (double a : {0.0, 0.5, 2.5, 5.0, 10.0})
      for (double cx : {0.5, 5.0, 20.0, 50.0}) {
        auto r = make_report("hankel_jacobi", hankel_jacobi_identity_residual(n, a, cx, 1.0), 1e-10);
        r.note = "alpha=" + std::to_string(a) + ";cx=" + std::to_string(cx);
        out.push_back(with_params(r, -1, cx, -1, n));
      }
  return out;
}

/// |finite Fourier transform of a ball polynomial| by cubature against the closed form.
inline Reports identity_finite_fourier() {
  Reports out;
  const int d = 2;
  const double c = 3.0;
  const BallCubature cub = ball_cubature(d, 48, 96);
  std::mt19937_64 rng(11);
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= 2; ++k)
      for (double tau : {0.3, 0.7, 1.0}) {
        const auto yh = detail::random_unit(d, rng);
        std::array<double, 3> y{tau * yh[0], tau * yh[1], 0.0};
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < cub.radial.size(); ++i) {
          const double r = cub.radial.nodes[i];
          const double rad = ball_poly_radial(k, m, d, r);
          for (std::size_t a = 0; a < cub.directions.size(); ++a) {
            const auto& u = cub.directions[a];
            const double w = cub.radial.weights[i] * cub.dir_weights[a];
            const double v = w * rad * sph_basis_eval(d, m, 1, detail::as_span(u, d));
            const double ph = c * r * (u[0] * y[0] + u[1] * y[1]);
            re += v * std::cos(ph);
            im -= v * std::sin(ph);
          }
        }
        const double want = std::abs(ball_poly_finite_fourier_radial(k, m, d, c, tau)) *
                            std::abs(sph_basis_eval(d, m, 1, detail::as_span(yh, d)));
        auto r = make_report("finite_fourier", std::abs(std::hypot(re, im) - want), 1e-9);
        r.note = "tau=" + std::to_string(tau);
        out.push_back(with_params(r, d, c, m, k));
      }
  return out;
}

inline Reports identity_harmonics() {
  Reports out;
  std::mt19937_64 rng(3);
  // addition formula
  for (int d : {2, 3})
    for (int n = 0; n <= 6; ++n) {
      double worst = 0.0;
      for (int s = 0; s < 20; ++s) {
        const auto x = detail::random_unit(d, rng), y = detail::random_unit(d, rng);
        double sum = 0.0, t = 0.0;
        for (int l = 1; l <= harmonic_dim(d, n); ++l)
          sum += sph_basis_eval(d, n, l, detail::as_span(x, d)) * sph_basis_eval(d, n, l, detail::as_span(y, d));
        for (int i = 0; i < d; ++i) t += x[i] * y[i];
        worst = std::max(worst, std::abs(sum - zonal_kernel(d, n, t)));
      }
      auto r = make_report("addition", worst, 1e-10);
      out.push_back(with_params(r, d, 0.0, n, -1));
    }
  // norm of the zonal Gegenbauer function
  for (int d : {2, 3, 4})
    for (int n = 0; n <= 8; ++n) {
      const double lam = 0.5 * (d - 2);
      const double lhs = zonal_sphere_integral(d, [&](double t) {
        const double g = gegenbauer_c(n, lam, t);
        return g * g;
      });
      const double c1 = gegenbauer_at_one(n, lam);
      const double rhs = sphere_area(d) / static_cast<double>(harmonic_dim(d, n)) * c1 * c1;
      auto r = make_report("zonal_normalization", std::abs(lhs - rhs) / rhs, 1e-10);
      out.push_back(with_params(r, d, 0.0, n, -1));
    }
  // |Y| <= sqrt(N / Omega)
  for (int d : {2, 3})
    for (int m = 0; m <= 6; ++m) {
      const double bound = std::sqrt(static_cast<double>(harmonic_dim(d, m)) / sphere_area(d));
      double big = 0.0;
      std::mt19937_64 pts(100 + d * 10 + m);
      for (int s = 0; s < 1000; ++s) {
        const auto x = detail::random_unit(d, pts);
        for (int l = 1; l <= harmonic_dim(d, m); ++l)
          big = std::max(big, std::abs(sph_basis_eval(d, m, l, detail::as_span(x, d))));
      }
      auto r = make_report("max_y", big, bound);
      out.push_back(with_params(r, d, 0.0, m, -1));
    }
  return out;
}

inline Reports identity_bessel() {
  const std::vector<double> nu{0.5, 1.0, 2.5, 5.0, 10.0, 20.0};
  const std::vector<double> x{0.05, 0.2, 0.5, 0.8, 1.0, 2.0, 5.0, 10.0, 30.0};
  return check_bessel_inequalities(nu, x);
}

inline Reports identities(bool quick) {
  (void)quick;
  Reports out = identity_fourier_y();
  append(out, identity_hankel_jacobi());
  append(out, identity_finite_fourier());
  append(out, identity_harmonics());
  append(out, identity_bessel());
  return out;
}

// ---------------------------------------------------------------------------
// Approximation theorems, Gaussian family sigma = 1

inline BoundReport from_projection(const std::string& name, const ProjectionReport& p, double rhs, bool cond) {
  auto r = make_report(name, p.error, rhs, cond);
  with_params(r, p.d, p.c, p.m, p.N);
  r.note = p.note;
  return r;
}

inline Reports theorem_b(bool quick) {
  Reports out;
  const double c = 5.0;
  const int nmax = quick ? 16 : 24;
  for (int m : {0, 1}) {
    const auto f = make_gaussian_test(2, m, 1, 1.0);
    for (int N = 0; N <= nmax; ++N) {
      const auto p = project_prolate(f, c, N);
      out.push_back(from_projection("theorem_b", p, std::max(p.rhs_sec4, p.rhs_intro), p.condition_met));
    }
  }
  return out;
}

inline Reports theorem_c(bool quick) {
  Reports out;
  const double c = 5.0;
  const int nmax = quick ? 16 : 24;
  for (int m : {0, 1}) {
    const auto f = make_gaussian_test(2, m, 1, 1.0);
    for (int N = 0; N <= nmax; ++N) {
      const auto p = project_ballpoly(f, c, N);
      out.push_back(from_projection("theorem_c", p, p.rhs_sec4, p.condition_met));
      out.push_back(ballpoly_lemma_sum_report(p));
    }
    const int k0 = static_cast<int>(std::ceil(kE * c / 2.0));
    append(out, ineq_ball_check(f, c, k0, k0 + 8));
  }
  return out;
}

// |F psi| / |mu| against |psi| at random points inside the ball.
inline Reports fourier_image(bool quick, unsigned seed) {
  Reports out;
  for (int d : {2, 3})
    for (const auto& p : solve_prolate_range({d, 2.0, 0}, quick ? 1 : 3))
      out.push_back(fourier_image_check(p, 1, 5, seed, 48, d == 2 ? 96 : 48));
  for (const auto& p : solve_prolate_range({2, 2.0, 1}, quick ? 1 : 3))
    out.push_back(fourier_image_check(p, 1, 5, seed, 48, 96));
  return out;
}

struct Family {
  std::string name;
  std::function<Reports(bool)> run;
};

inline std::vector<Family> families(unsigned seed = 1234) {
  return {{"degeneration", degeneration},
          {"sandwich", sandwich},
          {"galerkin", galerkin},
          {"commutation", commutation},
          {"trace", trace},
          {"hs", hs},
          {"counting", counting},
          {"decay", decay},
          {"supnorm", supnorm},
          {"coeffs", coeffs},
          {"identities", identities},
          {"fourier-image", [seed](bool q) { return fourier_image(q, seed); }},
          {"theorem-b", theorem_b},
          {"theorem-c", theorem_c}};
}

}  // namespace bpswf::suite

#endif  // BALLPROLATE_TOOLS_VERIFY_SUITE_HPP
