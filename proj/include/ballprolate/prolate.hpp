#ifndef BALLPROLATE_PROLATE_HPP
#define BALLPROLATE_PROLATE_HPP

// Ball prolates: radial Sturm-Liouville problem in the orthonormal Jacobi
// basis, evaluation, and the finite Hankel / Fourier eigenvalues.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballpoly.hpp"
#include "harmonics.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "specfun.hpp"
#include "tridiagonal.hpp"

namespace bpswf {

struct ProblemParams {
  int d = 2;
  double c = 1.0;
  int m = 0;

  double beta() const { return radial_beta(m, d); }
  long long gamma_md() const { return static_cast<long long>(m) * (m + d); }

  void validate() const {
    if (d < 1) throw std::domain_error("ProblemParams: d must be >= 1");
    if (m < 0) throw std::domain_error("ProblemParams: m must be >= 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw std::domain_error("ProblemParams: c must be positive");
    if (d == 1 && m > 1) throw std::domain_error("ProblemParams: d = 1 admits only m in {0, 1}");
  }
};

/// Radial operator in matrix scale theta = (chi - m(m+d))/4.
struct TridiagonalOperator {
  int K = 0;
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  ProblemParams params;

  SymTridiagonal matrix() const { return SymTridiagonal{diagonal, off_diagonal}; }
};

/// Multiplication by (1 + eta) in the orthonormal P~^{(0,beta)} basis.
inline SymTridiagonal multiplication_matrix(double beta, int K) {
  const JacobiParams p{0.0, beta};
  SymTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(K));
  t.off.resize(static_cast<std::size_t>(K > 0 ? K - 1 : 0));
  for (int j = 0; j < K; ++j) t.diag[j] = 1.0 + jacobi_recurrence_a(j, p);
  for (int j = 1; j < K; ++j) t.off[j - 1] = jacobi_recurrence_b(j, p);
  return t;
}

inline TridiagonalOperator build_radial_matrix(const ProblemParams& params, int K) {
  params.validate();
  if (K < 4) throw std::domain_error("build_radial_matrix: K must be >= 4");
  const double b = params.beta();
  const double s = params.c * params.c / 8.0;
  const SymTridiagonal mult = multiplication_matrix(b, K);
  TridiagonalOperator op;
  op.K = K;
  op.params = params;
  op.diagonal.resize(static_cast<std::size_t>(K));
  op.off_diagonal.resize(static_cast<std::size_t>(K) - 1);
  for (int j = 0; j < K; ++j) op.diagonal[j] = j * (j + b + 1.0) + s * mult.diag[j];
  for (int j = 0; j + 1 < K; ++j) op.off_diagonal[j] = s * mult.off[j];
  return op;
}

/// Dense Galerkin matrix of the same operator assembled by quadrature from
/// the weak form int (1-eta)(1+eta)^{beta+1} phi_j' phi_k' + (c^2/8) int (1+eta)^{beta+1} phi_j phi_k.
inline std::vector<std::vector<double>> galerkin_matrix_quadrature(const ProblemParams& params, int K) {
  params.validate();
  const double b = params.beta();
  const JacobiParams p{0.0, b};
  const JacobiParams pd{1.0, b + 1.0};
  const QuadratureRule stiff = gauss_jacobi(K + 2, 1.0, b + 1.0);
  const QuadratureRule mass = gauss_jacobi(K + 2, 0.0, b + 1.0);
  std::vector<std::vector<double>> dphi(static_cast<std::size_t>(K)), phi(static_cast<std::size_t>(K));
  for (int j = 0; j < K; ++j) {
    const double hj = std::sqrt(jacobi_norm_sq(j, p));
    for (double x : stiff.nodes)
      dphi[j].push_back(j == 0 ? 0.0 : 0.5 * (j + b + 1.0) * jacobi_p(j - 1, pd, x) / hj);
    for (double x : mass.nodes) phi[j].push_back(jacobi_p(j, p, x) / hj);
  }
  const double s = params.c * params.c / 8.0;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(K), std::vector<double>(static_cast<std::size_t>(K), 0.0));
  for (int j = 0; j < K; ++j)
    for (int k = 0; k < K; ++k) {
      double st = 0.0, ms = 0.0;
      for (std::size_t q = 0; q < stiff.size(); ++q) st += stiff.weights[q] * dphi[j][q] * dphi[k][q];
      for (std::size_t q = 0; q < mass.size(); ++q) ms += mass.weights[q] * phi[j][q] * phi[k][q];
      a[j][k] = st + s * ms;
    }
  return a;
}

struct RadialProlate {
  ProblemParams params;
  int k = 0;
  double chi = 0.0;
  double theta = 0.0;  // (chi - m(m+d)) / 4
  std::vector<double> coeffs;
  int trunc = 0;
  double tail_bound = 0.0;
};

inline constexpr double kTailRel = 1e-13;
inline constexpr int kMaxTrunc = 8192;

inline int default_truncation(const ProblemParams& params, int kmax) {
  return std::max(2 * kmax + 30, static_cast<int>(std::ceil(kE * params.c / 2.0)) + 30);
}

namespace detail {

inline bool tail_ok(const std::vector<double>& v) {
  double big = 0.0;
  for (double x : v) big = std::max(big, std::abs(x));
  return std::abs(v.back()) <= kTailRel * big;
}

inline RadialProlate finish_prolate(const TridiagonalOperator& op, int k, double theta,
                                    std::vector<double> v) {
  std::size_t imax = 0;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (std::abs(v[j]) > std::abs(v[imax])) imax = j;
  if (v[imax] < 0.0)
    for (double& x : v) x = -x;
  RadialProlate p;
  p.params = op.params;
  p.k = k;
  p.theta = theta;
  p.chi = 4.0 * theta + static_cast<double>(op.params.gamma_md());
  p.trunc = op.K;
  const double last = std::abs(v.back());
  const double prev = std::abs(v[v.size() - 2]);
  const double ratio = prev > 0.0 ? last / prev : 0.0;
  p.tail_bound = ratio < 1.0 ? last * ratio / (1.0 - ratio) : last;
  p.coeffs = std::move(v);
  return p;
}

}  // namespace detail

/// k-th radial prolate (0-based) with adaptive truncation.
inline RadialProlate solve_prolate(const ProblemParams& params, int k, int K_opt = 0) {
  params.validate();
  if (k < 0) throw std::domain_error("solve_prolate: k must be >= 0");
  int K = K_opt > 0 ? std::max(K_opt, k + 4) : default_truncation(params, k);
  for (; K <= kMaxTrunc; K *= 2) {
    const TridiagonalOperator op = build_radial_matrix(params, K);
    const SymTridiagonal t = op.matrix();
    const double theta = kth_eigenvalue(t, static_cast<std::size_t>(k));
    std::vector<double> v = twisted_eigenvector(t, theta);
    if (detail::tail_ok(v)) return detail::finish_prolate(op, k, theta, std::move(v));
  }
  throw std::runtime_error("solve_prolate: truncation did not converge");
}

/// Prolates k = 0..kmax sharing one truncation.
inline std::vector<RadialProlate> solve_prolate_range(const ProblemParams& params, int kmax, int K_opt = 0) {
  params.validate();
  if (kmax < 0) return {};
  int K = K_opt > 0 ? std::max(K_opt, kmax + 4) : default_truncation(params, kmax);
  for (; K <= kMaxTrunc; K *= 2) {
    const TridiagonalOperator op = build_radial_matrix(params, K);
    const SymTridiagonal t = op.matrix();
    std::vector<RadialProlate> out;
    bool ok = true;
    for (int k = 0; k <= kmax && ok; ++k) {
      const double theta = kth_eigenvalue(t, static_cast<std::size_t>(k));
      std::vector<double> v = twisted_eigenvector(t, theta);
      ok = detail::tail_ok(v);
      if (ok) out.push_back(detail::finish_prolate(op, k, theta, std::move(v)));
    }
    if (ok) return out;
  }
  throw std::runtime_error("solve_prolate_range: truncation did not converge");
}

// ---------------------------------------------------------------------------
// Evaluation

/// phi(eta) with the unit-norm scaling: int_0^1 r^{2m+d-1} phi(2r^2-1)^2 dr = 1.
inline double prolate_phi(const RadialProlate& p, double eta) {
  const double b = p.params.beta();
  const auto v = jacobi_p_normalized_all(static_cast<int>(p.coeffs.size()) - 1, JacobiParams{0.0, b}, eta);
  double s = 0.0;
  for (std::size_t j = p.coeffs.size(); j-- > 0;) s += p.coeffs[j] * v[j];
  return ball_poly_unit_scale(p.params.m, p.params.d) * s;
}

/// Radial profile r^m phi(2r^2 - 1).
inline double prolate_eval_radial(const RadialProlate& p, double r) {
  if (!(r >= 0.0) || r > 1.0) throw std::domain_error("prolate_eval_radial: r must lie in [0, 1]");
  return std::pow(r, p.params.m) * prolate_phi(p, 2.0 * r * r - 1.0);
}

/// psi(x) = r^m phi(2r^2-1) Y_l(x^), d <= 3.
inline double prolate_eval(const RadialProlate& p, int l, std::span<const double> x) {
  const int d = p.params.d;
  if (d > 3) throw std::domain_error("prolate_eval: pointwise evaluation needs d <= 3");
  double r2 = 0.0;
  for (int i = 0; i < d; ++i) r2 += x[i] * x[i];
  const double r = std::sqrt(r2);
  if (r > 1.0 + 1e-14) throw std::domain_error("prolate_eval: point outside the unit ball");
  std::array<double, 3> u{1.0, 0.0, 0.0};
  if (r > 0.0)
    for (int i = 0; i < d; ++i) u[i] = x[i] / r;
  return prolate_eval_radial(p, std::min(r, 1.0)) *
         sph_basis_eval(d, p.params.m, l, std::span<const double>(u.data(), static_cast<std::size_t>(d)));
}

// ---------------------------------------------------------------------------
// Finite Hankel transform

/// (H phi~)(x) with phi~(y) = y^{beta+1/2} phi(2y^2-1), by quadrature in
/// eta against (1+eta)^beta. `rule` must be Gauss-Jacobi(0, beta).
inline double finite_hankel_apply(const RadialProlate& p, double x, const QuadratureRule& rule) {
  const double b = p.params.beta();
  if (rule.alpha != 0.0 || std::abs(rule.beta - b) > 1e-14)
    throw std::invalid_argument("finite_hankel_apply: rule must be Gauss-Jacobi(0, beta)");
  const double w = p.params.c * x;
  const double pre = std::sqrt(w) * std::pow(w, b) * std::pow(0.5, b + 2.0);
  return pre * integrate(rule, [&](double eta) {
           return bessel_j_scaled(b, w * std::sqrt(0.5 * (1.0 + eta))) * prolate_phi(p, eta);
         });
}

inline int hankel_nodes(const RadialProlate& p) {
  return std::max(200, static_cast<int>(std::ceil(2.0 * p.params.c)) + 4 * p.trunc);
}

/// (H phi~)(r) / r^{beta+1/2} from the termwise transform of the Jacobi
/// expansion; exact up to rounding and continuous at r = 0.
inline double hankel_scaled_exact(const RadialProlate& p, double r) {
  const double b = p.params.beta();
  const double c = p.params.c;
  const JacobiParams jp{0.0, b};
  const double w = c * r;
  double s = 0.0, wpow = 1.0;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const double t = p.coeffs[j] / std::sqrt(jacobi_norm_sq(static_cast<int>(j), jp)) * wpow *
                     bessel_j_scaled(2.0 * j + b + 1.0, w);
    s += (j % 2 ? -t : t);
    wpow *= w * w;
  }
  return ball_poly_unit_scale(p.params.m, p.params.d) * std::pow(c, b + 0.5) * s;
}

struct SpectralEigenvalues {
  double alpha_H = 0.0;         // finite Hankel eigenvalue
  double alpha_rayleigh = 0.0;  // Rayleigh quotient cross-check
  double mu_modulus = 0.0;      // |finite Fourier eigenvalue|
  double nu_Q = 0.0;            // concentration eigenvalue
  double commutation_residual = 0.0;
  bool flagged = false;
};

/// Hankel eigenvalue from the eigenrelation at r = 0 (keeps full relative
/// accuracy for tiny eigenvalues), plus Rayleigh quotient and a 64-point
/// residual of H phi~ = alpha phi~.
inline SpectralEigenvalues hankel_eigenvalue(const RadialProlate& p) {
  const double b = p.params.beta();
  const double c = p.params.c;
  const int d = p.params.d;
  SpectralEigenvalues out;
  out.alpha_H = hankel_scaled_exact(p, 0.0) / prolate_phi(p, -1.0);

  const int nq = std::max(64, p.trunc + static_cast<int>(c) + 20);
  const QuadratureRule g = gauss_jacobi(nq, 0.0, b);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = std::sqrt(0.5 * (1.0 + g.nodes[i]));
    const double ph = prolate_phi(p, g.nodes[i]);
    num += g.weights[i] * hankel_scaled_exact(p, r) * ph;
    den += g.weights[i] * ph * ph;
  }
  out.alpha_rayleigh = num / den;

  double res = 0.0, scale = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double r = 0.5 * (1.0 - std::cos(kPi * (i + 0.5) / 64.0));
    const double wgt = std::pow(r, b + 0.5);
    const double lhs = hankel_scaled_exact(p, r) * wgt;
    const double rhs = out.alpha_H * prolate_phi(p, 2.0 * r * r - 1.0) * wgt;
    res = std::max(res, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(rhs));
  }
  out.commutation_residual = scale > 0.0 ? res / scale : res;
  out.flagged = !(out.commutation_residual <= 1e-6);
  out.nu_Q = c * out.alpha_H * out.alpha_H;
  out.mu_modulus = std::abs(out.alpha_H) * std::sqrt(c) * std::pow(2.0 * kPi / c, 0.5 * d);
  return out;
}

// ---------------------------------------------------------------------------
// Sup norm, coefficient decay, Fourier image

struct SupNorm {
  double radial_max = 0.0;  // max_r |r^m phi(2r^2-1)|
  double argmax_r = 0.0;
  double ball_max = 0.0;  // radial_max * sqrt(N(d,m)/Omega_{d-1})
};

inline SupNorm sup_norm(const RadialProlate& p, int grid_size = 512) {
  if (grid_size < 512) throw std::domain_error("sup_norm: grid_size must be >= 512");
  SupNorm s;
  for (int i = 0; i < grid_size; ++i) {
    const double r = 0.5 * (1.0 - std::cos(kPi * i / (grid_size - 1)));
    const double v = std::abs(prolate_eval_radial(p, r));
    if (v > s.radial_max) {
      s.radial_max = v;
      s.argmax_r = r;
    }
  }
  const auto hs = harmonic_space(p.params.d, p.params.m);
  s.ball_max = s.radial_max * std::sqrt(static_cast<double>(hs.count) / hs.sphere_area);
  return s;
}

/// Per-j decay bound on the ball-polynomial coefficients; evaluated for j >= ec/2.
inline std::vector<BoundReport> coeff_decay_report(const RadialProlate& p, const SpectralEigenvalues& mu) {
  const int d = p.params.d, m = p.params.m;
  const double c = p.params.c;
  std::vector<BoundReport> out;
  for (std::size_t jj = 0; jj < p.coeffs.size(); ++jj) {
    const int j = static_cast<int>(jj);
    const double e = 2.0 * j + m + 0.5 * (d + 1);
    const double n4 = 4.0 * j + 2 * m + d;
    const double logb = 0.5 * d * std::log(2.0 * kPi) + (2.0 * j + m) * std::log(c) -
                        n4 * std::numbers::ln2 - std::log(n4) - std::log(mu.mu_modulus) +
                        e * std::log(kE * c / e);
    auto r = make_report("coeff_decay", std::abs(p.coeffs[jj]), std::exp(logb), j >= kE * c / 2.0);
    with_params(r, d, c, m, p.k);
    r.note = "j=" + std::to_string(j);
    out.push_back(std::move(r));
  }
  return out;
}

/// Checks |int_{B(0,c)} e^{i<x,xi>} psi(-xi/c) dxi| = c^d |mu| |psi(x)| at
/// sample points inside B^d.
inline BoundReport fourier_image_check(const RadialProlate& p, int l = 1, int samples = 5,
                                       unsigned seed = 1234, int n_r = 48, int n_ang = 96) {
  const int d = p.params.d;
  if (d < 2 || d > 3) throw std::domain_error("fourier_image_check: needs d in {2,3}");
  const double c = p.params.c;
  const SpectralEigenvalues sp = hankel_eigenvalue(p);
  const BallCubature cub = ball_cubature(d, n_r, n_ang);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double dev = 0.0, scale = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::array<double, 3> x{};
    double r2;
    do {
      r2 = 0.0;
      for (int i = 0; i < d; ++i) {
        x[i] = U(rng);
        r2 += x[i] * x[i];
      }
    } while (r2 > 0.81);
    const std::span<const double> xs(x.data(), static_cast<std::size_t>(d));
    double re = 0.0, im = 0.0;
    re = integrate_ball(cub, [&](std::span<const double> y) {
      double dot = 0.0;
      for (int i = 0; i < d; ++i) dot += xs[i] * y[i];
      return std::cos(c * dot) * prolate_eval(p, l, y);
    });
    im = integrate_ball(cub, [&](std::span<const double> y) {
      double dot = 0.0;
      for (int i = 0; i < d; ++i) dot += xs[i] * y[i];
      return -std::sin(c * dot) * prolate_eval(p, l, y);
    });
    const double lhs = std::hypot(re, im) / sp.mu_modulus;
    const double psi = std::abs(prolate_eval(p, l, xs));
    dev = std::max(dev, std::abs(lhs - psi));
    scale = std::max(scale, psi);
  }
  auto r = make_report("fourier_image", scale > 0.0 ? dev / scale : dev, 1e-6);
  with_params(r, d, c, p.params.m, p.k);
  std::ostringstream os;
  os.precision(10);
  const double sq = std::sqrt(sp.nu_Q);
  os << "unitary_const=" << 1.0 / (std::pow(c, 0.5 * d) * sq)
     << ";printed_const=" << std::pow(2.0 * kPi, d) / (std::pow(c, d) * sq);
  r.note = os.str();
  return r;
}

}  // namespace bpswf

#endif  // BALLPROLATE_PROLATE_HPP
