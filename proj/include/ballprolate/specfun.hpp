#ifndef BALLPROLATE_SPECFUN_HPP
#define BALLPROLATE_SPECFUN_HPP

// Scalar special functions in binary64: Gamma, Bessel J of real order,
// Jacobi and Gegenbauer polynomials, and the catalogue of classical Bessel
// and Gamma inequalities used by the spectral estimates.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "report.hpp"

namespace bpswf {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// Gamma

inline double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  if (x > 171.0) throw std::overflow_error("gamma_fn: overflow, use log_gamma_fn");
  return std::tgamma(x);
}

inline double log_gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma_fn: argument must be positive");
  return boost::math::lgamma(x);
}

// ---------------------------------------------------------------------------
// Bessel J of real order nu > -1 and real argument x >= 0.

/// Value together with an a-posteriori error estimate. `accurate` is false
/// outside the validated range nu <= 300, x <= 1000.
struct BesselEvaluation {
  double nu = 0.0;
  double x = 0.0;
  double value = 0.0;
  double est_abs_error = 0.0;
  bool accurate = true;
};

namespace detail {

// 2^-nu / Gamma(nu + 1), the leading coefficient of J_nu(x) / x^nu.
inline double bessel_scaled_leading(double nu) {
  if (nu + 1.0 < 160.0) return std::pow(2.0, -nu) / std::tgamma(nu + 1.0);
  return std::exp(-nu * std::numbers::ln2 - log_gamma_fn(nu + 1.0));
}

// sum_k (-x^2/4)^k / (k! (nu+1)_k); `abs_sum` receives the sum of moduli.
inline double bessel_series(double nu, double x, double& abs_sum) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  abs_sum = 1.0;
  for (int k = 1; k < 1000; ++k) {
    term *= -q / (k * (nu + k));
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

inline bool use_series(double nu, double x) {
  const double q = 0.25 * x * x;
  return q <= std::max(1.0, 0.5 * (nu + 1.0));
}

inline bool use_asymptotic(double nu, double x) {
  return x >= 100.0 && x >= nu * nu;
}

// Hankel asymptotic expansion; returns false if the series does not settle.
inline bool bessel_asymptotic(double nu, double x, double& value) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0, term = 1.0;
  bool converged = false;
  for (int k = 1; k < 80; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (k % 2 == 1)
      q += ((k / 2) % 2 == 0 ? term : -term);
    else
      p += ((k / 2) % 2 == 0 ? term : -term);
    if (std::abs(term) < 1e-17) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  const double phase = (0.5 * nu + 0.25) * kPi;
  const double cw = std::cos(x) * std::cos(phase) + std::sin(x) * std::sin(phase);
  const double sw = std::sin(x) * std::cos(phase) - std::cos(x) * std::sin(phase);
  value = std::sqrt(2.0 / (kPi * x)) * (p * cw - q * sw);
  return true;
}

// Miller backward recurrence normalised by
//   (x/2)^nu0 = sum_k (nu0 + 2k) Gamma(nu0 + k) / k! J_{nu0 + 2k}(x),
// with nu0 = nu - floor(nu) in [0, 1).
inline double bessel_miller(double nu, double x, double& est_abs_error) {
  const int n = static_cast<int>(std::floor(nu));
  const double nu0 = nu - n;
  const double span = std::max(x, static_cast<double>(std::max(n, 0)));
  const int top = static_cast<int>(span + 16.0 * std::cbrt(span + 1.0) + 40.0);
  const int kmax = top / 2;

  // Gamma(nu0 + k) / k! at k = kmax, walked down as needed.
  double g = std::exp(log_gamma_fn(nu0 + kmax) - log_gamma_fn(kmax + 1.0));
  int g_index = kmax;

  double f_next = 0.0, f = 1e-200, sum = 0.0, target = 0.0, fmax = 0.0;
  for (int j = top; j >= 0; --j) {
    if (j % 2 == 0) {
      const int k = j / 2;
      double w;
      if (k == 0) {
        w = std::tgamma(nu0 + 1.0);
      } else {
        while (g_index > k) {
          g *= g_index / (nu0 + g_index - 1.0);
          --g_index;
        }
        w = (nu0 + 2.0 * k) * g;
      }
      sum += w * f;
    }
    if (j == n) target = f;
    fmax = std::max(fmax, std::abs(f));
    if (j == 0) break;
    const double f_prev = (2.0 * (nu0 + j) / x) * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > 1e200) {
      f *= 1e-200;
      f_next *= 1e-200;
      sum *= 1e-200;
      target *= 1e-200;
      fmax *= 1e-200;
    }
  }
  if (n == -1) target = (2.0 * nu0 / x) * f - f_next;
  const double scale = std::pow(0.5 * x, nu0) / sum;
  const double value = target * scale;
  est_abs_error = 8.0 * kEps * std::sqrt(static_cast<double>(top)) *
                  std::max(std::abs(value), fmax * std::abs(scale));
  return value;
}

}  // namespace detail

inline BesselEvaluation bessel_j_eval(double nu, double x) {
  if (!(nu > -1.0)) throw std::domain_error("bessel_j: order must exceed -1");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j: argument must be non-negative");
  BesselEvaluation out;
  out.nu = nu;
  out.x = x;
  out.accurate = nu <= 300.0 && x <= 1000.0;
  if (x == 0.0) {
    out.value = nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    return out;
  }
  if (detail::use_series(nu, x)) {
    double abs_sum = 0.0;
    const double s = detail::bessel_series(nu, x, abs_sum);
    double lead;
    if (nu + 1.0 < 160.0 && x > 1e-300) {
      lead = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    } else {
      lead = std::exp(nu * std::log(0.5 * x) - log_gamma_fn(nu + 1.0));
    }
    out.value = lead * s;
    out.est_abs_error = 4.0 * kEps * (std::abs(lead) * abs_sum + std::abs(out.value)) *
                        (1.0 + std::abs(nu * std::log(0.5 * x)) * (nu + 1.0 >= 160.0));
    return out;
  }
  if (detail::use_asymptotic(nu, x)) {
    double v = 0.0;
    if (detail::bessel_asymptotic(nu, x, v)) {
      out.value = v;
      out.est_abs_error = 16.0 * kEps * std::sqrt(2.0 / (kPi * x)) * (1.0 + x * kEps * 1e2);
      return out;
    }
  }
  out.value = detail::bessel_miller(nu, x, out.est_abs_error);
  return out;
}

/// J_nu(x) for nu > -1, x >= 0.
inline double bessel_j(double nu, double x) { return bessel_j_eval(nu, x).value; }

/// J_nu(x) / x^nu, continuous at x = 0 with value 1 / (2^nu Gamma(nu + 1)).
inline double bessel_j_scaled(double nu, double x) {
  if (!(nu > -1.0)) throw std::domain_error("bessel_j_scaled: order must exceed -1");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j_scaled: argument must be non-negative");
  if (detail::use_series(nu, x)) {
    double abs_sum = 0.0;
    return detail::bessel_scaled_leading(nu) * detail::bessel_series(nu, x, abs_sum);
  }
  const double j = bessel_j(nu, x);
  if (j == 0.0) return 0.0;
  const double logv = std::log(std::abs(j)) - nu * std::log(x);
  return std::copysign(std::exp(logv), j);
}

/// sqrt(2(2n + alpha + 1)) J_{2n+alpha+1}(c x) / sqrt(c x); orthonormal on (0, inf).
inline double spherical_bessel(int n, double alpha, double c, double x) {
  if (n < 0) throw std::domain_error("spherical_bessel: n must be non-negative");
  if (!(c > 0.0) || !(x > 0.0))
    throw std::domain_error("spherical_bessel: c and x must be positive");
  const double order = 2.0 * n + alpha + 1.0;
  return std::sqrt(2.0 * order) * bessel_j(order, c * x) / std::sqrt(c * x);
}

// ---------------------------------------------------------------------------
// Jacobi polynomials

/// Exponents of the Jacobi weight (1 - x)^alpha (1 + x)^beta.
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const {
    if (!(alpha > -1.0) || !(beta > -1.0))
      throw std::domain_error("JacobiParams: alpha and beta must exceed -1");
  }
};

/// P_n^{(alpha,beta)}(x) by the forward three-term recurrence.
inline double jacobi_p(int n, JacobiParams p, double x) {
  p.validate();
  if (n < 0) throw std::domain_error("jacobi_p: degree must be non-negative");
  const double a = p.alpha, b = p.beta;
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double pn = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double a2 = (s - 1.0) * (a * a - b * b);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = ((a2 + a3 * x) * pn - a4 * pm1) / a1;
    pm1 = pn;
    pn = next;
    if (!std::isfinite(pn) || std::abs(pn) > 1e300)
      throw std::overflow_error("jacobi_p: overflow");
  }
  return pn;
}

/// h_n = int_{-1}^{1} (1-x)^alpha (1+x)^beta P_n(x)^2 dx.
inline double jacobi_norm_sq(int n, JacobiParams p) {
  p.validate();
  const double a = p.alpha, b = p.beta;
  const double ln2 = std::numbers::ln2;
  if (n == 0)
    return std::exp((a + b + 1.0) * ln2 + log_gamma_fn(a + 1.0) + log_gamma_fn(b + 1.0) -
                    log_gamma_fn(a + b + 2.0));
  return std::exp((a + b + 1.0) * ln2 + log_gamma_fn(n + a + 1.0) + log_gamma_fn(n + b + 1.0) -
                  log_gamma_fn(n + 1.0) - log_gamma_fn(n + a + b + 1.0)) /
         (2.0 * n + a + b + 1.0);
}

/// Diagonal entry a_n of the Jacobi matrix for the orthonormal family:
/// x p_n = b_{n+1} p_{n+1} + a_n p_n + b_n p_{n-1}.
inline double jacobi_recurrence_a(int n, JacobiParams p) {
  const double a = p.alpha, b = p.beta;
  if (n == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * n + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

/// Off-diagonal entry b_n (n >= 1) of the orthonormal Jacobi matrix.
inline double jacobi_recurrence_b(int n, JacobiParams p) {
  const double a = p.alpha, b = p.beta;
  if (n < 1) throw std::domain_error("jacobi_recurrence_b: n must be >= 1");
  if (n == 1) return 2.0 / (2.0 + a + b) * std::sqrt((1.0 + a) * (1.0 + b) / (3.0 + a + b));
  const double s = 2.0 * n + a + b;
  return 2.0 / s * std::sqrt(n * (n + a) * (n + b) * (n + a + b) / ((s - 1.0) * (s + 1.0)));
}

/// Orthonormal values P_j / sqrt(h_j) for j = 0..nmax at x.
inline std::vector<double> jacobi_p_normalized_all(int nmax, JacobiParams p, double x) {
  p.validate();
  if (nmax < 0) return {};
  std::vector<double> v(static_cast<std::size_t>(nmax) + 1);
  v[0] = 1.0 / std::sqrt(jacobi_norm_sq(0, p));
  if (nmax >= 1) v[1] = (x - jacobi_recurrence_a(0, p)) * v[0] / jacobi_recurrence_b(1, p);
  for (int j = 1; j < nmax; ++j) {
    v[j + 1] = ((x - jacobi_recurrence_a(j, p)) * v[j] - jacobi_recurrence_b(j, p) * v[j - 1]) /
               jacobi_recurrence_b(j + 1, p);
  }
  return v;
}

/// P_n / sqrt(h_n).
inline double jacobi_p_normalized(int n, JacobiParams p, double x) {
  if (n < 0) throw std::domain_error("jacobi_p_normalized: degree must be non-negative");
  if (n > 5000) throw std::domain_error("jacobi_p_normalized: degree above 5000");
  return jacobi_p_normalized_all(n, p, x)[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Gegenbauer (ultraspherical) polynomials

/// C_n^{(lambda)}(x). For lambda == 0 returns the renormalised limit
/// lim C_n^{(lambda)} / lambda = (2/n) T_n(x) (and 1 for n == 0), so that the
/// ratio C_n(t) / C_n(1) is the Chebyshev polynomial T_n(t).
inline double gegenbauer_c(int n, double lambda, double x) {
  if (n < 0) throw std::domain_error("gegenbauer_c: degree must be non-negative");
  if (lambda < 0.0) throw std::domain_error("gegenbauer_c: lambda must be non-negative");
  if (n == 0) return 1.0;
  if (lambda == 0.0) {
    double tm1 = 1.0, t = x;
    for (int k = 1; k < n; ++k) {
      const double next = 2.0 * x * t - tm1;
      tm1 = t;
      t = next;
    }
    return 2.0 / n * t;
  }
  double cm1 = 1.0, cn = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * x * cn - (k + 2.0 * lambda - 1.0) * cm1) / (k + 1.0);
    cm1 = cn;
    cn = next;
  }
  return cn;
}

/// C_n^{(lambda)}(1) = Gamma(n + 2 lambda) / (Gamma(2 lambda) Gamma(n + 1)).
inline double gegenbauer_at_one(int n, double lambda) {
  if (n == 0) return 1.0;
  if (lambda == 0.0) return 2.0 / n;
  return std::exp(log_gamma_fn(n + 2.0 * lambda) - log_gamma_fn(2.0 * lambda) -
                  log_gamma_fn(n + 1.0));
}

// ---------------------------------------------------------------------------
// Classical inequalities

/// Olenko's constant c_alpha in sup_{x>=0} sqrt(x) |J_alpha(x)| <= c_alpha.
inline double olenko_constant(double alpha) {
  if (std::abs(alpha) <= 0.5) return std::sqrt(2.0 / kPi);
  const double a3 = std::cbrt(alpha);
  return 0.675 * std::sqrt(a3 + 1.9 / a3 + 1.1 / alpha);
}

/// Elbert's lower bound for J_nu(nu).
inline double elbert_lower(double nu) {
  constexpr double kAlpha0 = 0.0943498;
  return std::tgamma(1.0 / 3.0) /
         (std::pow(2.0, 2.0 / 3.0) * std::pow(3.0, 1.0 / 6.0) * kPi * std::cbrt(nu + kAlpha0));
}

namespace detail {
inline std::string fmt_params(double nu, double x) {
  std::ostringstream os;
  os.precision(6);
  os << "nu=" << nu << ",x=" << x;
  return os.str();
}
}  // namespace detail

/// Evaluates the Bessel/Gamma inequality catalogue on a grid.
///
/// x values are Bessel arguments for `bessel_sup` and `estim1`. For the
/// ratio inequalities (`watson_ratio`, `paris_lower/upper`, `lb_lower`) the
/// x values in (0, 1] are the ratio t in J_nu(nu t). `batir_*` uses the x
/// values themselves as the Gamma argument shift.
inline std::vector<BoundReport> check_bessel_inequalities(std::span<const double> nu_grid,
                                                          std::span<const double> x_grid) {
  std::vector<BoundReport> out;
  auto push = [&](std::string name, double lhs, double rhs, double nu, double x) {
    auto r = make_report(std::move(name), lhs, rhs);
    r.note = detail::fmt_params(nu, x);
    out.push_back(std::move(r));
  };
  double xmax = 0.0;
  for (double x : x_grid) xmax = std::max(xmax, x);

  for (double nu : nu_grid) {
    // sup_x sqrt(x)|J_nu(x)| over the grid and a dense sweep through the peak.
    double sup = 0.0;
    for (double x : x_grid)
      if (x > 0.0) sup = std::max(sup, std::sqrt(x) * std::abs(bessel_j(nu, x)));
    const double hi = std::max(xmax, 2.0 * nu + 60.0);
    const int dense = 4000;
    for (int i = 1; i <= dense; ++i) {
      const double x = hi * i / dense;
      sup = std::max(sup, std::sqrt(x) * std::abs(bessel_j(nu, x)));
    }
    push("bessel_sup", sup, olenko_constant(nu), nu, hi);

    for (double x : x_grid) {
      if (x > 0.0)
        push("estim1", std::abs(bessel_j_scaled(nu, x)), detail::bessel_scaled_leading(nu), nu, x);
    }
    if (nu > 0.0) {
      const double jnn = bessel_j(nu, nu);
      push("elbert", elbert_lower(nu), jnn, nu, nu);
      for (double t : x_grid) {
        if (!(t > 0.0 && t <= 1.0)) continue;
        const double ratio = bessel_j(nu, nu * t) / (std::pow(t, nu) * jnn);
        push("watson_ratio_lower", 1.0, ratio, nu, t);
        push("watson_ratio_upper", ratio, std::exp(nu * (1.0 - t)), nu, t);
        const double g = nu * nu * (1.0 - t * t);
        push("paris_lower", std::exp(g / (4.0 * nu + 4.0)), ratio, nu, t);
        push("paris_upper", ratio, std::exp(g / (2.0 * nu + 4.0)), nu, t);
        push("lb_lower", elbert_lower(nu) * std::pow(t, nu) * std::exp(g / (4.0 * nu + 4.0)),
             bessel_j(nu, nu * t), nu, t);
      }
    }
  }
  for (double x : x_grid) {
    if (!(x >= 0.0) || x > 170.0) continue;
    const double base = (x + 0.5) / kE;
    const double pw = std::pow(base, x + 0.5);
    const double g = std::tgamma(x + 1.0);
    push("batir_lower", std::sqrt(2.0 * kE) * pw, g, 0.0, x);
    push("batir_upper", g, std::sqrt(2.0 * kPi) * pw, 0.0, x);
  }
  return out;
}

}  // namespace bpswf

#endif  // BALLPROLATE_SPECFUN_HPP
