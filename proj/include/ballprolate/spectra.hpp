#ifndef BALLPROLATE_SPECTRA_HPP
#define BALLPROLATE_SPECTRA_HPP

// Spectrum tables of the concentration operator and the checks run on them:
// trace, Hilbert-Schmidt norm, eigenvalue counting, decay, sup norms.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "harmonics.hpp"
#include "prolate.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "specfun.hpp"

namespace bpswf {

/// Concentration eigenvalue only, via the r = 0 eigenrelation. Cheap.
inline double concentration_eigenvalue(const RadialProlate& p) {
  const double a = hankel_scaled_exact(p, 0.0) / prolate_phi(p, -1.0);
  return p.params.c * a * a;
}

struct SpectrumEntry {
  int m = 0;
  int k = 0;
  long long mult = 1;
  double chi = 0.0;
  double nu = 0.0;
};

struct SpectrumTable {
  int d = 1;
  double c = 1.0;
  double tail_tol = 1e-6;
  double dropped_estimate = 0.0;
  std::vector<SpectrumEntry> entries;
};

/// Enumerates (m, k) channel by channel until the neglected part of the
/// trace is far below tail_tol. Entries sorted by chi, ties by (m, k).
inline SpectrumTable build_spectrum(int d, double c, double tail_tol = 1e-6) {
  if (d < 1 || d > 3) throw std::domain_error("build_spectrum: d must be in {1,2,3}");
  if (!(c > 0.0) || c > 20.0) throw std::domain_error("build_spectrum: c must be in (0, 20]");
  if (!(tail_tol > 0.0)) throw std::domain_error("build_spectrum: tail_tol must be positive");
  SpectrumTable t;
  t.d = d;
  t.c = c;
  t.tail_tol = tail_tol;
  const double stop = 1e-4 * tail_tol;
  for (int m = 0;; ++m) {
    if (m > 400) throw std::runtime_error("build_spectrum: channel enumeration did not terminate");
    const long long mult = harmonic_dim(d, m);
    if (mult == 0) break;
    const ProblemParams pp{d, c, m};
    double last = 0.0;
    int k = 0;
    for (;; ++k) {
      if (k > 400) throw std::runtime_error("build_spectrum: radial enumeration did not terminate");
      const RadialProlate p = solve_prolate(pp, k);
      const double nu = concentration_eigenvalue(p);
      t.entries.push_back({m, k, mult, p.chi, nu});
      last = nu;
      if (mult * nu < stop) break;
    }
    // super-exponential decay: the rest of the channel is below its last term
    t.dropped_estimate += mult * last;
    if (k == 0) {
      t.dropped_estimate += mult * last;  // later channels, same argument
      break;
    }
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return std::tie(a.chi, a.m, a.k) < std::tie(b.chi, b.m, b.k);
  });
  return t;
}

inline double trace_exact(int d, double c) {
  const double g = gamma_fn(0.5 * d + 1.0);
  return std::pow(c, d) / (std::pow(2.0, d) * g * g);
}

inline double table_trace(const SpectrumTable& t) {
  double s = 0.0;
  for (const auto& e : t.entries) s += e.mult * e.nu;
  return s;
}

inline double table_hs(const SpectrumTable& t) {
  double s = 0.0;
  for (const auto& e : t.entries) s += e.mult * e.nu * e.nu;
  return s;
}

namespace detail {
inline std::string kv(const std::string& k, double v) {
  std::ostringstream os;
  os.precision(12);
  os << k << '=' << v;
  return os.str();
}
}  // namespace detail

inline BoundReport trace_check(const SpectrumTable& t) {
  const double s = table_trace(t);
  const double target = trace_exact(t.d, t.c);
  auto r = make_report("trace", std::abs(s - target), t.tail_tol + 1e-8);
  with_params(r, t.d, t.c, -1, -1);
  r.note = detail::kv("sum", s) + ";" + detail::kv("exact", target);
  return r;
}

/// ||Q_c||_HS^2 as the kernel double integral over B^d x B^d, reduced to the
/// distribution of |x - y|.
inline double hs_double_integral(int d, double c, int order = 40, int panels = 16) {
  const double pre = std::pow(c * c / (2.0 * kPi), d);
  auto k2 = [&](double s) {
    const double v = bessel_j_scaled(0.5 * d, c * s);
    return v * v;
  };
  double v = 0.0;
  if (d == 1) {
    v = integrate_panels([&](double s) { return k2(s) * 2.0 * (2.0 - s); }, 0.0, 2.0, panels, order);
  } else if (d == 2) {
    // s = 2 cos(th): lens area 2 th - sin(2 th), ds = 2 sin(th) dth
    v = integrate_panels(
        [&](double th) {
          const double s = 2.0 * std::cos(th);
          return k2(s) * 2.0 * kPi * s * (2.0 * th - std::sin(2.0 * th)) * 2.0 * std::sin(th);
        },
        0.0, 0.5 * kPi, panels, order);
  } else if (d == 3) {
    v = integrate_panels(
        [&](double s) {
          return k2(s) * 4.0 * kPi * s * s * (kPi / 12.0) * (4.0 + s) * (2.0 - s) * (2.0 - s);
        },
        0.0, 2.0, panels, order);
  } else {
    throw std::domain_error("hs_double_integral: d must be in {1,2,3}");
  }
  return pre * v;
}

/// Exact identity sum mult nu^2 = double integral, the bound sum nu^2 <= trace,
/// and the 1% agreement with the leading asymptote for c >= 5.
inline std::vector<BoundReport> hs_check(const SpectrumTable& t) {
  const double hs = table_hs(t);
  const double integral = hs_double_integral(t.d, t.c);
  const double lead = trace_exact(t.d, t.c);
  std::vector<BoundReport> out;
  auto a = make_report("hs_identity", std::abs(hs - integral), 1e-6);
  a.note = detail::kv("sum_nu2", hs) + ";" + detail::kv("integral", integral);
  out.push_back(a);
  auto b = make_report("hs_below_trace", hs, table_trace(t));
  out.push_back(b);
  auto c = make_report("hs_asymptote_agreement", std::abs(hs - integral) / integral, 0.01, t.c >= 5.0);
  c.note = detail::kv("ratio_to_leading", hs / lead);
  out.push_back(c);
  for (auto& r : out) with_params(r, t.d, t.c, -1, -1);
  return out;
}

/// M_c(delta) with multiplicity.
inline long long count_above(const SpectrumTable& t, double delta) {
  long long n = 0;
  for (const auto& e : t.entries)
    if (e.nu >= delta) n += e.mult;
  return n;
}

inline std::vector<BoundReport> counting_check(const SpectrumTable& t, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("counting_check: delta must be in (0,1)");
  const double M = static_cast<double>(count_above(t, delta));
  const double tr = table_trace(t);
  const double hs = table_hs(t);
  const double lead = trace_exact(t.d, t.c);
  std::vector<BoundReport> out;
  auto inf = make_report("landau_inf", delta * M, tr);
  out.push_back(inf);
  auto sup = make_report("landau_sup", tr - (tr - hs) / (1.0 - delta), M);
  out.push_back(sup);
  const double band = std::max(4.0, 0.15 * std::pow(t.c, t.d - 1));
  auto lo = make_report("counting_leading", std::abs(M - lead), band);
  lo.note = detail::kv("M", M) + ";" + detail::kv("leading", lead);
  out.push_back(lo);
  for (auto& r : out) {
    with_params(r, t.d, t.c, -1, -1);
    if (r.note.empty()) r.note = detail::kv("delta", delta);
    else r.note += ";" + detail::kv("delta", delta);
  }
  return out;
}

/// Lower bound C (ec/N)^N with N = 4n+2m+d, per n, and the slope of
/// log nu_n against N log(N/(ec)) over the last four n.
inline std::vector<BoundReport> decay_bounds_check(int d, int m, double c, int n_lo, int n_hi) {
  if (n_hi < n_lo) throw std::domain_error("decay_bounds_check: empty range");
  const ProblemParams pp{d, c, m};
  const double alpha = pp.beta();
  constexpr double kAlpha0 = 0.0943498;
  std::vector<BoundReport> out;
  std::vector<double> xs, ys;
  for (int n = n_lo; n <= n_hi; ++n) {
    const RadialProlate p = solve_prolate(pp, n);
    const double nu = concentration_eigenvalue(p);
    const double N = 4.0 * n + 2.0 * m + d;
    const double g = std::tgamma(1.0 / 3.0) /
                     (std::pow(2.0, 2.0 / 3.0) * std::pow(3.0, 1.0 / 6.0) * kPi *
                      std::cbrt(2.0 * n + alpha + kAlpha0 + 1.0));
    const double C = g * g * std::pow(2.0 * kPi, 0.5 * d) / std::pow(c, 0.5 * (d + 1));
    const double lower = C * std::exp(N * std::log(kE * c / N));
    auto r = make_report("decay_lower", lower, nu, n >= kE * c / 4.0);
    with_params(r, d, c, m, n);
    out.push_back(r);
    xs.push_back(N * std::log(N / (kE * c)));
    ys.push_back(std::log(nu));
  }
  if (xs.size() >= 2) {
    const std::size_t from = xs.size() >= 4 ? xs.size() - 4 : 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size() - from);
    for (std::size_t i = from; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    auto hi = make_report("decay_slope_upper", slope, -0.9);
    auto lo = make_report("decay_slope_lower", -1.1, slope);
    for (auto* r : {&hi, &lo}) {
      with_params(*r, d, c, m, -1);
      r->note = detail::kv("slope", slope);
      out.push_back(*r);
    }
  }
  return out;
}

/// Boundary-max lemma, local estimate, its sup proposition, the main
/// sup-norm theorem and its simplified-constant variant, per k.
inline std::vector<BoundReport> supnorm_bounds_check(int d, int m, double c, int k_lo, int k_hi,
                                                     int grid = 512) {
  const ProblemParams pp{d, c, m};
  const double b = pp.beta();
  if (!(b > 0.0)) throw std::domain_error("supnorm_bounds_check: needs m + d/2 - 1 > 0");
  const double md = m + 0.5 * d;
  const double a = (2.0 * m + d - 2.0) / (2.0 * m + d);
  const auto hs = harmonic_space(d, m);
  const double yfac = std::sqrt(static_cast<double>(hs.count) / hs.sphere_area);
  const double local_rhs = std::sqrt(std::pow(2.0, md + 1.0) * b);
  std::vector<BoundReport> out;
  for (int k = k_lo; k <= k_hi; ++k) {
    const RadialProlate p = solve_prolate(pp, k);
    const double theta = p.theta;
    const bool lemma_cond = theta > c * c / 4.0;
    double phi_max = 0.0, local_max = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double eta = a + (1.0 - a) * 0.5 * (1.0 - std::cos(kPi * i / (grid - 1)));
      const double v = std::abs(prolate_phi(p, eta));
      phi_max = std::max(phi_max, v);
      local_max = std::max(local_max, std::sqrt((1.0 - eta) * std::pow(1.0 + eta, md)) * v);
    }
    const double phi1 = std::abs(prolate_phi(p, 1.0));
    const SupNorm sn = sup_norm(p, grid);

    auto r1 = make_report("boundary_max", phi_max, phi1, lemma_cond);
    auto r2 = make_report("local_estimate", local_max, local_rhs, lemma_cond);
    auto r3 = make_report("sup_near_boundary", phi_max, 1.5 * std::sqrt(3.0) * local_rhs * std::sqrt(theta),
                          lemma_cond);
    const double cmd = c * c / 4.0 + md * (md - 1.0) - 1.0;
    const double thr_max = std::max((c * c + 8.0) / (4.0 * (2 * m + d)),
                                    std::pow(2.0 / 3.0, 6) * std::pow(kPi / b, 2) + cmd);
    auto r4 = make_report("theorem_max", sn.ball_max,
                          1.5 * std::sqrt(3.0) * local_rhs * yfac * std::sqrt(p.chi), theta > thr_max);
    const double thr_a = std::max((c * c + 8.0) / (2 * m + d),
                                  std::pow(2.0 / 3.0, 6) * std::pow(2.0 * kPi / b, 2) + 4.0 * md * b - 4.0 + c * c) +
                         static_cast<double>(pp.gamma_md());
    auto r5 = make_report("theorem_a", sn.ball_max, 1.5 * std::sqrt(3.0 * b) * yfac * std::sqrt(p.chi),
                          p.chi > thr_a);
    for (auto* r : {&r1, &r2, &r3, &r4, &r5}) {
      with_params(*r, d, c, m, k);
      r->note = detail::kv("theta", theta);
      out.push_back(*r);
    }
  }
  return out;
}

}  // namespace bpswf

#endif  // BALLPROLATE_SPECTRA_HPP
