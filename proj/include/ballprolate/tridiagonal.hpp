#ifndef BALLPROLATE_TRIDIAGONAL_HPP
#define BALLPROLATE_TRIDIAGONAL_HPP

// Symmetric tridiagonal eigensolvers shared by the quadrature builders and
// the prolate solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bpswf {

/// Symmetric tridiagonal matrix: diag[0..n), off[i] couples rows i and i+1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }

  void validate() const {
    if (diag.empty()) throw std::invalid_argument("SymTridiagonal: empty matrix");
    if (off.size() + 1 != diag.size())
      throw std::invalid_argument("SymTridiagonal: off-diagonal length must be n-1");
  }
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
inline std::size_t sturm_count(const SymTridiagonal& t, double x) {
  const std::size_t n = t.size();
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  double q = t.diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    q = t.diag[i + 1] - x - t.off[i] * t.off[i] / q;
  }
  return count;
}

inline void gershgorin(const SymTridiagonal& t, double& lo, double& hi) {
  const std::size_t n = t.size();
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
}

/// k-th smallest eigenvalue (0-based) by bisection to full working precision.
inline double kth_eigenvalue(const SymTridiagonal& t, std::size_t k) {
  t.validate();
  if (k >= t.size()) throw std::out_of_range("kth_eigenvalue: index beyond matrix size");
  double lo, hi;
  gershgorin(t, lo, hi);
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) +
                     std::numeric_limits<double>::min();
  lo -= pad;
  hi += pad;
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    if (sturm_count(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  throw std::runtime_error("kth_eigenvalue: bisection did not converge");
}

/// Eigenvector for an accurate eigenvalue `lambda` via the twisted
/// factorisation. Components far from the twist index are products of
/// ratios, so they keep high relative accuracy even when tiny.
inline std::vector<double> twisted_eigenvector(const SymTridiagonal& t, double lambda) {
  t.validate();
  const std::size_t n = t.size();
  std::vector<double> z(n, 0.0);
  if (n == 1) {
    z[0] = 1.0;
    return z;
  }
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  const double floor = std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(lambda)) * 1e-3;
  auto guard = [&](double v) {
    if (std::abs(v) < tiny) return v < 0.0 ? -floor : floor;
    return v;
  };
  std::vector<double> dp(n), dm(n);
  dp[0] = guard(t.diag[0] - lambda);
  for (std::size_t j = 1; j < n; ++j)
    dp[j] = guard(t.diag[j] - lambda - t.off[j - 1] * t.off[j - 1] / dp[j - 1]);
  dm[n - 1] = guard(t.diag[n - 1] - lambda);
  for (std::size_t j = n - 1; j-- > 0;)
    dm[j] = guard(t.diag[j] - lambda - t.off[j] * t.off[j] / dm[j + 1]);

  std::size_t p = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double gamma = dp[j] + dm[j] - (t.diag[j] - lambda);
    if (std::abs(gamma) < best) {
      best = std::abs(gamma);
      p = j;
    }
  }
  z[p] = 1.0;
  for (std::size_t j = p; j-- > 0;) z[j] = -t.off[j] * z[j + 1] / dp[j];
  for (std::size_t j = p + 1; j < n; ++j) z[j] = -t.off[j - 1] * z[j - 1] / dm[j];

  double nrm = 0.0, big = 0.0;
  for (double v : z) big = std::max(big, std::abs(v));
  for (double v : z) nrm += (v / big) * (v / big);
  nrm = big * std::sqrt(nrm);
  for (double& v : z) v /= nrm;
  return z;
}

/// All eigenvalues, ascending, by implicit QL with Wilkinson shifts.
inline std::vector<double> ql_eigenvalues(const SymTridiagonal& t) {
  t.validate();
  const std::size_t n = t.size();
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = t.off[i];
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("ql_eigenvalues: no convergence");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace bpswf

#endif  // BALLPROLATE_TRIDIAGONAL_HPP
