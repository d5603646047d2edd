#ifndef BALLPROLATE_HARMONICS_HPP
#define BALLPROLATE_HARMONICS_HPP

// Spherical harmonics: dimension counts, zonal kernels, real orthonormal
// bases for d <= 3 and the Fourier factor of a harmonic over the sphere.

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>

#include "quadrature.hpp"
#include "specfun.hpp"

namespace bpswf {

/// N(d, m), the number of independent degree-m harmonics on S^{d-1}.
/// d = 1 is the two-point sphere: one even (m = 0) and one odd (m = 1).
inline long long harmonic_dim(int d, int m) {
  if (d < 1 || m < 0) throw std::domain_error("harmonic_dim: need d >= 1, m >= 0");
  if (d == 1) return m <= 1 ? 1 : 0;
  if (d == 2) return m == 0 ? 1 : 2;
  auto binom = [](long long n, long long k) -> long long {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  return binom(m + d - 1, d - 1) - binom(m + d - 3, d - 1);
}

struct HarmonicSpace {
  int d = 2;
  int m = 0;
  long long count = 1;
  double sphere_area = 0.0;
};

inline HarmonicSpace harmonic_space(int d, int m) {
  return HarmonicSpace{d, m, harmonic_dim(d, m), bpswf::sphere_area(d)};
}

/// Addition-formula kernel (N(d,n)/Omega_{d-1}) C_n(t)/C_n(1), lambda = (d-2)/2.
inline double zonal_kernel(int d, int n, double t) {
  if (d < 2) throw std::domain_error("zonal_kernel: d must be >= 2");
  const double lambda = 0.5 * (d - 2);
  const double ratio = gegenbauer_c(n, lambda, t) / gegenbauer_at_one(n, lambda);
  return static_cast<double>(harmonic_dim(d, n)) / sphere_area(d) * ratio;
}

struct ZonalKernel {
  int d = 2;
  int n = 0;
  double operator()(double t) const { return zonal_kernel(d, n, t); }
};

namespace detail {
// Associated Legendre P_l^j(t) without the Condon-Shortley phase.
inline double assoc_legendre(int l, int j, double t) {
  const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  double pjj = 1.0;
  for (int i = 1; i <= j; ++i) pjj *= (2.0 * i - 1.0) * s;
  if (l == j) return pjj;
  double pm1 = pjj, p = t * (2.0 * j + 1.0) * pjj;
  for (int ll = j + 2; ll <= l; ++ll) {
    const double next = ((2.0 * ll - 1.0) * t * p - (ll + j - 1.0) * pm1) / (ll - j);
    pm1 = p;
    p = next;
  }
  return p;
}
}  // namespace detail

/// Real orthonormal harmonic Y_l^{(m)} at a unit vector, 1 <= l <= N(d, m).
///  d=1: 1/sqrt2 (m=0), x/sqrt2 (m=1).
///  d=2: l=1 -> cos(m th)/sqrt(pi) (1/sqrt(2 pi) when m=0), l=2 -> sin(m th)/sqrt(pi).
///  d=3: l=1 -> order 0; l=2j -> cos(j ph) part; l=2j+1 -> sin(j ph) part.
inline double sph_basis_eval(int d, int m, int l, std::span<const double> xhat) {
  if (m < 0) throw std::domain_error("sph_basis_eval: m must be >= 0");
  if (d < 1 || d > 3)
    throw std::domain_error("sph_basis_eval: pointwise harmonics are only available for d <= 3");
  if (l < 1 || l > harmonic_dim(d, m)) throw std::domain_error("sph_basis_eval: l out of range");
  if (xhat.size() < static_cast<std::size_t>(d))
    throw std::invalid_argument("sph_basis_eval: point has too few coordinates");
  if (d == 1) return (m == 0 ? 1.0 : (xhat[0] >= 0.0 ? 1.0 : -1.0)) / std::sqrt(2.0);
  if (d == 2) {
    const double th = std::atan2(xhat[1], xhat[0]);
    if (m == 0) return 1.0 / std::sqrt(2.0 * kPi);
    return (l == 1 ? std::cos(m * th) : std::sin(m * th)) / std::sqrt(kPi);
  }
  const double nr = std::sqrt(xhat[0] * xhat[0] + xhat[1] * xhat[1] + xhat[2] * xhat[2]);
  const double t = nr > 0.0 ? xhat[2] / nr : 1.0;
  const double ph = std::atan2(xhat[1], xhat[0]);
  const int j = l / 2;
  const double base = (2.0 * m + 1.0) / (4.0 * kPi);
  if (j == 0) return std::sqrt(base) * detail::assoc_legendre(m, 0, t);
  const double fac = std::exp(0.5 * (log_gamma_fn(m - j + 1.0) - log_gamma_fn(m + j + 1.0)));
  const double ang = (l % 2 == 0) ? std::cos(j * ph) : std::sin(j * ph);
  return std::sqrt(2.0 * base) * fac * detail::assoc_legendre(m, j, t) * ang;
}

/// (2 pi)^{d/2} (-i)^m J_{m+(d-2)/2}(w) / w^{(d-2)/2}: the integral over the
/// sphere of exp(-i w <x, y>) Y(x) equals this factor times Y(y).
inline std::complex<double> sphere_fourier_factor(int m, int d, double w) {
  if (!(w >= 0.0)) throw std::domain_error("sphere_fourier_factor: w must be non-negative");
  const double nu = m + 0.5 * (d - 2);
  const double mag = std::pow(2.0 * kPi, 0.5 * d) * std::pow(w, m) * bessel_j_scaled(nu, w);
  static constexpr std::complex<double> phases[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return mag * phases[m % 4];
}

}  // namespace bpswf

#endif  // BALLPROLATE_HARMONICS_HPP
