#ifndef BALLPROLATE_QUADRATURE_HPP
#define BALLPROLATE_QUADRATURE_HPP

// Gauss rules from the Jacobi matrix, and cubature on the unit ball.

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "specfun.hpp"
#include "tridiagonal.hpp"

namespace bpswf {

enum class RuleKind { legendre, jacobi };

struct QuadratureRule {
  RuleKind kind = RuleKind::legendre;
  double alpha = 0.0;
  double beta = 0.0;
  double a = -1.0;
  double b = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness_degree = 0;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].
/// Nodes from QL on the Jacobi matrix, then one Newton step on the
/// orthonormal polynomial; weights by the Christoffel formula.
inline QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
  if (n > 10000) throw std::domain_error("gauss_jacobi: n above 10000");
  const JacobiParams p{alpha, beta};
  p.validate();

  SymTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.resize(static_cast<std::size_t>(n) - 1);
  for (int j = 0; j < n; ++j) t.diag[j] = jacobi_recurrence_a(j, p);
  for (int j = 1; j < n; ++j) t.off[j - 1] = jacobi_recurrence_b(j, p);
  std::vector<double> x = ql_eigenvalues(t);

  std::vector<double> as(static_cast<std::size_t>(n) + 1), bs(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = 0; j <= n; ++j) as[j] = jacobi_recurrence_a(j, p);
  for (int j = 1; j <= n; ++j) bs[j] = jacobi_recurrence_b(j, p);
  const double p0 = 1.0 / std::sqrt(jacobi_norm_sq(0, p));

  QuadratureRule rule;
  rule.kind = (alpha == 0.0 && beta == 0.0) ? RuleKind::legendre : RuleKind::jacobi;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.exactness_degree = 2 * n - 1;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    double sumsq = 0.0;
    for (int pass = 0; pass < 3; ++pass) {
      double pm1 = 0.0, pk = p0, dpm1 = 0.0, dpk = 0.0;
      sumsq = pk * pk;
      for (int k = 0; k < n; ++k) {
        const double pn = ((xi - as[k]) * pk - bs[k] * pm1) / bs[k + 1];
        const double dpn = ((xi - as[k]) * dpk + pk - bs[k] * dpm1) / bs[k + 1];
        pm1 = pk;
        pk = pn;
        dpm1 = dpk;
        dpk = dpn;
        if (k + 1 < n) sumsq += pk * pk;
      }
      if (pass == 2) break;
      const double step = pk / dpk;
      if (std::isfinite(step) && std::abs(step) < 1e-6) xi -= step;
    }
    rule.nodes[i] = xi;
    rule.weights[i] = 1.0 / sumsq;
  }
  return rule;
}

inline QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Affine map of a Legendre rule to [a, b].
inline QuadratureRule map_rule(const QuadratureRule& r, double a, double b) {
  if (r.kind != RuleKind::legendre)
    throw std::invalid_argument("map_rule: only unweighted rules can be mapped affinely");
  QuadratureRule out = r;
  out.a = a;
  out.b = b;
  const double h = 0.5 * (b - a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    out.nodes[i] = a + h * (r.nodes[i] + 1.0);
    out.weights[i] = h * r.weights[i];
  }
  return out;
}

/// Sum of w_i f(x_i). Throws if f is non-finite at a node.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) throw std::domain_error("integrate: non-finite integrand at a node");
    s += rule.weights[i] * v;
  }
  return s;
}

/// Composite Gauss-Legendre on [a, b] with `panels` equal panels.
template <class F>
double integrate_panels(F&& f, double a, double b, int panels, int order = 20) {
  const QuadratureRule base = gauss_legendre(order);
  double s = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) s += integrate(map_rule(base, a + p * h, a + (p + 1) * h), f);
  return s;
}

// ---------------------------------------------------------------------------
// Sphere and ball

/// Surface area of S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
inline double sphere_area(int d) {
  if (d < 1) throw std::domain_error("sphere_area: d must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * d) / gamma_fn(0.5 * d);
}

/// Volume of B^d.
inline double ball_volume(int d) { return std::pow(kPi, 0.5 * d) / gamma_fn(0.5 * d + 1.0); }

/// Integral over S^{d-1} of a zonal function g(<x, e>), d >= 2:
/// Omega_{d-2} int_{-1}^{1} g(t) (1 - t^2)^{(d-3)/2} dt.
template <class G>
double zonal_sphere_integral(int d, G&& g, int n = 64) {
  if (d < 2) throw std::domain_error("zonal_sphere_integral: d must be >= 2");
  const double e = 0.5 * (d - 3);
  const QuadratureRule r = gauss_jacobi(n, e, e);
  return sphere_area(d - 1) * integrate(r, g);
}

struct BallCubature {
  int d = 0;
  QuadratureRule radial;  // nodes r in (0,1), weights include r^{d-1}
  std::vector<std::array<double, 3>> directions;
  std::vector<double> dir_weights;
  int angular_exactness = 0;

  std::size_t size() const { return radial.size() * directions.size(); }
};

/// Tensor cubature on B^d for d in {1,2,3}: Gauss-Jacobi(0, d-1) in the
/// radius, trapezoid in angle (d=2), Gauss-Legendre in cos(theta) times
/// trapezoid in phi (d=3).
inline BallCubature ball_cubature(int d, int n_r = 200, int n_ang = 256) {
  if (d < 1 || d > 3) throw std::domain_error("ball_cubature: full cubature needs d in {1,2,3}");
  if (n_r < 1 || n_ang < 1) throw std::domain_error("ball_cubature: sizes must be positive");
  BallCubature cub;
  cub.d = d;
  const QuadratureRule g = gauss_jacobi(n_r, 0.0, d - 1.0);
  cub.radial = g;
  cub.radial.a = 0.0;
  cub.radial.b = 1.0;
  const double scale = std::pow(0.5, d);
  for (std::size_t i = 0; i < g.size(); ++i) {
    cub.radial.nodes[i] = 0.5 * (1.0 + g.nodes[i]);
    cub.radial.weights[i] = scale * g.weights[i];
  }
  if (d == 1) {
    cub.directions = {{-1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    cub.dir_weights = {1.0, 1.0};
    cub.angular_exactness = 1000000;
  } else if (d == 2) {
    for (int j = 0; j < n_ang; ++j) {
      const double th = 2.0 * kPi * j / n_ang;
      cub.directions.push_back({std::cos(th), std::sin(th), 0.0});
      cub.dir_weights.push_back(2.0 * kPi / n_ang);
    }
    cub.angular_exactness = n_ang - 1;
  } else {
    const int nt = std::max(2, n_ang / 2);
    const QuadratureRule gl = gauss_legendre(nt);
    for (int a = 0; a < nt; ++a) {
      const double ct = gl.nodes[a];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int j = 0; j < n_ang; ++j) {
        const double ph = 2.0 * kPi * j / n_ang;
        cub.directions.push_back({st * std::cos(ph), st * std::sin(ph), ct});
        cub.dir_weights.push_back(gl.weights[a] * 2.0 * kPi / n_ang);
      }
    }
    cub.angular_exactness = std::min(2 * nt - 1, n_ang - 1);
  }
  return cub;
}

/// Integral over B^d of f(x), x passed as a span of length d.
template <class F>
double integrate_ball(const BallCubature& cub, F&& f) {
  double s = 0.0;
  std::array<double, 3> x{};
  for (std::size_t i = 0; i < cub.radial.size(); ++i) {
    const double r = cub.radial.nodes[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < cub.directions.size(); ++j) {
      for (int q = 0; q < cub.d; ++q) x[q] = r * cub.directions[j][q];
      const double v = f(std::span<const double>(x.data(), static_cast<std::size_t>(cub.d)));
      if (!std::isfinite(v)) throw std::domain_error("integrate_ball: non-finite integrand");
      inner += cub.dir_weights[j] * v;
    }
    s += cub.radial.weights[i] * inner;
  }
  return s;
}

}  // namespace bpswf

#endif  // BALLPROLATE_QUADRATURE_HPP
