/*
  hj-ader: Gauss-Legendre nodes by Newton iteration on the standard
  three-term recurrence.

  License: Apache-2.0
*/
#include "quadrature.hpp"

#include <cmath>

#include "errors.hpp"

namespace hjader {

double QuadratureRule::length() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

QuadratureRule QuadratureRule::mapped_to(double a2, double b2) const {
  QuadratureRule out;
  out.a = a2;
  out.b = b2;
  out.points.resize(points.size());
  out.weights.resize(weights.size());
  const double scale = (b2 - a2) / (b - a);
  for (size_t i = 0; i < points.size(); ++i) {
    out.points[i] = a2 + (points[i] - a) * scale;
    out.weights[i] = weights[i] * scale;
  }
  return out;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1 || n > 64) fail(ErrorCode::invalid_argument, "gauss_legendre: order out of range");
  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.points.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.points[i] = mid - half * x;
    rule.points[n - 1 - i] = mid + half * x;
    rule.weights[i] = w * half;
    rule.weights[n - 1 - i] = w * half;
  }
  return rule;
}

}  // namespace hjader
