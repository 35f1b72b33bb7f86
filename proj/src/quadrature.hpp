/*
  hj-ader: Gauss-Legendre quadrature rules on arbitrary intervals.

  License: Apache-2.0
*/
#ifndef HJADER_QUADRATURE_HPP
#define HJADER_QUADRATURE_HPP

#include <vector>

namespace hjader {

struct QuadratureRule {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
  double length() const;

  // Same abscissae mapped affinely onto [a2, b2].
  QuadratureRule mapped_to(double a2, double b2) const;
};

// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace hjader

#endif
