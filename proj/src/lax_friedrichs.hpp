/*
  hj-ader: first-order monotone Lax-Friedrichs scheme for
  Hamilton-Jacobi equations. Used as the viscosity-solution reference
  for the Riemann test cases and as an independent oracle in tests.

  License: Apache-2.0
*/
#ifndef HJADER_LAX_FRIEDRICHS_HPP
#define HJADER_LAX_FRIEDRICHS_HPP

#include <vector>

#include "hamiltonian.hpp"

namespace hjader {

struct LfSolution1D {
  double xmin = 0, xmax = 0, dx = 0;
  std::vector<double> phi;  // cell-center values

  double eval(double x) const;  // linear interpolation, clamped at ends
};

struct LfSolution2D {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0, dx = 0, dy = 0;
  int nx = 0, ny = 0;
  std::vector<double> phi;  // row-major [i*ny + j]

  double eval(double x, double y) const;  // bilinear, clamped
};

LfSolution1D lf_solve_1d(const ProblemCase& pc, int n, double t_final);
LfSolution2D lf_solve_2d(const ProblemCase& pc, int n, double t_final);

}  // namespace hjader

#endif
