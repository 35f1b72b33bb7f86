/*
  hj-ader: structured meshes, modal fields, and solver configuration.

  License: Apache-2.0
*/
#ifndef HJADER_FIELD_HPP
#define HJADER_FIELD_HPP

#include <vector>

#include "errors.hpp"
#include "hamiltonian.hpp"

namespace hjader {

struct Mesh1D {
  double a = 0, b = 1;
  int n = 0;
  double dx = 0;

  Mesh1D() = default;
  Mesh1D(double a_, double b_, int n_) : a(a_), b(b_), n(n_) {
    if (n < 4 || b <= a) fail(ErrorCode::invalid_argument, "Mesh1D: need n >= 4 and b > a");
    dx = (b - a) / n;
  }
  double center(int i) const { return a + (i + 0.5) * dx; }
  double face(int f) const { return a + f * dx; }
};

struct Mesh2D {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  int nx = 0, ny = 0;
  double dx = 0, dy = 0;

  Mesh2D() = default;
  Mesh2D(double x0, double x1, double y0, double y1, int nx_, int ny_)
      : xmin(x0), xmax(x1), ymin(y0), ymax(y1), nx(nx_), ny(ny_) {
    if (nx < 4 || ny < 4 || x1 <= x0 || y1 <= y0)
      fail(ErrorCode::invalid_argument, "Mesh2D: need nx, ny >= 4 and nonempty box");
    dx = (x1 - x0) / nx;
    dy = (y1 - y0) / ny;
  }
  double xcenter(int i) const { return xmin + (i + 0.5) * dx; }
  double ycenter(int j) const { return ymin + (j + 0.5) * dy; }
  size_t cell(int i, int j) const { return static_cast<size_t>(i) * ny + j; }
};

// Per-cell spatial modal coefficients, cell-major.
struct ModalField1D {
  Mesh1D mesh;
  int degree = 0, Ls = 0;
  std::vector<double> w;  // n * Ls

  double* cell(int i) { return w.data() + static_cast<size_t>(i) * Ls; }
  const double* cell(int i) const { return w.data() + static_cast<size_t>(i) * Ls; }
};

struct ModalField2D {
  Mesh2D mesh;
  int degree = 0, Ls = 0;
  std::vector<double> w;  // nx * ny * Ls

  double* cell(int i, int j) { return w.data() + mesh.cell(i, j) * Ls; }
  const double* cell(int i, int j) const { return w.data() + mesh.cell(i, j) * Ls; }
};

struct SolverConfig {
  int degree = 2;
  double cfl = 0.1;
  double penalty = 0.25;  // C
  bool limiter = false;
  double t_final = 1.0;
  BoundaryKind boundary = BoundaryKind::periodic;

  void validate() const {
    if (degree < 1 || degree > 3)
      fail(ErrorCode::unsupported_order, "SolverConfig: degree must be 1..3");
    if (!(cfl > 0.0) || cfl > 1.0)
      fail(ErrorCode::invalid_argument, "SolverConfig: need 0 < CFL <= 1");
    if (penalty < 0.0) fail(ErrorCode::invalid_argument, "SolverConfig: need C >= 0");
    if (t_final < 0.0) fail(ErrorCode::invalid_argument, "SolverConfig: need t_final >= 0");
  }
};

}  // namespace hjader

#endif
