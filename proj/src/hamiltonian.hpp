/*
  hj-ader: Hamiltonian catalog. Each case carries the Hamiltonian with
  analytic partials, domain, initial and boundary conditions, default
  CFL numbers and final times, and (where available) an exact-solution
  oracle. Nonsmooth Riemann cases are referenced against a fine-mesh
  monotone Lax-Friedrichs solve.

  License: Apache-2.0
*/
#ifndef HJADER_HAMILTONIAN_HPP
#define HJADER_HAMILTONIAN_HPP

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hjader {

struct HamiltonianModel {
  int dim = 1;
  bool space_dependent = false;
  // H(p, q, x, y) with p = phi_x, q = phi_y (q, y ignored in 1D).
  std::function<double(double, double, double, double)> eval;
  std::function<double(double, double, double, double)> d_p;  // H1
  std::function<double(double, double, double, double)> d_q;  // H2
};

enum class BoundaryKind { periodic, extrapolation };

struct ProblemCase {
  std::string name;
  HamiltonianModel model;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  std::function<double(double, double)> initial;             // phi^0(x, y)
  BoundaryKind boundary = BoundaryKind::periodic;
  std::function<double(double, double, double)> exact;       // phi(x, y, t); may be null
  std::function<bool(double, double)> smooth_mask;           // cell-center membership; may be null
  std::array<double, 3> cfl = {0.15, 0.10, 0.05};            // per degree k = 1, 2, 3
  double t_final_default = 1.0;
  bool needs_limiter = false;
};

// name in: linear-sinx-1d, sign-coeff-1d, burgers-1d, burgers-nonsmooth-1d,
// noncvx-cos-1d, riemann-noncvx-1d, rotation-smooth-2d, rotation-cone-2d,
// burgers-2d, noncvx-cos-2d, optimal-control-2d, riemann-sin-2d,
// propagating-surface-2d.
ProblemCase catalog(std::string_view name);
const std::vector<std::string>& catalog_names();

bool has_exact_solution(const ProblemCase& pc);
double exact_solution(const ProblemCase& pc, double x, double y, double t);

}  // namespace hjader

#endif
