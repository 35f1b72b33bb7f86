/*
  hj-ader: multi-stage Runge-Kutta DG baseline. Quadrature-based
  semidiscrete residual with pointwise Roe speeds and penalties at every
  edge quadrature node, SSP-RK3 stages for k = 1, 2 and classical RK4
  for k = 3. Used for cross-validation and CPU-time comparison.

  License: Apache-2.0
*/
#ifndef HJADER_RKDG_HPP
#define HJADER_RKDG_HPP

#include <vector>

#include "field.hpp"
#include "flux.hpp"
#include "solver1d.hpp"
#include "solver2d.hpp"

namespace hjader {

// Basis values cached at the volume and edge quadrature points.
struct RkdgWorkspace1D {
  int degree = 0, Ls = 0, nq = 0;
  QuadratureRule vol_rule;                 // on [-1/2, 1/2]
  std::vector<double> phi, dphi;           // Ls x nq, row-major
  std::vector<double> phiL, phiR, dphiL, dphiR;  // Ls, traces at +-1/2
  std::vector<double> mass;                // Ls
  // scratch
  std::vector<double> rhs, u0, u1;
};

RkdgWorkspace1D make_rkdg_workspace_1d(int degree);

struct RkdgWorkspace2D {
  int degree = 0, Ls = 0, nq = 0;
  QuadratureRule vol_rule;                     // per direction
  std::vector<double> phi, dxphi, dyphi;       // Ls x nq*nq
  // x-face traces at edge points (tangential = eta), L side xi=+1/2:
  std::vector<double> xphiL, xphiR, xdnL, xdnR, xdtL, xdtR;  // Ls x nq
  std::vector<double> yphiL, yphiR, ydnL, ydnR, ydtL, ydtR;  // Ls x nq
  std::vector<double> mass;  // Ls
  std::vector<double> rhs, u0, u1;
};

RkdgWorkspace2D make_rkdg_workspace_2d(int degree);

// Semidiscrete modal time derivative d w / dt for every cell.
void rkdg_residual(const ModalField1D& field, const HamiltonianModel& model,
                   const SolverConfig& cfg, RkdgWorkspace1D& ws, double* dwdt);
void rkdg_residual_2d(const ModalField2D& field, const HamiltonianModel& model,
                      const SolverConfig& cfg, RkdgWorkspace2D& ws, double* dwdt);

double rkdg_compute_dt(const ModalField1D& field, const HamiltonianModel& model,
                       const SolverConfig& cfg, RkdgWorkspace1D& ws, double t_now);
double rkdg_compute_dt_2d(const ModalField2D& field, const HamiltonianModel& model,
                          const SolverConfig& cfg, RkdgWorkspace2D& ws, double t_now);

// One full multi-stage step (SSP-RK3 for k = 1, 2; RK4 for k = 3).
void rkdg_step(ModalField1D& field, const HamiltonianModel& model, const SolverConfig& cfg,
               RkdgWorkspace1D& ws, double dt);
void rkdg_step_2d(ModalField2D& field, const HamiltonianModel& model,
                  const SolverConfig& cfg, RkdgWorkspace2D& ws, double dt);

RunResult1D run_rkdg(const ProblemCase& pc, const SolverConfig& cfg, const Mesh1D& mesh);
RunResult2D run_rkdg_2d(const ProblemCase& pc, const SolverConfig& cfg, const Mesh2D& mesh);

}  // namespace hjader

#endif
