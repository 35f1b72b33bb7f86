/*
  hj-ader: one-dimensional one-stage solver — per-cell spacetime
  predictor, frozen-coefficient face pass, explicit volume pass, modal
  update, optional moment limiter.

  License: Apache-2.0
*/
#ifndef HJADER_SOLVER1D_HPP
#define HJADER_SOLVER1D_HPP

#include "field.hpp"
#include "flux.hpp"
#include "predictor.hpp"

namespace hjader {

struct SolverTables1D {
  PredictorTables pred;
  VolumeTables vol;
  FaceTraceTables face;
};

SolverTables1D build_solver_tables_1d(int degree);

ModalField1D project_initial(const ProblemCase& pc, const Mesh1D& mesh, int degree);

// CFL step from the per-cell nodal derivative samples, clipped to land
// exactly on t_final.
double compute_dt(const ModalField1D& field, const HamiltonianModel& model,
                  const SolverConfig& cfg, const SolverTables1D& tables, double t_now);

struct StepWorkspace1D {
  std::vector<double> qhat, hhat, acc;
  PredictorScratch scratch;
};

void step(ModalField1D& field, const HamiltonianModel& model, const SolverConfig& cfg,
          const SolverTables1D& tables, double dt, double t_now, StepWorkspace1D& ws);

void apply_limiter_1d(ModalField1D& field, BoundaryKind boundary);

struct RunResult1D {
  ModalField1D field;
  long steps = 0;
  double t_end = 0;
  double cpu_seconds = 0;
};

RunResult1D run(const ProblemCase& pc, const SolverConfig& cfg, const Mesh1D& mesh);

// Pointwise evaluation of the DG polynomial at x.
double eval_field(const ModalField1D& field, double x);

}  // namespace hjader

#endif
