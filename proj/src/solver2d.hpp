/*
  hj-ader: two-dimensional structured-mesh one-stage solver with x- and
  y-face passes and per-cell spacetime predictor.

  License: Apache-2.0
*/
#ifndef HJADER_SOLVER2D_HPP
#define HJADER_SOLVER2D_HPP

#include "field.hpp"
#include "flux.hpp"
#include "predictor.hpp"

namespace hjader {

struct SolverTables2D {
  PredictorTables pred;
  VolumeTables vol;
  FaceTraceTables xface, yface;
};

SolverTables2D build_solver_tables_2d(int degree);

ModalField2D project_initial_2d(const ProblemCase& pc, const Mesh2D& mesh, int degree);

double compute_dt_2d(const ModalField2D& field, const HamiltonianModel& model,
                     const SolverConfig& cfg, const SolverTables2D& tables, double t_now);

struct StepWorkspace2D {
  std::vector<double> qhat, hhat, acc;
  PredictorScratch scratch;
};

void step2d(ModalField2D& field, const HamiltonianModel& model, const SolverConfig& cfg,
            const SolverTables2D& tables, double dt, double t_now, StepWorkspace2D& ws);

void apply_limiter_2d(ModalField2D& field, BoundaryKind boundary);

struct RunResult2D {
  ModalField2D field;
  long steps = 0;
  double t_end = 0;
  double cpu_seconds = 0;
};

RunResult2D run2d(const ProblemCase& pc, const SolverConfig& cfg, const Mesh2D& mesh);

double eval_field_2d(const ModalField2D& field, double x, double y);

}  // namespace hjader

#endif
