/*
  hj-ader: 1D time stepping.

  License: Apache-2.0
*/
#include "solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <string>

namespace hjader {

namespace {

double cpu_now() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

double minmod3(double a, double b, double c) {
  if (a > 0 && b > 0 && c > 0) return std::min({a, b, c});
  if (a < 0 && b < 0 && c < 0) return std::max({a, b, c});
  return 0.0;
}

}  // namespace

SolverTables1D build_solver_tables_1d(int degree) {
  SolverTables1D t;
  t.pred = make_predictor_tables(1, degree);
  t.vol = build_volume_tables(t.pred.spec);
  t.face = build_face_tables(t.pred.spec, 0);
  return t;
}

ModalField1D project_initial(const ProblemCase& pc, const Mesh1D& mesh, int degree) {
  if (degree < 1 || degree > 3)
    fail(ErrorCode::unsupported_order, "project_initial: degree must be 1..3");
  ModalField1D f;
  f.mesh = mesh;
  f.degree = degree;
  f.Ls = degree + 1;
  f.w.assign(static_cast<size_t>(mesh.n) * f.Ls, 0.0);
  QuadratureRule gs = gauss_legendre(degree + 2, -0.5, 0.5);
  std::vector<double> mass(f.Ls, 0.0);
  for (int m = 0; m < f.Ls; ++m)
    for (int q = 0; q < gs.size(); ++q) {
      double p = legendre_eval(m, gs.points[q]);
      mass[m] += gs.weights[q] * p * p;
    }
  for (int i = 0; i < mesh.n; ++i) {
    double xc = mesh.center(i);
    double* w = f.cell(i);
    for (int q = 0; q < gs.size(); ++q) {
      double v = pc.initial(xc + mesh.dx * gs.points[q], 0.0);
      for (int m = 0; m < f.Ls; ++m)
        w[m] += gs.weights[q] * v * legendre_eval(m, gs.points[q]);
    }
    for (int m = 0; m < f.Ls; ++m) w[m] /= mass[m];
  }
  return f;
}

double compute_dt(const ModalField1D& field, const HamiltonianModel& model,
                  const SolverConfig& cfg, const SolverTables1D& tables, double t_now) {
  const PredictorTables& pt = tables.pred;
  const Mesh1D& mesh = field.mesh;
  double alpha = 0.0;
  for (int i = 0; i < mesh.n; ++i) {
    const double* w = field.cell(i);
    for (int n = 0; n < pt.spec.Ln; ++n) {
      if (pt.nodal_points[n][2] > 0.0) continue;
      double u = pt.sDxi.dot_row_below(n, w, field.Ls) / mesh.dx;
      double xn = mesh.center(i) + mesh.dx * pt.nodal_points[n][0];
      alpha = std::max(alpha, std::abs(model.d_p(u, 0.0, xn, 0.0)));
    }
  }
  double dt = alpha > 0.0 ? cfg.cfl * mesh.dx / alpha : cfg.cfl * mesh.dx;
  return std::min(dt, cfg.t_final - t_now);
}

void step(ModalField1D& field, const HamiltonianModel& model, const SolverConfig& cfg,
          const SolverTables1D& tables, double dt, double t_now, StepWorkspace1D& ws) {
  const Mesh1D& mesh = field.mesh;
  const int n = mesh.n, L = tables.pred.spec.L, Ls = field.Ls;
  ws.qhat.resize(static_cast<size_t>(n) * L);
  ws.hhat.resize(static_cast<size_t>(n) * L);
  ws.acc.assign(static_cast<size_t>(n) * Ls, 0.0);

  for (int i = 0; i < n; ++i) {
    try {
      predict(field.cell(i), tables.pred, model, dt, mesh.dx, 1.0, mesh.center(i), 0.0,
              &ws.qhat[static_cast<size_t>(i) * L], &ws.hhat[static_cast<size_t>(i) * L],
              ws.scratch);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::predictor_blowup)
        fail(ErrorCode::predictor_blowup, "predict: cell " + std::to_string(i) + " at t=" +
                                              std::to_string(t_now) + ": " + e.what());
      throw;
    }
  }

  for (int i = 0; i < n; ++i)
    volume_integral(&ws.hhat[static_cast<size_t>(i) * L], tables.vol, mesh.dx, 1.0,
                    &ws.acc[static_cast<size_t>(i) * Ls]);

  const bool periodic = cfg.boundary == BoundaryKind::periodic;
  const int nfaces = periodic ? n : n + 1;
  std::vector<double> discard(Ls);
  for (int f = 0; f < nfaces; ++f) {
    int iL, iR;
    if (periodic) {
      iL = f;
      iR = (f + 1) % n;
    } else {
      iL = f - 1;
      iR = f;
    }
    const double* qL = &ws.qhat[static_cast<size_t>(std::clamp(iL, 0, n - 1)) * L];
    const double* qR = &ws.qhat[static_cast<size_t>(std::clamp(iR, 0, n - 1)) * L];
    double xf = periodic ? mesh.face(f + 1) : mesh.face(f);
    double uL, uR, vL, vR;
    barycenter_derivatives(qL, qR, tables.face, mesh.dx, 1.0, 1, uL, uR, vL, vR);
    FaceEval fe = face_eval_1d(uL, uR, model, xf);
    double* incL = iL >= 0 && iL < n ? &ws.acc[static_cast<size_t>(iL) * Ls] : discard.data();
    double* incR = iR >= 0 && iR < n ? &ws.acc[static_cast<size_t>(iR) * Ls] : discard.data();
    face_contributions(qL, qR, fe, cfg.penalty, dt, 1.0, tables.face, incL, incR);
  }

  for (int i = 0; i < n; ++i) {
    double* w = field.cell(i);
    const double* acc = &ws.acc[static_cast<size_t>(i) * Ls];
    for (int m = 0; m < Ls; ++m) {
      w[m] -= acc[m] / (tables.vol.mass[m] * mesh.dx);
      if (!std::isfinite(w[m]))
        fail(ErrorCode::step_failure, "step: non-finite update in cell " + std::to_string(i) +
                                          " at t=" + std::to_string(t_now));
    }
  }

  if (cfg.limiter) apply_limiter_1d(field, cfg.boundary);
}

void apply_limiter_1d(ModalField1D& field, BoundaryKind boundary) {
  const int n = field.mesh.n, Ls = field.Ls;
  const bool periodic = boundary == BoundaryKind::periodic;
  // Cell means are untouched by the limiter, so in-place neighbor reads
  // stay consistent.
  for (int i = 0; i < n; ++i) {
    int im = periodic ? (i + n - 1) % n : std::max(i - 1, 0);
    int ip = periodic ? (i + 1) % n : std::min(i + 1, n - 1);
    double* w = field.cell(i);
    double fwd = field.cell(ip)[0] - w[0];
    double bwd = w[0] - field.cell(im)[0];
    double m = minmod3(w[1], fwd, bwd);
    if (m != w[1]) {
      w[1] = m;
      for (int l = 2; l < Ls; ++l) w[l] = 0.0;
    }
  }
}

RunResult1D run(const ProblemCase& pc, const SolverConfig& cfg, const Mesh1D& mesh) {
  cfg.validate();
  if (pc.model.dim != 1) fail(ErrorCode::invalid_argument, "run: case is not 1D");
  RunResult1D out;
  double t0 = cpu_now();
  out.field = project_initial(pc, mesh, cfg.degree);
  SolverTables1D tables = build_solver_tables_1d(cfg.degree);
  StepWorkspace1D ws;
  double t = 0.0;
  while (t < cfg.t_final - 1e-14) {
    double dt = compute_dt(out.field, pc.model, cfg, tables, t);
    step(out.field, pc.model, cfg, tables, dt, t, ws);
    t += dt;
    ++out.steps;
  }
  out.t_end = t;
  out.cpu_seconds = cpu_now() - t0;
  return out;
}

double eval_field(const ModalField1D& field, double x) {
  const Mesh1D& m = field.mesh;
  int i = std::clamp(static_cast<int>((x - m.a) / m.dx), 0, m.n - 1);
  double xi = (x - m.center(i)) / m.dx;
  double v = 0.0;
  for (int l = 0; l < field.Ls; ++l) v += field.cell(i)[l] * legendre_eval(l, xi);
  return v;
}

}  // namespace hjader
