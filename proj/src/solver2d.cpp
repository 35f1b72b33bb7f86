/*
  hj-ader: 2D time stepping.

  License: Apache-2.0
*/
#include "solver2d.hpp"

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

SolverTables2D build_solver_tables_2d(int degree) {
  SolverTables2D t;
  t.pred = degree == 2 ? third_order_2d_tables() : make_predictor_tables(2, degree);
  BasisSpec spec = build_basis(2, degree);
  t.vol = build_volume_tables(spec);
  t.xface = build_face_tables(spec, 0);
  t.yface = build_face_tables(spec, 1);
  return t;
}

ModalField2D project_initial_2d(const ProblemCase& pc, const Mesh2D& mesh, int degree) {
  if (degree < 1 || degree > 3)
    fail(ErrorCode::unsupported_order, "project_initial_2d: degree must be 1..3");
  BasisSpec spec = build_basis(2, degree);
  ModalField2D f;
  f.mesh = mesh;
  f.degree = degree;
  f.Ls = spec.Ls;
  f.w.assign(static_cast<size_t>(mesh.nx) * mesh.ny * f.Ls, 0.0);
  QuadratureRule gs = gauss_legendre(degree + 2, -0.5, 0.5);
  const int nq = gs.size();
  std::vector<double> phi(static_cast<size_t>(f.Ls) * nq * nq);
  std::vector<double> mass(f.Ls, 0.0);
  for (int m = 0; m < f.Ls; ++m)
    for (int qx = 0; qx < nq; ++qx)
      for (int qy = 0; qy < nq; ++qy) {
        double v = theta_eval(spec, m, gs.points[qx], gs.points[qy], 0.0);
        phi[(static_cast<size_t>(m) * nq + qx) * nq + qy] = v;
        mass[m] += gs.weights[qx] * gs.weights[qy] * v * v;
      }
  for (int i = 0; i < mesh.nx; ++i)
    for (int j = 0; j < mesh.ny; ++j) {
      double* w = f.cell(i, j);
      for (int qx = 0; qx < nq; ++qx)
        for (int qy = 0; qy < nq; ++qy) {
          double v = pc.initial(mesh.xcenter(i) + mesh.dx * gs.points[qx],
                                mesh.ycenter(j) + mesh.dy * gs.points[qy]);
          double wq = gs.weights[qx] * gs.weights[qy];
          for (int m = 0; m < f.Ls; ++m)
            w[m] += wq * v * phi[(static_cast<size_t>(m) * nq + qx) * nq + qy];
        }
      for (int m = 0; m < f.Ls; ++m) w[m] /= mass[m];
    }
  return f;
}

double compute_dt_2d(const ModalField2D& field, const HamiltonianModel& model,
                     const SolverConfig& cfg, const SolverTables2D& tables, double t_now) {
  const PredictorTables& pt = tables.pred;
  const Mesh2D& mesh = field.mesh;
  double alpha = 0.0;
  for (int i = 0; i < mesh.nx; ++i)
    for (int j = 0; j < mesh.ny; ++j) {
      const double* w = field.cell(i, j);
      for (int n = 0; n < pt.spec.Ln; ++n) {
        if (pt.nodal_points[n][2] > 0.0) continue;
        double u = pt.sDxi.dot_row_below(n, w, field.Ls) / mesh.dx;
        double v = pt.sDeta.dot_row_below(n, w, field.Ls) / mesh.dy;
        double xn = mesh.xcenter(i) + mesh.dx * pt.nodal_points[n][0];
        double yn = mesh.ycenter(j) + mesh.dy * pt.nodal_points[n][1];
        alpha = std::max({alpha, std::abs(model.d_p(u, v, xn, yn)),
                          std::abs(model.d_q(u, v, xn, yn))});
      }
    }
  double h = std::min(mesh.dx, mesh.dy);
  double dt = alpha > 0.0 ? cfg.cfl * h / alpha : cfg.cfl * h;
  return std::min(dt, cfg.t_final - t_now);
}

void step2d(ModalField2D& field, const HamiltonianModel& model, const SolverConfig& cfg,
            const SolverTables2D& tables, double dt, double t_now, StepWorkspace2D& ws) {
  const Mesh2D& mesh = field.mesh;
  const int nx = mesh.nx, ny = mesh.ny, L = tables.pred.spec.L, Ls = field.Ls;
  const size_t ncell = static_cast<size_t>(nx) * ny;
  ws.qhat.resize(ncell * L);
  ws.hhat.resize(ncell * L);
  ws.acc.assign(ncell * Ls, 0.0);

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      size_t c = mesh.cell(i, j);
      try {
        predict(field.cell(i, j), tables.pred, model, dt, mesh.dx, mesh.dy, mesh.xcenter(i),
                mesh.ycenter(j), &ws.qhat[c * L], &ws.hhat[c * L], ws.scratch);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::predictor_blowup)
          fail(ErrorCode::predictor_blowup,
               "predict: cell (" + std::to_string(i) + "," + std::to_string(j) + ") at t=" +
                   std::to_string(t_now) + ": " + e.what());
        throw;
      }
      volume_integral(&ws.hhat[c * L], tables.vol, mesh.dx, mesh.dy, &ws.acc[c * Ls]);
    }

  const bool periodic = cfg.boundary == BoundaryKind::periodic;
  std::vector<double> discard(Ls);
  auto acc_of = [&](int i, int j) -> double* {
    if (i < 0 || i >= nx || j < 0 || j >= ny) return discard.data();
    return &ws.acc[mesh.cell(i, j) * Ls];
  };
  auto qhat_of = [&](int i, int j) -> const double* {
    return &ws.qhat[mesh.cell(std::clamp(i, 0, nx - 1), std::clamp(j, 0, ny - 1)) * L];
  };

  // x-faces.
  {
    const int nfx = periodic ? nx : nx + 1;
    for (int f = 0; f < nfx; ++f) {
      int iL = periodic ? f : f - 1;
      int iR = periodic ? (f + 1) % nx : f;
      double xf = periodic ? mesh.xmin + (f + 1) * mesh.dx : mesh.xmin + f * mesh.dx;
      for (int j = 0; j < ny; ++j) {
        const double* qL = qhat_of(iL, j);
        const double* qR = qhat_of(iR, j);
        double uL, uR, vL, vR;
        barycenter_derivatives(qL, qR, tables.xface, mesh.dx, mesh.dy, 2, uL, uR, vL, vR);
        FaceEval fe = face_eval_2d(0, uL, uR, 0.5 * (vL + vR), model, xf, mesh.ycenter(j));
        face_contributions(qL, qR, fe, cfg.penalty, dt, mesh.dy, tables.xface, acc_of(iL, j),
                           acc_of(iR, j));
      }
    }
  }
  // y-faces.
  {
    const int nfy = periodic ? ny : ny + 1;
    for (int f = 0; f < nfy; ++f) {
      int jL = periodic ? f : f - 1;
      int jR = periodic ? (f + 1) % ny : f;
      double yf = periodic ? mesh.ymin + (f + 1) * mesh.dy : mesh.ymin + f * mesh.dy;
      for (int i = 0; i < nx; ++i) {
        const double* qL = qhat_of(i, jL);
        const double* qR = qhat_of(i, jR);
        double uL, uR, vL, vR;
        barycenter_derivatives(qL, qR, tables.yface, mesh.dy, mesh.dx, 2, uL, uR, vL, vR);
        FaceEval fe = face_eval_2d(1, uL, uR, 0.5 * (vL + vR), model, mesh.xcenter(i), yf);
        face_contributions(qL, qR, fe, cfg.penalty, dt, mesh.dx, tables.yface, acc_of(i, jL),
                           acc_of(i, jR));
      }
    }
  }

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double* w = field.cell(i, j);
      const double* acc = &ws.acc[mesh.cell(i, j) * Ls];
      for (int m = 0; m < Ls; ++m) {
        w[m] -= acc[m] / (tables.vol.mass[m] * mesh.dx * mesh.dy);
        if (!std::isfinite(w[m]))
          fail(ErrorCode::step_failure, "step2d: non-finite update in cell (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            ") at t=" + std::to_string(t_now));
      }
    }

  if (cfg.limiter) apply_limiter_2d(field, cfg.boundary);
}

void apply_limiter_2d(ModalField2D& field, BoundaryKind boundary) {
  const Mesh2D& mesh = field.mesh;
  const int nx = mesh.nx, ny = mesh.ny, Ls = field.Ls;
  const bool periodic = boundary == BoundaryKind::periodic;
  auto mean = [&](int i, int j) {
    if (periodic) {
      i = (i + nx) % nx;
      j = (j + ny) % ny;
    } else {
      i = std::clamp(i, 0, nx - 1);
      j = std::clamp(j, 0, ny - 1);
    }
    return field.cell(i, j)[0];
  };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double* w = field.cell(i, j);
      double mx = minmod3(w[1], mean(i + 1, j) - w[0], w[0] - mean(i - 1, j));
      double my = minmod3(w[2], mean(i, j + 1) - w[0], w[0] - mean(i, j - 1));
      if (mx != w[1] || my != w[2]) {
        w[1] = mx;
        w[2] = my;
        for (int l = 3; l < Ls; ++l) w[l] = 0.0;
      }
    }
}

RunResult2D run2d(const ProblemCase& pc, const SolverConfig& cfg, const Mesh2D& mesh) {
  cfg.validate();
  if (pc.model.dim != 2) fail(ErrorCode::invalid_argument, "run2d: case is not 2D");
  RunResult2D out;
  double t0 = cpu_now();
  out.field = project_initial_2d(pc, mesh, cfg.degree);
  SolverTables2D tables = build_solver_tables_2d(cfg.degree);
  StepWorkspace2D ws;
  double t = 0.0;
  while (t < cfg.t_final - 1e-14) {
    double dt = compute_dt_2d(out.field, pc.model, cfg, tables, t);
    step2d(out.field, pc.model, cfg, tables, dt, t, ws);
    t += dt;
    ++out.steps;
  }
  out.t_end = t;
  out.cpu_seconds = cpu_now() - t0;
  return out;
}

double eval_field_2d(const ModalField2D& field, double x, double y) {
  const Mesh2D& m = field.mesh;
  int i = std::clamp(static_cast<int>((x - m.xmin) / m.dx), 0, m.nx - 1);
  int j = std::clamp(static_cast<int>((y - m.ymin) / m.dy), 0, m.ny - 1);
  double xi = (x - m.xcenter(i)) / m.dx;
  double eta = (y - m.ycenter(j)) / m.dy;
  BasisSpec spec = build_basis(2, field.degree);
  double v = 0.0;
  for (int l = 0; l < field.Ls; ++l)
    v += field.cell(i, j)[l] * theta_eval(spec, l, xi, eta, 0.0);
  return v;
}

}  // namespace hjader
