/*
  hj-ader: RKDG baseline.

  License: Apache-2.0
*/
#include "rkdg.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <string>

#include "basis.hpp"
#include "solver1d.hpp"
#include "solver2d.hpp"

namespace hjader {

namespace {

double cpu_now() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

}  // namespace

RkdgWorkspace1D make_rkdg_workspace_1d(int degree) {
  if (degree < 1 || degree > 3)
    fail(ErrorCode::unsupported_order, "rkdg: degree must be 1..3");
  RkdgWorkspace1D ws;
  ws.degree = degree;
  ws.Ls = degree + 1;
  ws.nq = degree + 1;
  ws.vol_rule = gauss_legendre(ws.nq, -0.5, 0.5);
  ws.phi.resize(static_cast<size_t>(ws.Ls) * ws.nq);
  ws.dphi.resize(ws.phi.size());
  ws.phiL.resize(ws.Ls);
  ws.phiR.resize(ws.Ls);
  ws.dphiL.resize(ws.Ls);
  ws.dphiR.resize(ws.Ls);
  ws.mass.assign(ws.Ls, 0.0);
  for (int m = 0; m < ws.Ls; ++m) {
    for (int q = 0; q < ws.nq; ++q) {
      ws.phi[m * ws.nq + q] = legendre_eval(m, ws.vol_rule.points[q]);
      ws.dphi[m * ws.nq + q] = legendre_deriv(m, ws.vol_rule.points[q]);
    }
    ws.phiL[m] = legendre_eval(m, 0.5);
    ws.phiR[m] = legendre_eval(m, -0.5);
    ws.dphiL[m] = legendre_deriv(m, 0.5);
    ws.dphiR[m] = legendre_deriv(m, -0.5);
  }
  QuadratureRule gm = gauss_legendre(degree + 2, -0.5, 0.5);
  for (int m = 0; m < ws.Ls; ++m)
    for (int q = 0; q < gm.size(); ++q) {
      double p = legendre_eval(m, gm.points[q]);
      ws.mass[m] += gm.weights[q] * p * p;
    }
  return ws;
}

void rkdg_residual(const ModalField1D& field, const HamiltonianModel& model,
                   const SolverConfig& cfg, RkdgWorkspace1D& ws, double* dwdt) {
  const Mesh1D& mesh = field.mesh;
  const int n = mesh.n, Ls = ws.Ls, nq = ws.nq;
  const bool periodic = cfg.boundary == BoundaryKind::periodic;
  std::vector<double>& rhs = ws.rhs;
  rhs.assign(static_cast<size_t>(n) * Ls, 0.0);

  for (int i = 0; i < n; ++i) {
    const double* w = field.cell(i);
    double* r = &rhs[static_cast<size_t>(i) * Ls];
    for (int q = 0; q < nq; ++q) {
      double u = 0.0;
      for (int l = 0; l < Ls; ++l) u += w[l] * ws.dphi[l * nq + q];
      u /= mesh.dx;
      double x = mesh.center(i) + mesh.dx * ws.vol_rule.points[q];
      double hv = model.eval(u, 0.0, x, 0.0);
      if (!std::isfinite(hv))
        fail(ErrorCode::step_failure, "rkdg_residual: non-finite Hamiltonian");
      double wq = ws.vol_rule.weights[q] * mesh.dx;
      for (int m = 0; m < Ls; ++m) r[m] += wq * hv * ws.phi[m * nq + q];
    }
  }

  const int nfaces = periodic ? n : n + 1;
  for (int f = 0; f < nfaces; ++f) {
    int iL = periodic ? f : f - 1;
    int iR = periodic ? (f + 1) % n : f;
    const double* wL = field.cell(std::clamp(iL, 0, n - 1));
    const double* wR = field.cell(std::clamp(iR, 0, n - 1));
    double phiL = 0, phiR = 0, uL = 0, uR = 0;
    for (int l = 0; l < Ls; ++l) {
      phiL += wL[l] * ws.phiL[l];
      phiR += wR[l] * ws.phiR[l];
      uL += wL[l] * ws.dphiL[l];
      uR += wR[l] * ws.dphiR[l];
    }
    uL /= mesh.dx;
    uR /= mesh.dx;
    double xf = periodic ? mesh.face(f + 1) : mesh.face(f);
    FaceEval fe = face_eval_1d(uL, uR, model, xf);
    double jump = phiR - phiL;
    double djump = uR - uL;
    double pen = cfg.penalty * mesh.dx * fe.lambda3 * djump;
    if (iL >= 0 && iL < n) {
      double* r = &rhs[static_cast<size_t>(iL) * Ls];
      for (int m = 0; m < Ls; ++m) r[m] += (fe.lambda1 * jump - pen) * ws.phiL[m];
    }
    if (iR >= 0 && iR < n) {
      double* r = &rhs[static_cast<size_t>(iR) * Ls];
      for (int m = 0; m < Ls; ++m) r[m] += (fe.lambda2 * jump - pen) * ws.phiR[m];
    }
  }

  for (int i = 0; i < n; ++i)
    for (int m = 0; m < Ls; ++m)
      dwdt[static_cast<size_t>(i) * Ls + m] =
          -rhs[static_cast<size_t>(i) * Ls + m] / (ws.mass[m] * mesh.dx);
}

double rkdg_compute_dt(const ModalField1D& field, const HamiltonianModel& model,
                       const SolverConfig& cfg, RkdgWorkspace1D& ws, double t_now) {
  const Mesh1D& mesh = field.mesh;
  double alpha = 0.0;
  for (int i = 0; i < mesh.n; ++i) {
    const double* w = field.cell(i);
    for (int q = 0; q < ws.nq; ++q) {
      double u = 0.0;
      for (int l = 0; l < ws.Ls; ++l) u += w[l] * ws.dphi[l * ws.nq + q];
      u /= mesh.dx;
      double x = mesh.center(i) + mesh.dx * ws.vol_rule.points[q];
      alpha = std::max(alpha, std::abs(model.d_p(u, 0.0, x, 0.0)));
    }
  }
  double dt = alpha > 0.0 ? cfg.cfl * mesh.dx / alpha : cfg.cfl * mesh.dx;
  return std::min(dt, cfg.t_final - t_now);
}

namespace {

template <typename Field, typename Residual>
void rk_advance(Field& field, int degree, double dt, std::vector<double>& u0,
                std::vector<double>& u1, Residual res) {
  // res(field_data_in_place) writes dwdt into the provided buffer.
  std::vector<double>& w = field.w;
  const size_t nsz = w.size();
  u0 = w;
  u1.resize(nsz);
  if (degree <= 2) {
    // SSP-RK3.
    res(w, u1);
    for (size_t s = 0; s < nsz; ++s) w[s] = u0[s] + dt * u1[s];
    res(w, u1);
    for (size_t s = 0; s < nsz; ++s) w[s] = 0.75 * u0[s] + 0.25 * (w[s] + dt * u1[s]);
    res(w, u1);
    for (size_t s = 0; s < nsz; ++s)
      w[s] = u0[s] / 3.0 + 2.0 / 3.0 * (w[s] + dt * u1[s]);
  } else {
    // Classical four-stage RK4.
    std::vector<double> ksum(nsz, 0.0), k(nsz);
    res(w, k);
    for (size_t s = 0; s < nsz; ++s) {
      ksum[s] += k[s];
      w[s] = u0[s] + 0.5 * dt * k[s];
    }
    res(w, k);
    for (size_t s = 0; s < nsz; ++s) {
      ksum[s] += 2.0 * k[s];
      w[s] = u0[s] + 0.5 * dt * k[s];
    }
    res(w, k);
    for (size_t s = 0; s < nsz; ++s) {
      ksum[s] += 2.0 * k[s];
      w[s] = u0[s] + dt * k[s];
    }
    res(w, k);
    for (size_t s = 0; s < nsz; ++s) w[s] = u0[s] + dt / 6.0 * (ksum[s] + k[s]);
  }
}

}  // namespace

void rkdg_step(ModalField1D& field, const HamiltonianModel& model, const SolverConfig& cfg,
               RkdgWorkspace1D& ws, double dt) {
  rk_advance(field, cfg.degree, dt, ws.u0, ws.u1,
             [&](std::vector<double>&, std::vector<double>& out) {
               rkdg_residual(field, model, cfg, ws, out.data());
             });
  if (cfg.limiter) apply_limiter_1d(field, cfg.boundary);
}

RunResult1D run_rkdg(const ProblemCase& pc, const SolverConfig& cfg, const Mesh1D& mesh) {
  cfg.validate();
  if (pc.model.dim != 1) fail(ErrorCode::invalid_argument, "run_rkdg: case is not 1D");
  RunResult1D out;
  double t0 = cpu_now();
  out.field = project_initial(pc, mesh, cfg.degree);
  RkdgWorkspace1D ws = make_rkdg_workspace_1d(cfg.degree);
  double t = 0.0;
  while (t < cfg.t_final - 1e-14) {
    double dt = rkdg_compute_dt(out.field, pc.model, cfg, ws, t);
    rkdg_step(out.field, pc.model, cfg, ws, dt);
    t += dt;
    ++out.steps;
  }
  out.t_end = t;
  out.cpu_seconds = cpu_now() - t0;
  return out;
}

RkdgWorkspace2D make_rkdg_workspace_2d(int degree) {
  if (degree < 1 || degree > 3)
    fail(ErrorCode::unsupported_order, "rkdg: degree must be 1..3");
  RkdgWorkspace2D ws;
  ws.degree = degree;
  ws.nq = degree + 1;
  BasisSpec spec = build_basis(2, degree);
  ws.Ls = spec.Ls;
  ws.vol_rule = gauss_legendre(ws.nq, -0.5, 0.5);
  const int nq = ws.nq, Ls = ws.Ls;
  ws.phi.resize(static_cast<size_t>(Ls) * nq * nq);
  ws.dxphi.resize(ws.phi.size());
  ws.dyphi.resize(ws.phi.size());
  for (int m = 0; m < Ls; ++m)
    for (int qx = 0; qx < nq; ++qx)
      for (int qy = 0; qy < nq; ++qy) {
        size_t s = (static_cast<size_t>(m) * nq + qx) * nq + qy;
        double xi = ws.vol_rule.points[qx], eta = ws.vol_rule.points[qy];
        ws.phi[s] = theta_eval(spec, m, xi, eta, 0.0);
        ws.dxphi[s] = theta_dxi(spec, m, xi, eta, 0.0);
        ws.dyphi[s] = theta_deta(spec, m, xi, eta, 0.0);
      }
  auto fill_face = [&](int dir, std::vector<double>& pl, std::vector<double>& pr,
                       std::vector<double>& dnl, std::vector<double>& dnr,
                       std::vector<double>& dtl, std::vector<double>& dtr) {
    pl.resize(static_cast<size_t>(Ls) * nq);
    pr.resize(pl.size());
    dnl.resize(pl.size());
    dnr.resize(pl.size());
    dtl.resize(pl.size());
    dtr.resize(pl.size());
    for (int m = 0; m < Ls; ++m)
      for (int q = 0; q < nq; ++q) {
        double s = ws.vol_rule.points[q];
        size_t at = static_cast<size_t>(m) * nq + q;
        double xiL = dir == 0 ? 0.5 : s, etaL = dir == 0 ? s : 0.5;
        double xiR = dir == 0 ? -0.5 : s, etaR = dir == 0 ? s : -0.5;
        pl[at] = theta_eval(spec, m, xiL, etaL, 0.0);
        pr[at] = theta_eval(spec, m, xiR, etaR, 0.0);
        dnl[at] = dir == 0 ? theta_dxi(spec, m, xiL, etaL, 0.0)
                           : theta_deta(spec, m, xiL, etaL, 0.0);
        dnr[at] = dir == 0 ? theta_dxi(spec, m, xiR, etaR, 0.0)
                           : theta_deta(spec, m, xiR, etaR, 0.0);
        dtl[at] = dir == 0 ? theta_deta(spec, m, xiL, etaL, 0.0)
                           : theta_dxi(spec, m, xiL, etaL, 0.0);
        dtr[at] = dir == 0 ? theta_deta(spec, m, xiR, etaR, 0.0)
                           : theta_dxi(spec, m, xiR, etaR, 0.0);
      }
  };
  fill_face(0, ws.xphiL, ws.xphiR, ws.xdnL, ws.xdnR, ws.xdtL, ws.xdtR);
  fill_face(1, ws.yphiL, ws.yphiR, ws.ydnL, ws.ydnR, ws.ydtL, ws.ydtR);
  VolumeTables vt = build_volume_tables(spec);
  ws.mass = vt.mass;
  return ws;
}

void rkdg_residual_2d(const ModalField2D& field, const HamiltonianModel& model,
                      const SolverConfig& cfg, RkdgWorkspace2D& ws, double* dwdt) {
  const Mesh2D& mesh = field.mesh;
  const int nx = mesh.nx, ny = mesh.ny, Ls = ws.Ls, nq = ws.nq;
  const bool periodic = cfg.boundary == BoundaryKind::periodic;
  std::vector<double>& rhs = ws.rhs;
  rhs.assign(static_cast<size_t>(nx) * ny * Ls, 0.0);

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const double* w = field.cell(i, j);
      double* r = &rhs[mesh.cell(i, j) * Ls];
      for (int qx = 0; qx < nq; ++qx)
        for (int qy = 0; qy < nq; ++qy) {
          size_t at = static_cast<size_t>(qx) * nq + qy;
          double u = 0.0, v = 0.0;
          for (int l = 0; l < Ls; ++l) {
            u += w[l] * ws.dxphi[l * nq * nq + at];
            v += w[l] * ws.dyphi[l * nq * nq + at];
          }
          u /= mesh.dx;
          v /= mesh.dy;
          double x = mesh.xcenter(i) + mesh.dx * ws.vol_rule.points[qx];
          double y = mesh.ycenter(j) + mesh.dy * ws.vol_rule.points[qy];
          double hv = model.eval(u, v, x, y);
          if (!std::isfinite(hv))
            fail(ErrorCode::step_failure, "rkdg_residual_2d: non-finite Hamiltonian");
          double wq = ws.vol_rule.weights[qx] * ws.vol_rule.weights[qy] * mesh.dx * mesh.dy;
          for (int m = 0; m < Ls; ++m) r[m] += wq * hv * ws.phi[m * nq * nq + at];
        }
    }

  auto rhs_of = [&](int i, int j) -> double* {
    if (i < 0 || i >= nx || j < 0 || j >= ny) return nullptr;
    return &rhs[mesh.cell(i, j) * Ls];
  };
  auto cell_of = [&](int i, int j) {
    return field.cell(std::clamp(i, 0, nx - 1), std::clamp(j, 0, ny - 1));
  };

  // x-faces.
  const int nfx = periodic ? nx : nx + 1;
  for (int f = 0; f < nfx; ++f) {
    int iL = periodic ? f : f - 1;
    int iR = periodic ? (f + 1) % nx : f;
    double xf = periodic ? mesh.xmin + (f + 1) * mesh.dx : mesh.xmin + f * mesh.dx;
    for (int j = 0; j < ny; ++j) {
      const double* wL = cell_of(iL, j);
      const double* wR = cell_of(iR, j);
      double* rL = rhs_of(iL, j);
      double* rR = rhs_of(iR, j);
      for (int q = 0; q < nq; ++q) {
        double phiL = 0, phiR = 0, uL = 0, uR = 0, vL = 0, vR = 0;
        for (int l = 0; l < Ls; ++l) {
          size_t at = static_cast<size_t>(l) * nq + q;
          phiL += wL[l] * ws.xphiL[at];
          phiR += wR[l] * ws.xphiR[at];
          uL += wL[l] * ws.xdnL[at];
          uR += wR[l] * ws.xdnR[at];
          vL += wL[l] * ws.xdtL[at];
          vR += wR[l] * ws.xdtR[at];
        }
        uL /= mesh.dx;
        uR /= mesh.dx;
        vL /= mesh.dy;
        vR /= mesh.dy;
        double y = mesh.ycenter(j) + mesh.dy * ws.vol_rule.points[q];
        FaceEval fe = face_eval_2d(0, uL, uR, 0.5 * (vL + vR), model, xf, y);
        double jump = phiR - phiL;
        double pen = cfg.penalty * mesh.dx * fe.lambda3 * (uR - uL);
        double wq = ws.vol_rule.weights[q] * mesh.dy;
        if (rL)
          for (int m = 0; m < Ls; ++m)
            rL[m] += wq * (fe.lambda1 * jump - pen) * ws.xphiL[static_cast<size_t>(m) * nq + q];
        if (rR)
          for (int m = 0; m < Ls; ++m)
            rR[m] += wq * (fe.lambda2 * jump - pen) * ws.xphiR[static_cast<size_t>(m) * nq + q];
      }
    }
  }
  // y-faces.
  const int nfy = periodic ? ny : ny + 1;
  for (int f = 0; f < nfy; ++f) {
    int jL = periodic ? f : f - 1;
    int jR = periodic ? (f + 1) % ny : f;
    double yf = periodic ? mesh.ymin + (f + 1) * mesh.dy : mesh.ymin + f * mesh.dy;
    for (int i = 0; i < nx; ++i) {
      const double* wL = cell_of(i, jL);
      const double* wR = cell_of(i, jR);
      double* rL = rhs_of(i, jL);
      double* rR = rhs_of(i, jR);
      for (int q = 0; q < nq; ++q) {
        double phiL = 0, phiR = 0, uL = 0, uR = 0, vL = 0, vR = 0;
        for (int l = 0; l < Ls; ++l) {
          size_t at = static_cast<size_t>(l) * nq + q;
          phiL += wL[l] * ws.yphiL[at];
          phiR += wR[l] * ws.yphiR[at];
          uL += wL[l] * ws.ydnL[at];  // normal = y derivative
          uR += wR[l] * ws.ydnR[at];
          vL += wL[l] * ws.ydtL[at];  // tangential = x derivative
          vR += wR[l] * ws.ydtR[at];
        }
        uL /= mesh.dy;
        uR /= mesh.dy;
        vL /= mesh.dx;
        vR /= mesh.dx;
        double x = mesh.xcenter(i) + mesh.dx * ws.vol_rule.points[q];
        FaceEval fe = face_eval_2d(1, uL, uR, 0.5 * (vL + vR), model, x, yf);
        double jump = phiR - phiL;
        double pen = cfg.penalty * mesh.dy * fe.lambda3 * (uR - uL);
        double wq = ws.vol_rule.weights[q] * mesh.dx;
        if (rL)
          for (int m = 0; m < Ls; ++m)
            rL[m] += wq * (fe.lambda1 * jump - pen) * ws.yphiL[static_cast<size_t>(m) * nq + q];
        if (rR)
          for (int m = 0; m < Ls; ++m)
            rR[m] += wq * (fe.lambda2 * jump - pen) * ws.yphiR[static_cast<size_t>(m) * nq + q];
      }
    }
  }

  const double cell = mesh.dx * mesh.dy;
  for (size_t c = 0; c < static_cast<size_t>(nx) * ny; ++c)
    for (int m = 0; m < Ls; ++m)
      dwdt[c * Ls + m] = -rhs[c * Ls + m] / (ws.mass[m] * cell);
}

double rkdg_compute_dt_2d(const ModalField2D& field, const HamiltonianModel& model,
                          const SolverConfig& cfg, RkdgWorkspace2D& ws, double t_now) {
  const Mesh2D& mesh = field.mesh;
  const int nq = ws.nq, Ls = ws.Ls;
  double alpha = 0.0;
  for (int i = 0; i < mesh.nx; ++i)
    for (int j = 0; j < mesh.ny; ++j) {
      const double* w = field.cell(i, j);
      for (int qx = 0; qx < nq; ++qx)
        for (int qy = 0; qy < nq; ++qy) {
          size_t at = static_cast<size_t>(qx) * nq + qy;
          double u = 0.0, v = 0.0;
          for (int l = 0; l < Ls; ++l) {
            u += w[l] * ws.dxphi[l * nq * nq + at];
            v += w[l] * ws.dyphi[l * nq * nq + at];
          }
          u /= mesh.dx;
          v /= mesh.dy;
          double x = mesh.xcenter(i) + mesh.dx * ws.vol_rule.points[qx];
          double y = mesh.ycenter(j) + mesh.dy * ws.vol_rule.points[qy];
          alpha = std::max({alpha, std::abs(model.d_p(u, v, x, y)),
                            std::abs(model.d_q(u, v, x, y))});
        }
    }
  double h = std::min(mesh.dx, mesh.dy);
  double dt = alpha > 0.0 ? cfg.cfl * h / alpha : cfg.cfl * h;
  return std::min(dt, cfg.t_final - t_now);
}

void rkdg_step_2d(ModalField2D& field, const HamiltonianModel& model,
                  const SolverConfig& cfg, RkdgWorkspace2D& ws, double dt) {
  rk_advance(field, cfg.degree, dt, ws.u0, ws.u1,
             [&](std::vector<double>&, std::vector<double>& out) {
               rkdg_residual_2d(field, model, cfg, ws, out.data());
             });
  if (cfg.limiter) apply_limiter_2d(field, cfg.boundary);
}

RunResult2D run_rkdg_2d(const ProblemCase& pc, const SolverConfig& cfg,
                            const Mesh2D& mesh) {
  cfg.validate();
  if (pc.model.dim != 2) fail(ErrorCode::invalid_argument, "run_rkdg_2d: case is not 2D");
  RunResult2D out;
  double t0 = cpu_now();
  out.field = project_initial_2d(pc, mesh, cfg.degree);
  RkdgWorkspace2D ws = make_rkdg_workspace_2d(cfg.degree);
  double t = 0.0;
  while (t < cfg.t_final - 1e-14) {
    double dt = rkdg_compute_dt_2d(out.field, pc.model, cfg, ws, t);
    rkdg_step_2d(out.field, pc.model, cfg, ws, dt);
    t += dt;
    ++out.steps;
  }
  out.t_end = t;
  out.cpu_seconds = cpu_now() - t0;
  return out;
}

}  // namespace hjader
