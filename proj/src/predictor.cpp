/*
  hj-ader: predictor iteration.

  The per-cell loop exploits everything that stays constant across the
  k+1 fixed-point iterations: tau = 0 Hamiltonian samples, the spatial
  (pinned-mode) part of the nodal derivatives, and the tau = 0 columns
  of the fused update operator.

  License: Apache-2.0
*/
#include "predictor.hpp"

#include <cmath>
#include <cstring>

#include "errors.hpp"
#include "linalg.hpp"

namespace hjader {

void predict(const double* w, const PredictorTables& t, const HamiltonianModel& model,
             double dt, double dx, double dy, double xc, double yc, double* qhat,
             double* hhat, PredictorScratch& s) {
  const int L = t.spec.L, Ls = t.spec.Ls, Ln = t.spec.Ln, Lt = L - Ls;
  const bool two_d = t.spec.dim == 2;
  s.resize(t);
  double* hbar = s.hbar.data();
  double* ubase = s.ubase.data();
  double* vbase = s.vbase.data();
  double* qbase = s.qbase.data();
  double* xn = s.xn.data();
  double* yn = s.yn.data();
  const double inv_dx = 1.0 / dx, inv_dy = 1.0 / dy;

  std::memcpy(qhat, w, sizeof(double) * Ls);
  std::memset(qhat + Ls, 0, sizeof(double) * Lt);

  for (int n = 0; n < Ln; ++n) {
    xn[n] = xc + dx * t.nodal_points[n][0];
    yn[n] = two_d ? yc + dy * t.nodal_points[n][1] : 0.0;
    ubase[n] = t.dxi_spatial.dot_row(n, qhat) * inv_dx;
    vbase[n] = two_d ? t.deta_spatial.dot_row(n, qhat) * inv_dy : 0.0;
  }

  // tau = 0 samples depend only on the pinned spatial modes: once.
  double guard = 0.0;
  for (int n = 0; n < t.n_tau0; ++n) {
    hbar[n] = dt * model.eval(ubase[n], vbase[n], xn[n], yn[n]);
    guard += hbar[n];
  }
  for (int i = 0; i < Lt; ++i) qbase[i] = t.iter_op0.dot_row(i, hbar);

  for (int iter = 0; iter < t.spec.order; ++iter) {
    const bool time_modes_zero = iter == 0;
    for (int n = t.n_tau0; n < Ln; ++n) {
      double u = ubase[n], v = vbase[n];
      if (!time_modes_zero) {
        u += t.dxi_time.dot_row(n, qhat) * inv_dx;
        if (two_d) v += t.deta_time.dot_row(n, qhat) * inv_dy;
      }
      hbar[n] = dt * model.eval(u, v, xn[n], yn[n]);
      guard += hbar[n];
    }
    for (int i = 0; i < Lt; ++i) qhat[Ls + i] = qbase[i] + t.iter_opT.dot_row(i, hbar);
  }
  if (!std::isfinite(guard))
    fail(ErrorCode::predictor_blowup, "predict: non-finite Hamiltonian value");
  t.sN2M.matvec(hbar, hhat);
}

void transcribe_hamiltonian(const double* qhat, const PredictorTables& t,
                            const HamiltonianModel& model, double dt, double dx, double dy,
                            double xc, double yc, double* hhat, PredictorScratch& s) {
  const bool two_d = t.spec.dim == 2;
  s.resize(t);
  for (int n = 0; n < t.spec.Ln; ++n) {
    double u = t.sDxi.dot_row(n, qhat) / dx;
    double v = two_d ? t.sDeta.dot_row(n, qhat) / dy : 0.0;
    double px = xc + dx * t.nodal_points[n][0];
    double py = two_d ? yc + dy * t.nodal_points[n][1] : 0.0;
    s.hbar[n] = dt * model.eval(u, v, px, py);
    if (!std::isfinite(s.hbar[n]))
      fail(ErrorCode::predictor_blowup, "predict: non-finite Hamiltonian value");
  }
  t.sN2M.matvec(s.hbar.data(), hhat);
}

double predictor_residual(const double* qhat, const double* hhat,
                          const PredictorTables& t) {
  const int Ls = t.spec.Ls, Lt = t.spec.L - Ls;
  double r = 0.0;
  for (int i = 0; i < Lt; ++i) {
    double v = qhat[Ls + i] + dot(t.Mhat.row(i), hhat + Ls, Lt) +
               dot(t.Mhat0.row(i), hhat, Ls);
    r = std::max(r, std::abs(v));
  }
  return r;
}

}  // namespace hjader
