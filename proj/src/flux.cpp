/*
  hj-ader: face evaluation and trace/volume operator assembly.

  License: Apache-2.0
*/
#include "flux.hpp"

#include <cmath>

#include "errors.hpp"

namespace hjader {

namespace {

// Equal-slope threshold for the Roe difference quotient.
bool slopes_equal(double pL, double pR) {
  return std::abs(pR - pL) <= 1e-12 * (1.0 + std::abs(pL) + std::abs(pR));
}

}  // namespace

FaceEval make_face_eval(double htilde, double h1_left, double h1_right) {
  FaceEval fe;
  fe.htilde = htilde;
  fe.delta = std::max({0.0, htilde - h1_left, h1_right - htilde});
  fe.S = std::max(fe.delta, std::abs(htilde));
  fe.lambda1 = std::min(htilde, 0.0);
  fe.lambda2 = std::max(htilde, 0.0);
  fe.lambda3 = fe.S - std::abs(htilde);
  return fe;
}

double roe_speed_1d(double pL, double pR, const HamiltonianModel& model, double x) {
  if (slopes_equal(pL, pR))
    return 0.5 * (model.d_p(pL, 0, x, 0) + model.d_p(pR, 0, x, 0));
  return (model.eval(pR, 0, x, 0) - model.eval(pL, 0, x, 0)) / (pR - pL);
}

void entropy_params_1d(double pL, double pR, const HamiltonianModel& model, double x,
                       double& delta, double& S) {
  FaceEval fe = face_eval_1d(pL, pR, model, x);
  delta = fe.delta;
  S = fe.S;
}

FaceEval face_eval_1d(double pL, double pR, const HamiltonianModel& model, double x) {
  double htilde = roe_speed_1d(pL, pR, model, x);
  return make_face_eval(htilde, model.d_p(pL, 0, x, 0), model.d_p(pR, 0, x, 0));
}

double roe_speed_2d(int normal_dir, double pL, double pR, double tangential_avg,
                    const HamiltonianModel& model, double x, double y) {
  if (normal_dir == 0) {
    if (slopes_equal(pL, pR))
      return 0.5 * (model.d_p(pL, tangential_avg, x, y) + model.d_p(pR, tangential_avg, x, y));
    return (model.eval(pR, tangential_avg, x, y) - model.eval(pL, tangential_avg, x, y)) /
           (pR - pL);
  }
  if (slopes_equal(pL, pR))
    return 0.5 * (model.d_q(tangential_avg, pL, x, y) + model.d_q(tangential_avg, pR, x, y));
  return (model.eval(tangential_avg, pR, x, y) - model.eval(tangential_avg, pL, x, y)) /
         (pR - pL);
}

FaceEval face_eval_2d(int normal_dir, double pL, double pR, double tangential_avg,
                      const HamiltonianModel& model, double x, double y) {
  double htilde = roe_speed_2d(normal_dir, pL, pR, tangential_avg, model, x, y);
  double h1L, h1R;
  if (normal_dir == 0) {
    h1L = model.d_p(pL, tangential_avg, x, y);
    h1R = model.d_p(pR, tangential_avg, x, y);
  } else {
    h1L = model.d_q(tangential_avg, pL, x, y);
    h1R = model.d_q(tangential_avg, pR, x, y);
  }
  return make_face_eval(htilde, h1L, h1R);
}

FaceTraceTables build_face_tables(const BasisSpec& spec, int normal_dir) {
  if (spec.dim == 1 && normal_dir != 0)
    fail(ErrorCode::invalid_argument, "build_face_tables: 1D has only x-faces");
  const int k = spec.degree, L = spec.L, Ls = spec.Ls;
  const int ng = spec.dim == 2 ? k + 1 : 1;
  FaceTraceTables ft;
  ft.Ls = Ls;
  ft.L = L;
  ft.valL = Mat(ng, L);
  ft.valR = Mat(ng, L);
  ft.derL = Mat(ng, L);
  ft.derR = Mat(ng, L);
  ft.dbarL_n.assign(L, 0.0);
  ft.dbarR_n.assign(L, 0.0);
  ft.dbarL_t.assign(L, 0.0);
  ft.dbarR_t.assign(L, 0.0);
  ft.cL.resize(Ls);
  ft.cR.resize(Ls);
  ft.weight_index.resize(Ls);

  // Exact for the degree <= 2k integrands below.
  QuadratureRule gs = gauss_legendre(k + 2, -0.5, 0.5);
  QuadratureRule gt = gauss_legendre(k + 2, 0.0, 1.0);

  auto at = [&](int l, double n, double s, double tau, bool deriv) {
    // Evaluate theta_l (or its normal derivative) with face-normal
    // coordinate n and tangential coordinate s.
    double xi = normal_dir == 0 ? n : s;
    double eta = normal_dir == 0 ? s : n;
    if (!deriv) return theta_eval(spec, l, xi, eta, tau);
    return normal_dir == 0 ? theta_dxi(spec, l, xi, eta, tau)
                           : theta_deta(spec, l, xi, eta, tau);
  };
  auto tangential_deriv = [&](int l, double n, double s, double tau) {
    double xi = normal_dir == 0 ? n : s;
    double eta = normal_dir == 0 ? s : n;
    return normal_dir == 0 ? theta_deta(spec, l, xi, eta, tau)
                           : theta_dxi(spec, l, xi, eta, tau);
  };

  for (int g = 0; g < ng; ++g) {
    for (int l = 0; l < L; ++l) {
      double vL = 0, vR = 0, dL = 0, dR = 0;
      for (int it = 0; it < gt.size(); ++it) {
        double tau = gt.points[it], wt = gt.weights[it];
        if (spec.dim == 1) {
          vL += wt * at(l, 0.5, 0.0, tau, false);
          vR += wt * at(l, -0.5, 0.0, tau, false);
          dL += wt * at(l, 0.5, 0.0, tau, true);
          dR += wt * at(l, -0.5, 0.0, tau, true);
        } else {
          for (int is = 0; is < gs.size(); ++is) {
            double sv = gs.points[is];
            double w = wt * gs.weights[is] * legendre_eval(g, sv);
            vL += w * at(l, 0.5, sv, tau, false);
            vR += w * at(l, -0.5, sv, tau, false);
            dL += w * at(l, 0.5, sv, tau, true);
            dR += w * at(l, -0.5, sv, tau, true);
          }
        }
      }
      ft.valL(g, l) = vL;
      ft.valR(g, l) = vR;
      ft.derL(g, l) = dL;
      ft.derR(g, l) = dR;
    }
  }

  for (int l = 0; l < L; ++l) {
    ft.dbarL_n[l] = at(l, 0.5, 0.0, 0.5, true);
    ft.dbarR_n[l] = at(l, -0.5, 0.0, 0.5, true);
    if (spec.dim == 2) {
      ft.dbarL_t[l] = tangential_deriv(l, 0.5, 0.0, 0.5);
      ft.dbarR_t[l] = tangential_deriv(l, -0.5, 0.0, 0.5);
    }
  }

  for (int m = 0; m < Ls; ++m) {
    const ModeIndex& mi = spec.modes[m];
    int norm_deg = normal_dir == 0 ? mi.a : mi.b;
    int tan_deg = normal_dir == 0 ? mi.b : mi.a;
    ft.cL[m] = legendre_eval(norm_deg, 0.5);
    ft.cR[m] = legendre_eval(norm_deg, -0.5);
    ft.weight_index[m] = spec.dim == 2 ? tan_deg : 0;
  }
  ft.sValL = SparseRows::from(ft.valL);
  ft.sValR = SparseRows::from(ft.valR);
  ft.sDerL = SparseRows::from(ft.derL);
  ft.sDerR = SparseRows::from(ft.derR);
  ft.sDbarL_n = sparse_of_vector(ft.dbarL_n);
  ft.sDbarR_n = sparse_of_vector(ft.dbarR_n);
  ft.sDbarL_t = sparse_of_vector(ft.dbarL_t);
  ft.sDbarR_t = sparse_of_vector(ft.dbarR_t);
  return ft;
}

VolumeTables build_volume_tables(const BasisSpec& spec) {
  const int k = spec.degree, L = spec.L, Ls = spec.Ls;
  VolumeTables vt;
  vt.W = Mat(Ls, L);
  vt.mass.assign(Ls, 0.0);
  QuadratureRule gs = gauss_legendre(k + 2, -0.5, 0.5);
  QuadratureRule gt = gauss_legendre(k + 2, 0.0, 1.0);
  auto add = [&](double xi, double eta, double tau, double w) {
    for (int m = 0; m < Ls; ++m) {
      double pm = theta_eval(spec, m, xi, eta, tau);
      for (int l = 0; l < L; ++l) vt.W(m, l) += w * pm * theta_eval(spec, l, xi, eta, tau);
    }
  };
  if (spec.dim == 1) {
    for (int ix = 0; ix < gs.size(); ++ix)
      for (int it = 0; it < gt.size(); ++it)
        add(gs.points[ix], 0.0, gt.points[it], gs.weights[ix] * gt.weights[it]);
  } else {
    for (int ix = 0; ix < gs.size(); ++ix)
      for (int iy = 0; iy < gs.size(); ++iy)
        for (int it = 0; it < gt.size(); ++it)
          add(gs.points[ix], gs.points[iy], gt.points[it],
              gs.weights[ix] * gs.weights[iy] * gt.weights[it]);
  }
  // The tau integral spans [0,1], so W(m, m) is the spatial mass entry.
  for (int m = 0; m < Ls; ++m) vt.mass[m] = vt.W(m, m);
  vt.sW = SparseRows::from(vt.W);
  return vt;
}

void volume_integral(const double* hhat, const VolumeTables& vt, double dx, double dy,
                     double* out) {
  const double cell = dx * dy;
  for (int m = 0; m < vt.W.rows; ++m) out[m] = cell * vt.sW.dot_row(m, hhat);
}

void barycenter_derivatives(const double* qL, const double* qR, const FaceTraceTables& ft,
                            double d_normal, double d_tangential, int dim, double& uL,
                            double& uR, double& vL, double& vR) {
  uL = ft.sDbarL_n.dot_row(0, qL) / d_normal;
  uR = ft.sDbarR_n.dot_row(0, qR) / d_normal;
  if (dim == 2) {
    vL = ft.sDbarL_t.dot_row(0, qL) / d_tangential;
    vR = ft.sDbarR_t.dot_row(0, qR) / d_tangential;
  } else {
    vL = vR = 0.0;
  }
}

void face_contributions(const double* qL, const double* qR, const FaceEval& fe, double C,
                        double dt, double face_len, const FaceTraceTables& ft, double* incL,
                        double* incR) {
  const int ng = ft.valL.rows;
  double jump_val[4], jump_der[4];
  for (int g = 0; g < ng; ++g) {
    jump_val[g] = ft.sValR.dot_row(g, qR) - ft.sValL.dot_row(g, qL);
    jump_der[g] = ft.sDerR.dot_row(g, qR) - ft.sDerL.dot_row(g, qL);
  }
  const double scale = dt * face_len;
  for (int m = 0; m < ft.Ls; ++m) {
    int g = ft.weight_index[m];
    double common = C * fe.lambda3 * jump_der[g];
    incL[m] += (fe.lambda1 * jump_val[g] - common) * ft.cL[m] * scale;
    incR[m] += (fe.lambda2 * jump_val[g] - common) * ft.cR[m] * scale;
  }
}

}  // namespace hjader
