/*
  Flux tests: Roe speeds and entropy parameters, barycenter traces,
  frozen-coefficient face increments against a spacetime quadrature
  oracle, explicit volume integrals, and lambda identities.

  License: Apache-2.0
*/
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "flux.hpp"
#include "hamiltonian.hpp"
#include "predictor.hpp"
#include "solver1d.hpp"

using namespace hjader;

namespace {

std::mt19937 rng(515253);
double urand() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }

HamiltonianModel burgers_shifted() {  // H = (p+1)^2 / 2
  HamiltonianModel m;
  m.dim = 1;
  m.eval = [](double p, double, double, double) { return 0.5 * (p + 1) * (p + 1); };
  m.d_p = [](double p, double, double, double) { return p + 1; };
  m.d_q = [](double, double, double, double) { return 0.0; };
  return m;
}

// Quadrature oracle: the four face terms with lambdas held at their
// barycenter values but traces integrated exactly over face x time.
void face_oracle(const BasisSpec& spec, int normal_dir, const double* qL, const double* qR,
                 const FaceEval& fe, double C, double dt, double face_len,
                 std::vector<double>& incL, std::vector<double>& incR) {
  QuadratureRule gs = gauss_legendre(6, -0.5, 0.5);
  QuadratureRule gt = gauss_legendre(6, 0.0, 1.0);
  incL.assign(spec.Ls, 0.0);
  incR.assign(spec.Ls, 0.0);
  auto eval_at = [&](const double* q, double nrm, double s, double tau, int deriv) {
    double xi = normal_dir == 0 ? nrm : s;
    double eta = normal_dir == 0 ? s : nrm;
    double v = 0;
    for (int l = 0; l < spec.L; ++l) {
      double b;
      if (deriv == 0)
        b = theta_eval(spec, l, xi, eta, tau);
      else if (normal_dir == 0)
        b = theta_dxi(spec, l, xi, eta, tau);
      else
        b = theta_deta(spec, l, xi, eta, tau);
      v += q[l] * b;
    }
    return v;
  };
  const bool two_d = spec.dim == 2;
  for (int it = 0; it < gt.size(); ++it)
    for (int is = 0; is < (two_d ? gs.size() : 1); ++is) {
      double tau = gt.points[it];
      double s = two_d ? gs.points[is] : 0.0;
      double wq = gt.weights[it] * (two_d ? gs.weights[is] : 1.0);
      double jump = eval_at(qR, -0.5, s, tau, 0) - eval_at(qL, 0.5, s, tau, 0);
      double djump = eval_at(qR, -0.5, s, tau, 1) - eval_at(qL, 0.5, s, tau, 1);
      for (int m = 0; m < spec.Ls; ++m) {
        double xiL = normal_dir == 0 ? 0.5 : s, etaL = normal_dir == 0 ? s : 0.5;
        double xiR = normal_dir == 0 ? -0.5 : s, etaR = normal_dir == 0 ? s : -0.5;
        double phiLm = theta_eval(spec, m, xiL, etaL, 0.0);
        double phiRm = theta_eval(spec, m, xiR, etaR, 0.0);
        incL[m] += wq * (fe.lambda1 * jump - C * fe.lambda3 * djump) * phiLm;
        incR[m] += wq * (fe.lambda2 * jump - C * fe.lambda3 * djump) * phiRm;
      }
    }
  for (int m = 0; m < spec.Ls; ++m) {
    incL[m] *= dt * face_len;
    incR[m] *= dt * face_len;
  }
}

}  // namespace

TEST_SUITE_BEGIN("flux");

TEST_CASE("Roe speed, 1D") {
  HamiltonianModel m = burgers_shifted();
  CHECK(roe_speed_1d(0.0, 1.0, m, 0.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(roe_speed_1d(0.4, 0.4, m, 0.0) == doctest::Approx(1.4).epsilon(1e-14));
  // Continuity across the equal-slope branch.
  double a = roe_speed_1d(0.3, 0.3 + 1e-15, m, 0.0);
  CHECK(std::abs(a - m.d_p(0.3, 0, 0, 0)) < 1e-9);
}

TEST_CASE("entropy parameters, 1D") {
  HamiltonianModel m = burgers_shifted();
  double delta, S;
  // Transonic rarefaction: pL = -2, pR = 0.
  entropy_params_1d(-2.0, 0.0, m, 0.0, delta, S);
  CHECK(delta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(S == doctest::Approx(1.0).epsilon(1e-14));
  FaceEval fe = face_eval_1d(-2.0, 0.0, m, 0.0);
  CHECK(fe.htilde == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(fe.lambda3 == doctest::Approx(1.0).epsilon(1e-14));

  // No jump: delta = 0, S = |H1|, lambda3 = 0.
  entropy_params_1d(0.7, 0.7, m, 0.0, delta, S);
  CHECK(delta == 0.0);
  CHECK(S == doctest::Approx(1.7).epsilon(1e-14));
  CHECK(face_eval_1d(0.7, 0.7, m, 0.0).lambda3 == 0.0);

  // Linear Hamiltonian never activates the penalty.
  HamiltonianModel lin;
  lin.dim = 1;
  lin.eval = [](double p, double, double, double) { return -2.5 * p; };
  lin.d_p = [](double, double, double, double) { return -2.5; };
  lin.d_q = [](double, double, double, double) { return 0.0; };
  for (int r = 0; r < 20; ++r) {
    FaceEval f = face_eval_1d(urand(), urand(), lin, 0.0);
    // The difference quotient leaves ulp-level residue in delta.
    CHECK(f.delta <= 1e-14);
    CHECK(f.lambda3 <= 1e-14);
    CHECK(f.htilde == doctest::Approx(-2.5).epsilon(1e-12));
  }
}

TEST_CASE("Roe speed, 2D") {
  ProblemCase b2 = catalog("burgers-2d");
  CHECK(roe_speed_2d(0, 0.0, 1.0, 0.0, b2.model, 0, 0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(roe_speed_2d(0, 0.25, 0.25, 0.1, b2.model, 0, 0) ==
        doctest::Approx(1.35).epsilon(1e-14));

  // H independent of q reduces to the 1D Roe speed.
  HamiltonianModel m1 = burgers_shifted();
  HamiltonianModel m2 = m1;
  m2.dim = 2;
  for (int r = 0; r < 30; ++r) {
    double pL = urand(), pR = urand(), qbar = urand();
    CHECK(roe_speed_2d(0, pL, pR, qbar, m2, 0, 0) ==
          doctest::Approx(roe_speed_1d(pL, pR, m1, 0)).epsilon(1e-13));
  }
}

TEST_CASE("lambda identities") {
  ProblemCase pc = catalog("noncvx-cos-1d");
  for (int r = 0; r < 200; ++r) {
    FaceEval fe = face_eval_1d(2 * urand(), 2 * urand(), pc.model, 0.0);
    CHECK(fe.lambda1 <= 0.0);
    CHECK(fe.lambda2 >= 0.0);
    CHECK(fe.lambda1 + fe.lambda2 == doctest::Approx(fe.htilde).epsilon(1e-15));
    CHECK(fe.lambda3 >= 0.0);
    CHECK(fe.S >= std::abs(fe.htilde));
    if (fe.htilde != 0.0) CHECK(fe.lambda1 * fe.lambda2 == 0.0);
  }
}

TEST_CASE("barycenter derivative traces") {
  BasisSpec spec = build_basis(2, 2);
  FaceTraceTables ft = build_face_tables(spec, 0);
  const double dx = 0.2, dy = 0.4;

  std::vector<double> qL(spec.L, 0.0), qR(spec.L, 0.0);
  qL[1] = 1.0;  // only the xi mode
  double uL, uR, vL, vR;
  barycenter_derivatives(qL.data(), qR.data(), ft, dx, dy, 2, uL, uR, vL, vR);
  CHECK(uL == doctest::Approx(1.0 / dx).epsilon(1e-14));
  CHECK(uR == 0.0);

  // Constant field: all traces vanish.
  std::fill(qL.begin(), qL.end(), 0.0);
  qL[0] = 2.0;
  qR[0] = 2.0;
  barycenter_derivatives(qL.data(), qR.data(), ft, dx, dy, 2, uL, uR, vL, vR);
  CHECK(uL == 0.0);
  CHECK(uR == 0.0);
  CHECK(vL == 0.0);
  CHECK(vR == 0.0);

  // Random states against direct evaluation at (+-1/2, 0, 1/2).
  for (auto& v : qL) v = urand();
  for (auto& v : qR) v = urand();
  barycenter_derivatives(qL.data(), qR.data(), ft, dx, dy, 2, uL, uR, vL, vR);
  double euL = 0, euR = 0, evL = 0, evR = 0;
  for (int l = 0; l < spec.L; ++l) {
    euL += qL[l] * theta_dxi(spec, l, 0.5, 0.0, 0.5);
    euR += qR[l] * theta_dxi(spec, l, -0.5, 0.0, 0.5);
    evL += qL[l] * theta_deta(spec, l, 0.5, 0.0, 0.5);
    evR += qR[l] * theta_deta(spec, l, -0.5, 0.0, 0.5);
  }
  CHECK(uL == doctest::Approx(euL / dx).epsilon(1e-13));
  CHECK(uR == doctest::Approx(euR / dx).epsilon(1e-13));
  CHECK(vL == doctest::Approx(evL / dy).epsilon(1e-13));
  CHECK(vR == doctest::Approx(evR / dy).epsilon(1e-13));

  // The 2D third-order left trace is q1 + q3 + q8/2 in reference units.
  std::fill(qL.begin(), qL.end(), 0.0);
  qL[1] = 0.6;
  qL[3] = -0.2;
  qL[8] = 0.5;
  barycenter_derivatives(qL.data(), qR.data(), ft, 1.0, 1.0, 2, uL, uR, vL, vR);
  CHECK(uL == doctest::Approx(0.6 - 0.2 + 0.25).epsilon(1e-14));
}

TEST_CASE("face increments: constants and upwind directions") {
  BasisSpec spec = build_basis(2, 2);
  FaceTraceTables ft = build_face_tables(spec, 0);
  const double dt = 0.03, dy = 0.2, C = 0.25;

  // Identical constant states produce no increments.
  std::vector<double> qL(spec.L, 0.0), qR(spec.L, 0.0), incL(spec.Ls, 0.0),
      incR(spec.Ls, 0.0);
  qL[0] = qR[0] = 1.7;
  FaceEval fe = make_face_eval(0.8, 0.8, 0.8);
  face_contributions(qL.data(), qR.data(), fe, C, dt, dy, ft, incL.data(), incR.data());
  for (int m = 0; m < spec.Ls; ++m) {
    CHECK(incL[m] == 0.0);
    CHECK(incR[m] == 0.0);
  }

  // Unit jump in the right mean with positive speed: the left cell sees
  // the min-part (zero), the right cell the max-part.
  std::fill(qL.begin(), qL.end(), 0.0);
  std::fill(qR.begin(), qR.end(), 0.0);
  qR[0] = 1.0;
  face_contributions(qL.data(), qR.data(), fe, C, dt, dy, ft, incL.data(), incR.data());
  CHECK(incL[0] == 0.0);
  CHECK(incR[0] == doctest::Approx(fe.lambda2 * 1.0 * dt * dy).epsilon(1e-14));

  // Negative speed mirrors it.
  std::fill(incL.begin(), incL.end(), 0.0);
  std::fill(incR.begin(), incR.end(), 0.0);
  FaceEval fen = make_face_eval(-0.8, -0.8, -0.8);
  face_contributions(qL.data(), qR.data(), fen, C, dt, dy, ft, incL.data(), incR.data());
  CHECK(incL[0] == doctest::Approx(fen.lambda1 * 1.0 * dt * dy).epsilon(1e-14));
  CHECK(incR[0] == 0.0);
}

TEST_CASE("face increments match the quadrature oracle") {
  for (int dim = 1; dim <= 2; ++dim)
    for (int k = 1; k <= 3; ++k)
      for (int dir = 0; dir < dim; ++dir) {
        BasisSpec spec = build_basis(dim, k);
        FaceTraceTables ft = build_face_tables(spec, dir);
        std::vector<double> qL(spec.L), qR(spec.L);
        for (auto& v : qL) v = urand();
        for (auto& v : qR) v = urand();
        FaceEval fe = make_face_eval(-0.4, -0.9, 0.2);
        const double dt = 0.07, flen = 0.33, C = 0.25;
        std::vector<double> incL(spec.Ls, 0.0), incR(spec.Ls, 0.0), oL, oR;
        face_contributions(qL.data(), qR.data(), fe, C, dt, flen, ft, incL.data(),
                           incR.data());
        face_oracle(spec, dir, qL.data(), qR.data(), fe, C, dt, flen, oL, oR);
        for (int m = 0; m < spec.Ls; ++m) {
          CHECK(std::abs(incL[m] - oL[m]) < 1e-13);
          CHECK(std::abs(incR[m] - oR[m]) < 1e-13);
        }
      }
}

TEST_CASE("volume integrals: unit modes, zeros, quadrature oracle") {
  BasisSpec spec = build_basis(2, 2);
  VolumeTables vt = build_volume_tables(spec);
  const double dx = 0.3, dy = 0.7;

  std::vector<double> h(spec.L, 0.0), out(spec.Ls);
  h[0] = 1.0;
  volume_integral(h.data(), vt, dx, dy, out.data());
  CHECK(out[0] == doctest::Approx(dx * dy).epsilon(1e-14));
  for (int m = 1; m < spec.Ls; ++m) CHECK(std::abs(out[m]) < 1e-15);

  std::fill(h.begin(), h.end(), 0.0);
  volume_integral(h.data(), vt, dx, dy, out.data());
  for (int m = 0; m < spec.Ls; ++m) CHECK(out[m] == 0.0);

  // Explicit third-order coefficients.
  CHECK(vt.W(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(vt.W(0, 6) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(vt.W(0, 7) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(vt.W(1, 1) == doctest::Approx(1.0 / 12).epsilon(1e-14));
  CHECK(vt.W(1, 8) == doctest::Approx(1.0 / 24).epsilon(1e-14));
  CHECK(vt.W(2, 2) == doctest::Approx(1.0 / 12).epsilon(1e-14));
  CHECK(vt.W(2, 9) == doctest::Approx(1.0 / 24).epsilon(1e-14));
  CHECK(vt.W(3, 3) == doctest::Approx(1.0 / 180).epsilon(1e-14));
  CHECK(vt.W(4, 4) == doctest::Approx(1.0 / 180).epsilon(1e-14));
  CHECK(vt.W(5, 5) == doctest::Approx(1.0 / 144).epsilon(1e-14));

  // Random coefficients against tensor quadrature.
  for (auto& v : h) v = urand();
  volume_integral(h.data(), vt, dx, dy, out.data());
  QuadratureRule gs = gauss_legendre(5, -0.5, 0.5);
  QuadratureRule gt = gauss_legendre(5, 0.0, 1.0);
  for (int m = 0; m < spec.Ls; ++m) {
    double o = 0;
    for (int ix = 0; ix < 5; ++ix)
      for (int iy = 0; iy < 5; ++iy)
        for (int it = 0; it < 5; ++it) {
          double xi = gs.points[ix], eta = gs.points[iy], tau = gt.points[it];
          double hv = 0;
          for (int l = 0; l < spec.L; ++l) hv += h[l] * theta_eval(spec, l, xi, eta, tau);
          o += gs.weights[ix] * gs.weights[iy] * gt.weights[it] * hv *
               theta_eval(spec, m, xi, eta, tau);
        }
    CHECK(std::abs(out[m] - dx * dy * o) < 1e-13);
  }
}

TEST_CASE("frozen vs pointwise-quadratured face terms converge at high order") {
  // On smooth data away from transonic points (where min/max kink in the
  // lambdas), freezing the coefficients at the face barycenter agrees
  // with pointwise-in-time evaluation at order >= k+1. Faces restricted
  // to a fixed window where H1 > 0 on this problem.
  ProblemCase pc = catalog("burgers-1d");
  for (int k = 1; k <= 3; ++k) {
    BasisSpec spec = build_basis(1, k);
    FaceTraceTables ft = build_face_tables(spec, 0);
    PredictorTables pt = make_predictor_tables(1, k);
    QuadratureRule gt = gauss_legendre(8, 0.0, 1.0);
    auto max_diff = [&](int n) {
      Mesh1D mesh(-1.0, 1.0, n);
      ModalField1D f = project_initial(pc, mesh, k);
      const double dt = 0.3 * mesh.dx;
      std::vector<double> qa(spec.L), qb(spec.L), ha(spec.L), hb(spec.L);
      PredictorScratch scratch;
      double num = 0;
      for (int i = 0; i + 1 < n; ++i) {
        double xf = mesh.face(i + 1);
        if (xf < 0.1 || xf > 0.9) continue;
        predict(f.cell(i), pt, pc.model, dt, mesh.dx, 1.0, mesh.center(i), 0.0, qa.data(),
                ha.data(), scratch);
        predict(f.cell(i + 1), pt, pc.model, dt, mesh.dx, 1.0, mesh.center(i + 1), 0.0,
                qb.data(), hb.data(), scratch);
        double uL, uR, vL, vR;
        barycenter_derivatives(qa.data(), qb.data(), ft, mesh.dx, 1.0, 1, uL, uR, vL, vR);
        FaceEval fe = face_eval_1d(uL, uR, pc.model, xf);
        std::vector<double> incL(spec.Ls, 0.0), incR(spec.Ls, 0.0);
        face_contributions(qa.data(), qb.data(), fe, 0.25, dt, 1.0, ft, incL.data(),
                           incR.data());
        // Pointwise-in-time lambdas, exact trace integration.
        std::vector<double> oL(spec.Ls, 0.0), oR(spec.Ls, 0.0);
        for (int it = 0; it < gt.size(); ++it) {
          double tau = gt.points[it], wq = gt.weights[it];
          double pL = 0, pR = 0, jv = 0;
          for (int l = 0; l < spec.L; ++l) {
            pL += qa[l] * theta_dxi(spec, l, 0.5, 0, tau);
            pR += qb[l] * theta_dxi(spec, l, -0.5, 0, tau);
            jv += qb[l] * theta_eval(spec, l, -0.5, 0, tau) -
                  qa[l] * theta_eval(spec, l, 0.5, 0, tau);
          }
          FaceEval pe = face_eval_1d(pL / mesh.dx, pR / mesh.dx, pc.model, xf);
          for (int m = 0; m < spec.Ls; ++m) {
            oL[m] += wq * dt * (pe.lambda1 * jv - 0.25 * pe.lambda3 * (pR - pL)) *
                     legendre_eval(m, 0.5);
            oR[m] += wq * dt * (pe.lambda2 * jv - 0.25 * pe.lambda3 * (pR - pL)) *
                     legendre_eval(m, -0.5);
          }
        }
        for (int m = 0; m < spec.Ls; ++m)
          num = std::max({num, std::abs(incL[m] - oL[m]), std::abs(incR[m] - oR[m])});
      }
      return num;
    };
    double c = max_diff(12), fptwo = max_diff(24);
    if (k == 1) {
      // No time-varying derivative trace at k = 1: freezing is exact.
      CHECK(c <= 1e-15);
      CHECK(fptwo <= 1e-15);
    } else {
      double order = std::log2(c / fptwo);
      INFO("k=", k, " coarse=", c, " fine=", fptwo, " order=", order);
      CHECK(order >= k + 1 - 0.5);
    }
  }
}

TEST_SUITE_END();
