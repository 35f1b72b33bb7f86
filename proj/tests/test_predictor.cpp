/*
  Predictor tests: zero-Hamiltonian behavior, polynomial exactness for
  linear advection in 1D and 2D, spatial-mode pinning, scaling
  covariance, and the fixed-point residual diagnostic.

  License: Apache-2.0
*/
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "predictor.hpp"

using namespace hjader;

namespace {

HamiltonianModel constant_model(double value) {
  HamiltonianModel m;
  m.dim = 1;
  m.eval = [value](double, double, double, double) { return value; };
  m.d_p = [](double, double, double, double) { return 0.0; };
  m.d_q = [](double, double, double, double) { return 0.0; };
  return m;
}

HamiltonianModel advection_1d() {
  HamiltonianModel m;
  m.dim = 1;
  m.eval = [](double p, double, double, double) { return p; };
  m.d_p = [](double, double, double, double) { return 1.0; };
  m.d_q = [](double, double, double, double) { return 0.0; };
  return m;
}

HamiltonianModel advection_2d(double a) {
  HamiltonianModel m;
  m.dim = 2;
  m.eval = [a](double p, double q, double, double) { return a * (p + q); };
  m.d_p = [a](double, double, double, double) { return a; };
  m.d_q = [a](double, double, double, double) { return a; };
  return m;
}

std::mt19937 rng(40917);
double urand() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }

}  // namespace

TEST_SUITE_BEGIN("predictor");

TEST_CASE("zero Hamiltonian freezes the solution in time") {
  for (int dim = 1; dim <= 2; ++dim)
    for (int k = 1; k <= 3; ++k) {
      PredictorTables t = make_predictor_tables(dim, k);
      std::vector<double> w(t.spec.Ls), q(t.spec.L), h(t.spec.L);
      for (auto& v : w) v = urand();
      PredictorScratch scratch;
      predict(w.data(), t, constant_model(0.0), 0.3, 0.2, 0.25, 0.0, 0.0, q.data(),
              h.data(), scratch);
      for (int l = 0; l < t.spec.Ls; ++l) CHECK(q[l] == w[l]);
      for (int l = t.spec.Ls; l < t.spec.L; ++l) CHECK(q[l] == 0.0);
      CHECK(predictor_residual(q.data(), h.data(), t) == 0.0);
    }
}

TEST_CASE("constant Hamiltonian produces the exact linear-in-time mode") {
  PredictorTables t = make_predictor_tables(1, 2);
  std::vector<double> w(3, 0.0), q(t.spec.L), h(t.spec.L);
  w[0] = 0.7;
  PredictorScratch scratch;
  const double dt = 0.2, c = -1.4;
  predict(w.data(), t, constant_model(c), dt, 0.5, 1.0, 0.0, 0.0, q.data(), h.data(),
          scratch);
  // q_h = w0 - dt*c*tau: the tau mode carries -dt*c, everything else 0.
  CHECK(q[3] == doctest::Approx(-dt * c).epsilon(1e-14));
  CHECK(std::abs(q[4]) < 1e-14);
  CHECK(std::abs(q[5]) < 1e-14);
}

TEST_CASE("1D linear advection is reproduced exactly") {
  // phi = x - x_c = dx * xi evolves as phi(x, t) = x - t, so the
  // spacetime solution is dx*xi - dt*tau: inside the k = 1 basis.
  PredictorTables t = make_predictor_tables(1, 1);
  const double dx = 0.3, dt = 0.17;
  std::vector<double> w = {0.0, dx}, q(3), h(3);
  PredictorScratch scratch;
  predict(w.data(), t, advection_1d(), dt, dx, 1.0, 0.0, 0.0, q.data(), h.data(), scratch);
  CHECK(q[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q[1] == doctest::Approx(dx).epsilon(1e-15));
  CHECK(q[2] == doctest::Approx(-dt).epsilon(1e-14));
  CHECK(predictor_residual(q.data(), h.data(), t) < 1e-15);
}

TEST_CASE("2D quadratic data under linear advection is exact") {
  // phi(x,y,t) = phi0(x - a t, y - a t) with quadratic phi0 lies in the
  // 10-mode spacetime basis; the predictor must reproduce it to 1e-12.
  PredictorTables t = third_order_2d_tables();
  const BasisSpec& s = t.spec;
  const double dx = 0.4, dy = 0.3, dt = 0.12, a = 0.8;
  const double c[6] = {0.3, -1.1, 0.7, 0.45, -0.2, 0.9};
  auto phi0 = [&](double x, double y) {
    return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * y * y + c[5] * x * y;
  };
  auto exact = [&](double xi, double eta, double tau) {
    return phi0(dx * xi - a * dt * tau, dy * eta - a * dt * tau);
  };

  // Project the initial slice and the full spacetime solution onto the
  // basis with a least-squares fit at the nodal points plus quadrature
  // consistency: here the evaluation at the 13 nodes determines the
  // coefficients because the solution lies in the span.
  std::vector<double> nodal(s.Ln);
  for (int n = 0; n < s.Ln; ++n)
    nodal[n] = exact(t.nodal_points[n][0], t.nodal_points[n][1], t.nodal_points[n][2]);
  std::vector<double> expect(s.L);
  matvec(t.N2M, nodal.data(), expect.data());

  std::vector<double> w(expect.begin(), expect.begin() + s.Ls);
  std::vector<double> q(s.L), h(s.L);
  PredictorScratch scratch;
  predict(w.data(), t, advection_2d(a), dt, dx, dy, 0.0, 0.0, q.data(), h.data(), scratch);
  double scale = 0.0;
  for (double v : expect) scale = std::max(scale, std::abs(v));
  for (int l = 0; l < s.L; ++l) CHECK(std::abs(q[l] - expect[l]) <= 1e-12 * scale);
  CHECK(predictor_residual(q.data(), h.data(), t) <= 1e-12 * scale);
}

TEST_CASE("spatial modes stay pinned") {
  PredictorTables t = make_predictor_tables(2, 3);
  ProblemCase pc = catalog("burgers-2d");
  std::vector<double> w(t.spec.Ls), q(t.spec.L), h(t.spec.L);
  for (auto& v : w) v = 0.3 * urand();
  PredictorScratch scratch;
  predict(w.data(), t, pc.model, 0.01, 0.1, 0.1, 0.0, 0.0, q.data(), h.data(), scratch);
  for (int l = 0; l < t.spec.Ls; ++l) CHECK(q[l] == w[l]);
}

TEST_CASE("scaling covariance for unit advection") {
  PredictorTables t = make_predictor_tables(1, 2);
  std::vector<double> w = {0.2, -0.5, 0.07};
  std::vector<double> q1(t.spec.L), q2(t.spec.L), h(t.spec.L);
  PredictorScratch scratch;
  predict(w.data(), t, advection_1d(), 0.08, 0.4, 1.0, 0.0, 0.0, q1.data(), h.data(),
          scratch);
  const double c = 4.0;  // power of two: exact rescaling
  predict(w.data(), t, advection_1d(), c * 0.08, c * 0.4, 1.0, 0.0, 0.0, q2.data(),
          h.data(), scratch);
  for (int l = 0; l < t.spec.L; ++l) CHECK(q1[l] == q2[l]);
}

TEST_CASE("residual decreases across iterations on smooth nonlinear data") {
  // Replicate the fixed-point loop with a controllable iteration count.
  PredictorTables t = make_predictor_tables(1, 2);
  ProblemCase pc = catalog("burgers-1d");
  const double dx = 2.0 / 40, dt = 0.4 * dx;
  // Smooth initial data modes for the cell centered at x = 0.13.
  const double xc = 0.13;
  std::vector<double> w = {-std::cos(3.14159265358979323846 * xc), 0.15, 0.01};

  auto run_iters = [&](int iters) {
    std::vector<double> q(t.spec.L, 0.0), h(t.spec.L, 0.0);
    for (int l = 0; l < t.spec.Ls; ++l) q[l] = w[l];
    PredictorScratch scratch;
    for (int it = 0; it < iters; ++it) {
      transcribe_hamiltonian(q.data(), t, pc.model, dt, dx, 1.0, xc, 0.0, h.data(), scratch);
      for (int i = 0; i < t.spec.L - t.spec.Ls; ++i) {
        double v = 0;
        for (int j = 0; j < t.spec.L - t.spec.Ls; ++j)
          v -= t.Mhat(i, j) * h[t.spec.Ls + j];
        for (int j = 0; j < t.spec.Ls; ++j) v -= t.Mhat0(i, j) * h[j];
        q[t.spec.Ls + i] = v;
      }
    }
    PredictorScratch s2;
    std::vector<double> hh(t.spec.L);
    transcribe_hamiltonian(q.data(), t, pc.model, dt, dx, 1.0, xc, 0.0, hh.data(), s2);
    return predictor_residual(q.data(), hh.data(), t);
  };

  double r1 = run_iters(1), r2 = run_iters(2), r4 = run_iters(4);
  CHECK(r1 > 0.0);
  CHECK(r2 < r1);
  CHECK(r4 < r2);
}

TEST_CASE("non-finite Hamiltonian raises predictor-blowup") {
  PredictorTables t = make_predictor_tables(1, 1);
  HamiltonianModel bad = constant_model(0.0);
  bad.eval = [](double, double, double, double) {
    return std::numeric_limits<double>::infinity();
  };
  std::vector<double> w = {0.0, 1.0}, q(3), h(3);
  PredictorScratch scratch;
  CHECK_THROWS_AS(
      predict(w.data(), t, bad, 0.1, 0.1, 1.0, 0.0, 0.0, q.data(), h.data(), scratch),
      Error);
}

TEST_SUITE_END();
