/*
  hj-ader: the 13-case Hamiltonian catalog with exact-solution oracles.

  Smooth nonlinear cases are solved by Newton iteration on the
  characteristic equation x = x0 + t H'(phi0'(x0)) (2D variants reduce
  along s = x + y); the nonsmooth Riemann cases are referenced against a
  cached fine-mesh monotone Lax-Friedrichs solve.

  License: Apache-2.0
*/
#include "hamiltonian.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "errors.hpp"
#include "lax_friedrichs.hpp"

namespace hjader {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sign(0) = 0 by convention.
double sgn0(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Solves g(s0) = s0 + t * speed(s0) - s = 0 by Newton from s0 = s,
// for characteristic back-tracing on pre-singularity smooth solutions.
double characteristic_foot(double s, double t, const std::function<double(double)>& speed,
                           const std::function<double(double)>& dspeed) {
  double s0 = s;
  for (int it = 0; it < 100; ++it) {
    double g = s0 + t * speed(s0) - s;
    double dg = 1.0 + t * dspeed(s0);
    if (dg == 0.0) break;
    double step = g / dg;
    s0 -= step;
    if (std::abs(g) < 1e-13 && std::abs(step) < 1e-13) return s0;
  }
  if (std::abs(s0 + t * speed(s0) - s) < 1e-13) return s0;
  fail(ErrorCode::oracle_failure,
       "characteristic oracle: Newton did not converge (post-shock query?)");
}

// Fine-mesh Lax-Friedrichs reference, computed lazily per queried time.
struct LfOracle {
  ProblemCase base;  // copy without the exact member
  int n = 0;
  std::vector<std::pair<double, LfSolution1D>> cache1d;
  std::vector<std::pair<double, LfSolution2D>> cache2d;

  double eval(double x, double y, double t) {
    if (base.model.dim == 1) {
      for (auto& e : cache1d)
        if (std::abs(e.first - t) <= 1e-12) return e.second.eval(x);
      cache1d.emplace_back(t, lf_solve_1d(base, n, t));
      return cache1d.back().second.eval(x);
    }
    for (auto& e : cache2d)
      if (std::abs(e.first - t) <= 1e-12) return e.second.eval(x, y);
    cache2d.emplace_back(t, lf_solve_2d(base, n, t));
    return cache2d.back().second.eval(x, y);
  }
};

void attach_lf_oracle(ProblemCase& pc, int n) {
  auto oracle = std::make_shared<LfOracle>();
  oracle->base = pc;
  oracle->base.exact = nullptr;
  oracle->n = n;
  pc.exact = [oracle](double x, double y, double t) { return oracle->eval(x, y, t); };
}

ProblemCase make_linear_sinx_1d() {
  ProblemCase pc;
  pc.name = "linear-sinx-1d";
  pc.model.dim = 1;
  pc.model.space_dependent = true;
  pc.model.eval = [](double p, double, double x, double) { return std::sin(x) * p; };
  pc.model.d_p = [](double, double, double x, double) { return std::sin(x); };
  pc.model.d_q = [](double, double, double, double) { return 0.0; };
  pc.xmin = 0.0;
  pc.xmax = 2.0 * kPi;
  pc.initial = [](double x, double) { return std::sin(x); };
  pc.boundary = BoundaryKind::periodic;
  // atan2 form stays finite across x = pi where tan(x/2) blows up.
  pc.exact = [](double x, double, double t) {
    return std::sin(2.0 * std::atan2(std::exp(-t) * std::sin(0.5 * x), std::cos(0.5 * x)));
  };
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 1.0;
  return pc;
}

ProblemCase make_sign_coeff_1d() {
  ProblemCase pc;
  pc.name = "sign-coeff-1d";
  pc.model.dim = 1;
  pc.model.space_dependent = true;
  pc.model.eval = [](double p, double, double x, double) { return sgn0(std::cos(x)) * p; };
  pc.model.d_p = [](double, double, double x, double) { return sgn0(std::cos(x)); };
  pc.model.d_q = [](double, double, double, double) { return 0.0; };
  pc.xmin = 0.0;
  pc.xmax = 2.0 * kPi;
  pc.initial = [](double x, double) { return std::sin(x); };
  pc.boundary = BoundaryKind::periodic;
  // Piecewise transport: speed +1 around x = 0 (mod 2pi), -1 on
  // (pi/2, 3pi/2); shock in phi_x at pi/2, rarefaction fan centered at
  // 3pi/2 carrying the corner value -1.
  pc.exact = [](double x, double, double t) {
    if (t >= 0.5 * kPi)
      fail(ErrorCode::oracle_failure, "sign-coeff-1d oracle valid for t < pi/2");
    if (x <= 0.5 * kPi) return std::sin(x - t);
    if (x <= 1.5 * kPi - t) return std::sin(x + t);
    if (x <= 1.5 * kPi + t) return -1.0;
    return std::sin(x - t);
  };
  pc.smooth_mask = [](double x, double) {
    return (x >= 0.0 && x <= 1.0) || (x >= 2.0 && x <= 3.4) || (x >= 6.0 && x <= 2.0 * kPi);
  };
  pc.cfl = {0.10, 0.10, 0.03};
  pc.t_final_default = 1.0;
  return pc;
}

ProblemCase make_burgers_1d() {
  ProblemCase pc;
  pc.name = "burgers-1d";
  pc.model.dim = 1;
  pc.model.eval = [](double p, double, double, double) { return 0.5 * (p + 1) * (p + 1); };
  pc.model.d_p = [](double p, double, double, double) { return p + 1; };
  pc.model.d_q = [](double, double, double, double) { return 0.0; };
  pc.xmin = -1.0;
  pc.xmax = 1.0;
  pc.initial = [](double x, double) { return -std::cos(kPi * x); };
  pc.boundary = BoundaryKind::periodic;
  pc.exact = [](double x, double, double t) {
    auto speed = [t](double x0) { return kPi * std::sin(kPi * x0) + 1.0; };
    auto dspeed = [](double x0) { return kPi * kPi * std::cos(kPi * x0); };
    double x0 = characteristic_foot(x, t, speed, dspeed);
    double p0 = kPi * std::sin(kPi * x0);
    return -std::cos(kPi * x0) + t * 0.5 * (p0 * p0 - 1.0);
  };
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 0.5 / (kPi * kPi);
  return pc;
}

ProblemCase make_burgers_nonsmooth_1d() {
  ProblemCase pc;
  pc.name = "burgers-nonsmooth-1d";
  pc.model.dim = 1;
  pc.model.eval = [](double p, double, double, double) { return 0.5 * p * p; };
  pc.model.d_p = [](double p, double, double, double) { return p; };
  pc.model.d_q = [](double, double, double, double) { return 0.0; };
  pc.xmin = 0.0;
  pc.xmax = 2.0 * kPi;
  pc.initial = [](double x, double) { return std::abs(x - kPi); };
  pc.boundary = BoundaryKind::periodic;
  // Hopf-Lax for H = p^2/2: rarefaction smooths the corner at pi while
  // the periodic kink at 0 persists; minimize over adjacent images.
  pc.exact = [](double x, double, double t) {
    auto hopf = [t](double xi) {
      double d = std::abs(xi - kPi);
      if (t <= 0.0) return d;
      if (d >= t) return d - 0.5 * t;
      return d * d / (2.0 * t);
    };
    return std::min({hopf(x), hopf(x - 2.0 * kPi), hopf(x + 2.0 * kPi)});
  };
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 1.0;
  return pc;
}

ProblemCase make_noncvx_cos_1d() {
  ProblemCase pc;
  pc.name = "noncvx-cos-1d";
  pc.model.dim = 1;
  pc.model.eval = [](double p, double, double, double) { return -std::cos(p + 1); };
  pc.model.d_p = [](double p, double, double, double) { return std::sin(p + 1); };
  pc.model.d_q = [](double, double, double, double) { return 0.0; };
  pc.xmin = -1.0;
  pc.xmax = 1.0;
  pc.initial = [](double x, double) { return -std::cos(kPi * x); };
  pc.boundary = BoundaryKind::periodic;
  pc.exact = [](double x, double, double t) {
    auto p_of = [](double x0) { return kPi * std::sin(kPi * x0); };
    auto speed = [&](double x0) { return std::sin(p_of(x0) + 1.0); };
    auto dspeed = [&](double x0) {
      return std::cos(p_of(x0) + 1.0) * kPi * kPi * std::cos(kPi * x0);
    };
    double x0 = characteristic_foot(x, t, speed, dspeed);
    double p0 = p_of(x0);
    return -std::cos(kPi * x0) + t * (p0 * std::sin(p0 + 1.0) + std::cos(p0 + 1.0));
  };
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 0.5 / (kPi * kPi);
  return pc;
}

ProblemCase make_riemann_noncvx_1d() {
  ProblemCase pc;
  pc.name = "riemann-noncvx-1d";
  pc.model.dim = 1;
  pc.model.eval = [](double p, double, double, double) {
    return 0.25 * (p * p - 1.0) * (p * p - 4.0);
  };
  pc.model.d_p = [](double p, double, double, double) { return p * p * p - 2.5 * p; };
  pc.model.d_q = [](double, double, double, double) { return 0.0; };
  pc.xmin = -1.0;
  pc.xmax = 1.0;
  pc.initial = [](double x, double) { return -2.0 * std::abs(x); };
  pc.boundary = BoundaryKind::extrapolation;
  pc.cfl = {0.10, 0.10, 0.05};
  pc.t_final_default = 1.0;
  pc.needs_limiter = true;
  attach_lf_oracle(pc, 2000);
  return pc;
}

ProblemCase make_rotation_2d(bool smooth) {
  ProblemCase pc;
  pc.name = smooth ? "rotation-smooth-2d" : "rotation-cone-2d";
  pc.model.dim = 2;
  pc.model.space_dependent = true;
  pc.model.eval = [](double p, double q, double x, double y) { return -y * p + x * q; };
  pc.model.d_p = [](double, double, double, double y) { return -y; };
  pc.model.d_q = [](double, double, double x, double) { return x; };
  pc.xmin = pc.ymin = -1.0;
  pc.xmax = pc.ymax = 1.0;
  if (smooth) {
    const double sigma = 0.05;
    pc.initial = [sigma](double x, double y) {
      double dx = x - 0.4, dy = y - 0.4;
      return std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    };
  } else {
    pc.initial = [](double x, double y) {
      double r = std::hypot(x - 0.4, y - 0.4);
      if (r >= 0.3) return 0.0;
      if (r > 0.1) return 0.3 - r;
      return 0.2;
    };
  }
  pc.boundary = BoundaryKind::periodic;
  auto init = pc.initial;
  pc.exact = [init](double x, double y, double t) {
    double c = std::cos(t), s = std::sin(t);
    return init(c * x + s * y, -s * x + c * y);
  };
  pc.cfl = {0.15, 0.05, 0.05};
  pc.t_final_default = smooth ? 1.0 : 2.0 * kPi;
  return pc;
}

// Exact solution of phi_t + G(phi_s) = 0 along s = x + y with
// phi(x,y,0) = psi0(s); both 2D Burgers-type cases reduce this way.
double diagonal_characteristic(double s, double t, const std::function<double(double)>& G,
                               const std::function<double(double)>& Gp,
                               const std::function<double(double)>& Gpp) {
  auto w_of = [](double s0) { return 0.5 * kPi * std::sin(0.5 * kPi * s0); };
  auto dw_of = [](double s0) { return 0.25 * kPi * kPi * std::cos(0.5 * kPi * s0); };
  auto speed = [&](double s0) { return Gp(w_of(s0)); };
  auto dspeed = [&](double s0) { return Gpp(w_of(s0)) * dw_of(s0); };
  double s0 = characteristic_foot(s, t, speed, dspeed);
  double w0 = w_of(s0);
  return -std::cos(0.5 * kPi * s0) + t * (w0 * Gp(w0) - G(w0));
}

ProblemCase make_burgers_2d() {
  ProblemCase pc;
  pc.name = "burgers-2d";
  pc.model.dim = 2;
  pc.model.eval = [](double p, double q, double, double) {
    double s = p + q + 1;
    return 0.5 * s * s;
  };
  pc.model.d_p = [](double p, double q, double, double) { return p + q + 1; };
  pc.model.d_q = [](double p, double q, double, double) { return p + q + 1; };
  pc.xmin = pc.ymin = -2.0;
  pc.xmax = pc.ymax = 2.0;
  pc.initial = [](double x, double y) { return -std::cos(0.5 * kPi * (x + y)); };
  pc.boundary = BoundaryKind::periodic;
  pc.exact = [](double x, double y, double t) {
    auto G = [](double w) { return 0.5 * (2 * w + 1) * (2 * w + 1); };
    auto Gp = [](double w) { return 2.0 * (2 * w + 1); };
    auto Gpp = [](double) { return 4.0; };
    return diagonal_characteristic(x + y, t, G, Gp, Gpp);
  };
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 0.5 / (kPi * kPi);
  return pc;
}

ProblemCase make_noncvx_cos_2d() {
  ProblemCase pc;
  pc.name = "noncvx-cos-2d";
  pc.model.dim = 2;
  pc.model.eval = [](double p, double q, double, double) { return -std::cos(p + q + 1); };
  pc.model.d_p = [](double p, double q, double, double) { return std::sin(p + q + 1); };
  pc.model.d_q = [](double p, double q, double, double) { return std::sin(p + q + 1); };
  pc.xmin = pc.ymin = -2.0;
  pc.xmax = pc.ymax = 2.0;
  pc.initial = [](double x, double y) { return -std::cos(0.5 * kPi * (x + y)); };
  pc.boundary = BoundaryKind::periodic;
  pc.exact = [](double x, double y, double t) {
    auto G = [](double w) { return -std::cos(2 * w + 1); };
    auto Gp = [](double w) { return 2.0 * std::sin(2 * w + 1); };
    auto Gpp = [](double w) { return 4.0 * std::cos(2 * w + 1); };
    return diagonal_characteristic(x + y, t, G, Gp, Gpp);
  };
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 0.5 / (kPi * kPi);
  return pc;
}

ProblemCase make_optimal_control_2d() {
  ProblemCase pc;
  pc.name = "optimal-control-2d";
  pc.model.dim = 2;
  pc.model.space_dependent = true;
  pc.model.eval = [](double p, double q, double x, double y) {
    double sy = std::sin(y);
    return sy * p + (std::sin(x) + sgn0(q)) * q - 0.5 * sy * sy + std::cos(x) - 1.0;
  };
  pc.model.d_p = [](double, double, double, double y) { return std::sin(y); };
  pc.model.d_q = [](double, double q, double x, double) { return std::sin(x) + sgn0(q); };
  pc.xmin = pc.ymin = -kPi;
  pc.xmax = pc.ymax = kPi;
  pc.initial = [](double, double) { return 0.0; };
  pc.boundary = BoundaryKind::periodic;
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 1.0;
  return pc;
}

ProblemCase make_riemann_sin_2d() {
  ProblemCase pc;
  pc.name = "riemann-sin-2d";
  pc.model.dim = 2;
  pc.model.eval = [](double p, double q, double, double) { return std::sin(p + q); };
  pc.model.d_p = [](double p, double q, double, double) { return std::cos(p + q); };
  pc.model.d_q = [](double p, double q, double, double) { return std::cos(p + q); };
  pc.xmin = pc.ymin = -1.0;
  pc.xmax = pc.ymax = 1.0;
  pc.initial = [](double x, double y) { return kPi * (std::abs(y) - std::abs(x)); };
  pc.boundary = BoundaryKind::extrapolation;
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 1.0;
  pc.needs_limiter = true;
  attach_lf_oracle(pc, 400);
  return pc;
}

ProblemCase make_propagating_surface_2d() {
  ProblemCase pc;
  pc.name = "propagating-surface-2d";
  pc.model.dim = 2;
  pc.model.eval = [](double p, double q, double, double) {
    return -std::sqrt(p * p + q * q + 1.0);
  };
  pc.model.d_p = [](double p, double q, double, double) {
    return -p / std::sqrt(p * p + q * q + 1.0);
  };
  pc.model.d_q = [](double p, double q, double, double) {
    return -q / std::sqrt(p * p + q * q + 1.0);
  };
  pc.xmin = pc.ymin = 0.0;
  pc.xmax = pc.ymax = 1.0;
  pc.initial = [](double x, double y) {
    return 1.0 - 0.25 * (std::cos(2 * kPi * x) - 1.0) * (std::cos(2 * kPi * y) - 1.0);
  };
  pc.boundary = BoundaryKind::periodic;
  pc.cfl = {0.15, 0.10, 0.05};
  pc.t_final_default = 0.9;
  return pc;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "linear-sinx-1d",    "sign-coeff-1d",      "burgers-1d",
      "burgers-nonsmooth-1d", "noncvx-cos-1d",   "riemann-noncvx-1d",
      "rotation-smooth-2d", "rotation-cone-2d",  "burgers-2d",
      "noncvx-cos-2d",     "optimal-control-2d", "riemann-sin-2d",
      "propagating-surface-2d"};
  return names;
}

ProblemCase catalog(std::string_view name) {
  if (name == "linear-sinx-1d") return make_linear_sinx_1d();
  if (name == "sign-coeff-1d") return make_sign_coeff_1d();
  if (name == "burgers-1d") return make_burgers_1d();
  if (name == "burgers-nonsmooth-1d") return make_burgers_nonsmooth_1d();
  if (name == "noncvx-cos-1d") return make_noncvx_cos_1d();
  if (name == "riemann-noncvx-1d") return make_riemann_noncvx_1d();
  if (name == "rotation-smooth-2d") return make_rotation_2d(true);
  if (name == "rotation-cone-2d") return make_rotation_2d(false);
  if (name == "burgers-2d") return make_burgers_2d();
  if (name == "noncvx-cos-2d") return make_noncvx_cos_2d();
  if (name == "optimal-control-2d") return make_optimal_control_2d();
  if (name == "riemann-sin-2d") return make_riemann_sin_2d();
  if (name == "propagating-surface-2d") return make_propagating_surface_2d();
  fail(ErrorCode::unknown_case, "catalog: unknown case '" + std::string(name) + "'");
}

bool has_exact_solution(const ProblemCase& pc) { return static_cast<bool>(pc.exact); }

double exact_solution(const ProblemCase& pc, double x, double y, double t) {
  if (t == 0.0) return pc.initial(x, y);
  if (!pc.exact)
    fail(ErrorCode::oracle_failure,
         "exact_solution: case '" + pc.name + "' has no exact-solution oracle");
  return pc.exact(x, y, t);
}

}  // namespace hjader
