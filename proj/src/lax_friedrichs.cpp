/*
  hj-ader: monotone Lax-Friedrichs reference scheme.

  Global Lax-Friedrichs numerical Hamiltonian,
      Hhat = H((p- + p+)/2, (q- + q+)/2, x, y)
             - (ax/2)(p+ - p-) - (ay/2)(q+ - q-),
  with ax >= max|H1|, ay >= max|H2| over the slope brackets realized on
  the whole grid. The bounds are re-estimated every step by sampling
  H1/H2 over the global bracket (interior samples included, for
  Hamiltonians whose derivative peaks inside it) and over a coarse grid
  of spatial positions, padded by 5%.

  License: Apache-2.0
*/
#include "lax_friedrichs.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace hjader {

namespace {

constexpr double kBoundPad = 1.05;
constexpr double kLfCfl = 0.4;

struct Bracket {
  double lo = 0.0, hi = 0.0;
  void widen(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

double bound_over(const std::function<double(double, double, double, double)>& d,
                  Bracket p, Bracket q, bool space_dependent, double xmin, double xmax,
                  double ymin, double ymax) {
  const int np = 33, nq = 9;
  const int ns = space_dependent ? 9 : 1;
  double m = 0.0;
  for (int sx = 0; sx < ns; ++sx) {
    double x = ns == 1 ? 0.5 * (xmin + xmax) : xmin + (xmax - xmin) * sx / (ns - 1.0);
    for (int sy = 0; sy < ns; ++sy) {
      double y = ns == 1 ? 0.5 * (ymin + ymax) : ymin + (ymax - ymin) * sy / (ns - 1.0);
      for (int i = 0; i <= np; ++i) {
        double pv = p.lo + (p.hi - p.lo) * i / np;
        for (int j = 0; j <= nq; ++j) {
          double qv = q.lo + (q.hi - q.lo) * j / nq;
          m = std::max(m, std::abs(d(pv, qv, x, y)));
        }
      }
    }
  }
  return m;
}

}  // namespace

double LfSolution1D::eval(double x) const {
  const int n = static_cast<int>(phi.size());
  double s = (x - xmin) / dx - 0.5;
  if (s <= 0.0) return phi.front();
  if (s >= n - 1.0) return phi.back();
  int i = static_cast<int>(s);
  double f = s - i;
  return phi[i] * (1.0 - f) + phi[i + 1] * f;
}

double LfSolution2D::eval(double x, double y) const {
  double sx = (x - xmin) / dx - 0.5;
  double sy = (y - ymin) / dy - 0.5;
  sx = std::clamp(sx, 0.0, nx - 1.0);
  sy = std::clamp(sy, 0.0, ny - 1.0);
  int i = std::min(static_cast<int>(sx), nx - 2);
  int j = std::min(static_cast<int>(sy), ny - 2);
  double fx = sx - i, fy = sy - j;
  auto at = [&](int ii, int jj) { return phi[static_cast<size_t>(ii) * ny + jj]; };
  return at(i, j) * (1 - fx) * (1 - fy) + at(i + 1, j) * fx * (1 - fy) +
         at(i, j + 1) * (1 - fx) * fy + at(i + 1, j + 1) * fx * fy;
}

LfSolution1D lf_solve_1d(const ProblemCase& pc, int n, double t_final) {
  if (pc.model.dim != 1) fail(ErrorCode::invalid_argument, "lf_solve_1d: 2D case");
  LfSolution1D out;
  out.xmin = pc.xmin;
  out.xmax = pc.xmax;
  out.dx = (pc.xmax - pc.xmin) / n;
  out.phi.resize(n);
  std::vector<double>& phi = out.phi;
  for (int i = 0; i < n; ++i) phi[i] = pc.initial(pc.xmin + (i + 0.5) * out.dx, 0.0);

  // Per-cell dissipation bound over the local one-sided slope bracket
  // (local Lax-Friedrichs); interior samples cover derivative peaks
  // inside the bracket.
  auto local_bound = [&](double lo, double hi, double x) {
    double m = 0.0;
    for (int s = 0; s <= 8; ++s) {
      double p = lo + (hi - lo) * s / 8.0;
      m = std::max(m, std::abs(pc.model.d_p(p, 0.0, x, 0.0)));
    }
    return m * kBoundPad;
  };

  const bool periodic = pc.boundary == BoundaryKind::periodic;
  std::vector<double> pm(n), pp(n), theta(n);
  double t = 0.0;
  while (t < t_final - 1e-14) {
    double alpha = 1e-12;
    for (int i = 0; i < n; ++i) {
      double left = phi[i > 0 ? i - 1 : (periodic ? n - 1 : 0)];
      double right = phi[i < n - 1 ? i + 1 : (periodic ? 0 : n - 1)];
      pm[i] = (phi[i] - left) / out.dx;
      pp[i] = (right - phi[i]) / out.dx;
      double x = pc.xmin + (i + 0.5) * out.dx;
      theta[i] = local_bound(std::min(pm[i], pp[i]), std::max(pm[i], pp[i]), x);
      alpha = std::max(alpha, theta[i]);
    }
    double dt = std::min(kLfCfl * out.dx / alpha, t_final - t);
    for (int i = 0; i < n; ++i) {
      double x = pc.xmin + (i + 0.5) * out.dx;
      phi[i] -= dt * (pc.model.eval(0.5 * (pm[i] + pp[i]), 0.0, x, 0.0) -
                      0.5 * theta[i] * (pp[i] - pm[i]));
    }
    t += dt;
  }
  return out;
}

LfSolution2D lf_solve_2d(const ProblemCase& pc, int n, double t_final) {
  if (pc.model.dim != 2) fail(ErrorCode::invalid_argument, "lf_solve_2d: 1D case");
  LfSolution2D out;
  out.xmin = pc.xmin;
  out.xmax = pc.xmax;
  out.ymin = pc.ymin;
  out.ymax = pc.ymax;
  out.nx = out.ny = n;
  out.dx = (pc.xmax - pc.xmin) / n;
  out.dy = (pc.ymax - pc.ymin) / n;
  out.phi.resize(static_cast<size_t>(n) * n);
  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.phi[idx(i, j)] =
          pc.initial(pc.xmin + (i + 0.5) * out.dx, pc.ymin + (j + 0.5) * out.dy);

  const bool periodic = pc.boundary == BoundaryKind::periodic;
  auto wrap = [&](int i) {
    if (periodic) return (i % n + n) % n;
    return std::clamp(i, 0, n - 1);
  };
  std::vector<double>& phi = out.phi;
  std::vector<double> pxm(phi.size()), pxp(phi.size()), pym(phi.size()), pyp(phi.size());
  double t = 0.0;
  while (t < t_final - 1e-14) {
    Bracket bx, by;
    bx.lo = bx.hi = (phi[idx(1, 0)] - phi[idx(0, 0)]) / out.dx;
    by.lo = by.hi = (phi[idx(0, 1)] - phi[idx(0, 0)]) / out.dy;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        size_t q = idx(i, j);
        double c = phi[q];
        pxm[q] = (c - phi[idx(wrap(i - 1), j)]) / out.dx;
        pxp[q] = (phi[idx(wrap(i + 1), j)] - c) / out.dx;
        pym[q] = (c - phi[idx(i, wrap(j - 1))]) / out.dy;
        pyp[q] = (phi[idx(i, wrap(j + 1))] - c) / out.dy;
        bx.widen(pxm[q]);
        bx.widen(pxp[q]);
        by.widen(pym[q]);
        by.widen(pyp[q]);
      }
    double ax = bound_over(pc.model.d_p, bx, by, pc.model.space_dependent, pc.xmin,
                           pc.xmax, pc.ymin, pc.ymax);
    double ay = bound_over(
        [&](double p, double q, double x, double y) { return pc.model.d_q(q, p, x, y); },
        by, bx, pc.model.space_dependent, pc.xmin, pc.xmax, pc.ymin, pc.ymax);
    ax = std::max(ax * kBoundPad, 1e-12);
    ay = std::max(ay * kBoundPad, 1e-12);
    double dt = std::min(kLfCfl / (ax / out.dx + ay / out.dy), t_final - t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        size_t q = idx(i, j);
        double x = pc.xmin + (i + 0.5) * out.dx, y = pc.ymin + (j + 0.5) * out.dy;
        double h = pc.model.eval(0.5 * (pxm[q] + pxp[q]), 0.5 * (pym[q] + pyp[q]), x, y) -
                   0.5 * ax * (pxp[q] - pxm[q]) - 0.5 * ay * (pyp[q] - pym[q]);
        phi[q] -= dt * h;
      }
    t += dt;
  }
  return out;
}

}  // namespace hjader
