/*
  hj-ader: basis and predictor-table assembly.

  License: Apache-2.0
*/
#include "basis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "errors.hpp"

namespace hjader {

double legendre_eval(int n, double xi) {
  switch (n) {
    case 0: return 1.0;
    case 1: return xi;
    case 2: return xi * xi - 1.0 / 12.0;
    case 3: return xi * xi * xi - 0.15 * xi;
  }
  fail(ErrorCode::invalid_argument, "legendre_eval: degree must be in 0..3");
}

double legendre_deriv(int n, double xi) {
  switch (n) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return 2.0 * xi;
    case 3: return 3.0 * xi * xi - 0.15;
  }
  fail(ErrorCode::invalid_argument, "legendre_deriv: degree must be in 0..3");
}

namespace {

// Spatial multi-index patterns per total degree, in canonical order:
// pure-xi, pure-eta, then mixed.
const std::vector<std::array<int, 2>>& spatial_patterns(int d) {
  static const std::vector<std::array<int, 2>> p0{{0, 0}};
  static const std::vector<std::array<int, 2>> p1{{1, 0}, {0, 1}};
  static const std::vector<std::array<int, 2>> p2{{2, 0}, {0, 2}, {1, 1}};
  static const std::vector<std::array<int, 2>> p3{{3, 0}, {0, 3}, {2, 1}, {1, 2}};
  switch (d) {
    case 0: return p0;
    case 1: return p1;
    case 2: return p2;
    case 3: return p3;
  }
  fail(ErrorCode::internal, "spatial_patterns: degree out of range");
}

std::vector<std::array<double, 3>> nodal_point_set(int dim, int k) {
  const double h = 0.5;
  if (dim == 1) {
    switch (k) {
      case 1:
        return {{h, 0, 0}, {-h, 0, 0}, {0, 0, 1}};
      case 2:
        return {{0, 0, 0}, {h, 0, 0}, {-h, 0, 0}, {h, 0, 0.5}, {-h, 0, 0.5}, {0, 0, 1}};
      case 3:
        return {{0, 0, 0},       {h, 0, 0},       {-h, 0, 0},      {0.25, 0, 0},
                {-0.25, 0, 0},   {0, 0, 1.0 / 3}, {h, 0, 1.0 / 3}, {-h, 0, 1.0 / 3},
                {h, 0, 2.0 / 3}, {-h, 0, 2.0 / 3}, {0, 0, 1}};
    }
  } else {
    switch (k) {
      case 1:
        return {{h, 0, 0}, {-h, 0, 0}, {0, h, 0}, {0, -h, 0}, {0, 0, 1}};
      case 2:
        return {{h, 0, 0},   {-h, 0, 0},  {0, h, 0},   {0, -h, 0},
                {h, h, 0},   {-h, h, 0},  {h, -h, 0},  {-h, -h, 0},
                {h, 0, 0.5}, {-h, 0, 0.5}, {0, h, 0.5}, {0, -h, 0.5},
                {0, 0, 1}};
      case 3: {
        const double t1 = 1.0 / 3, t2 = 2.0 / 3;
        return {{0, 0, 0},    {h, 0, 0},    {-h, 0, 0},   {0, h, 0},    {0, -h, 0},
                {h, h, 0},    {-h, h, 0},   {h, -h, 0},   {-h, -h, 0},
                {0.25, 0, 0}, {-0.25, 0, 0}, {0, 0.25, 0}, {0, -0.25, 0},
                {0, 0, t1},   {h, h, t1},   {-h, h, t1},  {h, -h, t1},  {-h, -h, t1},
                {h, 0, t2},   {-h, 0, t2},  {0, h, t2},   {0, -h, t2},  {0, 0, 1}};
      }
    }
  }
  fail(ErrorCode::unsupported_order, "nodal_point_set: unsupported (dim, k)");
}

}  // namespace

BasisSpec build_basis(int dim, int degree) {
  if ((dim != 1 && dim != 2) || degree < 1 || degree > 3)
    fail(ErrorCode::unsupported_order,
         "build_basis: need dim in {1,2} and degree in {1,2,3}");
  BasisSpec spec;
  spec.dim = dim;
  spec.degree = degree;
  spec.order = degree + 1;
  const int k = degree;
  if (dim == 1) {
    for (int a = 0; a <= k; ++a) spec.modes.push_back({a, 0, 0});
    spec.Ls = static_cast<int>(spec.modes.size());
    for (int s = 0; s < k; ++s)
      for (int c = 1; c + s <= k; ++c) spec.modes.push_back({s, 0, c});
  } else {
    for (int d = 0; d <= k; ++d)
      for (const auto& p : spatial_patterns(d)) spec.modes.push_back({p[0], p[1], 0});
    spec.Ls = static_cast<int>(spec.modes.size());
    for (int s = 0; s < k; ++s)
      for (int c = 1; c + s <= k; ++c)
        for (const auto& p : spatial_patterns(s)) spec.modes.push_back({p[0], p[1], c});
  }
  spec.L = static_cast<int>(spec.modes.size());
  spec.Ln = static_cast<int>(nodal_point_set(dim, k).size());
  return spec;
}

double theta_eval(const BasisSpec& spec, int l, double xi, double eta, double tau) {
  const ModeIndex& m = spec.modes[l];
  double v = legendre_eval(m.a, xi);
  if (spec.dim == 2) v *= legendre_eval(m.b, eta);
  for (int c = 0; c < m.c; ++c) v *= tau;
  return v;
}

double theta_dxi(const BasisSpec& spec, int l, double xi, double eta, double tau) {
  const ModeIndex& m = spec.modes[l];
  double v = legendre_deriv(m.a, xi);
  if (spec.dim == 2) v *= legendre_eval(m.b, eta);
  for (int c = 0; c < m.c; ++c) v *= tau;
  return v;
}

double theta_deta(const BasisSpec& spec, int l, double xi, double eta, double tau) {
  const ModeIndex& m = spec.modes[l];
  double v = legendre_eval(m.a, xi) * legendre_deriv(m.b, eta);
  for (int c = 0; c < m.c; ++c) v *= tau;
  return v;
}

double theta_dtau(const BasisSpec& spec, int l, double xi, double eta, double tau) {
  const ModeIndex& m = spec.modes[l];
  if (m.c == 0) return 0.0;
  double v = legendre_eval(m.a, xi);
  if (spec.dim == 2) v *= legendre_eval(m.b, eta);
  v *= m.c;
  for (int c = 1; c < m.c; ++c) v *= tau;
  return v;
}

void PredictorTables::compress() {
  sN2M = SparseRows::from(N2M);
  sDxi = SparseRows::from(Dxi);
  if (!Deta.empty()) sDeta = SparseRows::from(Deta);
  sMhat = SparseRows::from(Mhat);
  sMhat0 = SparseRows::from(Mhat0);
  const int Ls = spec.Ls, Lt = spec.L - Ls, Ln = spec.Ln;
  Mat g(Lt, Ln);
  for (int i = 0; i < Lt; ++i)
    for (int n = 0; n < Ln; ++n) {
      double acc = 0.0;
      for (int j = 0; j < Lt; ++j) acc += Mhat(i, j) * N2M(Ls + j, n);
      for (int j = 0; j < Ls; ++j) acc += Mhat0(i, j) * N2M(j, n);
      g(i, n) = -acc;
    }
  iter_op = SparseRows::from(g);

  // The nodal point sets list all tau = 0 nodes first.
  n_tau0 = Ln - static_cast<int>(nodes_time_dependent.size());
  for (size_t i = 0; i < nodes_time_dependent.size(); ++i)
    if (nodes_time_dependent[i] != n_tau0 + static_cast<int>(i))
      fail(ErrorCode::internal, "compress: tau = 0 nodes must precede the others");
  iter_op.split_at(n_tau0, iter_op0, iter_opT);
  sDxi.split_at(Ls, dxi_spatial, dxi_time);
  if (!Deta.empty()) sDeta.split_at(Ls, deta_spatial, deta_time);
}

PredictorTables assemble_predictor_tables(const BasisSpec& spec, const QuadratureRule& rule) {
  const int L = spec.L, Ls = spec.Ls, Lt = L - Ls;
  PredictorTables t;
  t.spec = spec;

  const QuadratureRule rx = rule.mapped_to(-0.5, 0.5);
  const QuadratureRule rt = rule.mapped_to(0.0, 1.0);
  const int nq = rx.size();

  // Spacetime mass and time-stiffness matrices by tensor quadrature.
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(L, L);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(L, L);
  std::vector<double> th(L), dth(L);
  auto accumulate = [&](double xi, double eta, double tau, double w) {
    for (int l = 0; l < L; ++l) {
      th[l] = theta_eval(spec, l, xi, eta, tau);
      dth[l] = theta_dtau(spec, l, xi, eta, tau);
    }
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) {
        M(i, j) += w * th[i] * th[j];
        K(i, j) += w * th[i] * dth[j];
      }
  };
  if (spec.dim == 1) {
    for (int ix = 0; ix < nq; ++ix)
      for (int it = 0; it < nq; ++it)
        accumulate(rx.points[ix], 0.0, rt.points[it], rx.weights[ix] * rt.weights[it]);
  } else {
    for (int ix = 0; ix < nq; ++ix)
      for (int iy = 0; iy < nq; ++iy)
        for (int it = 0; it < nq; ++it)
          accumulate(rx.points[ix], rx.points[iy], rt.points[it],
                     rx.weights[ix] * rx.weights[iy] * rt.weights[it]);
  }

  Eigen::MatrixXd K11 = K.block(Ls, Ls, Lt, Lt);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(K11);
  if (!lu.isInvertible())
    fail(ErrorCode::assembly_failure,
         "assemble_predictor_tables: singular time-stiffness block (check mode "
         "ordering and nodal point set)");
  Eigen::MatrixXd mh = lu.solve(M.block(Ls, Ls, Lt, Lt));
  Eigen::MatrixXd mh0 = lu.solve(M.block(Ls, 0, Lt, Ls));
  t.Mhat = Mat(Lt, Lt);
  t.Mhat0 = Mat(Lt, Ls);
  for (int i = 0; i < Lt; ++i) {
    for (int j = 0; j < Lt; ++j) t.Mhat(i, j) = mh(i, j);
    for (int j = 0; j < Ls; ++j) t.Mhat0(i, j) = mh0(i, j);
  }

  // Nodal operators.
  t.nodal_points = nodal_point_set(spec.dim, spec.degree);
  const int Ln = spec.Ln;
  Eigen::MatrixXd E(Ln, L);
  t.Dxi = Mat(Ln, L);
  if (spec.dim == 2) t.Deta = Mat(Ln, L);
  for (int n = 0; n < Ln; ++n) {
    const auto& p = t.nodal_points[n];
    for (int l = 0; l < L; ++l) {
      E(n, l) = theta_eval(spec, l, p[0], p[1], p[2]);
      t.Dxi(n, l) = theta_dxi(spec, l, p[0], p[1], p[2]);
      if (spec.dim == 2) t.Deta(n, l) = theta_deta(spec, l, p[0], p[1], p[2]);
    }
    if (p[2] > 0.0) t.nodes_time_dependent.push_back(n);
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(E);
  if (cod.rank() < L)
    fail(ErrorCode::assembly_failure,
         "assemble_predictor_tables: node evaluation matrix is rank deficient");
  Eigen::MatrixXd pinv = cod.pseudoInverse();
  t.N2M = Mat(L, Ln);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < Ln; ++j) t.N2M(i, j) = pinv(i, j);
  t.compress();
  return t;
}

PredictorTables make_predictor_tables(int dim, int degree) {
  BasisSpec spec = build_basis(dim, degree);
  return assemble_predictor_tables(spec, gauss_legendre(degree + 2, -0.5, 0.5));
}

PredictorTables third_order_2d_tables() {
  PredictorTables t;
  t.spec = build_basis(2, 2);
  t.nodal_points = nodal_point_set(2, 2);
  for (int n = 0; n < t.spec.Ln; ++n)
    if (t.nodal_points[n][2] > 0.0) t.nodes_time_dependent.push_back(n);

  // Iteration relations for the time modes {tau, tau^2, xi tau, eta tau}:
  //   q6 = -h0 + (3/10) h7,  q7 = -(1/2) h6 - (3/5) h7,
  //   q8 = -h1 - (2/3) h8,   q9 = -h2 - (2/3) h9,
  // written as q^1 = -Mhat h^1 - Mhat0 h^0.
  t.Mhat = Mat(4, 4);
  t.Mhat(0, 1) = -3.0 / 10.0;
  t.Mhat(1, 0) = 1.0 / 2.0;
  t.Mhat(1, 1) = 3.0 / 5.0;
  t.Mhat(2, 2) = 2.0 / 3.0;
  t.Mhat(3, 3) = 2.0 / 3.0;
  t.Mhat0 = Mat(4, 6);
  t.Mhat0(0, 0) = 1.0;
  t.Mhat0(2, 1) = 1.0;
  t.Mhat0(3, 2) = 1.0;

  // Least-squares left inverse of the 13-node evaluation matrix; entries
  // are exact multiples of 1/12.
  static const int n2m12[10][13] = {
      {4, 4, 4, 4, -1, -1, -1, -1, 0, 0, 0, 0, 0},
      {4, -4, 0, 0, 4, -4, 4, -4, 0, 0, 0, 0, 0},
      {0, 0, 4, -4, 4, 4, -4, -4, 0, 0, 0, 0, 0},
      {-6, -6, -18, -18, 12, 12, 12, 12, 6, 6, -6, -6, 0},
      {-18, -18, -6, -6, 12, 12, 12, 12, -6, -6, 6, 6, 0},
      {0, 0, 0, 0, 12, -12, -12, 12, 0, 0, 0, 0, 0},
      {-6, -6, -6, -6, -3, -3, -3, -3, 12, 12, 12, 12, -12},
      {0, 0, 0, 0, 6, 6, 6, 6, -12, -12, -12, -12, 24},
      {-8, 8, 0, 0, -8, 8, -8, 8, 24, -24, 0, 0, 0},
      {0, 0, -8, 8, -8, -8, 8, 8, 0, 0, 24, -24, 0}};
  t.N2M = Mat(10, 13);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 13; ++j) t.N2M(i, j) = n2m12[i][j] / 12.0;

  // Nodal derivatives u_n = dq/dxi, v_n = dq/deta as explicit mode
  // combinations, e.g. u0 = q1 + q3, u8 = u0 + (1/2) q8, u12 = q1 + q8.
  t.Dxi = Mat(13, 10);
  t.Deta = Mat(13, 10);
  static const double u12[13][10] = {
      {0, 12, 0, 12, 0, 0, 0, 0, 0, 0},  {0, 12, 0, -12, 0, 0, 0, 0, 0, 0},
      {0, 12, 0, 0, 0, 6, 0, 0, 0, 0},   {0, 12, 0, 0, 0, -6, 0, 0, 0, 0},
      {0, 12, 0, 12, 0, 6, 0, 0, 0, 0},  {0, 12, 0, -12, 0, 6, 0, 0, 0, 0},
      {0, 12, 0, 12, 0, -6, 0, 0, 0, 0}, {0, 12, 0, -12, 0, -6, 0, 0, 0, 0},
      {0, 12, 0, 12, 0, 0, 0, 0, 6, 0},  {0, 12, 0, -12, 0, 0, 0, 0, 6, 0},
      {0, 12, 0, 0, 0, 6, 0, 0, 6, 0},   {0, 12, 0, 0, 0, -6, 0, 0, 6, 0},
      {0, 12, 0, 0, 0, 0, 0, 0, 12, 0}};
  static const double v12[13][10] = {
      {0, 0, 12, 0, 0, 6, 0, 0, 0, 0},   {0, 0, 12, 0, 0, -6, 0, 0, 0, 0},
      {0, 0, 12, 0, 12, 0, 0, 0, 0, 0},  {0, 0, 12, 0, -12, 0, 0, 0, 0, 0},
      {0, 0, 12, 0, 12, 6, 0, 0, 0, 0},  {0, 0, 12, 0, 12, -6, 0, 0, 0, 0},
      {0, 0, 12, 0, -12, 6, 0, 0, 0, 0}, {0, 0, 12, 0, -12, -6, 0, 0, 0, 0},
      {0, 0, 12, 0, 0, 6, 0, 0, 0, 6},   {0, 0, 12, 0, 0, -6, 0, 0, 0, 6},
      {0, 0, 12, 0, 12, 0, 0, 0, 0, 6},  {0, 0, 12, 0, -12, 0, 0, 0, 0, 6},
      {0, 0, 12, 0, 0, 0, 0, 0, 0, 12}};
  for (int n = 0; n < 13; ++n)
    for (int l = 0; l < 10; ++l) {
      t.Dxi(n, l) = u12[n][l] / 12.0;
      t.Deta(n, l) = v12[n][l] / 12.0;
    }
  t.compress();
  return t;
}

namespace {

void dump_matrix(std::ostream& os, const char* name, const Mat& m) {
  os << "# " << name << ' ' << m.rows << ' ' << m.cols << '\n';
  char buf[32];
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      os << buf << (j + 1 < m.cols ? "," : "\n");
    }
  }
}

}  // namespace

void dump_tables_csv(const PredictorTables& t, std::ostream& os) {
  os << "# basis dim " << t.spec.dim << " degree " << t.spec.degree << " Ls " << t.spec.Ls
     << " L " << t.spec.L << " Ln " << t.spec.Ln << '\n';
  Mat nodes(t.spec.Ln, 3);
  for (int n = 0; n < t.spec.Ln; ++n)
    for (int j = 0; j < 3; ++j) nodes(n, j) = t.nodal_points[n][j];
  dump_matrix(os, "nodal_points", nodes);
  dump_matrix(os, "Mhat", t.Mhat);
  dump_matrix(os, "Mhat0", t.Mhat0);
  dump_matrix(os, "N2M", t.N2M);
  dump_matrix(os, "Dxi", t.Dxi);
  if (!t.Deta.empty()) dump_matrix(os, "Deta", t.Deta);
}

}  // namespace hjader
