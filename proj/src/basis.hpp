/*
  hj-ader: reference-element machinery for the spacetime Galerkin
  predictor. Scaled Legendre spatial bases on [-1/2,1/2], monomial
  temporal bases on [0,1], spacetime mode enumeration, quadrature
  assembly of the predictor matrices, and the nodal<->modal
  transcription operators. A hand-coded table set is provided for the
  2D third-order scheme.

  License: Apache-2.0
*/
#ifndef HJADER_BASIS_HPP
#define HJADER_BASIS_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "linalg.hpp"
#include "quadrature.hpp"

namespace hjader {

// Scaled Legendre family used throughout:
//   P0 = 1, P1 = xi, P2 = xi^2 - 1/12, P3 = xi^3 - (3/20) xi.
double legendre_eval(int n, double xi);
double legendre_deriv(int n, double xi);

// One spacetime mode theta = P_a(xi) * P_b(eta) * tau^c (b = 0 in 1D).
struct ModeIndex {
  int a = 0;
  int b = 0;
  int c = 0;
};

struct BasisSpec {
  int dim = 0;     // 1 or 2
  int degree = 0;  // k in 1..3
  int order = 0;   // M = k + 1
  int Ls = 0;      // spatial (time-independent) modes
  int L = 0;       // spacetime modes
  int Ln = 0;      // nodal points
  std::vector<ModeIndex> modes;  // first Ls entries have c == 0
};

BasisSpec build_basis(int dim, int degree);

double theta_eval(const BasisSpec& spec, int l, double xi, double eta, double tau);
double theta_dxi(const BasisSpec& spec, int l, double xi, double eta, double tau);
double theta_deta(const BasisSpec& spec, int l, double xi, double eta, double tau);
double theta_dtau(const BasisSpec& spec, int l, double xi, double eta, double tau);

struct PredictorTables {
  BasisSpec spec;
  Mat Mhat;        // (L-Ls) x (L-Ls) = (K_tau^11)^-1 M^11
  Mat Mhat0;       // (L-Ls) x Ls     = (K_tau^11)^-1 M^10
  std::vector<std::array<double, 3>> nodal_points;  // (xi, eta, tau); eta = 0 in 1D
  Mat N2M;         // L x Ln, least-squares left inverse of node evaluation
  Mat Dxi;         // Ln x L, d theta_l / d xi at node n
  Mat Deta;        // Ln x L (empty in 1D)
  std::vector<int> nodes_time_dependent;  // node indices with tau > 0

  // Compressed forms of the same operators; the rows are sparse once
  // written out explicitly and the solve path applies them as such.
  // iter_op is the fused update q^1 = iter_op * hbar, i.e.
  // -(Mhat * N2M^1 + Mhat0 * N2M^0): the modal Hamiltonian is then
  // only transcribed once after the final iteration. Contributions
  // that stay constant across iterations are split off: iter_op0
  // covers the tau = 0 nodal columns and dxi/deta_time the
  // time-dependent mode columns.
  SparseRows sN2M, sDxi, sDeta, sMhat, sMhat0, iter_op;
  SparseRows iter_op0, iter_opT;            // columns: tau = 0 vs tau > 0 nodes
  SparseRows dxi_spatial, dxi_time;         // columns: l < Ls vs l >= Ls
  SparseRows deta_spatial, deta_time;
  int n_tau0 = 0;
  void compress();
};

// Assembles the tables by quadrature; the rule must be exact to at least
// degree 2k+2 per coordinate (it is remapped to [-1/2,1/2] and [0,1]).
PredictorTables assemble_predictor_tables(const BasisSpec& spec, const QuadratureRule& rule);

// Convenience: assembly with the default (k+2)-point Gauss rule.
PredictorTables make_predictor_tables(int dim, int degree);

// Hard-coded tables for dim = 2, k = 2; agrees entrywise with the
// generic assembly.
PredictorTables third_order_2d_tables();

// Debug dump, row-major CSV with 17 significant digits.
void dump_tables_csv(const PredictorTables& tables, std::ostream& os);

}  // namespace hjader

#endif
