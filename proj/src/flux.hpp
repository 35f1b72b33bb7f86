/*
  hj-ader: face and volume coupling. Roe speeds and entropy parameters
  at face spacetime barycenters, frozen-coefficient face fluxes from
  exact face-time-averaged traces, and explicit modal volume integrals.
  All trace/volume operators are generated from the generic tables.

  License: Apache-2.0
*/
#ifndef HJADER_FLUX_HPP
#define HJADER_FLUX_HPP

#include <vector>

#include "basis.hpp"
#include "hamiltonian.hpp"
#include "linalg.hpp"

namespace hjader {

struct FaceEval {
  double htilde = 0;   // Roe speed at the face spacetime barycenter
  double delta = 0;    // entropy-violation gap
  double S = 0;        // max(delta, |htilde|)
  double lambda1 = 0;  // min(htilde, 0)
  double lambda2 = 0;  // max(htilde, 0)
  double lambda3 = 0;  // S - |htilde|
};

FaceEval make_face_eval(double htilde, double h1_left, double h1_right);

// Roe speed at a 1D interface; the equal-slope branch returns H1.
double roe_speed_1d(double pL, double pR, const HamiltonianModel& model, double x);

// (delta, S) at a 1D interface.
void entropy_params_1d(double pL, double pR, const HamiltonianModel& model, double x,
                       double& delta, double& S);

FaceEval face_eval_1d(double pL, double pR, const HamiltonianModel& model, double x);

// 2D Roe speed in the normal slope with the tangential slope frozen at
// the two-sided average; normal_dir is 0 for x-faces, 1 for y-faces.
double roe_speed_2d(int normal_dir, double pL, double pR, double tangential_avg,
                    const HamiltonianModel& model, double x, double y);

FaceEval face_eval_2d(int normal_dir, double pL, double pR, double tangential_avg,
                      const HamiltonianModel& model, double x, double y);

// Trace operators for one face orientation. "L" is the cell on the
// negative side of the face (its trace sits at normal coordinate +1/2),
// "R" the cell on the positive side (trace at -1/2).
struct FaceTraceTables {
  int Ls = 0, L = 0;
  // Weighted face-time-averaged traces of q_h and of its normal
  // derivative (reference units), one row per tangential Legendre
  // weight g = 0..k. In 1D only row g = 0 exists.
  Mat valL, valR;  // (k+1) x L
  Mat derL, derR;  // (k+1) x L
  // Barycenter traces of the normal and tangential derivatives.
  std::vector<double> dbarL_n, dbarR_n, dbarL_t, dbarR_t;  // L
  // Per spatial test function m: the constant face factor of its
  // normal-direction part and the tangential weight row it pairs with.
  std::vector<double> cL, cR;     // Ls
  std::vector<int> weight_index;  // Ls

  // Compressed forms used on the solve path.
  SparseRows sValL, sValR, sDerL, sDerR;
  SparseRows sDbarL_n, sDbarR_n, sDbarL_t, sDbarR_t;  // single-row
};

FaceTraceTables build_face_tables(const BasisSpec& spec, int normal_dir);

// Spacetime volume operator W(m, l) = <phi_m, theta_l> and the spatial
// mass diagonal <phi_m, phi_m> on the reference element.
struct VolumeTables {
  Mat W;                     // Ls x L
  std::vector<double> mass;  // Ls
  SparseRows sW;
};

VolumeTables build_volume_tables(const BasisSpec& spec);

// The six (generally Ls) explicit volume integrals of the Hamiltonian,
// out[m] = dx * dy * sum_l W(m,l) hhat[l]; dy = 1 in 1D.
void volume_integral(const double* hhat, const VolumeTables& vt, double dx, double dy,
                     double* out);

// Barycenter derivative traces of both neighbors at a face, in physical
// units: normal pair (uL, uR) and tangential pair (vL, vR); the latter
// are zero in 1D.
void barycenter_derivatives(const double* qL, const double* qR, const FaceTraceTables& ft,
                            double d_normal, double d_tangential, int dim, double& uL,
                            double& uR, double& vL, double& vR);

// Scatters the frozen-coefficient face increments for all Ls test
// functions of both adjacent cells. face_len is dy for x-faces (1 in
// 1D); incL/incR receive += of lambda-weighted jump terms.
void face_contributions(const double* qL, const double* qR, const FaceEval& fe, double C,
                        double dt, double face_len, const FaceTraceTables& ft, double* incL,
                        double* incR);

}  // namespace hjader

#endif
