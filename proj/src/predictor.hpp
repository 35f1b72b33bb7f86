/*
  hj-ader: local continuous spacetime Galerkin predictor.

  License: Apache-2.0
*/
#ifndef HJADER_PREDICTOR_HPP
#define HJADER_PREDICTOR_HPP

#include <vector>

#include "basis.hpp"
#include "hamiltonian.hpp"

namespace hjader {

struct PredictorScratch {
  std::vector<double> hbar, ubase, vbase, qbase, xn, yn;

  void resize(const PredictorTables& t) {
    // Every entry is written before it is read; no refill needed.
    hbar.resize(t.spec.Ln);
    ubase.resize(t.spec.Ln);
    vbase.resize(t.spec.Ln);
    qbase.resize(t.spec.L - t.spec.Ls);
    xn.resize(t.spec.Ln);
    yn.resize(t.spec.Ln);
  }
};

// Given the cell's Ls spatial modes w at t^n, runs exactly k+1 fixed-point
// iterations of q^1 = -Mhat h^1 - Mhat0 h^0 with nodal transcription of
// h = dt * H, and writes the L spacetime modes of q_h and of h.
// dy and yc are ignored in 1D. Throws predictor_blowup on non-finite H.
void predict(const double* w, const PredictorTables& tables, const HamiltonianModel& model,
             double dt, double dx, double dy, double xc, double yc, double* qhat,
             double* hhat, PredictorScratch& scratch);

// Nodal sampling of h = dt * H(grad q_h) followed by the nodal-to-modal
// transcription; the half-step predict iterates.
void transcribe_hamiltonian(const double* qhat, const PredictorTables& tables,
                            const HamiltonianModel& model, double dt, double dx, double dy,
                            double xc, double yc, double* hhat, PredictorScratch& scratch);

// Max-norm fixed-point residual of the time modes, with hhat recomputed
// from the returned qhat via transcribe_hamiltonian; test diagnostic.
double predictor_residual(const double* qhat, const double* hhat,
                          const PredictorTables& tables);

}  // namespace hjader

#endif
