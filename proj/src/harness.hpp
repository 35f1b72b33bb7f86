/*
  hj-ader: experiment engine — discrete error norms against the
  exact-solution oracles, convergence sweeps with CSV emission, the
  ADER/RKDG timing benchmark, and solution dumps.

  License: Apache-2.0
*/
#ifndef HJADER_HARNESS_HPP
#define HJADER_HARNESS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "solver1d.hpp"
#include "solver2d.hpp"

namespace hjader {

struct ErrorNorms {
  double l1 = 0, l2 = 0, linf = 0;
  double measure = 0;  // total quadrature weight of the unmasked region
};

// Discrete norms over per-cell Gauss points, (k+2) per direction:
// l1 = sum w|e| / sum w, l2 = sqrt(sum w e^2 / sum w), linf = max|e|.
// Cells whose center falls outside the smooth mask are excluded.
ErrorNorms error_norms(const ModalField1D& field, const ProblemCase& pc, double t);
ErrorNorms error_norms_2d(const ModalField2D& field, const ProblemCase& pc, double t);

struct RunSpec {
  std::string example;
  std::string scheme = "ader";  // "ader" | "rkdg"
  int degree = 2;
  std::vector<int> meshes;
  double cfl = -1.0;      // <= 0: case default
  double t_final = -1.0;  // < 0: case default
  bool limiter = false;
  std::string out_path;

  void validate() const;
};

struct ErrorReport {
  struct Row {
    int n = 0;
    double l2 = 0, l1 = 0, linf = 0;
    std::optional<double> l2_order, l1_order, linf_order;
  };
  std::string example, scheme;
  int degree = 0;
  double cfl = 0, t_final = 0;
  bool limiter = false;
  double wall_seconds = 0;
  std::vector<Row> rows;
};

// order[i] = log(e[i-1]/e[i]) / log(n[i]/n[i-1]); first entry empty.
std::vector<std::optional<double>> convergence_orders(const std::vector<double>& errors,
                                                      const std::vector<int>& meshes);

ErrorReport convergence_sweep(const RunSpec& spec);
void write_report_csv(const ErrorReport& report, std::ostream& os);

// Sweep with incremental reporting: on failure the completed rows are
// flushed followed by an "error,<code>,<message>" marker row, and the
// failure propagates.
void sweep_to_csv(const RunSpec& spec, std::ostream& os);

struct BenchResult {
  double ader_seconds = 0;
  double rkdg_seconds = 0;
  double ratio = 0;
  int repeats = 0;
};

// Median of `repeats` (>= 3) timed runs per scheme, same CFL and final
// time; repeat counts escalate until a measurement spans >= 0.2 s.
BenchResult timing_benchmark(const std::string& example, int degree, int n, double cfl,
                             double t_final, int repeats);

// Holds either a 1D or a 2D run result, plus the case it came from.
struct RunOutput {
  ProblemCase pc;
  SolverConfig cfg;
  int dim = 1;
  std::optional<RunResult1D> r1;
  std::optional<RunResult2D> r2;
  long steps() const { return dim == 1 ? r1->steps : r2->steps; }
  double cpu_seconds() const { return dim == 1 ? r1->cpu_seconds : r2->cpu_seconds; }
};

RunOutput run_case(const std::string& example, const std::string& scheme, int degree, int n,
                   double cfl, double t_final, bool limiter);

// 1D: columns x,phi,phi_exact at cell centers and Gauss points.
// 2D: columns x,y,phi,phi_exact at cell centers.
void dump_solution(const RunOutput& out, std::ostream& os);
// 2D only: the cells along the diagonal y = x.
void dump_diagonal_cut(const RunOutput& out, std::ostream& os);

}  // namespace hjader

#endif
