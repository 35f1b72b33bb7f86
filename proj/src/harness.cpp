/*
  hj-ader: experiment engine implementation.

  License: Apache-2.0
*/
#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

#include "basis.hpp"
#include "rkdg.hpp"

namespace hjader {

namespace {

double cpu_now() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ErrorNorms error_norms(const ModalField1D& field, const ProblemCase& pc, double t) {
  const Mesh1D& mesh = field.mesh;
  QuadratureRule gs = gauss_legendre(field.degree + 2, -0.5, 0.5);
  ErrorNorms norms;
  double sum_abs = 0, sum_sq = 0;
  for (int i = 0; i < mesh.n; ++i) {
    double xc = mesh.center(i);
    if (pc.smooth_mask && !pc.smooth_mask(xc, 0.0)) continue;
    for (int q = 0; q < gs.size(); ++q) {
      double x = xc + mesh.dx * gs.points[q];
      double ph = 0.0;
      for (int l = 0; l < field.Ls; ++l)
        ph += field.cell(i)[l] * legendre_eval(l, gs.points[q]);
      double e = ph - exact_solution(pc, x, 0.0, t);
      double w = gs.weights[q] * mesh.dx;
      sum_abs += w * std::abs(e);
      sum_sq += w * e * e;
      norms.linf = std::max(norms.linf, std::abs(e));
      norms.measure += w;
    }
  }
  if (norms.measure <= 0.0)
    fail(ErrorCode::invalid_argument, "error_norms: empty unmasked region");
  norms.l1 = sum_abs / norms.measure;
  norms.l2 = std::sqrt(sum_sq / norms.measure);
  return norms;
}

ErrorNorms error_norms_2d(const ModalField2D& field, const ProblemCase& pc, double t) {
  const Mesh2D& mesh = field.mesh;
  BasisSpec spec = build_basis(2, field.degree);
  QuadratureRule gs = gauss_legendre(field.degree + 2, -0.5, 0.5);
  const int nq = gs.size();
  std::vector<double> phi(static_cast<size_t>(field.Ls) * nq * nq);
  for (int l = 0; l < field.Ls; ++l)
    for (int qx = 0; qx < nq; ++qx)
      for (int qy = 0; qy < nq; ++qy)
        phi[(static_cast<size_t>(l) * nq + qx) * nq + qy] =
            theta_eval(spec, l, gs.points[qx], gs.points[qy], 0.0);
  ErrorNorms norms;
  double sum_abs = 0, sum_sq = 0;
  for (int i = 0; i < mesh.nx; ++i)
    for (int j = 0; j < mesh.ny; ++j) {
      double xc = mesh.xcenter(i), yc = mesh.ycenter(j);
      if (pc.smooth_mask && !pc.smooth_mask(xc, yc)) continue;
      const double* w = field.cell(i, j);
      for (int qx = 0; qx < nq; ++qx)
        for (int qy = 0; qy < nq; ++qy) {
          double x = xc + mesh.dx * gs.points[qx];
          double y = yc + mesh.dy * gs.points[qy];
          double ph = 0.0;
          for (int l = 0; l < field.Ls; ++l)
            ph += w[l] * phi[(static_cast<size_t>(l) * nq + qx) * nq + qy];
          double e = ph - exact_solution(pc, x, y, t);
          double wq = gs.weights[qx] * gs.weights[qy] * mesh.dx * mesh.dy;
          sum_abs += wq * std::abs(e);
          sum_sq += wq * e * e;
          norms.linf = std::max(norms.linf, std::abs(e));
          norms.measure += wq;
        }
    }
  if (norms.measure <= 0.0)
    fail(ErrorCode::invalid_argument, "error_norms_2d: empty unmasked region");
  norms.l1 = sum_abs / norms.measure;
  norms.l2 = std::sqrt(sum_sq / norms.measure);
  return norms;
}

void RunSpec::validate() const {
  if (scheme != "ader" && scheme != "rkdg")
    fail(ErrorCode::invalid_argument, "RunSpec: scheme must be 'ader' or 'rkdg'");
  if (meshes.empty()) fail(ErrorCode::invalid_argument, "RunSpec: empty mesh list");
  for (size_t i = 1; i < meshes.size(); ++i)
    if (meshes[i] <= meshes[i - 1])
      fail(ErrorCode::invalid_argument, "RunSpec: mesh list must be strictly increasing");
  if (cfl > 1.0) fail(ErrorCode::invalid_argument, "RunSpec: need CFL in (0, 1]");
}

std::vector<std::optional<double>> convergence_orders(const std::vector<double>& errors,
                                                      const std::vector<int>& meshes) {
  std::vector<std::optional<double>> orders(errors.size());
  for (size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] <= 0.0 || errors[i - 1] <= 0.0) continue;
    orders[i] = std::log(errors[i - 1] / errors[i]) /
                std::log(static_cast<double>(meshes[i]) / meshes[i - 1]);
  }
  return orders;
}

RunOutput run_case(const std::string& example, const std::string& scheme, int degree, int n,
                   double cfl, double t_final, bool limiter) {
  RunOutput out;
  out.pc = catalog(example);
  out.dim = out.pc.model.dim;
  if (n < 4) fail(ErrorCode::invalid_argument, "run_case: need n >= 4");
  if (degree < 1 || degree > 3)
    fail(ErrorCode::unsupported_order, "run_case: degree must be 1..3");
  out.cfg.degree = degree;
  out.cfg.cfl = cfl > 0.0 ? cfl : out.pc.cfl[degree - 1];
  out.cfg.t_final = t_final >= 0.0 ? t_final : out.pc.t_final_default;
  out.cfg.limiter = limiter;
  out.cfg.boundary = out.pc.boundary;
  if (out.dim == 1) {
    Mesh1D mesh(out.pc.xmin, out.pc.xmax, n);
    out.r1 = scheme == "rkdg" ? run_rkdg(out.pc, out.cfg, mesh) : run(out.pc, out.cfg, mesh);
  } else {
    Mesh2D mesh(out.pc.xmin, out.pc.xmax, out.pc.ymin, out.pc.ymax, n, n);
    out.r2 =
        scheme == "rkdg" ? run_rkdg_2d(out.pc, out.cfg, mesh) : run2d(out.pc, out.cfg, mesh);
  }
  return out;
}

namespace {

void refresh_orders(ErrorReport& rep) {
  std::vector<double> e2, e1, einf;
  std::vector<int> meshes;
  for (const auto& r : rep.rows) {
    e2.push_back(r.l2);
    e1.push_back(r.l1);
    einf.push_back(r.linf);
    meshes.push_back(r.n);
  }
  auto o2 = convergence_orders(e2, meshes);
  auto o1 = convergence_orders(e1, meshes);
  auto oinf = convergence_orders(einf, meshes);
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    rep.rows[i].l2_order = o2[i];
    rep.rows[i].l1_order = o1[i];
    rep.rows[i].linf_order = oinf[i];
  }
}

// Builds the report row by row so a failure leaves the completed rows
// in place for the partial-CSV flush.
void sweep_into(const RunSpec& spec, ErrorReport& rep) {
  spec.validate();
  rep.example = spec.example;
  rep.scheme = spec.scheme;
  rep.degree = spec.degree;
  rep.limiter = spec.limiter;
  double t0 = cpu_now();
  for (int n : spec.meshes) {
    RunOutput out = run_case(spec.example, spec.scheme, spec.degree, n, spec.cfl,
                             spec.t_final, spec.limiter);
    rep.cfl = out.cfg.cfl;
    rep.t_final = out.cfg.t_final;
    ErrorNorms norms = out.dim == 1 ? error_norms(out.r1->field, out.pc, out.cfg.t_final)
                                    : error_norms_2d(out.r2->field, out.pc, out.cfg.t_final);
    ErrorReport::Row row;
    row.n = n;
    row.l2 = norms.l2;
    row.l1 = norms.l1;
    row.linf = norms.linf;
    rep.rows.push_back(row);
    refresh_orders(rep);
    rep.wall_seconds = cpu_now() - t0;
  }
}

}  // namespace

ErrorReport convergence_sweep(const RunSpec& spec) {
  ErrorReport rep;
  sweep_into(spec, rep);
  return rep;
}

void sweep_to_csv(const RunSpec& spec, std::ostream& os) {
  ErrorReport rep;
  try {
    sweep_into(spec, rep);
  } catch (const Error& e) {
    write_report_csv(rep, os);
    os << "error," << error_code_name(e.code()) << ",\"" << e.what() << "\"\n";
    os.flush();
    throw;
  }
  write_report_csv(rep, os);
}

void write_report_csv(const ErrorReport& rep, std::ostream& os) {
  os << "# hj-ader sweep example=" << rep.example << " scheme=" << rep.scheme
     << " k=" << rep.degree << " cfl=" << fmt17(rep.cfl) << " t_final=" << fmt17(rep.t_final)
     << " limiter=" << (rep.limiter ? 1 : 0) << " wall_seconds=" << fmt17(rep.wall_seconds)
     << '\n';
  os << "N,l2,l2_order,l1,l1_order,linf,linf_order\n";
  auto cell = [&](std::optional<double> v) { return v ? fmt17(*v) : std::string(); };
  for (const auto& r : rep.rows)
    os << r.n << ',' << fmt17(r.l2) << ',' << cell(r.l2_order) << ',' << fmt17(r.l1) << ','
       << cell(r.l1_order) << ',' << fmt17(r.linf) << ',' << cell(r.linf_order) << '\n';
}

BenchResult timing_benchmark(const std::string& example, int degree, int n, double cfl,
                             double t_final, int repeats) {
  repeats = std::max(repeats, 3);
  BenchResult res;
  res.repeats = repeats;
  auto timed = [&](const std::string& scheme) {
    std::vector<double> samples;
    for (int r = 0; r < repeats; ++r) {
      int inner = 1;
      for (;;) {
        double t0 = cpu_now();
        for (int k = 0; k < inner; ++k)
          run_case(example, scheme, degree, n, cfl, t_final, false);
        double el = cpu_now() - t0;
        if (el >= 0.2 || inner >= 1 << 20) {
          samples.push_back(el / inner);
          break;
        }
        inner *= 2;
      }
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
  };
  res.ader_seconds = timed("ader");
  res.rkdg_seconds = timed("rkdg");
  res.ratio = res.ader_seconds / res.rkdg_seconds;
  return res;
}

void dump_solution(const RunOutput& out, std::ostream& os) {
  const bool oracle = has_exact_solution(out.pc);
  const double t = out.cfg.t_final;
  if (out.dim == 1) {
    const ModalField1D& f = out.r1->field;
    os << "# hj-ader solution example=" << out.pc.name << " k=" << out.cfg.degree
       << " n=" << f.mesh.n << " t=" << fmt17(t) << '\n';
    os << "x,phi,phi_exact\n";
    QuadratureRule gs = gauss_legendre(f.degree + 2, -0.5, 0.5);
    std::vector<double> offsets = gs.points;
    offsets.push_back(0.0);
    std::sort(offsets.begin(), offsets.end());
    for (int i = 0; i < f.mesh.n; ++i) {
      double xc = f.mesh.center(i);
      for (double off : offsets) {
        double x = xc + f.mesh.dx * off;
        double ph = 0.0;
        for (int l = 0; l < f.Ls; ++l) ph += f.cell(i)[l] * legendre_eval(l, off);
        os << fmt17(x) << ',' << fmt17(ph) << ','
           << (oracle ? fmt17(exact_solution(out.pc, x, 0.0, t)) : std::string()) << '\n';
      }
    }
  } else {
    const ModalField2D& f = out.r2->field;
    os << "# hj-ader solution example=" << out.pc.name << " k=" << out.cfg.degree
       << " n=" << f.mesh.nx << " t=" << fmt17(t) << '\n';
    os << "x,y,phi,phi_exact\n";
    for (int i = 0; i < f.mesh.nx; ++i)
      for (int j = 0; j < f.mesh.ny; ++j) {
        double x = f.mesh.xcenter(i), y = f.mesh.ycenter(j);
        os << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(f.cell(i, j)[0]) << ','
           << (oracle ? fmt17(exact_solution(out.pc, x, y, t)) : std::string()) << '\n';
      }
  }
}

void dump_diagonal_cut(const RunOutput& out, std::ostream& os) {
  if (out.dim != 2)
    fail(ErrorCode::invalid_argument, "dump_diagonal_cut: 2D solutions only");
  const ModalField2D& f = out.r2->field;
  const bool oracle = has_exact_solution(out.pc);
  const double t = out.cfg.t_final;
  os << "# hj-ader diagonal cut example=" << out.pc.name << " k=" << out.cfg.degree
     << " n=" << f.mesh.nx << " t=" << fmt17(t) << '\n';
  os << "x,y,phi,phi_exact\n";
  const int n = std::min(f.mesh.nx, f.mesh.ny);
  for (int i = 0; i < n; ++i) {
    double x = f.mesh.xcenter(i), y = f.mesh.ycenter(i);
    os << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(f.cell(i, i)[0]) << ','
       << (oracle ? fmt17(exact_solution(out.pc, x, y, t)) : std::string()) << '\n';
  }
}

}  // namespace hjader
