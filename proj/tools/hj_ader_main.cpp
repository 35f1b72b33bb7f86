/*
  hj-ader command-line interface. Links the C API only.

  License: Apache-2.0
*/
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hjader.h"

namespace {

int fail_with(hj_status s) {
  std::fprintf(stderr, "error code=%s message=\"%s\"\n", hj_status_name(s), hj_last_error());
  return 1;
}

std::vector<int> parse_meshes(const std::string& csv) {
  std::vector<int> meshes;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    meshes.push_back(std::stoi(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return meshes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADER discontinuous Galerkin solver for Hamilton-Jacobi equations"};
  app.require_subcommand(1);

  std::string example, scheme = "ader", out_path, diag_path, meshes_csv, tables_out = "-";
  int degree = 2, cells = 40, repeats = 3, tables_dim = 2, tables_degree = 2;
  double cfl = -1.0, t_final = -1.0;
  bool limiter = false, dump_basis = false;

  auto add_common = [&](CLI::App* cmd, bool with_cells) {
    cmd->add_option("--example", example, "catalog case name")->required();
    cmd->add_option("-k,--degree", degree, "polynomial degree (1..3)");
    if (with_cells) cmd->add_option("-n,--cells", cells, "cells per direction");
    cmd->add_option("--cfl", cfl, "CFL number (default: case value)");
    cmd->add_option("--t-final", t_final, "final time (default: case value)");
  };

  CLI::App* run = app.add_subcommand("run", "run one case on one mesh");
  add_common(run, true);
  run->add_option("--scheme", scheme, "ader | rkdg");
  run->add_flag("--limiter", limiter, "enable the moment limiter");
  run->add_option("--out", out_path, "solution CSV path");
  run->add_option("--diag-out", diag_path, "diagonal-cut CSV path (2D)");

  CLI::App* sweep = app.add_subcommand("sweep", "convergence sweep over a mesh list");
  add_common(sweep, false);
  sweep->add_option("--meshes", meshes_csv, "comma-separated increasing list")->required();
  sweep->add_option("--scheme", scheme, "ader | rkdg");
  sweep->add_flag("--limiter", limiter, "enable the moment limiter");
  sweep->add_option("--out", out_path, "report CSV path (default: stdout)");

  CLI::App* bench = app.add_subcommand("bench", "ADER vs RKDG CPU-time comparison");
  add_common(bench, true);
  bench->add_option("--repeats", repeats, "timed repetitions per scheme (>= 3)");

  CLI::App* tables = app.add_subcommand("tables", "basis table inspection");
  tables->add_flag("--dump-basis", dump_basis, "dump predictor tables as CSV");
  tables->add_option("--dim", tables_dim, "dimension (1 or 2)");
  tables->add_option("-k,--degree", tables_degree, "polynomial degree (1..3)");
  tables->add_option("--out", tables_out, "output path ('-' for stdout)");

  app.add_subcommand("cases", "list catalog case names");

  CLI11_PARSE(app, argc, argv);

  hj_run_options opts{};
  opts.example = example.c_str();
  opts.scheme = scheme.c_str();
  opts.degree = degree;
  opts.cells = cells;
  opts.cfl = cfl;
  opts.t_final = t_final;
  opts.limiter = limiter ? 1 : 0;

  if (run->parsed()) {
    hj_solution* sol = nullptr;
    hj_status s = hj_run(&opts, &sol);
    if (s != HJ_OK) return fail_with(s);
    std::printf("example=%s scheme=%s k=%d n=%d steps=%ld t=%.6g cpu_seconds=%.3f\n",
                example.c_str(), scheme.c_str(), degree, cells, hj_solution_steps(sol),
                hj_solution_time(sol), hj_solution_cpu_seconds(sol));
    double l1, l2, linf;
    if (hj_solution_errors(sol, &l1, &l2, &linf) == HJ_OK)
      std::printf("l1=%.6e l2=%.6e linf=%.6e\n", l1, l2, linf);
    if (!out_path.empty()) {
      s = hj_solution_write_csv(sol, out_path.c_str());
      if (s != HJ_OK) {
        hj_solution_destroy(sol);
        return fail_with(s);
      }
    }
    if (!diag_path.empty()) {
      s = hj_solution_write_diagonal_cut(sol, diag_path.c_str());
      if (s != HJ_OK) {
        hj_solution_destroy(sol);
        return fail_with(s);
      }
    }
    hj_solution_destroy(sol);
    return 0;
  }

  if (sweep->parsed()) {
    std::vector<int> meshes;
    try {
      meshes = parse_meshes(meshes_csv);
    } catch (const std::exception&) {
      std::fprintf(stderr, "error code=invalid-argument message=\"bad --meshes list\"\n");
      return 1;
    }
    hj_status s = hj_sweep(&opts, meshes.data(), static_cast<int>(meshes.size()),
                           out_path.empty() ? "-" : out_path.c_str());
    if (s != HJ_OK) return fail_with(s);
    return 0;
  }

  if (bench->parsed()) {
    double ader = 0, rkdg = 0, ratio = 0;
    hj_status s = hj_bench(&opts, repeats, &ader, &rkdg, &ratio);
    if (s != HJ_OK) return fail_with(s);
    std::printf("example=%s k=%d n=%d ader_seconds=%.4f rkdg_seconds=%.4f ratio=%.4f\n",
                example.c_str(), degree, cells, ader, rkdg, ratio);
    return 0;
  }

  if (tables->parsed()) {
    if (!dump_basis) {
      std::fprintf(stderr, "error code=invalid-argument message=\"use --dump-basis\"\n");
      return 1;
    }
    hj_status s = hj_dump_tables(tables_dim, tables_degree, tables_out.c_str());
    if (s != HJ_OK) return fail_with(s);
    return 0;
  }

  for (int i = 0; i < hj_case_count(); ++i) std::printf("%s\n", hj_case_name(i));
  return 0;
}
