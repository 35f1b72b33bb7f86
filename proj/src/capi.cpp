/*
  hj-ader: extern "C" implementation bridging the public API onto the
  C++ core. Exceptions are caught at the boundary and translated into
  status codes plus a per-thread message.

  License: Apache-2.0
*/
#include "hjader.h"

#include <fstream>
#include <iostream>
#include <string>

#include "basis.hpp"
#include "errors.hpp"
#include "harness.hpp"

namespace {

thread_local std::string g_last_error;

hj_status to_status(hjader::ErrorCode code) {
  using hjader::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return HJ_ERR_INVALID_ARGUMENT;
    case ErrorCode::unsupported_order: return HJ_ERR_UNSUPPORTED_ORDER;
    case ErrorCode::unknown_case: return HJ_ERR_UNKNOWN_CASE;
    case ErrorCode::assembly_failure: return HJ_ERR_ASSEMBLY;
    case ErrorCode::oracle_failure: return HJ_ERR_ORACLE_FAILURE;
    case ErrorCode::predictor_blowup: return HJ_ERR_PREDICTOR_BLOWUP;
    case ErrorCode::step_failure: return HJ_ERR_STEP_FAILURE;
    case ErrorCode::io_failure: return HJ_ERR_IO;
    case ErrorCode::internal: return HJ_ERR_INTERNAL;
  }
  return HJ_ERR_INTERNAL;
}

template <typename Fn>
hj_status guarded(Fn&& fn) {
  try {
    fn();
    return HJ_OK;
  } catch (const hjader::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HJ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HJ_ERR_INTERNAL;
  }
}

hjader::RunOutput make_run(const hj_run_options* opts) {
  if (!opts || !opts->example)
    hjader::fail(hjader::ErrorCode::invalid_argument, "null options or example name");
  std::string scheme = opts->scheme ? opts->scheme : "ader";
  return hjader::run_case(opts->example, scheme, opts->degree, opts->cells, opts->cfl,
                          opts->t_final, opts->limiter != 0);
}

std::ofstream open_output(const char* path) {
  std::ofstream os(path);
  if (!os)
    hjader::fail(hjader::ErrorCode::io_failure, "cannot open '" + std::string(path) + "'");
  return os;
}

}  // namespace

struct hj_solution {
  hjader::RunOutput out;
};

extern "C" {

const char* hj_version(void) { return "0.1.0"; }

const char* hj_status_name(hj_status s) {
  switch (s) {
    case HJ_OK: return "ok";
    case HJ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HJ_ERR_UNSUPPORTED_ORDER: return "unsupported-order";
    case HJ_ERR_UNKNOWN_CASE: return "unknown-case";
    case HJ_ERR_ASSEMBLY: return "assembly-failure";
    case HJ_ERR_ORACLE_FAILURE: return "oracle-failure";
    case HJ_ERR_PREDICTOR_BLOWUP: return "predictor-blowup";
    case HJ_ERR_STEP_FAILURE: return "step-failure";
    case HJ_ERR_IO: return "io-failure";
    case HJ_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* hj_last_error(void) { return g_last_error.c_str(); }

int hj_case_count(void) { return static_cast<int>(hjader::catalog_names().size()); }

const char* hj_case_name(int index) {
  const auto& names = hjader::catalog_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<size_t>(index)].c_str();
}

hj_status hj_run(const hj_run_options* opts, hj_solution** out) {
  return guarded([&] {
    if (!out) hjader::fail(hjader::ErrorCode::invalid_argument, "null output pointer");
    *out = new hj_solution{make_run(opts)};
  });
}

void hj_solution_destroy(hj_solution* s) { delete s; }

int hj_solution_dim(const hj_solution* s) { return s ? s->out.dim : 0; }

long hj_solution_steps(const hj_solution* s) { return s ? s->out.steps() : 0; }

double hj_solution_time(const hj_solution* s) { return s ? s->out.cfg.t_final : 0.0; }

double hj_solution_cpu_seconds(const hj_solution* s) {
  return s ? s->out.cpu_seconds() : 0.0;
}

hj_status hj_solution_eval(const hj_solution* s, double x, double y, double* value) {
  return guarded([&] {
    if (!s || !value) hjader::fail(hjader::ErrorCode::invalid_argument, "null argument");
    *value = s->out.dim == 1 ? hjader::eval_field(s->out.r1->field, x)
                             : hjader::eval_field_2d(s->out.r2->field, x, y);
  });
}

hj_status hj_solution_errors(const hj_solution* s, double* l1, double* l2, double* linf) {
  return guarded([&] {
    if (!s) hjader::fail(hjader::ErrorCode::invalid_argument, "null solution");
    hjader::ErrorNorms n =
        s->out.dim == 1
            ? hjader::error_norms(s->out.r1->field, s->out.pc, s->out.cfg.t_final)
            : hjader::error_norms_2d(s->out.r2->field, s->out.pc, s->out.cfg.t_final);
    if (l1) *l1 = n.l1;
    if (l2) *l2 = n.l2;
    if (linf) *linf = n.linf;
  });
}

hj_status hj_solution_write_csv(const hj_solution* s, const char* path) {
  return guarded([&] {
    if (!s || !path) hjader::fail(hjader::ErrorCode::invalid_argument, "null argument");
    std::ofstream os = open_output(path);
    hjader::dump_solution(s->out, os);
    if (!os) hjader::fail(hjader::ErrorCode::io_failure, "write failed: " + std::string(path));
  });
}

hj_status hj_solution_write_diagonal_cut(const hj_solution* s, const char* path) {
  return guarded([&] {
    if (!s || !path) hjader::fail(hjader::ErrorCode::invalid_argument, "null argument");
    std::ofstream os = open_output(path);
    hjader::dump_diagonal_cut(s->out, os);
    if (!os) hjader::fail(hjader::ErrorCode::io_failure, "write failed: " + std::string(path));
  });
}

hj_status hj_sweep(const hj_run_options* opts, const int* meshes, int mesh_count,
                   const char* csv_path) {
  return guarded([&] {
    if (!opts || !opts->example || !meshes || mesh_count <= 0)
      hjader::fail(hjader::ErrorCode::invalid_argument, "null sweep arguments");
    hjader::RunSpec spec;
    spec.example = opts->example;
    spec.scheme = opts->scheme ? opts->scheme : "ader";
    spec.degree = opts->degree;
    spec.meshes.assign(meshes, meshes + mesh_count);
    spec.cfl = opts->cfl;
    spec.t_final = opts->t_final;
    spec.limiter = opts->limiter != 0;
    if (csv_path && std::string(csv_path) != "-") {
      std::ofstream os = open_output(csv_path);
      hjader::sweep_to_csv(spec, os);
    } else {
      hjader::sweep_to_csv(spec, std::cout);
    }
  });
}

hj_status hj_bench(const hj_run_options* opts, int repeats, double* ader_seconds,
                   double* rkdg_seconds, double* ratio) {
  return guarded([&] {
    if (!opts || !opts->example)
      hjader::fail(hjader::ErrorCode::invalid_argument, "null bench arguments");
    hjader::BenchResult b = hjader::timing_benchmark(opts->example, opts->degree,
                                                     opts->cells, opts->cfl, opts->t_final,
                                                     repeats);
    if (ader_seconds) *ader_seconds = b.ader_seconds;
    if (rkdg_seconds) *rkdg_seconds = b.rkdg_seconds;
    if (ratio) *ratio = b.ratio;
  });
}

hj_status hj_dump_tables(int dim, int degree, const char* path) {
  return guarded([&] {
    hjader::PredictorTables t = hjader::make_predictor_tables(dim, degree);
    if (path && std::string(path) != "-") {
      std::ofstream os = open_output(path);
      hjader::dump_tables_csv(t, os);
    } else {
      hjader::dump_tables_csv(t, std::cout);
    }
  });
}

}  // extern "C"
