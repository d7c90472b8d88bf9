// SPDX-License-Identifier: Apache-2.0
#include "qhhl/qhhl.h"

#include <cstring>
#include <string>

#include "circuit_text.hpp"
#include "codesign.hpp"
#include "daqc.hpp"
#include "hhl.hpp"
#include "json_io.hpp"
#include "simulate.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qhhl_status status_of(qhhl::ErrorCode code) {
  using qhhl::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return QHHL_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Validation: return QHHL_ERROR_VALIDATION;
    case ErrorCode::SingularMatrix: return QHHL_ERROR_SINGULAR;
    case ErrorCode::UnsupportedInstance: return QHHL_ERROR_UNSUPPORTED;
    case ErrorCode::DegenerateInstance: return QHHL_ERROR_DEGENERATE;
    case ErrorCode::ResourceLimit: return QHHL_ERROR_RESOURCE_LIMIT;
    case ErrorCode::ResidualCoupling: return QHHL_ERROR_RESIDUAL_COUPLING;
    case ErrorCode::Parse: return QHHL_ERROR_PARSE;
    case ErrorCode::Io: return QHHL_ERROR_IO;
  }
  return QHHL_ERROR_INTERNAL;
}

template <typename Fn>
qhhl_status guarded(Fn&& fn) {
  try {
    fn();
    return QHHL_OK;
  } catch (const qhhl::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QHHL_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QHHL_ERROR_INTERNAL;
  }
}

void require_arg(bool cond, const char* msg) {
  qhhl::require(cond, qhhl::ErrorCode::InvalidArgument, msg);
}

// Built-in demo instance for routing without a problem file.
qhhl::ProblemInstance demo_instance() {
  qhhl::ProblemInstance inst;
  inst.A = qhhl::CMatrix(2, 2);
  inst.A << 0.375, 0.125, 0.125, 0.375;
  inst.b = qhhl::CVector(2);
  inst.b << 1.0, 0.0;
  return inst;
}

}  // namespace

struct qhhl_problem {
  qhhl::ProblemInstance instance;
};

struct qhhl_circuit {
  qhhl::Circuit circuit;
};

extern "C" {

const char* qhhl_version(void) { return "1.0.0"; }

const char* qhhl_status_name(qhhl_status status) {
  switch (status) {
    case QHHL_OK: return "ok";
    case QHHL_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case QHHL_ERROR_VALIDATION: return "validation";
    case QHHL_ERROR_SINGULAR: return "singular";
    case QHHL_ERROR_UNSUPPORTED: return "unsupported";
    case QHHL_ERROR_DEGENERATE: return "degenerate";
    case QHHL_ERROR_RESOURCE_LIMIT: return "resource-limit";
    case QHHL_ERROR_RESIDUAL_COUPLING: return "residual-coupling";
    case QHHL_ERROR_PARSE: return "parse";
    case QHHL_ERROR_IO: return "io";
    case QHHL_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* qhhl_last_error(void) { return g_last_error.c_str(); }

void qhhl_string_free(char* s) { delete[] s; }

qhhl_status qhhl_problem_parse(const char* json, qhhl_problem** out) {
  return guarded([&] {
    require_arg(json != nullptr && out != nullptr, "null argument");
    auto instance = qhhl::problem_from_json(json);
    instance.validate();
    *out = new qhhl_problem{std::move(instance)};
  });
}

void qhhl_problem_free(qhhl_problem* problem) { delete problem; }

qhhl_status qhhl_solve(const qhhl_problem* problem, int n_r, long long shots,
                       unsigned long long seed, char** report_json) {
  return guarded([&] {
    require_arg(problem != nullptr && report_json != nullptr, "null argument");
    qhhl::HHLConfig config;
    config.n_R = n_r;
    config.shots = shots;
    config.seed = seed;
    auto report = qhhl::run(problem->instance, config);
    if (shots > 0) {
      auto omega = qhhl::memory_z_observable(problem->instance.n_M());
      auto est = qhhl::estimate_observable(report.solution, omega, shots, seed);
      *report_json = dup_string(qhhl::report_to_json(report, shots, est));
    } else {
      *report_json = dup_string(qhhl::report_to_json(report));
    }
  });
}

qhhl_status qhhl_synth_aqe(int n_r, const char* f_name, char** circuit_text,
                           char** angles_json) {
  return guarded([&] {
    require_arg(f_name != nullptr, "null function name");
    auto f = qhhl::MatrixFunctionSpec::by_name(f_name, n_r);
    auto synth = qhhl::synthesize(n_r, f);
    if (circuit_text)
      *circuit_text = dup_string(qhhl::emit_circuit_text(synth.circuit));
    if (angles_json)
      *angles_json = dup_string(qhhl::angles_to_json(synth.angles));
  });
}

qhhl_status qhhl_compile_daqc(int n_r, const char* f_name, const char* mode,
                              const char* graph, double delta_t, int merge,
                              char** schedule_text, char** report_json) {
  return guarded([&] {
    require_arg(f_name && mode && graph, "null argument");
    std::string mode_s = mode;
    require_arg(mode_s == "sdaqc" || mode_s == "bdaqc",
                "mode must be sdaqc or bdaqc");
    auto f = qhhl::MatrixFunctionSpec::by_name(f_name, n_r);
    auto synth = qhhl::synthesize(n_r, f);
    auto coupling = qhhl::make_coupling_graph(graph, synth.circuit.layout());
    auto schedule = qhhl::compile_sdaqc(synth.circuit, coupling, merge != 0);
    schedule.origin_n_R = n_r;

    double distance = 0.0;
    bool warning = false;
    if (mode_s == "bdaqc") {
      auto banged = qhhl::simulate_bdaqc(schedule, qhhl::BangParams{delta_t});
      auto target = qhhl::circuit_unitary(qhhl::schedule_to_circuit(schedule));
      distance = qhhl::phase_aligned_distance(banged.unitary, target);
      warning = banged.overlap_warning;
    }
    if (schedule_text)
      *schedule_text = dup_string(
          qhhl::emit_circuit_text(qhhl::schedule_to_circuit(schedule)));
    if (report_json)
      *report_json = dup_string(qhhl::daqc_report_to_json(
          qhhl::resource_report(schedule), mode_s, delta_t, distance, warning));
  });
}

qhhl_status qhhl_route(const qhhl_problem* problem, int n_r, const char* arch,
                       char** routed_text, char** table_csv) {
  return guarded([&] {
    require_arg(arch != nullptr, "null architecture name");
    auto instance = problem ? problem->instance : demo_instance();
    auto scaled = qhhl::rescale(instance.A);
    require_arg(scaled.A_scaled.rows() == 2,
                "routing workload requires a 2x2 problem (one memory qubit)");
    auto circuit = qhhl::build_routing_demo(n_r, scaled.A_scaled);
    auto architecture = qhhl::make_architecture(arch, n_r, 1);
    auto routed = qhhl::route(circuit, architecture);
    if (routed_text)
      *routed_text = dup_string(qhhl::emit_circuit_text(routed.circuit));
    if (table_csv) {
      auto rows = qhhl::compare(circuit, {architecture});
      *table_csv = dup_string(qhhl::compare_to_csv(rows));
    }
  });
}

qhhl_status qhhl_route_compare(const qhhl_problem* problem, int n_r,
                               const char* const* archs, size_t n_archs,
                               char** table_csv) {
  return guarded([&] {
    require_arg(archs != nullptr && n_archs > 0 && table_csv != nullptr,
                "null or empty architecture list");
    auto instance = problem ? problem->instance : demo_instance();
    auto scaled = qhhl::rescale(instance.A);
    require_arg(scaled.A_scaled.rows() == 2,
                "routing workload requires a 2x2 problem (one memory qubit)");
    auto circuit = qhhl::build_routing_demo(n_r, scaled.A_scaled);
    std::vector<qhhl::Architecture> list;
    for (size_t i = 0; i < n_archs; ++i)
      list.push_back(qhhl::make_architecture(archs[i], n_r, 1));
    *table_csv = dup_string(qhhl::compare_to_csv(qhhl::compare(circuit, list)));
  });
}

qhhl_status qhhl_sweep(const qhhl_problem* problem, const int* n_r_values,
                       size_t n_r_count, const long long* shot_values,
                       size_t shot_count, unsigned long long seed, char** csv) {
  return guarded([&] {
    require_arg(problem && csv, "null argument");
    require_arg(n_r_values && n_r_count > 0, "empty n_R range");
    require_arg(shot_values && shot_count > 0, "empty shots range");
    std::vector<int> n_rs(n_r_values, n_r_values + n_r_count);
    std::vector<long long> shots(shot_values, shot_values + shot_count);
    auto rows = qhhl::error_sweep(problem->instance, n_rs, shots, seed);
    bool any_ok = false;
    for (const auto& r : rows) any_ok |= !r.failed;
    qhhl::require(any_ok, qhhl::ErrorCode::DegenerateInstance,
                  "every sweep row failed: " +
                      (rows.empty() ? std::string() : rows.front().message));
    *csv = dup_string(qhhl::sweep_to_csv(rows));
  });
}

qhhl_status qhhl_circuit_parse(const char* text, qhhl_circuit** out) {
  return guarded([&] {
    require_arg(text != nullptr && out != nullptr, "null argument");
    *out = new qhhl_circuit{qhhl::parse_circuit_text(text)};
  });
}

void qhhl_circuit_free(qhhl_circuit* circuit) { delete circuit; }

qhhl_status qhhl_circuit_emit(const qhhl_circuit* circuit, char** text) {
  return guarded([&] {
    require_arg(circuit != nullptr && text != nullptr, "null argument");
    *text = dup_string(qhhl::emit_circuit_text(circuit->circuit));
  });
}

qhhl_status qhhl_circuit_layout(const qhhl_circuit* circuit, int* n_r,
                                int* n_m) {
  return guarded([&] {
    require_arg(circuit != nullptr, "null argument");
    if (n_r) *n_r = circuit->circuit.layout().n_R;
    if (n_m) *n_m = circuit->circuit.layout().n_M;
  });
}

qhhl_status qhhl_circuit_resources(const qhhl_circuit* circuit,
                                   int native_gates, char** report_json) {
  return guarded([&] {
    require_arg(circuit != nullptr && report_json != nullptr, "null argument");
    auto rc = qhhl::count_resources(circuit->circuit, native_gates != 0);
    *report_json = dup_string(qhhl::resources_to_json(rc));
  });
}

}  // extern "C"
