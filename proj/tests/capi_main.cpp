// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface through qhhl/qhhl.h alone.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "qhhl/qhhl.h"

namespace {

constexpr const char* kWorkedProblem = R"({
  "A_re": [[0.375, 0.125], [0.125, 0.375]],
  "b_re": [1.0, 0.0]
})";

struct Str {
  char* v = nullptr;
  ~Str() { qhhl_string_free(v); }
  std::string get() const { return v ? v : ""; }
};

struct Problem {
  qhhl_problem* p = nullptr;
  ~Problem() { qhhl_problem_free(p); }
};

double json_number(const std::string& body, const std::string& key) {
  auto pos = body.find("\"" + key + "\"");
  REQUIRE(pos != std::string::npos);
  pos = body.find(':', pos);
  return std::stod(body.substr(pos + 1));
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(qhhl_version()) == "1.0.0");
  CHECK(std::string(qhhl_status_name(QHHL_OK)) == "ok");
  CHECK(std::string(qhhl_status_name(QHHL_ERROR_PARSE)) == "parse");
}

TEST_CASE("problem parsing accepts the schema and rejects junk") {
  Problem ok;
  CHECK(qhhl_problem_parse(kWorkedProblem, &ok.p) == QHHL_OK);

  qhhl_problem* bad = nullptr;
  CHECK(qhhl_problem_parse("{not json", &bad) == QHHL_ERROR_PARSE);
  CHECK(std::string(qhhl_last_error()).size() > 0);

  // Non-Hermitian input fails validation.
  CHECK(qhhl_problem_parse(
            R"({"A_re": [[1, 1], [0, 1]], "b_re": [1, 0]})", &bad) ==
        QHHL_ERROR_VALIDATION);

  // Singular matrix surfaces through solve's rescale.
  Problem singular;
  CHECK(qhhl_problem_parse(
            R"({"A_re": [[1, 0], [0, 0]], "b_re": [1, 0]})", &singular.p) ==
        QHHL_OK);
  Str rep;
  CHECK(qhhl_solve(singular.p, 2, 0, 0, &rep.v) == QHHL_ERROR_SINGULAR);
  CHECK(std::string(qhhl_last_error()).find("sigma_min") != std::string::npos);
}

TEST_CASE("solve reports the worked-instance values") {
  Problem p;
  REQUIRE(qhhl_problem_parse(kWorkedProblem, &p.p) == QHHL_OK);
  Str rep;
  REQUIRE(qhhl_solve(p.p, 2, 0, 0, &rep.v) == QHHL_OK);
  std::string body = rep.get();
  CHECK(std::abs(json_number(body, "post_select_probability") - 0.625) < 1e-9);
  CHECK(json_number(body, "fidelity_vs_classical") > 1.0 - 1e-8);
  CHECK(std::abs(json_number(body, "condition_number") - 2.0) < 1e-12);
  CHECK(std::abs(json_number(body, "C") - 0.25) < 1e-15);

  Str with_shots;
  REQUIRE(qhhl_solve(p.p, 2, 1000, 7, &with_shots.v) == QHHL_OK);
  CHECK(with_shots.get().find("observable_mean") != std::string::npos);
}

TEST_CASE("synth-aqe emits the circuit text and angle table") {
  Str circuit, angles;
  REQUIRE(qhhl_synth_aqe(1, "inverse", &circuit.v, &angles.v) == QHHL_OK);
  std::string text = circuit.get();
  CHECK(text.find("LAYOUT nR=1 nM=1") != std::string::npos);
  CHECK(text.find("V q0") != std::string::npos);
  CHECK(text.find("CNOT q1 q0") != std::string::npos);
  // theta = (pi/2, -pi/2) in the JSON table.
  std::string table = angles.get();
  auto tpos = table.find("\"theta\"");
  REQUIRE(tpos != std::string::npos);
  CHECK(table.find("1.5707963267948966", tpos) != std::string::npos);
  CHECK(table.find("-1.5707963267948966", tpos) != std::string::npos);

  qhhl_status bad = qhhl_synth_aqe(2, "frobnicate", nullptr, nullptr);
  CHECK(bad == QHHL_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(qhhl_last_error()).find("inverse") != std::string::npos);
}

TEST_CASE("synth-aqe n_R=4 emits 16 RZ and 16 CNOT lines") {
  Str circuit;
  REQUIRE(qhhl_synth_aqe(4, "inverse", &circuit.v, nullptr) == QHHL_OK);
  std::string text = circuit.get();
  int rz = 0, cnot = 0;
  for (std::size_t pos = 0; (pos = text.find("RZ q0", pos)) != std::string::npos;
       pos += 5)
    ++rz;
  for (std::size_t pos = 0; (pos = text.find("CNOT q", pos)) != std::string::npos;
       pos += 6)
    ++cnot;
  CHECK(rz == 16);
  CHECK(cnot == 16);
}

TEST_CASE("compile-daqc sdaqc on the star graph") {
  Str schedule, report;
  REQUIRE(qhhl_compile_daqc(2, "inverse", "sdaqc", "star", 0.01, 1,
                            &schedule.v, &report.v) == QHHL_OK);
  CHECK(schedule.get().find("ANALOG graph=star") != std::string::npos);
  CHECK(schedule.get().find("t=0.39269908169872414") != std::string::npos);
  CHECK(json_number(report.get(), "analog_blocks") == 8);
  CHECK(report.get().find("within_bounds") != std::string::npos);
}

TEST_CASE("compile-daqc rejects graphs with residual couplings") {
  Str schedule, report;
  CHECK(qhhl_compile_daqc(2, "inverse", "sdaqc", "kite", 0.01, 1, &schedule.v,
                          &report.v) == QHHL_ERROR_RESIDUAL_COUPLING);
}

TEST_CASE("compile-daqc bdaqc reports the distance to the sdaqc target") {
  Str schedule, report;
  REQUIRE(qhhl_compile_daqc(1, "inverse", "bdaqc", "star", 0.005, 1,
                            &schedule.v, &report.v) == QHHL_OK);
  double d = json_number(report.get(), "distance_to_sdaqc");
  CHECK(d > 0);
  CHECK(d < 1.0);
  Str schedule2, report2;
  REQUIRE(qhhl_compile_daqc(1, "inverse", "bdaqc", "star", 0.0025, 1,
                            &schedule2.v, &report2.v) == QHHL_OK);
  double d2 = json_number(report2.get(), "distance_to_sdaqc");
  CHECK(d2 <= 0.7 * d);
}

TEST_CASE("route: kite needs no SWAPs, line does") {
  Str routed, csv;
  REQUIRE(qhhl_route(nullptr, 3, "kite", &routed.v, &csv.v) == QHHL_OK);
  CHECK(csv.get().find("arch,swap_count,depth_proxy") == 0);
  CHECK(csv.get().find("kite,0,") != std::string::npos);

  Str routed2, csv2;
  REQUIRE(qhhl_route(nullptr, 3, "line", &routed2.v, &csv2.v) == QHHL_OK);
  // Parse the inserted-SWAP count from the line row.
  std::string body = csv2.get();
  auto row = body.find("line,");
  REQUIRE(row != std::string::npos);
  long swaps = std::stol(body.substr(row + 5));
  CHECK(swaps >= 1);
}

TEST_CASE("route_compare emits a row per architecture") {
  const char* archs[] = {"kite", "line", "complete"};
  Str csv;
  REQUIRE(qhhl_route_compare(nullptr, 3, archs, 3, &csv.v) == QHHL_OK);
  std::string body = csv.get();
  CHECK(body.find("kite,") != std::string::npos);
  CHECK(body.find("line,") != std::string::npos);
  CHECK(body.find("complete,0,") != std::string::npos);
}

TEST_CASE("sweep is deterministic for a fixed seed") {
  Problem p;
  REQUIRE(qhhl_problem_parse(kWorkedProblem, &p.p) == QHHL_OK);
  int nrs[] = {2, 3};
  long long shots[] = {0, 100};
  Str a, b;
  REQUIRE(qhhl_sweep(p.p, nrs, 2, shots, 2, 11, &a.v) == QHHL_OK);
  REQUIRE(qhhl_sweep(p.p, nrs, 2, shots, 2, 11, &b.v) == QHHL_OK);
  CHECK(a.get() == b.get());
  CHECK(a.get().find("n_R,N_s,residual_norm,observable_error,"
                     "post_select_probability,recommended_n_R\n") == 0);

  Str c;
  CHECK(qhhl_sweep(p.p, nrs, 0, shots, 2, 11, &c.v) ==
        QHHL_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("circuit handles: parse, layout, emit, resources") {
  Str circuit;
  REQUIRE(qhhl_synth_aqe(3, "inverse", &circuit.v, nullptr) == QHHL_OK);
  qhhl_circuit* handle = nullptr;
  REQUIRE(qhhl_circuit_parse(circuit.v, &handle) == QHHL_OK);
  int n_r = 0, n_m = 0;
  CHECK(qhhl_circuit_layout(handle, &n_r, &n_m) == QHHL_OK);
  CHECK(n_r == 3);
  CHECK(n_m == 1);
  Str emitted;
  CHECK(qhhl_circuit_emit(handle, &emitted.v) == QHHL_OK);
  CHECK(emitted.get() == circuit.get());
  Str resources;
  CHECK(qhhl_circuit_resources(handle, 0, &resources.v) == QHHL_OK);
  CHECK(json_number(resources.get(), "cnot_count") == 8);
  qhhl_circuit_free(handle);

  qhhl_circuit* bad = nullptr;
  CHECK(qhhl_circuit_parse("LAYOUT nR=1 nM=1\nBLORP q0\n", &bad) ==
        QHHL_ERROR_PARSE);
}
