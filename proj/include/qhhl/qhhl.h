/* SPDX-License-Identifier: Apache-2.0
 *
 * qhhl — quantum linear-system solver toolkit: AQE circuit synthesis,
 * HHL simulation, digital-analog compilation, and SWAP routing across
 * processor architectures.
 *
 * All functions return QHHL_OK on success. On failure they return a
 * status code and leave a human-readable message in qhhl_last_error()
 * (thread-local, valid until the next failing call on the same thread).
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with qhhl_string_free().
 */
#ifndef QHHL_H
#define QHHL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhhl_status {
  QHHL_OK = 0,
  QHHL_ERROR_INVALID_ARGUMENT = 1,
  QHHL_ERROR_VALIDATION = 2,
  QHHL_ERROR_SINGULAR = 3,
  QHHL_ERROR_UNSUPPORTED = 4,
  QHHL_ERROR_DEGENERATE = 5,
  QHHL_ERROR_RESOURCE_LIMIT = 6,
  QHHL_ERROR_RESIDUAL_COUPLING = 7,
  QHHL_ERROR_PARSE = 8,
  QHHL_ERROR_IO = 9,
  QHHL_ERROR_INTERNAL = 10
} qhhl_status;

const char* qhhl_version(void);
const char* qhhl_status_name(qhhl_status status);
const char* qhhl_last_error(void);
void qhhl_string_free(char* s);

/* ---- Problem instances (A x = b) -------------------------------------- */

typedef struct qhhl_problem qhhl_problem;

/* JSON schema: {"A_re": [[..]], "A_im": [[..]], "b_re": [..], "b_im": [..]};
 * imaginary parts optional. A must be Hermitian, dimension a power of two. */
qhhl_status qhhl_problem_parse(const char* json, qhhl_problem** out);
void qhhl_problem_free(qhhl_problem* problem);

/* ---- HHL solve --------------------------------------------------------- */

/* Runs the full pipeline (QPE, ancilla encoding of C/lambda, inverse QPE,
 * ancilla post-selection) with n_r register qubits. shots > 0 additionally
 * samples the Z observable on the first memory qubit with the given seed.
 * The report JSON mirrors the solution-report fields. */
qhhl_status qhhl_solve(const qhhl_problem* problem, int n_r, long long shots,
                       unsigned long long seed, char** report_json);

/* ---- AQE synthesis ------------------------------------------------------ */

/* f_name: inverse | identity | sqrt | zero. Emits the circuit text and a
 * JSON angle table {n_R, C, phi[], theta[]}. Either out-param may be NULL. */
qhhl_status qhhl_synth_aqe(int n_r, const char* f_name, char** circuit_text,
                           char** angles_json);

/* ---- Digital-analog compilation ----------------------------------------- */

/* mode: "sdaqc" | "bdaqc"; graph: "star" | "kite" | "line" (see docs: the
 * two-block cZ identity is exact only when every coupling touches the gate
 * pair, so register-register couplings are rejected). delta_t is the
 * single-qubit pulse duration for bdaqc. merge != 0 runs the analog-block
 * fusion pass. */
qhhl_status qhhl_compile_daqc(int n_r, const char* f_name, const char* mode,
                              const char* graph, double delta_t, int merge,
                              char** schedule_text, char** report_json);

/* ---- Architecture routing ----------------------------------------------- */

/* Routes the two-qubit-gate HHL workload (memory fixed to one qubit) onto
 * the named architecture: kite | line | ring | star | complete.
 * `problem` may be NULL for the built-in 2x2 demo instance. */
qhhl_status qhhl_route(const qhhl_problem* problem, int n_r, const char* arch,
                       char** routed_text, char** table_csv);

/* One CSV row per architecture name. */
qhhl_status qhhl_route_compare(const qhhl_problem* problem, int n_r,
                               const char* const* archs, size_t n_archs,
                               char** table_csv);

/* ---- Error-scaling sweep ------------------------------------------------ */

/* Rows are n_R-major then shots-minor; each row's sampler is seeded with
 * seed + row_index, so identical configs give byte-identical CSV. */
qhhl_status qhhl_sweep(const qhhl_problem* problem, const int* n_r_values,
                       size_t n_r_count, const long long* shot_values,
                       size_t shot_count, unsigned long long seed, char** csv);

/* ---- Circuit handles ----------------------------------------------------- */

typedef struct qhhl_circuit qhhl_circuit;

qhhl_status qhhl_circuit_parse(const char* text, qhhl_circuit** out);
void qhhl_circuit_free(qhhl_circuit* circuit);
qhhl_status qhhl_circuit_emit(const qhhl_circuit* circuit, char** text);
qhhl_status qhhl_circuit_layout(const qhhl_circuit* circuit, int* n_r,
                                int* n_m);
/* Gate tally as JSON; native_gates != 0 expands each SWAP into 3 CNOTs. */
qhhl_status qhhl_circuit_resources(const qhhl_circuit* circuit,
                                   int native_gates, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* QHHL_H */
