// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the toolkit exclusively through the
// C API in qhhl/qhhl.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qhhl/qhhl.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

int exit_code_for(qhhl_status status) {
  switch (status) {
    case QHHL_OK:
      return kExitOk;
    case QHHL_ERROR_DEGENERATE:
      return kExitDegenerate;
    default:
      return kExitInput;
  }
}

int report_failure(qhhl_status status) {
  std::cerr << "error (" << qhhl_status_name(status)
            << "): " << qhhl_last_error() << "\n";
  return exit_code_for(status);
}

struct StringOut {
  char* value = nullptr;
  ~StringOut() { qhhl_string_free(value); }
};

bool read_file(const std::string& path, std::string& out, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const std::string& content,
                  std::string& err) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err = "cannot write '" + path + "'";
    return false;
  }
  out << content;
  return true;
}

int fail_input(const std::string& msg) {
  std::cerr << "error (input): " << msg << "\n";
  return kExitInput;
}

using ProblemPtr = std::unique_ptr<qhhl_problem, decltype(&qhhl_problem_free)>;

int load_problem(const std::string& path, ProblemPtr& out) {
  std::string text, err;
  if (!read_file(path, text, err)) return fail_input(err);
  qhhl_problem* p = nullptr;
  if (auto status = qhhl_problem_parse(text.c_str(), &p); status != QHHL_OK)
    return report_failure(status);
  out = ProblemPtr(p, &qhhl_problem_free);
  return kExitOk;
}

// Range syntax: comma list ("2,3,4") or inclusive span ("2:6").
template <typename T>
bool parse_range(const std::string& text, std::vector<T>& out) {
  out.clear();
  if (auto colon = text.find(':'); colon != std::string::npos) {
    try {
      long long lo = std::stoll(text.substr(0, colon));
      long long hi = std::stoll(text.substr(colon + 1));
      for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      return false;
    }
    return !out.empty();
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<T>(std::stoll(item)));
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhhl: quantum linear-system solver toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qhhl_version()));

  // solve
  auto* solve = app.add_subcommand("solve", "Run the HHL pipeline on A x = b");
  std::string solve_problem, solve_out;
  int solve_nr = 2;
  long long solve_shots = 0;
  unsigned long long solve_seed = 0;
  solve->add_option("--problem", solve_problem, "problem JSON file")
      ->required();
  solve->add_option("--n-R", solve_nr, "register qubits")->required();
  solve->add_option("--shots", solve_shots,
                    "observable samples (0 = exact expectations)");
  solve->add_option("--seed", solve_seed, "sampler seed");
  solve->add_option("--out", solve_out, "output path (default stdout)");

  // synth-aqe
  auto* synth = app.add_subcommand(
      "synth-aqe", "Synthesize the ancilla-encoding circuit for f");
  int synth_nr = 2;
  std::string synth_f = "inverse", synth_emit, synth_angles;
  synth->add_option("--n-R", synth_nr, "register qubits")->required();
  synth->add_option("--f", synth_f, "function: inverse|identity|sqrt|zero");
  synth->add_option("--emit", synth_emit, "circuit text output path");
  synth->add_option("--angles", synth_angles, "angle JSON output path");

  // compile-daqc
  auto* daqc = app.add_subcommand(
      "compile-daqc", "Lower the ancilla-encoding circuit to analog blocks");
  int daqc_nr = 2;
  std::string daqc_f = "inverse", daqc_mode = "sdaqc", daqc_graph = "star";
  std::string daqc_emit, daqc_report;
  double daqc_dt = 0.01;
  bool daqc_merge = true;
  daqc->add_option("--n-R", daqc_nr, "register qubits")->required();
  daqc->add_option("--f", daqc_f, "function: inverse|identity|sqrt|zero");
  daqc->add_option("--mode", daqc_mode, "sdaqc|bdaqc")
      ->check(CLI::IsMember({"sdaqc", "bdaqc"}));
  daqc->add_option("--graph", daqc_graph, "star|kite|line")
      ->check(CLI::IsMember({"star", "kite", "line"}));
  daqc->add_option("--dt", daqc_dt, "single-qubit pulse duration (bdaqc)");
  daqc->add_flag("--merge,!--no-merge", daqc_merge,
                 "run the analog merge pass (default on)");
  daqc->add_option("--emit", daqc_emit, "schedule text output path");
  daqc->add_option("--report", daqc_report, "resource report output path");

  // route
  auto* route = app.add_subcommand(
      "route", "Route the HHL workload onto a processor architecture");
  int route_nr = 3;
  std::string route_problem, route_arch = "kite", route_emit, route_out;
  bool route_compare_all = false;
  route->add_option("--problem", route_problem,
                    "2x2 problem JSON (default: built-in demo)");
  route->add_option("--n-R", route_nr, "register qubits");
  route->add_option("--arch", route_arch,
                    "kite|line|ring|star|complete");
  route->add_flag("--compare-all", route_compare_all,
                  "emit one CSV row per known architecture");
  route->add_option("--emit-routed", route_emit, "routed circuit output path");
  route->add_option("--out", route_out, "CSV output path (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Error-scaling sweep over register sizes and sample counts");
  std::string sweep_problem, sweep_nr_text, sweep_shots_text = "0",
              sweep_out;
  unsigned long long sweep_seed = 0;
  sweep->add_option("--problem", sweep_problem, "problem JSON file")
      ->required();
  sweep->add_option("--n-R-range", sweep_nr_text,
                    "register range, e.g. 2:6 or 2,4,6")
      ->required();
  sweep->add_option("--shots-range", sweep_shots_text,
                    "sample counts, e.g. 100,10000 (0 = exact)");
  sweep->add_option("--seed", sweep_seed, "base seed (row seeds are base+i)");
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

  // resources
  auto* resources = app.add_subcommand(
      "resources", "Count gates and analog blocks of a circuit file");
  std::string res_circuit, res_out;
  bool res_native = false;
  resources->add_option("--circuit", res_circuit, "circuit text file")
      ->required();
  resources->add_flag("--native-gates", res_native,
                      "expand each SWAP into 3 CNOTs in the tally");
  resources->add_option("--out", res_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  std::string err;

  if (*solve) {
    ProblemPtr problem(nullptr, &qhhl_problem_free);
    if (int rc = load_problem(solve_problem, problem); rc != kExitOk) return rc;
    StringOut report;
    if (auto status = qhhl_solve(problem.get(), solve_nr, solve_shots,
                                 solve_seed, &report.value);
        status != QHHL_OK)
      return report_failure(status);
    if (!write_output(solve_out, report.value, err)) return fail_input(err);
    return kExitOk;
  }

  if (*synth) {
    StringOut circuit, angles;
    if (auto status = qhhl_synth_aqe(synth_nr, synth_f.c_str(), &circuit.value,
                                     &angles.value);
        status != QHHL_OK)
      return report_failure(status);
    if (!synth_emit.empty()) {
      if (!write_output(synth_emit, circuit.value, err)) return fail_input(err);
    } else {
      std::cout << circuit.value;
    }
    if (!synth_angles.empty()) {
      if (!write_output(synth_angles, angles.value, err))
        return fail_input(err);
    } else {
      std::cout << angles.value;
    }
    return kExitOk;
  }

  if (*daqc) {
    StringOut schedule, report;
    if (auto status = qhhl_compile_daqc(
            daqc_nr, daqc_f.c_str(), daqc_mode.c_str(), daqc_graph.c_str(),
            daqc_dt, daqc_merge ? 1 : 0, &schedule.value, &report.value);
        status != QHHL_OK)
      return report_failure(status);
    if (!daqc_emit.empty()) {
      if (!write_output(daqc_emit, schedule.value, err)) return fail_input(err);
    } else {
      std::cout << schedule.value;
    }
    if (!write_output(daqc_report, report.value, err)) return fail_input(err);
    return kExitOk;
  }

  if (*route) {
    ProblemPtr problem(nullptr, &qhhl_problem_free);
    if (!route_problem.empty()) {
      if (int rc = load_problem(route_problem, problem); rc != kExitOk)
        return rc;
    }
    StringOut csv;
    if (route_compare_all) {
      std::vector<const char*> names;
      static const auto known = {"kite", "line", "ring", "star", "complete"};
      for (const char* n : known) names.push_back(n);
      if (auto status = qhhl_route_compare(problem.get(), route_nr,
                                           names.data(), names.size(),
                                           &csv.value);
          status != QHHL_OK)
        return report_failure(status);
    } else {
      StringOut routed;
      if (auto status = qhhl_route(problem.get(), route_nr, route_arch.c_str(),
                                   &routed.value, &csv.value);
          status != QHHL_OK)
        return report_failure(status);
      if (!route_emit.empty() &&
          !write_output(route_emit, routed.value, err))
        return fail_input(err);
    }
    if (!write_output(route_out, csv.value, err)) return fail_input(err);
    return kExitOk;
  }

  if (*sweep) {
    std::vector<int> n_rs;
    std::vector<long long> shot_list;
    if (!parse_range(sweep_nr_text, n_rs))
      return fail_input("bad --n-R-range '" + sweep_nr_text + "'");
    if (!parse_range(sweep_shots_text, shot_list))
      return fail_input("bad --shots-range '" + sweep_shots_text + "'");
    ProblemPtr problem(nullptr, &qhhl_problem_free);
    if (int rc = load_problem(sweep_problem, problem); rc != kExitOk) return rc;
    StringOut csv;
    if (auto status = qhhl_sweep(problem.get(), n_rs.data(), n_rs.size(),
                                 shot_list.data(), shot_list.size(), sweep_seed,
                                 &csv.value);
        status != QHHL_OK)
      return report_failure(status);
    if (!write_output(sweep_out, csv.value, err)) return fail_input(err);
    return kExitOk;
  }

  if (*resources) {
    std::string text;
    if (!read_file(res_circuit, text, err)) return fail_input(err);
    qhhl_circuit* parsed = nullptr;
    if (auto status = qhhl_circuit_parse(text.c_str(), &parsed);
        status != QHHL_OK)
      return report_failure(status);
    std::unique_ptr<qhhl_circuit, decltype(&qhhl_circuit_free)> guard(
        parsed, &qhhl_circuit_free);
    StringOut report;
    if (auto status = qhhl_circuit_resources(parsed, res_native ? 1 : 0,
                                             &report.value);
        status != QHHL_OK)
      return report_failure(status);
    if (!write_output(res_out, report.value, err)) return fail_input(err);
    return kExitOk;
  }

  return kExitInput;
}
