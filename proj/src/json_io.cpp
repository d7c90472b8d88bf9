// SPDX-License-Identifier: Apache-2.0
#include "json_io.hpp"

#include <json.hpp>

#include "circuit_text.hpp"

namespace qhhl {

using nlohmann::json;

namespace {

json matrix_part(const CMatrix& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_part(const CVector& v, bool imag) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(imag ? v(i).imag() : v(i).real());
  return out;
}

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON input: ") + e.what());
  }
}

void fill_real_parts(const json& j, const std::string& key,
                     std::vector<std::vector<double>>& out, bool required) {
  if (!j.contains(key)) {
    require(!required, ErrorCode::Parse, "missing field '" + key + "'");
    return;
  }
  require(j[key].is_array(), ErrorCode::Parse,
          "field '" + key + "' must be an array");
  out.clear();
  for (const auto& row : j[key]) {
    std::vector<double> r;
    if (row.is_array()) {
      for (const auto& x : row) {
        require(x.is_number(), ErrorCode::Parse,
                "field '" + key + "' must hold numbers");
        r.push_back(x.get<double>());
      }
    } else {
      require(row.is_number(), ErrorCode::Parse,
              "field '" + key + "' must hold numbers");
      r.push_back(row.get<double>());
    }
    out.push_back(std::move(r));
  }
}

}  // namespace

ProblemInstance problem_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  std::vector<std::vector<double>> a_re, a_im, b_re_rows, b_im_rows;
  fill_real_parts(j, "A_re", a_re, true);
  fill_real_parts(j, "A_im", a_im, false);

  require(j.contains("b_re"), ErrorCode::Parse, "missing field 'b_re'");
  require(j["b_re"].is_array(), ErrorCode::Parse, "'b_re' must be an array");

  const std::size_t n = a_re.size();
  require(n >= 2, ErrorCode::Parse, "'A_re' must be at least 2x2");
  for (const auto& row : a_re)
    require(row.size() == n, ErrorCode::Parse, "'A_re' must be square");
  if (!a_im.empty()) {
    require(a_im.size() == n, ErrorCode::Parse, "'A_im' shape mismatch");
    for (const auto& row : a_im)
      require(row.size() == n, ErrorCode::Parse, "'A_im' must be square");
  }

  ProblemInstance inst;
  inst.A = CMatrix::Zero(static_cast<Eigen::Index>(n),
                         static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inst.A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cplx{a_re[r][c], a_im.empty() ? 0.0 : a_im[r][c]};

  auto b_re = j["b_re"].get<std::vector<double>>();
  require(b_re.size() == n, ErrorCode::Parse, "'b_re' length mismatch");
  std::vector<double> b_im(n, 0.0);
  if (j.contains("b_im")) {
    b_im = j["b_im"].get<std::vector<double>>();
    require(b_im.size() == n, ErrorCode::Parse, "'b_im' length mismatch");
  }
  inst.b = CVector(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    inst.b(static_cast<Eigen::Index>(i)) = cplx{b_re[i], b_im[i]};
  return inst;
}

std::string problem_to_json(const ProblemInstance& instance) {
  json j;
  j["A_re"] = matrix_part(instance.A, false);
  j["A_im"] = matrix_part(instance.A, true);
  j["b_re"] = vector_part(instance.b, false);
  j["b_im"] = vector_part(instance.b, true);
  return j.dump(2) + "\n";
}

namespace {

json report_body(const SolutionReport& report) {
  json j;
  j["solution"]["re"] = vector_part(report.solution, false);
  j["solution"]["im"] = vector_part(report.solution, true);
  j["post_select_probability"] = report.post_select_probability;
  j["fidelity_vs_classical"] = report.fidelity_vs_classical;
  j["residual_norm"] = report.residual_norm;
  j["condition_number"] = report.condition_number;
  j["C"] = report.C;
  j["t0"] = report.t0;
  j["n_R"] = report.n_R;
  return j;
}

}  // namespace

std::string report_to_json(const SolutionReport& report) {
  return report_body(report).dump(2) + "\n";
}

std::string report_to_json(const SolutionReport& report, long long shots,
                           const ObservableEstimate& estimate) {
  json j = report_body(report);
  j["shots"] = shots;
  j["observable"] = "Z on first memory qubit";
  j["observable_mean"] = estimate.mean;
  j["observable_stderr"] = estimate.stderr_of_mean;
  return j.dump(2) + "\n";
}

std::string angles_to_json(const AngleTable& table) {
  json j;
  j["n_R"] = table.n_R;
  j["C"] = table.C;
  j["phi"] = table.phi;
  j["theta"] = table.theta;
  return j.dump(2) + "\n";
}

std::string daqc_report_to_json(const DaqcResourceReport& report,
                                const std::string& mode, double delta_t,
                                double bdaqc_distance, bool overlap_warning) {
  json j;
  j["mode"] = mode;
  j["analog_blocks"] = report.analog_blocks;
  j["total_analog_time"] = report.total_analog_time;
  j["single_qubit_gates"] = report.single_qubit_gates;
  if (report.origin_n_R) {
    j["n_R"] = *report.origin_n_R;
    j["paper_bounds"]["analog"] = report.analog_bound;
    j["paper_bounds"]["single"] = report.single_bound;
    j["within_bounds"]["analog"] = report.analog_within_bounds;
    j["within_bounds"]["single"] = report.single_within_bounds;
  }
  if (mode == "bdaqc") {
    j["delta_t"] = delta_t;
    j["distance_to_sdaqc"] = bdaqc_distance;
    j["overlap_warning"] = overlap_warning;
  }
  return j.dump(2) + "\n";
}

std::string resources_to_json(const ResourceCount& rc) {
  json j;
  j["single_qubit_gates"] = rc.single_qubit_gates;
  j["two_qubit_gates"] = rc.two_qubit_gates;
  j["cnot_count"] = rc.cnot_count;
  j["swap_count"] = rc.swap_count;
  j["controlled_blocks"] = rc.controlled_blocks;
  j["analog_blocks"] = rc.analog_blocks;
  j["total_analog_time"] = rc.total_analog_time;
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "n_R,N_s,residual_norm,observable_error,post_select_probability,"
      "recommended_n_R\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n_R) + ',' + std::to_string(r.shots) + ',';
    if (r.failed) {
      out += "FAILED,FAILED,FAILED,";
      out += std::to_string(r.recommended_n_R);
    } else {
      out += format_double(r.residual_norm, 12) + ',' +
             format_double(r.observable_error, 12) + ',' +
             format_double(r.post_select_probability, 12) + ',' +
             std::to_string(r.recommended_n_R);
    }
    out += '\n';
  }
  return out;
}

std::string compare_to_csv(const std::vector<CompareRow>& rows) {
  std::string out = "arch,swap_count,depth_proxy\n";
  for (const auto& r : rows) {
    out += r.arch_name + ',';
    if (r.failed)
      out += "FAILED,FAILED";
    else
      out += std::to_string(r.swap_count) + ',' + std::to_string(r.depth_proxy);
    out += '\n';
  }
  return out;
}

}  // namespace qhhl
