// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "aqe.hpp"
#include "codesign.hpp"
#include "daqc.hpp"
#include "hhl.hpp"

namespace qhhl {

/// {"A_re": [[..]], "A_im": [[..]], "b_re": [..], "b_im": [..]};
/// the imaginary parts may be omitted for real problems.
ProblemInstance problem_from_json(const std::string& text);
std::string problem_to_json(const ProblemInstance& instance);

std::string report_to_json(const SolutionReport& report);
/// Report plus a sampled-observable block (Z on the first memory qubit).
std::string report_to_json(const SolutionReport& report, long long shots,
                           const ObservableEstimate& estimate);
std::string angles_to_json(const AngleTable& table);
std::string daqc_report_to_json(const DaqcResourceReport& report,
                                const std::string& mode, double delta_t,
                                double bdaqc_distance, bool overlap_warning);
std::string resources_to_json(const ResourceCount& rc);

/// Header `n_R,N_s,residual_norm,observable_error,post_select_probability,
/// recommended_n_R`; failed rows carry FAILED in the value columns.
/// Values use 12 significant digits.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Header `arch,swap_count,depth_proxy`.
std::string compare_to_csv(const std::vector<CompareRow>& rows);

}  // namespace qhhl
