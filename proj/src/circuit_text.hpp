// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "circuit.hpp"

namespace qhhl {

/// Line-oriented circuit text: a LAYOUT header, then one instruction per
/// line (`RZ q0 1.5707963267948966`, `CNOT q1 q0`,
/// `ANALOG graph=star g=1 t=0.39269908169872414`). Angles carry 17
/// significant digits so emit/parse round-trips are exact.
std::string emit_circuit_text(const Circuit& circuit);

Circuit parse_circuit_text(const std::string& text);

std::string format_double(double v, int significant_digits);

}  // namespace qhhl
