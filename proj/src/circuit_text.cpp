// SPDX-License-Identifier: Apache-2.0
#include "circuit_text.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "daqc.hpp"

namespace qhhl {

std::string format_double(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

namespace {

std::string qref(int q) { return "q" + std::to_string(q); }

int parse_qref(const std::string& tok) {
  require(tok.size() >= 2 && tok[0] == 'q', ErrorCode::Parse,
          "expected qubit reference like q0, got '" + tok + "'");
  try {
    return std::stoi(tok.substr(1));
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "bad qubit reference '" + tok + "'");
  }
}

double parse_number(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    require(used == tok.size(), ErrorCode::Parse, "trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "bad " + what + " '" + tok + "'");
  }
}

std::map<std::string, std::string> parse_kv(
    const std::vector<std::string>& toks, std::size_t first) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = first; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    require(eq != std::string::npos, ErrorCode::Parse,
            "expected key=value, got '" + toks[i] + "'");
    kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return kv;
}

std::vector<int> parse_qubit_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_qref(item));
  return out;
}

std::string complex_list(const CMatrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!out.empty()) out += ',';
      out += format_double(m(r, c).real(), 17) + ':' +
             format_double(m(r, c).imag(), 17);
    }
  return out;
}

CMatrix parse_complex_matrix(const std::string& csv) {
  std::vector<cplx> entries;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    require(colon != std::string::npos, ErrorCode::Parse,
            "matrix entry must be re:im, got '" + item + "'");
    entries.emplace_back(parse_number(item.substr(0, colon), "matrix entry"),
                         parse_number(item.substr(colon + 1), "matrix entry"));
  }
  std::size_t dim = 1;
  while (dim * dim < entries.size()) ++dim;
  require(dim * dim == entries.size() && is_power_of_two(dim),
          ErrorCode::Parse, "matrix entry count is not a square power of two");
  CMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          entries[r * dim + c];
  return m;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) toks.push_back(tok);
  return toks;
}

}  // namespace

std::string emit_circuit_text(const Circuit& circuit) {
  std::string out = "LAYOUT nR=" + std::to_string(circuit.layout().n_R) +
                    " nM=" + std::to_string(circuit.layout().n_M) + "\n";
  for (const auto& instr : circuit.instructions()) {
    out += gate_name(instr.kind);
    switch (instr.kind) {
      case GateKind::Rx:
      case GateKind::Ry:
      case GateKind::Rz:
        out += ' ' + qref(instr.qubits[0]) + ' ' +
               format_double(instr.angle, 17);
        break;
      case GateKind::ControlledUnitary: {
        std::string ctrls, tgts;
        for (int q : instr.controls)
          ctrls += (ctrls.empty() ? "" : ",") + qref(q);
        for (int q : instr.qubits) tgts += (tgts.empty() ? "" : ",") + qref(q);
        out += " ctrl=" + ctrls + " targets=" + tgts +
               " matrix=" + complex_list(instr.matrix);
        break;
      }
      case GateKind::AnalogBlock: {
        const auto& a = instr.analog;
        out += " graph=" + a.graph->name() + " g=" + format_double(a.g, 17) +
               " t=" + format_double(a.t, 17);
        if (a.sign < 0) out += " sign=-";
        break;
      }
      default:
        for (int q : instr.qubits) out += ' ' + qref(q);
        break;
    }
    out += '\n';
  }
  return out;
}

Circuit parse_circuit_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<QubitLayout> layout;
  std::optional<Circuit> circuit;
  auto ctx = [&](const std::string& msg) {
    return "line " + std::to_string(line_no) + ": " + msg;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& op = toks[0];
    try {
      if (op == "LAYOUT") {
        auto kv = parse_kv(toks, 1);
        require(kv.count("nR") && kv.count("nM"), ErrorCode::Parse,
                "LAYOUT needs nR= and nM=");
        layout = QubitLayout{
            static_cast<int>(parse_number(kv["nR"], "nR")),
            static_cast<int>(parse_number(kv["nM"], "nM"))};
        circuit.emplace(*layout);
        continue;
      }
      require(circuit.has_value(), ErrorCode::Parse,
              "instruction before LAYOUT header");
      if (op == "RX" || op == "RY" || op == "RZ") {
        require(toks.size() == 3, ErrorCode::Parse, "rotation needs q and angle");
        GateKind k = op == "RX"   ? GateKind::Rx
                     : op == "RY" ? GateKind::Ry
                                  : GateKind::Rz;
        circuit->append(Instruction::rotation(k, parse_qref(toks[1]),
                                              parse_number(toks[2], "angle")));
      } else if (op == "X" || op == "Y" || op == "Z" || op == "H" ||
                 op == "V" || op == "VDG") {
        require(toks.size() == 2, ErrorCode::Parse, "gate needs one qubit");
        GateKind k = op == "X"   ? GateKind::X
                     : op == "Y" ? GateKind::Y
                     : op == "Z" ? GateKind::Z
                     : op == "H" ? GateKind::H
                     : op == "V" ? GateKind::V
                                 : GateKind::Vdg;
        circuit->append(Instruction::single(k, parse_qref(toks[1])));
      } else if (op == "CNOT" || op == "CZ" || op == "SWAP") {
        require(toks.size() == 3, ErrorCode::Parse, "gate needs two qubits");
        int a = parse_qref(toks[1]), b = parse_qref(toks[2]);
        if (op == "CNOT")
          circuit->append(Instruction::cnot(a, b));
        else if (op == "CZ")
          circuit->append(Instruction::cz(a, b));
        else
          circuit->append(Instruction::swap(a, b));
      } else if (op == "CU") {
        auto kv = parse_kv(toks, 1);
        require(kv.count("ctrl") && kv.count("targets") && kv.count("matrix"),
                ErrorCode::Parse, "CU needs ctrl=, targets=, matrix=");
        circuit->append(Instruction::controlled_unitary(
            parse_complex_matrix(kv["matrix"]), parse_qubit_list(kv["targets"]),
            parse_qubit_list(kv["ctrl"])));
      } else if (op == "ANALOG") {
        auto kv = parse_kv(toks, 1);
        require(kv.count("graph") && kv.count("g") && kv.count("t"),
                ErrorCode::Parse, "ANALOG needs graph=, g=, t=");
        int sign = kv.count("sign") && kv["sign"] == "-" ? -1 : +1;
        circuit->append(Instruction::analog_block(
            make_coupling_graph(kv["graph"], *layout),
            parse_number(kv["g"], "g"), parse_number(kv["t"], "t"), sign));
      } else {
        fail(ErrorCode::Parse, "unknown instruction '" + op + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse ||
          e.code() == ErrorCode::InvalidArgument)
        fail(ErrorCode::Parse, ctx(e.what()));
      fail(ErrorCode::Validation, ctx(e.what()));
    }
  }
  require(circuit.has_value(), ErrorCode::Parse, "missing LAYOUT header");
  return *circuit;
}

}  // namespace qhhl
