// Copyright 2026 The qftlogic Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qftlogic/qasm.hpp"

#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qftlogic {

namespace {

std::string angleText(int k, bool negated) {
    if (k < 1 || k > 62) {
        throw std::invalid_argument("phase exponent out of emittable range: k=" +
                                    std::to_string(k));
    }
    std::string text = negated ? "-pi" : "pi";
    if (k > 1) {
        text += "/" + std::to_string(std::int64_t{1} << (k - 1));
    }
    return text;
}

std::string qubitRef(int q) { return "q[" + std::to_string(q) + "]"; }

}  // namespace

QasmDocument toQasm(const Circuit& circuit) {
    if (auto violation = validate(circuit)) {
        throw std::invalid_argument("invalid circuit: " + violation->message);
    }
    if (circuit.label.find('\n') != std::string::npos ||
        circuit.label.find('\r') != std::string::npos) {
        throw std::invalid_argument("circuit label must be a single line");
    }

    QasmDocument doc;
    doc.declared_qubits = circuit.num_qubits;
    doc.declared_classical_bits = circuit.num_classical_bits;

    std::string& out = doc.text;
    if (!circuit.label.empty()) {
        out += "// " + circuit.label + "\n";
    }
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
    out += "creg c[" + std::to_string(circuit.num_classical_bits) + "];\n";

    for (const GateOp& op : circuit.ops) {
        switch (op.kind) {
            case GateKind::Hadamard:
                out += "h " + qubitRef(op.targets[0]) + ";\n";
                break;
            case GateKind::PauliX:
                out += "x " + qubitRef(op.targets[0]) + ";\n";
                break;
            case GateKind::Phase:
                out += "u1(" + angleText(op.phase_k, op.phase_negated) + ") " +
                       qubitRef(op.targets[0]) + ";\n";
                break;
            case GateKind::ControlledPhase:
                out += "cu1(" + angleText(op.phase_k, op.phase_negated) + ") " +
                       qubitRef(op.controls[0]) + "," + qubitRef(op.targets[0]) + ";\n";
                break;
            case GateKind::Swap:
                out += "swap " + qubitRef(op.targets[0]) + "," + qubitRef(op.targets[1]) + ";\n";
                break;
            case GateKind::Measure:
                out += "measure " + qubitRef(op.targets[0]) + " -> c[" +
                       std::to_string(op.classical_bit) + "];\n";
                break;
        }
        if (op.kind != GateKind::Measure) ++doc.gate_count;
    }
    return doc;
}

namespace {

// Cursor over one source line; all failures carry the 1-based line/column.
class LineScanner {
  public:
    LineScanner(int line, std::string_view text) : line_(line), text_(text) {}

    [[noreturn]] void fail(const std::string& message) const { failAt(pos_, message); }

    [[noreturn]] void failAt(std::size_t pos, const std::string& message) const {
        throw QasmParseError(line_, static_cast<int>(pos) + 1, message);
    }

    void skipSpaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token, const std::string& what) {
        if (!consume(token)) fail("expected " + what);
    }

    bool atEnd() const { return pos_ >= text_.size(); }

    void expectLineEnd() {
        skipSpaces();
        if (!atEnd()) fail("expected end of line");
    }

    std::size_t position() const { return pos_; }

    std::string parseIdentifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (pos_ == start) fail("expected statement");
        return std::string(text_.substr(start, pos_ - start));
    }

    int parseInt(const std::string& what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) fail("expected " + what);
        if (pos_ - start > 9) failAt(start, what + " is too large");
        int value = 0;
        for (std::size_t i = start; i < pos_; ++i) value = value * 10 + (text_[i] - '0');
        return value;
    }

  private:
    int line_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Parser {
    Circuit circuit{1};
    std::vector<int> op_lines;

    int parseQubitRef(LineScanner& sc) {
        sc.expect("q[", "quantum register reference q[...]");
        const std::size_t at = sc.position();
        const int index = sc.parseInt("qubit index");
        sc.expect("]", "']'");
        if (index >= circuit.num_qubits) sc.failAt(at, "qubit index out of range");
        return index;
    }

    int parseClassicalRef(LineScanner& sc) {
        sc.expect("c[", "classical register reference c[...]");
        const std::size_t at = sc.position();
        const int index = sc.parseInt("classical bit index");
        sc.expect("]", "']'");
        if (index >= circuit.num_classical_bits) sc.failAt(at, "classical bit out of range");
        return index;
    }

    // Accepts exactly the emitted angle forms: pi, -pi, pi/2^m, -pi/2^m.
    std::pair<int, bool> parseAngle(LineScanner& sc) {
        const bool negated = sc.consume("-");
        const std::size_t at = sc.position();
        sc.expect("pi", "angle of the form pi/2^m");
        int k = 1;
        if (sc.consume("/")) {
            const unsigned denom = static_cast<unsigned>(sc.parseInt("angle denominator"));
            if (denom == 0 || !std::has_single_bit(denom)) {
                sc.failAt(at, "angle must be of the form pi/2^m");
            }
            k = 1 + std::countr_zero(denom);
        }
        return {k, negated};
    }

    void parseStatement(int line, std::string_view text) {
        LineScanner sc(line, text);
        sc.skipSpaces();
        const std::size_t name_at = sc.position();
        const std::string name = sc.parseIdentifier();
        GateOp op;
        if (name == "h" || name == "x") {
            sc.skipSpaces();
            const int target = parseQubitRef(sc);
            op = name == "h" ? GateOp::hadamard(target) : GateOp::pauliX(target);
        } else if (name == "u1") {
            sc.expect("(", "'('");
            const auto [k, negated] = parseAngle(sc);
            sc.expect(")", "')'");
            sc.skipSpaces();
            op = GateOp::phase(k, parseQubitRef(sc), negated);
        } else if (name == "cu1") {
            sc.expect("(", "'('");
            const auto [k, negated] = parseAngle(sc);
            sc.expect(")", "')'");
            sc.skipSpaces();
            const int control = parseQubitRef(sc);
            sc.skipSpaces();
            sc.expect(",", "','");
            sc.skipSpaces();
            const int target = parseQubitRef(sc);
            op = GateOp::controlledPhase(k, control, target, negated);
        } else if (name == "swap") {
            sc.skipSpaces();
            const int a = parseQubitRef(sc);
            sc.skipSpaces();
            sc.expect(",", "','");
            sc.skipSpaces();
            const int b = parseQubitRef(sc);
            op = GateOp::swap(a, b);
        } else if (name == "measure") {
            sc.skipSpaces();
            const int target = parseQubitRef(sc);
            sc.skipSpaces();
            sc.expect("->", "'->'");
            sc.skipSpaces();
            const int bit = parseClassicalRef(sc);
            op = GateOp::measure(target, bit);
        } else {
            sc.failAt(name_at, "unsupported gate '" + name + "'");
        }
        sc.skipSpaces();
        sc.expect(";", "';'");
        sc.expectLineEnd();
        circuit.ops.push_back(std::move(op));
        op_lines.push_back(line);
    }
};

bool isBlank(std::string_view text) {
    for (char c : text) {
        if (c != ' ' && c != '\t') return false;
    }
    return true;
}

}  // namespace

Circuit parseQasm(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    {
        int number = 1;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (line.ends_with('\r')) line.remove_suffix(1);
            if (!isBlank(line)) lines.emplace_back(number, line);
            start = end + 1;
            ++number;
        }
    }

    Parser parser;
    std::size_t at = 0;
    auto next = [&]() -> std::pair<int, std::string_view> {
        if (at >= lines.size()) {
            const int line = lines.empty() ? 1 : lines.back().first + 1;
            throw QasmParseError(line, 1, "unexpected end of input");
        }
        return lines[at++];
    };

    auto [first_line, first_text] = next();
    if (first_text.starts_with("//")) {
        std::string_view label = first_text.substr(2);
        if (label.starts_with(' ')) label.remove_prefix(1);
        parser.circuit.label = std::string(label);
        std::tie(first_line, first_text) = next();
    }

    {
        LineScanner sc(first_line, first_text);
        sc.skipSpaces();
        sc.expect("OPENQASM", "OPENQASM header");
        sc.skipSpaces();
        if (!sc.consume("2.0")) sc.fail("unsupported OpenQASM version (expected 2.0)");
        sc.skipSpaces();
        sc.expect(";", "';'");
        sc.expectLineEnd();
    }
    {
        auto [line, body] = next();
        LineScanner sc(line, body);
        sc.skipSpaces();
        sc.expect("include", "include directive");
        sc.skipSpaces();
        sc.expect("\"qelib1.inc\"", "\"qelib1.inc\"");
        sc.skipSpaces();
        sc.expect(";", "';'");
        sc.expectLineEnd();
    }
    {
        auto [line, body] = next();
        LineScanner sc(line, body);
        sc.skipSpaces();
        sc.expect("qreg", "qreg declaration");
        sc.skipSpaces();
        sc.expect("q[", "quantum register named q");
        const std::size_t size_at = sc.position();
        const int size = sc.parseInt("register size");
        sc.expect("]", "']'");
        sc.skipSpaces();
        sc.expect(";", "';'");
        sc.expectLineEnd();
        if (size < 1) sc.failAt(size_at, "quantum register must hold at least one qubit");
        parser.circuit.num_qubits = size;
    }
    {
        auto [line, body] = next();
        LineScanner sc(line, body);
        sc.skipSpaces();
        sc.expect("creg", "creg declaration");
        sc.skipSpaces();
        sc.expect("c[", "classical register named c");
        const int size = sc.parseInt("register size");
        sc.expect("]", "']'");
        sc.skipSpaces();
        sc.expect(";", "';'");
        sc.expectLineEnd();
        parser.circuit.num_classical_bits = size;
    }

    while (at < lines.size()) {
        auto [line, body] = next();
        if (body.substr(0, 2) == "//") throw QasmParseError(line, 1, "unexpected comment");
        parser.parseStatement(line, body);
    }

    if (auto violation = validate(parser.circuit)) {
        const int line = violation->op_index && *violation->op_index < parser.op_lines.size()
                             ? parser.op_lines[*violation->op_index]
                             : 1;
        throw QasmParseError(line, 1, violation->message);
    }
    return parser.circuit;
}

}  // namespace qftlogic
