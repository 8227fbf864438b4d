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
/**
 * @file
 * OpenQASM 2.0 text for any circuit, plus a parser for the emitted subset.
 * Emission is deterministic so structurally equal circuits produce
 * byte-identical documents, and parse(emit(c)) re-emits the same bytes.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qftlogic/circuit.hpp"

namespace qftlogic {

struct QasmDocument {
    std::string text;
    int gate_count = 0;  // unitary gate statements; measurements not counted
    int declared_qubits = 0;
    int declared_classical_bits = 0;
};

/**
 * Emits the circuit as OpenQASM 2.0 using the qelib1 gate set: h, x,
 * u1(pi/2^(k-1)), cu1(pi/2^(k-1)) with the control first, swap, and measure.
 * Angles are exact fractional text ("pi", "pi/2", "-pi/4"), never decimals.
 * The document starts with a single `// <label>` comment when the circuit
 * has a label, declares `qreg q[...]` and `creg c[...]` (the creg is always
 * present, c[0] when nothing is measured), uses LF line endings and one
 * statement per line. Throws std::invalid_argument if the circuit is invalid.
 */
QasmDocument toQasm(const Circuit& circuit);

/// Parse failure; line and column are 1-based.
class QasmParseError : public std::runtime_error {
  public:
    QasmParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/**
 * Parses text restricted to the subset toQasm emits. Gates outside the
 * subset ("rz", "cx", ...) and angles not of the form pi/2^m are rejected.
 * The returned circuit validates and simulates identically to the circuit
 * the text was emitted from.
 */
Circuit parseQasm(std::string_view text);

}  // namespace qftlogic
