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
 * Boolean logic gates synthesized from the Fourier-basis adder: AND reads the
 * adder's carry, NAND adds an X post-process, OR and NOR negate the inputs
 * per De Morgan, and XOR swaps the sum bit onto the ancilla. Every gate is
 * verified exhaustively against its classical truth table.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qftlogic/adder.hpp"
#include "qftlogic/circuit.hpp"
#include "qftlogic/simulator.hpp"

namespace qftlogic {

enum class LogicGateKind { And, Nand, Or, Nor, Xor };

const char* logicGateName(LogicGateKind kind);

/// Parses "and", "nand", "or", "nor", "xor" (case-sensitive); throws
/// std::invalid_argument otherwise.
LogicGateKind parseLogicGateName(std::string_view name);

/// How the classical output is recovered from a measurement record.
enum class OutputDecode {
    MeasuredBit,         // read one measured classical bit
    AccumulatorEquals,   // decode the accumulator, compare == decode_value
    AccumulatorDiffers,  // decode the accumulator, compare != decode_value
};

enum class XorReadout {
    SwapToAncilla,  // swap the sum onto |A> and measure it (two inputs only)
    SumBit,         // measure the sum bit directly; parity for any width
};

struct SynthesisOptions {
    XorReadout xor_readout = XorReadout::SwapToAncilla;
};

struct SynthesizedGate {
    LogicGateKind kind = LogicGateKind::And;
    int num_inputs = 0;
    Circuit circuit;
    AdderLayout layout;
    int output_bit = 0;  // classical index read in MeasuredBit mode
    OutputDecode decode = OutputDecode::MeasuredBit;
    int decode_value = 0;
};

/**
 * Builds the quantum counterpart of a Boolean gate over num_inputs data
 * qubits (2..8). Two-input circuits match the reference constructions
 * wire for wire; wider gates generalize them. When the gate's output cannot
 * be read from the single top carry qubit (input counts that are not a power
 * of two), the full accumulator is measured and compared classically.
 */
SynthesizedGate synthesize(LogicGateKind kind, int num_inputs, SynthesisOptions options = {});

/// Classical reference: And = all bits set, Or = any bit set, Nand/Nor their
/// negations, Xor = parity.
int classicalOracle(LogicGateKind kind, const std::vector<int>& bits);

/// Classical output of one run of the gate.
int outputFromRecord(const SynthesizedGate& gate, const MeasurementRecord& record);

/// Input wires hold `input_bits`; ancillas start at |0>.
std::string fullInputBits(const AdderLayout& layout, std::string_view input_bits);

/// Runs the gate on one basis input and decodes the output bit.
int runGate(const SynthesizedGate& gate, std::string_view input_bits);

struct TruthTableRow {
    std::string input;
    int measured = -1;  // -1 when the readout was not deterministic
    int expected = 0;
    bool match = false;
};

struct TruthTableReport {
    LogicGateKind kind = LogicGateKind::And;
    int num_inputs = 0;
    std::vector<TruthTableRow> rows;
    bool pass = false;
};

/// Runs all 2^N basis inputs through the gate and compares each measured
/// output with the classical oracle. A non-deterministic readout is reported
/// as a row failure rather than thrown.
TruthTableReport verifyTruthTable(const SynthesizedGate& gate);

struct ResourceCount {
    int qubits = 0;
    int gates = 0;
};

/// Total qubit count N + ceil(log2(N+1)) - 1 and gate-op count of the
/// synthesized circuit. The Toffoli-ladder baseline for comparison is 2N - 1
/// qubits.
ResourceCount resourceCount(LogicGateKind kind, int num_inputs);

}  // namespace qftlogic
