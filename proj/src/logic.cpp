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

#include "qftlogic/logic.hpp"

#include <bit>
#include <stdexcept>

#include "qftlogic/state_vector.hpp"

namespace qftlogic {

const char* logicGateName(LogicGateKind kind) {
    switch (kind) {
        case LogicGateKind::And:
            return "and";
        case LogicGateKind::Nand:
            return "nand";
        case LogicGateKind::Or:
            return "or";
        case LogicGateKind::Nor:
            return "nor";
        case LogicGateKind::Xor:
            return "xor";
    }
    throw std::invalid_argument("unknown logic gate kind");
}

LogicGateKind parseLogicGateName(std::string_view name) {
    if (name == "and") return LogicGateKind::And;
    if (name == "nand") return LogicGateKind::Nand;
    if (name == "or") return LogicGateKind::Or;
    if (name == "nor") return LogicGateKind::Nor;
    if (name == "xor") return LogicGateKind::Xor;
    throw std::invalid_argument("unknown logic gate name: " + std::string(name));
}

namespace {

// The top accumulator qubit alone carries the output only when the all-ones
// sum N lands exactly on its weight, i.e. when N is a power of two.
bool singleBitReadout(int num_inputs) {
    return std::has_single_bit(static_cast<unsigned>(num_inputs));
}

void appendMeasureAccumulator(Circuit& circuit, const AdderLayout& layout) {
    const int width = layout.accumulatorWidth();
    circuit.num_classical_bits = width;
    for (int j = width - 1; j >= 0; --j) {
        circuit.measure(j, width - 1 - j);
    }
}

}  // namespace

SynthesizedGate synthesize(LogicGateKind kind, int num_inputs, SynthesisOptions options) {
    const AdderLayout layout = adderLayout(num_inputs);
    const int total = layout.totalQubits();
    const int width = layout.accumulatorWidth();

    if (kind == LogicGateKind::Xor && options.xor_readout == XorReadout::SwapToAncilla &&
        num_inputs != 2) {
        throw std::invalid_argument(
            "xor with the swap readout is defined for 2 inputs; "
            "use the sum-bit (parity) readout for wider gates");
    }

    Circuit pre(total);
    Circuit post(total);
    switch (kind) {
        case LogicGateKind::And:
            break;
        case LogicGateKind::Nand:
            post.x(0);
            break;
        case LogicGateKind::Or:
            for (int q : layout.input_qubits) pre.x(q);
            post.x(0);
            break;
        case LogicGateKind::Nor:
            for (int q : layout.input_qubits) pre.x(q);
            break;
        case LogicGateKind::Xor:
            if (options.xor_readout == XorReadout::SwapToAncilla) {
                post.swap(0, layout.input_qubits.front());
            }
            break;
    }

    SynthesizedGate gate;
    gate.kind = kind;
    gate.num_inputs = num_inputs;
    gate.layout = layout;
    gate.circuit = concat(concat(pre, buildAdderCore(num_inputs)), post);
    gate.circuit.label = std::string(logicGateName(kind)) + std::to_string(num_inputs);

    if (kind == LogicGateKind::Xor) {
        const int wire = options.xor_readout == XorReadout::SwapToAncilla
                             ? 0
                             : layout.input_qubits.front();
        gate.circuit.num_classical_bits = 1;
        gate.circuit.measure(wire, 0);
        gate.decode = OutputDecode::MeasuredBit;
        gate.output_bit = 0;
    } else if (singleBitReadout(num_inputs)) {
        gate.circuit.num_classical_bits = 1;
        gate.circuit.measure(0, 0);
        gate.decode = OutputDecode::MeasuredBit;
        gate.output_bit = 0;
    } else {
        appendMeasureAccumulator(gate.circuit, layout);
        switch (kind) {
            case LogicGateKind::And:
            case LogicGateKind::Nor:
                gate.decode = OutputDecode::AccumulatorEquals;
                gate.decode_value = num_inputs;
                break;
            case LogicGateKind::Nand:
            case LogicGateKind::Or:
                // The post-process X flips the top carry, so the all-ones
                // pattern reads back as N with that bit toggled.
                gate.decode = OutputDecode::AccumulatorDiffers;
                gate.decode_value = num_inputs ^ (1 << (width - 1));
                break;
            case LogicGateKind::Xor:
                break;
        }
    }
    return gate;
}

int classicalOracle(LogicGateKind kind, const std::vector<int>& bits) {
    if (bits.empty()) throw std::invalid_argument("oracle needs at least one input bit");
    int all = 1;
    int any = 0;
    int parity = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("oracle input bits must be 0 or 1");
        all &= b;
        any |= b;
        parity ^= b;
    }
    switch (kind) {
        case LogicGateKind::And:
            return all;
        case LogicGateKind::Nand:
            return 1 - all;
        case LogicGateKind::Or:
            return any;
        case LogicGateKind::Nor:
            return 1 - any;
        case LogicGateKind::Xor:
            return parity;
    }
    throw std::invalid_argument("unknown logic gate kind");
}

int outputFromRecord(const SynthesizedGate& gate, const MeasurementRecord& record) {
    switch (gate.decode) {
        case OutputDecode::MeasuredBit:
            return record.classical_bits.at(static_cast<std::size_t>(gate.output_bit));
        case OutputDecode::AccumulatorEquals:
            return accumulatorValue(record, gate.layout) == gate.decode_value ? 1 : 0;
        case OutputDecode::AccumulatorDiffers:
            return accumulatorValue(record, gate.layout) != gate.decode_value ? 1 : 0;
    }
    throw std::invalid_argument("unknown output decode mode");
}

std::string fullInputBits(const AdderLayout& layout, std::string_view input_bits) {
    if (static_cast<int>(input_bits.size()) != layout.num_inputs) {
        throw std::invalid_argument("expected " + std::to_string(layout.num_inputs) +
                                    " input bits, got " + std::to_string(input_bits.size()));
    }
    std::string full(static_cast<std::size_t>(layout.ancilla_count), '0');
    full.append(input_bits);
    return full;
}

int runGate(const SynthesizedGate& gate, std::string_view input_bits) {
    const MeasurementRecord record =
        runDeterministic(gate.circuit, fullInputBits(gate.layout, input_bits));
    return outputFromRecord(gate, record);
}

TruthTableReport verifyTruthTable(const SynthesizedGate& gate) {
    TruthTableReport report;
    report.kind = gate.kind;
    report.num_inputs = gate.num_inputs;
    report.pass = true;

    const int n = gate.num_inputs;
    for (Index idx = 0; idx < (Index{1} << n); ++idx) {
        TruthTableRow row;
        row.input = bitsFromBasisIndex(idx, n);
        std::vector<int> bits(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = row.input[static_cast<std::size_t>(i)] - '0';
        row.expected = classicalOracle(gate.kind, bits);
        try {
            row.measured = runGate(gate, row.input);
        } catch (const NonDeterministicOutcome&) {
            row.measured = -1;
        }
        row.match = row.measured == row.expected;
        report.pass = report.pass && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

ResourceCount resourceCount(LogicGateKind kind, int num_inputs) {
    SynthesisOptions options;
    if (kind == LogicGateKind::Xor && num_inputs != 2) {
        options.xor_readout = XorReadout::SumBit;
    }
    const SynthesizedGate gate = synthesize(kind, num_inputs, options);
    ResourceCount count;
    count.qubits = gate.layout.totalQubits();
    count.gates = static_cast<int>(gate.circuit.ops.size());
    return count;
}

}  // namespace qftlogic
