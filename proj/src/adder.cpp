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

#include "qftlogic/adder.hpp"

#include <stdexcept>
#include <string>

#include "qftlogic/qft.hpp"

namespace qftlogic {

namespace {

void checkInputs(int num_inputs) {
    if (num_inputs < 2 || num_inputs > 8) {
        throw std::invalid_argument("adder input count must be between 2 and 8");
    }
}

int accumulatorWidthFor(int num_inputs) {
    // Smallest W with 2^W > N, so the register holds the maximum sum N.
    int width = 1;
    while ((1 << width) <= num_inputs) {
        ++width;
    }
    return width;
}

}  // namespace

AdderLayout adderLayout(int num_inputs) {
    checkInputs(num_inputs);
    AdderLayout layout;
    layout.num_inputs = num_inputs;
    layout.ancilla_count = accumulatorWidthFor(num_inputs) - 1;
    for (int i = 0; i < num_inputs; ++i) {
        layout.input_qubits.push_back(layout.ancilla_count + i);
    }
    for (int j = 0; j < layout.accumulatorWidth(); ++j) {
        layout.accumulator_qubits.push_back(j);
    }
    layout.sum_bit = 0;
    for (int m = 1; m < layout.accumulatorWidth(); ++m) {
        layout.carry_bits.push_back(m);
    }
    return layout;
}

Circuit buildAdderCore(int num_inputs) {
    const AdderLayout layout = adderLayout(num_inputs);
    const int width = layout.accumulatorWidth();
    Circuit circuit(layout.totalQubits(), 0, "adder" + std::to_string(num_inputs));

    // The accumulator wires are 0..width-1, so the QFT ops embed unchanged.
    for (const GateOp& op : buildQft(width).ops) {
        circuit.push(op);
    }
    // Each remaining input adds 1 to the Fourier-space accumulator: wire j
    // (weight 2^{width-1-j}) picks up phase theta_{j+1} = 2*pi/2^{j+1}.
    for (int i = 1; i < num_inputs; ++i) {
        const int input_wire = layout.input_qubits[static_cast<std::size_t>(i)];
        for (int j = 0; j < width; ++j) {
            circuit.cphase(j + 1, input_wire, j);
        }
    }
    for (const GateOp& op : buildIqft(width).ops) {
        circuit.push(op);
    }
    return circuit;
}

Adder buildAdder(int num_inputs) {
    Adder adder{buildAdderCore(num_inputs), adderLayout(num_inputs)};
    const int width = adder.layout.accumulatorWidth();
    adder.circuit.num_classical_bits = width;
    // Sum bit first (q0 -> c0), then carries up the register.
    for (int j = width - 1; j >= 0; --j) {
        adder.circuit.measure(j, width - 1 - j);
    }
    return adder;
}

int accumulatorValue(const MeasurementRecord& record, const AdderLayout& layout) {
    const int width = layout.accumulatorWidth();
    if (static_cast<int>(record.classical_bits.size()) != width) {
        throw std::invalid_argument("measurement record width does not match the adder layout");
    }
    int value = record.classical_bits[static_cast<std::size_t>(layout.sum_bit)];
    for (std::size_t m = 0; m < layout.carry_bits.size(); ++m) {
        const int bit =
            record.classical_bits[static_cast<std::size_t>(layout.carry_bits[m])];
        value += bit << (m + 1);
    }
    return value;
}

}  // namespace qftlogic
