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
 * One-bit N-input adder in the Fourier basis: QFT on the accumulator
 * register, a controlled-phase ladder that adds each remaining input, an
 * IQFT back to the computational basis, and measurement of the carry and sum
 * bits.
 */

#pragma once

#include <vector>

#include "qftlogic/circuit.hpp"
#include "qftlogic/simulator.hpp"

namespace qftlogic {

/**
 * @brief Wire and classical-bit layout of an N-input adder.
 *
 * Ancillas occupy the lowest wire indices (the |A> wires on top), followed by
 * the data inputs q0..q_{N-1}. The accumulator register is the ancillas plus
 * q0 as its least-significant bit; it is wide enough to hold the maximum sum
 * N. Classical bit c_m receives the weight-2^m bit of the sum, so c0 is the
 * sum bit and c1.. are the carries.
 */
struct AdderLayout {
    int num_inputs = 0;
    int ancilla_count = 0;               // ceil(log2(N+1)) - 1
    std::vector<int> input_qubits;       // wires of q0..q_{N-1}
    std::vector<int> accumulator_qubits; // ancillas high-to-low, then q0
    int sum_bit = 0;                     // classical index c0
    std::vector<int> carry_bits;         // classical indices c1.. (ascending weight)

    int accumulatorWidth() const { return ancilla_count + 1; }
    int totalQubits() const { return num_inputs + ancilla_count; }
};

struct Adder {
    Circuit circuit;
    AdderLayout layout;
};

/// Layout for an N-input adder, 2 <= N <= 8.
AdderLayout adderLayout(int num_inputs);

/// The measurement-free adder prefix (QFT, phase ladder, IQFT); unitary.
Circuit buildAdderCore(int num_inputs);

/// Complete adder: core plus measurement of the accumulator into the
/// carry/sum classical bits.
Adder buildAdder(int num_inputs);

/// Decodes the measured accumulator as an integer: the arithmetic sum of the
/// input bits. Throws if the record width does not match the layout.
int accumulatorValue(const MeasurementRecord& record, const AdderLayout& layout);

}  // namespace qftlogic
