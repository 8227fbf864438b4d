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
 * Circuit intermediate representation: an ordered gate list with qubit and
 * classical-bit declarations, a builder API, and structural validation.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qftlogic {

enum class GateKind {
    Hadamard,
    PauliX,
    Phase,
    ControlledPhase,
    Swap,
    Measure,
};

const char* gateKindName(GateKind kind);

/**
 * One circuit instruction. Phase-like ops carry the angle as an integer
 * exponent k >= 1 (theta_k = 2*pi/2^k) plus a negation flag, never as
 * floating-point radians; that keeps QFT/IQFT pairs exactly symmetric and
 * QASM emission byte-stable.
 */
struct GateOp {
    GateKind kind = GateKind::Hadamard;
    int phase_k = 0;              // angle exponent, Phase/ControlledPhase only
    bool phase_negated = false;   // true for inverse rotations
    std::vector<int> targets;
    std::vector<int> controls;
    int classical_bit = -1;       // Measure only

    static GateOp hadamard(int qubit);
    static GateOp pauliX(int qubit);
    static GateOp phase(int k, int qubit, bool negated = false);
    static GateOp controlledPhase(int k, int control, int target, bool negated = false);
    static GateOp swap(int a, int b);
    static GateOp measure(int qubit, int classical_bit);

    /// Signed phase angle in radians (0 for non-phase kinds).
    double angle() const;

    bool operator==(const GateOp& other) const = default;
};

/// Ordered gate list over a fixed register. Immutable once built; the fluent
/// helpers return *this for chaining during construction.
struct Circuit {
    int num_qubits = 1;
    int num_classical_bits = 0;
    std::vector<GateOp> ops;
    std::string label;

    Circuit() = default;
    explicit Circuit(int qubits, int classical_bits = 0, std::string name = {})
        : num_qubits(qubits), num_classical_bits(classical_bits), label(std::move(name)) {}

    Circuit& push(GateOp op);
    Circuit& h(int qubit);
    Circuit& x(int qubit);
    Circuit& phase(int k, int qubit);
    Circuit& cphase(int k, int control, int target);
    Circuit& swap(int a, int b);
    Circuit& measure(int qubit, int classical_bit);

    bool hasMeasurement() const;
};

struct CircuitViolation {
    std::string message;
    std::optional<std::size_t> op_index;  // first offending op; empty for header issues
};

/// Structural validation; returns the first violation, or nullopt when the
/// circuit is well formed. Measurement is terminal per wire.
std::optional<CircuitViolation> validate(const Circuit& circuit);

/// Reversed gate list with every phase rotation negated. H, X and Swap are
/// self-inverse. Throws if the circuit contains a measurement.
Circuit inverse(const Circuit& circuit);

/// a's ops followed by b's ops over the same register width; classical
/// declarations are merged. a must be measurement-free.
Circuit concat(const Circuit& a, const Circuit& b);

}  // namespace qftlogic
