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

#include "qftlogic/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qftlogic {

const char* gateKindName(GateKind kind) {
    switch (kind) {
        case GateKind::Hadamard: return "h";
        case GateKind::PauliX: return "x";
        case GateKind::Phase: return "phase";
        case GateKind::ControlledPhase: return "cphase";
        case GateKind::Swap: return "swap";
        case GateKind::Measure: return "measure";
    }
    return "?";
}

GateOp GateOp::hadamard(int qubit) {
    return GateOp{GateKind::Hadamard, 0, false, {qubit}, {}, -1};
}

GateOp GateOp::pauliX(int qubit) {
    return GateOp{GateKind::PauliX, 0, false, {qubit}, {}, -1};
}

GateOp GateOp::phase(int k, int qubit, bool negated) {
    return GateOp{GateKind::Phase, k, negated, {qubit}, {}, -1};
}

GateOp GateOp::controlledPhase(int k, int control, int target, bool negated) {
    return GateOp{GateKind::ControlledPhase, k, negated, {target}, {control}, -1};
}

GateOp GateOp::swap(int a, int b) {
    return GateOp{GateKind::Swap, 0, false, {a, b}, {}, -1};
}

GateOp GateOp::measure(int qubit, int classical_bit) {
    return GateOp{GateKind::Measure, 0, false, {qubit}, {}, classical_bit};
}

double GateOp::angle() const {
    if (kind != GateKind::Phase && kind != GateKind::ControlledPhase) {
        return 0.0;
    }
    const double theta = 2.0 * std::numbers::pi / std::ldexp(1.0, phase_k);
    return phase_negated ? -theta : theta;
}

Circuit& Circuit::push(GateOp op) {
    ops.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::h(int qubit) { return push(GateOp::hadamard(qubit)); }
Circuit& Circuit::x(int qubit) { return push(GateOp::pauliX(qubit)); }
Circuit& Circuit::phase(int k, int qubit) { return push(GateOp::phase(k, qubit)); }

Circuit& Circuit::cphase(int k, int control, int target) {
    return push(GateOp::controlledPhase(k, control, target));
}

Circuit& Circuit::swap(int a, int b) { return push(GateOp::swap(a, b)); }

Circuit& Circuit::measure(int qubit, int classical_bit) {
    return push(GateOp::measure(qubit, classical_bit));
}

bool Circuit::hasMeasurement() const {
    return std::any_of(ops.begin(), ops.end(),
                       [](const GateOp& op) { return op.kind == GateKind::Measure; });
}

namespace {

std::optional<CircuitViolation> checkArity(const GateOp& op, std::size_t i) {
    const auto fail = [&](const char* what) {
        return CircuitViolation{std::string(what) + " at op " + std::to_string(i), i};
    };
    std::size_t want_targets = 1;
    std::size_t want_controls = 0;
    switch (op.kind) {
        case GateKind::Hadamard:
        case GateKind::PauliX:
        case GateKind::Phase:
        case GateKind::Measure:
            break;
        case GateKind::ControlledPhase:
            want_controls = 1;
            break;
        case GateKind::Swap:
            want_targets = 2;
            break;
    }
    if (op.targets.size() != want_targets || op.controls.size() != want_controls) {
        return fail("wrong operand count");
    }
    if (op.kind == GateKind::Phase || op.kind == GateKind::ControlledPhase) {
        if (op.phase_k < 1) {
            return fail("phase exponent must be >= 1");
        }
    }
    if (op.kind == GateKind::Measure) {
        if (op.classical_bit < 0) {
            return fail("measure needs a classical bit");
        }
    } else if (op.classical_bit != -1) {
        return fail("classical bit on a non-measure op");
    }
    return std::nullopt;
}

}  // namespace

std::optional<CircuitViolation> validate(const Circuit& circuit) {
    if (circuit.num_qubits < 1) {
        return CircuitViolation{"circuit declares no qubits", std::nullopt};
    }
    if (circuit.num_classical_bits < 0) {
        return CircuitViolation{"negative classical bit count", std::nullopt};
    }
    std::vector<bool> measured(static_cast<std::size_t>(circuit.num_qubits), false);
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        const GateOp& op = circuit.ops[i];
        if (auto violation = checkArity(op, i)) {
            return violation;
        }
        std::vector<int> touched = op.targets;
        touched.insert(touched.end(), op.controls.begin(), op.controls.end());
        for (int q : touched) {
            if (q < 0 || q >= circuit.num_qubits) {
                return CircuitViolation{"index out of range at op " + std::to_string(i), i};
            }
        }
        std::sort(touched.begin(), touched.end());
        if (std::adjacent_find(touched.begin(), touched.end()) != touched.end()) {
            return CircuitViolation{"duplicate qubit at op " + std::to_string(i), i};
        }
        for (int q : touched) {
            if (measured[static_cast<std::size_t>(q)]) {
                return CircuitViolation{"gate after measurement at op " + std::to_string(i), i};
            }
        }
        if (op.kind == GateKind::Measure) {
            if (op.classical_bit >= circuit.num_classical_bits) {
                return CircuitViolation{"classical bit out of range at op " + std::to_string(i),
                                        i};
            }
            measured[static_cast<std::size_t>(op.targets[0])] = true;
        }
    }
    return std::nullopt;
}

Circuit inverse(const Circuit& circuit) {
    if (circuit.hasMeasurement()) {
        throw std::invalid_argument("cannot invert a circuit containing measurement");
    }
    Circuit inv(circuit.num_qubits, circuit.num_classical_bits, circuit.label);
    inv.ops.reserve(circuit.ops.size());
    for (auto it = circuit.ops.rbegin(); it != circuit.ops.rend(); ++it) {
        GateOp op = *it;
        if (op.kind == GateKind::Phase || op.kind == GateKind::ControlledPhase) {
            op.phase_negated = !op.phase_negated;
        }
        inv.ops.push_back(std::move(op));
    }
    return inv;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("concat: circuit widths differ");
    }
    if (a.hasMeasurement()) {
        throw std::invalid_argument("concat: left circuit must be measurement-free");
    }
    std::string label = a.label.empty() ? b.label
                        : b.label.empty() ? a.label
                                          : a.label + "+" + b.label;
    Circuit joined(a.num_qubits, std::max(a.num_classical_bits, b.num_classical_bits),
                   std::move(label));
    joined.ops = a.ops;
    joined.ops.insert(joined.ops.end(), b.ops.begin(), b.ops.end());
    return joined;
}

}  // namespace qftlogic
