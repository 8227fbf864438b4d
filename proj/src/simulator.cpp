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

#include "qftlogic/simulator.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qftlogic {

namespace {

void requireValid(const Circuit& circuit) {
    if (auto violation = validate(circuit)) {
        throw std::invalid_argument("invalid circuit: " + violation->message);
    }
}

StateVector applyOp(StateVector state, const GateOp& op) {
    switch (op.kind) {
        case GateKind::Hadamard:
            return applyGate(std::move(state), hadamardMatrix(), op.targets);
        case GateKind::PauliX:
            return applyGate(std::move(state), pauliXMatrix(), op.targets);
        case GateKind::Phase:
        case GateKind::ControlledPhase: {
            UnitaryMatrix<double> p = phaseMatrix(op.phase_k);
            if (op.phase_negated) {
                p = p.conjugate();  // diagonal unitary: conjugate is the exact inverse
            }
            return applyGate(std::move(state), p, op.targets, op.controls);
        }
        case GateKind::Swap:
            return applyGate(std::move(state), swapMatrix(), op.targets);
        case GateKind::Measure:
            return state;  // readout handled by the callers
    }
    return state;
}

/// Probability mass per packed classical outcome (bit b of the key is c_b),
/// marginalizing over every unmeasured qubit.
std::vector<double> measuredDistribution(const StateVector& state, const Circuit& circuit) {
    const int n = circuit.num_qubits;
    const int bits = circuit.num_classical_bits;
    std::vector<std::pair<int, int>> qubit_to_cbit;  // (qubit, classical bit)
    for (const GateOp& op : circuit.ops) {
        if (op.kind == GateKind::Measure) {
            qubit_to_cbit.emplace_back(op.targets[0], op.classical_bit);
        }
    }
    if (qubit_to_cbit.empty()) {
        throw std::invalid_argument("circuit has no measurement");
    }
    std::vector<double> distribution(std::size_t{1} << bits, 0.0);
    for (Index i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        std::size_t key = 0;
        for (const auto& [qubit, cbit] : qubit_to_cbit) {
            if ((i >> (n - 1 - qubit)) & 1) {
                key |= std::size_t{1} << cbit;
            }
        }
        distribution[key] += p;
    }
    return distribution;
}

}  // namespace

StateVector runState(const Circuit& circuit, std::string_view input_bits) {
    requireValid(circuit);
    if (static_cast<int>(input_bits.size()) != circuit.num_qubits) {
        throw std::invalid_argument("input bit string length must equal the qubit count");
    }
    StateVector state = StateVector::fromBits(input_bits);
    for (const GateOp& op : circuit.ops) {
        state = applyOp(std::move(state), op);
    }
    return state;
}

MeasurementRecord runDeterministic(const Circuit& circuit, std::string_view input_bits) {
    const StateVector state = runState(circuit, input_bits);
    const std::vector<double> distribution = measuredDistribution(state, circuit);
    const auto top = std::max_element(distribution.begin(), distribution.end());
    const std::size_t key = static_cast<std::size_t>(top - distribution.begin());
    if (*top < kDeterministicThreshold) {
        std::ostringstream msg;
        msg << "measured distribution is not concentrated: best outcome "
            << bitsFromBasisIndex(static_cast<Index>(key), circuit.num_classical_bits)
            << " has probability " << *top;
        throw NonDeterministicOutcome(msg.str());
    }
    MeasurementRecord record;
    record.confidence = *top;
    record.classical_bits.resize(static_cast<std::size_t>(circuit.num_classical_bits), 0);
    for (int b = 0; b < circuit.num_classical_bits; ++b) {
        record.classical_bits[static_cast<std::size_t>(b)] = (key >> b) & 1;
    }
    return record;
}

ShotHistogram runShots(const Circuit& circuit, std::string_view input_bits,
                       std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const StateVector state = runState(circuit, input_bits);
    const std::vector<double> distribution = measuredDistribution(state, circuit);

    std::vector<double> cdf(distribution.size(), 0.0);
    double acc = 0.0;
    for (std::size_t key = 0; key < distribution.size(); ++key) {
        acc += distribution[key];
        cdf[key] = acc;
    }

    // Uniform doubles straight from the top 53 generator bits, so the stream
    // is identical across standard libraries.
    std::mt19937_64 rng(seed);
    ShotHistogram histogram;
    histogram.shots = shots;
    std::size_t last_live_key = 0;
    for (std::size_t key = 0; key < distribution.size(); ++key) {
        if (distribution[key] > 0.0) {
            last_live_key = key;
        }
    }
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * acc);
        const std::size_t key =
            it == cdf.end() ? last_live_key : static_cast<std::size_t>(it - cdf.begin());
        ++histogram.counts[bitsFromBasisIndex(static_cast<Index>(key),
                                              circuit.num_classical_bits)];
    }
    return histogram;
}

UnitaryMatrix<double> circuitUnitary(const Circuit& circuit) {
    if (circuit.hasMeasurement()) {
        throw std::invalid_argument("circuitUnitary requires a measurement-free circuit");
    }
    requireValid(circuit);
    const int n = circuit.num_qubits;
    if (n > 12) {
        throw std::invalid_argument("circuitUnitary: register too large for a dense matrix");
    }
    const Index dim = Index{1} << n;
    UnitaryMatrix<double> matrix(dim, dim);
    for (Index a = 0; a < dim; ++a) {
        StateVector state = StateVector::basisState(n, a);
        for (const GateOp& op : circuit.ops) {
            state = applyOp(std::move(state), op);
        }
        matrix.col(a) = state.amplitudes();
    }
    return matrix;
}

}  // namespace qftlogic
