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
 * Gate-matrix library and application of small unitaries to arbitrary
 * target/control qubits of a dense state vector.
 */

#pragma once

#include <bit>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qftlogic/state_vector.hpp"

namespace qftlogic {

template <typename Scalar = double>
using UnitaryMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// theta_k = 2*pi / 2^k, the phase-rotation angle at index k >= 1.
template <typename Scalar = double>
Scalar phaseAngle(int k) {
    if (k < 1) {
        throw std::invalid_argument("phase angle index k must be >= 1");
    }
    return Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(Index{1} << k);
}

/// (1/sqrt(2)) [[1, 1], [1, -1]]
template <typename Scalar = double>
UnitaryMatrix<Scalar> hadamardMatrix() {
    const Scalar inv_sqrt2 = Scalar(1) / std::numbers::sqrt2_v<Scalar>;
    UnitaryMatrix<Scalar> h(2, 2);
    h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    return h;
}

/// The NOT gate [[0, 1], [1, 0]].
template <typename Scalar = double>
UnitaryMatrix<Scalar> pauliXMatrix() {
    UnitaryMatrix<Scalar> x(2, 2);
    x << Complex<Scalar>(0, 0), Complex<Scalar>(1, 0), Complex<Scalar>(1, 0),
        Complex<Scalar>(0, 0);
    return x;
}

/// diag(1, e^{i theta_k}); leaves |0> alone and phases |1>.
template <typename Scalar = double>
UnitaryMatrix<Scalar> phaseMatrix(int k) {
    const Scalar theta = phaseAngle<Scalar>(k);
    UnitaryMatrix<Scalar> p = UnitaryMatrix<Scalar>::Identity(2, 2);
    p(1, 1) = std::polar(Scalar(1), theta);
    return p;
}

/// 4x4 diag(1, 1, 1, e^{i theta_k}) over |control target>, control the
/// more significant local index.
template <typename Scalar = double>
UnitaryMatrix<Scalar> controlledPhaseMatrix(int k) {
    const Scalar theta = phaseAngle<Scalar>(k);
    UnitaryMatrix<Scalar> cp = UnitaryMatrix<Scalar>::Identity(4, 4);
    cp(3, 3) = std::polar(Scalar(1), theta);
    return cp;
}

/// Exchanges two qubits: |ab> -> |ba>.
template <typename Scalar = double>
UnitaryMatrix<Scalar> swapMatrix() {
    UnitaryMatrix<Scalar> sw = UnitaryMatrix<Scalar>::Zero(4, 4);
    sw(0, 0) = Complex<Scalar>(1, 0);
    sw(1, 2) = Complex<Scalar>(1, 0);
    sw(2, 1) = Complex<Scalar>(1, 0);
    sw(3, 3) = Complex<Scalar>(1, 0);
    return sw;
}

/**
 * The n-fold Hadamard (1/sqrt(2^n)) sum_{x,y} (-1)^{x.y} |x><y|, where x.y is
 * the bitwise dot product mod 2. Equals the n-fold Kronecker power of
 * hadamardMatrix().
 */
template <typename Scalar = double>
UnitaryMatrix<Scalar> hadamardTensor(int n) {
    if (n < 1) {
        throw std::invalid_argument("hadamardTensor needs n >= 1");
    }
    if (n > 10) {
        throw std::invalid_argument("hadamardTensor: n too large for dense representation");
    }
    const Index dim = Index{1} << n;
    const Scalar scale = Scalar(1) / std::sqrt(Scalar(dim));
    UnitaryMatrix<Scalar> h(dim, dim);
    for (Index x = 0; x < dim; ++x) {
        for (Index y = 0; y < dim; ++y) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(x & y)) & 1;
            h(x, y) = Complex<Scalar>(odd ? -scale : scale, 0);
        }
    }
    return h;
}

/**
 * @brief Applies a controlled unitary embedded at the given wires.
 *
 * The gate acts on the target qubits (targets[0] is the most significant bit
 * of the gate's local index) on every amplitude pair whose control qubits are
 * all 1. Targets and controls must be disjoint and in range; the gate
 * dimension must be 2^targets.size(). Preserves the L2 norm.
 */
template <typename Scalar = double>
BasicStateVector<Scalar> applyGate(BasicStateVector<Scalar> state,
                                   const UnitaryMatrix<Scalar>& gate,
                                   const std::vector<int>& targets,
                                   const std::vector<int>& controls = {}) {
    const int n = state.numQubits();
    if (targets.empty()) {
        throw std::invalid_argument("applyGate needs at least one target qubit");
    }
    const auto wire_bit = [n](int qubit) { return Index{1} << (n - 1 - qubit); };

    Index target_mask = 0;
    for (int q : targets) {
        if (q < 0 || q >= n) {
            throw std::out_of_range("target qubit index out of range");
        }
        if (target_mask & wire_bit(q)) {
            throw std::invalid_argument("duplicate target qubit");
        }
        target_mask |= wire_bit(q);
    }
    Index control_mask = 0;
    for (int q : controls) {
        if (q < 0 || q >= n) {
            throw std::out_of_range("control qubit index out of range");
        }
        if ((control_mask | target_mask) & wire_bit(q)) {
            throw std::invalid_argument("target and control qubits must be disjoint");
        }
        control_mask |= wire_bit(q);
    }
    const int t = static_cast<int>(targets.size());
    const Index block = Index{1} << t;
    if (gate.rows() != block || gate.cols() != block) {
        throw std::invalid_argument("gate dimension must be 2^targets");
    }

    // Offset of local index s within a gathered amplitude group.
    std::vector<Index> offsets(static_cast<std::size_t>(block), 0);
    for (Index s = 0; s < block; ++s) {
        for (int j = 0; j < t; ++j) {
            if ((s >> (t - 1 - j)) & 1) {
                offsets[static_cast<std::size_t>(s)] |= wire_bit(targets[static_cast<std::size_t>(j)]);
            }
        }
    }

    auto& amps = state.amplitudes();
    AmplitudeVector<Scalar> gathered(block);
    for (Index base = 0; base < amps.size(); ++base) {
        if (base & target_mask) {
            continue;  // enumerate each group once, from its all-targets-zero index
        }
        if ((base & control_mask) != control_mask) {
            continue;
        }
        for (Index s = 0; s < block; ++s) {
            gathered[s] = amps[base | offsets[static_cast<std::size_t>(s)]];
        }
        const AmplitudeVector<Scalar> updated = gate * gathered;
        for (Index s = 0; s < block; ++s) {
            amps[base | offsets[static_cast<std::size_t>(s)]] = updated[s];
        }
    }
    return state;
}

}  // namespace qftlogic
