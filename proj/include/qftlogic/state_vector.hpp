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
 * Dense state-vector type for n-qubit registers.
 */

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qftlogic {

template <typename Scalar = double>
using Complex = std::complex<Scalar>;

/// The scalar of all quantum state math at default precision.
using ComplexAmplitude = Complex<double>;

template <typename Scalar = double>
using AmplitudeVector = Eigen::Vector<Complex<Scalar>, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Basis index of a bit string such as "011". The string reads as a binary
/// number: the leftmost character is qubit 0 and the most significant bit.
inline Index basisIndexFromBits(std::string_view bits) {
    if (bits.empty()) {
        throw std::invalid_argument("bit string must not be empty");
    }
    Index index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bit string may contain only '0' and '1': \"" +
                                        std::string(bits) + "\"");
        }
        index = (index << 1) | (ch == '1' ? 1 : 0);
    }
    return index;
}

/// Inverse of basisIndexFromBits: renders index as num_bits binary digits.
inline std::string bitsFromBasisIndex(Index index, int num_bits) {
    std::string bits(static_cast<std::size_t>(num_bits), '0');
    for (int i = 0; i < num_bits; ++i) {
        if ((index >> (num_bits - 1 - i)) & 1) {
            bits[static_cast<std::size_t>(i)] = '1';
        }
    }
    return bits;
}

/**
 * @brief Dense state vector of an n-qubit register.
 *
 * Holds 2^n complex amplitudes indexed by computational basis state. Qubit 0
 * is the most significant bit of the basis index, so |q0 q1> = |10> is
 * index 2. Normalized states keep sum |amplitude|^2 = 1.
 */
template <typename Scalar = double>
class BasicStateVector {
  public:
    using Vector = AmplitudeVector<Scalar>;

    /// |0...0> on num_qubits wires.
    explicit BasicStateVector(int num_qubits)
        : num_qubits_(checkedQubits(num_qubits)),
          amplitudes_(Vector::Zero(Index{1} << num_qubits)) {
        amplitudes_[0] = Complex<Scalar>(1, 0);
    }

    BasicStateVector(int num_qubits, Vector amplitudes)
        : num_qubits_(checkedQubits(num_qubits)), amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() != (Index{1} << num_qubits_)) {
            throw std::invalid_argument("amplitude count must be 2^num_qubits");
        }
    }

    /// The basis state |index> on num_qubits wires.
    static BasicStateVector basisState(int num_qubits, Index index) {
        checkedQubits(num_qubits);
        if (index < 0 || index >= (Index{1} << num_qubits)) {
            throw std::out_of_range("basis index out of range");
        }
        BasicStateVector state(num_qubits);
        state.amplitudes_[0] = Complex<Scalar>(0, 0);
        state.amplitudes_[index] = Complex<Scalar>(1, 0);
        return state;
    }

    /// Basis state from a bit string, one character per qubit ("10" = |q0=1,q1=0>).
    static BasicStateVector fromBits(std::string_view bits) {
        return basisState(static_cast<int>(bits.size()), basisIndexFromBits(bits));
    }

    int numQubits() const { return num_qubits_; }
    Index size() const { return amplitudes_.size(); }

    const Vector& amplitudes() const { return amplitudes_; }
    Vector& amplitudes() { return amplitudes_; }

    Complex<Scalar> operator[](Index i) const { return amplitudes_[i]; }

    Scalar norm() const { return amplitudes_.norm(); }

    bool isNormalized(Scalar tol = Scalar(1e-10)) const {
        return std::abs(norm() - Scalar(1)) <= tol;
    }

  private:
    static int checkedQubits(int num_qubits) {
        if (num_qubits < 1) {
            throw std::invalid_argument("state vector needs at least one qubit");
        }
        if (num_qubits > 24) {
            throw std::invalid_argument("state vector too large for dense representation");
        }
        return num_qubits;
    }

    int num_qubits_;
    Vector amplitudes_;
};

using StateVector = BasicStateVector<double>;

/**
 * Largest elementwise deviation between two states after quotienting out the
 * global phase. The phase is aligned on the largest amplitude of b; states
 * that agree up to a unit complex factor report deviation ~0.
 */
template <typename Scalar>
Scalar maxDeviationUpToGlobalPhase(const BasicStateVector<Scalar>& a,
                                   const BasicStateVector<Scalar>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("states differ in qubit count");
    }
    Index anchor = 0;
    b.amplitudes().cwiseAbs().maxCoeff(&anchor);
    Complex<Scalar> phase = a[anchor] * std::conj(b[anchor]);
    const Scalar mag = std::abs(phase);
    if (mag == Scalar(0)) {
        return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
    }
    phase /= mag;
    return (a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace qftlogic
