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
 * Reference oracles for the tests, written independently of the library's
 * gate application path: dense Kronecker embedding by direct index
 * arithmetic, the textbook DFT matrix, and the controlled-phase projector
 * sum. Agreement between these and the simulator is the point of the tests,
 * so nothing here may call applyGate.
 */

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qftlogic/state_vector.hpp"

namespace qftlogic::testing {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/**
 * Full 2^n unitary of `gate` acting on `targets` under `controls`, built
 * column by column from the definition. targets[0] is the most significant
 * bit of the gate-local index; qubit 0 is the most significant bit of the
 * global index.
 */
inline Matrix embedGate(int n, const Matrix& gate, const std::vector<int>& targets,
                        const std::vector<int>& controls = {}) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const int t = static_cast<int>(targets.size());
    Matrix full = Matrix::Zero(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        bool active = true;
        for (int c : controls) {
            active = active && (((a >> (n - 1 - c)) & 1) == 1);
        }
        if (!active) {
            full(a, a) = 1.0;
            continue;
        }
        Eigen::Index local = 0;
        for (int i = 0; i < t; ++i) {
            local = (local << 1) | ((a >> (n - 1 - targets[i])) & 1);
        }
        for (Eigen::Index g = 0; g < (Eigen::Index{1} << t); ++g) {
            Eigen::Index row = a;
            for (int i = 0; i < t; ++i) {
                const Eigen::Index bit = Eigen::Index{1} << (n - 1 - targets[i]);
                if ((g >> (t - 1 - i)) & 1) {
                    row |= bit;
                } else {
                    row &= ~bit;
                }
            }
            full(row, a) += gate(g, local);
        }
    }
    return full;
}

/// DFT matrix with entries e^{2*pi*i*a*k/2^n}/sqrt(2^n): column a holds the
/// transform of basis state |a>.
inline Matrix dftMatrix(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    Matrix m(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index a = 0; a < dim; ++a) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(a * k) /
                                 static_cast<double>(dim);
            m(k, a) = norm * std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }
    return m;
}

/// Controlled phase as the projector double sum over a,b in {0,1} with
/// factor e^{i*theta_k*a*b}, theta_k = 2*pi/2^k.
inline Matrix controlledPhaseProjectorSum(int k) {
    const double theta = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
    Matrix m = Matrix::Zero(4, 4);
    for (Eigen::Index a = 0; a < 2; ++a) {
        for (Eigen::Index b = 0; b < 2; ++b) {
            const double phase = theta * static_cast<double>(a) * static_cast<double>(b);
            m(2 * a + b, 2 * a + b) = std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }
    return m;
}

/// Normalized pseudo-random state for equivalence tests; fixed seeds keep
/// failures reproducible.
inline StateVector randomState(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    AmplitudeVector<double> amps(Index{1} << n);
    for (Index i = 0; i < amps.size(); ++i) {
        amps[i] = std::complex<double>(dist(rng), dist(rng));
    }
    amps /= amps.norm();
    return StateVector(n, std::move(amps));
}

inline double maxAbsDiff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double maxAbsDiff(const Vector& a, const Vector& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qftlogic::testing
