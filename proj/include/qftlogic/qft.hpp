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
 * Quantum Fourier transform circuit construction. The simulated matrix of
 * buildQft(n) is the 2^n-point DFT with entries e^{2 pi i a k / 2^n}/sqrt(2^n)
 * under the qubit-0-most-significant index convention.
 */

#pragma once

#include <string>
#include <string_view>

#include "qftlogic/circuit.hpp"

namespace qftlogic {

/// Label marker for circuits whose output register is in Fourier space. Such
/// a circuit must be closed by an IQFT before any measurement in a
/// synthesized pipeline.
inline constexpr std::string_view kFourierBasisTag = "[fourier]";

bool isFourierTagged(const Circuit& circuit);
Circuit& tagFourier(Circuit& circuit);
Circuit& clearFourierTag(Circuit& circuit);

/**
 * n-qubit QFT: for each qubit j, a Hadamard followed by the controlled-phase
 * ladder CP(k = d + 1) controlled on qubit j + d, then a terminal SWAP
 * network reversing qubit order.
 */
Circuit buildQft(int n);

/// Inverse transform; equals inverse(buildQft(n)).
Circuit buildIqft(int n);

}  // namespace qftlogic
