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
 * Circuit execution on an initial basis state: full state-vector evolution,
 * deterministic classical readout, and seeded shot sampling.
 */

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qftlogic/circuit.hpp"
#include "qftlogic/gates.hpp"
#include "qftlogic/state_vector.hpp"

namespace qftlogic {

/// Readout concentrates at least this much probability on one outcome in
/// deterministic mode; anything below it signals a circuit construction bug.
inline constexpr double kDeterministicThreshold = 1.0 - 1e-6;

/// Classical readout of one run. classical_bits[i] is bit c_i; confidence is
/// the probability mass of the reported outcome.
struct MeasurementRecord {
    std::vector<int> classical_bits;
    double confidence = 0.0;
};

/// Raised when the measured distribution is not concentrated on one outcome.
class NonDeterministicOutcome : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shot counts keyed by classical bit string (most significant classical bit
/// first, c0 rightmost).
struct ShotHistogram {
    std::map<std::string, std::int64_t> counts;
    std::int64_t shots = 0;
};

/// Evolves |input_bits> through every non-measure op and returns the final
/// state. Throws std::invalid_argument for an invalid circuit.
StateVector runState(const Circuit& circuit, std::string_view input_bits);

/**
 * Runs the circuit on a basis input and reads the measured classical bits.
 * The measured marginal must concentrate >= 1 - 1e-6 probability on a single
 * outcome; otherwise NonDeterministicOutcome is thrown. The circuit must end
 * in at least one measure op.
 */
MeasurementRecord runDeterministic(const Circuit& circuit, std::string_view input_bits);

/// Samples `shots` outcomes from the measured marginal by inverse CDF over a
/// seeded std::mt19937_64; identical seeds reproduce the histogram bit for
/// bit.
ShotHistogram runShots(const Circuit& circuit, std::string_view input_bits,
                       std::int64_t shots, std::uint64_t seed);

/// Dense unitary of a measurement-free circuit, column a = circuit|a>.
UnitaryMatrix<double> circuitUnitary(const Circuit& circuit);

}  // namespace qftlogic
