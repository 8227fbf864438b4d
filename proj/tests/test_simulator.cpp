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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qftlogic/circuit.hpp"
#include "qftlogic/simulator.hpp"
#include "test_helpers.hpp"

using namespace qftlogic;
namespace qt = qftlogic::testing;

TEST_CASE("runState applies ops in order") {
    Circuit c(1);
    c.h(0);
    const StateVector plus = runState(c, "0");
    const double s = 1.0 / std::numbers::sqrt2;
    REQUIRE(std::abs(plus[0] - s) < 1e-12);
    REQUIRE(std::abs(plus[1] - s) < 1e-12);

    Circuit flip(2);
    flip.x(0);
    const StateVector flipped = runState(flip, "00");
    REQUIRE(std::abs(flipped[2] - 1.0) < 1e-12);
}

TEST_CASE("controlled phase acts only on the |11> branch") {
    Circuit c(2);
    c.cphase(2, 0, 1);
    const StateVector untouched = runState(c, "10");
    REQUIRE(std::abs(untouched[2] - 1.0) < 1e-12);

    const StateVector phased = runState(c, "11");
    const auto expected = std::polar(1.0, std::numbers::pi / 2);
    REQUIRE(std::abs(phased[3] - expected) < 1e-12);
}

TEST_CASE("runState checks inputs") {
    Circuit c(2);
    c.h(0);
    REQUIRE_THROWS_AS(runState(c, "0"), std::invalid_argument);
    REQUIRE_THROWS_AS(runState(c, "012"), std::invalid_argument);

    Circuit bad(2);
    bad.h(5);
    REQUIRE_THROWS_AS(runState(bad, "00"), std::invalid_argument);
}

TEST_CASE("measure ops do not disturb the state") {
    Circuit c(2, 1);
    c.h(0).measure(1, 0);
    const StateVector state = runState(c, "00");
    const double s = 1.0 / std::numbers::sqrt2;
    REQUIRE(std::abs(state[0] - s) < 1e-12);
    REQUIRE(std::abs(state[2] - s) < 1e-12);
}

TEST_CASE("deterministic readout reports bits and confidence") {
    Circuit c(2, 2);
    c.x(0).measure(0, 0).measure(1, 1);
    const MeasurementRecord record = runDeterministic(c, "00");
    REQUIRE(record.classical_bits == std::vector<int>{1, 0});
    REQUIRE(record.confidence == Catch::Approx(1.0));
}

TEST_CASE("deterministic readout marginalizes unmeasured wires") {
    // q1 stays in superposition; the measured wire q0 is still a certainty.
    Circuit c(2, 1);
    c.x(0).h(1).measure(0, 0);
    const MeasurementRecord record = runDeterministic(c, "00");
    REQUIRE(record.classical_bits == std::vector<int>{1});
    REQUIRE(record.confidence == Catch::Approx(1.0));
}

TEST_CASE("balanced superposition is rejected as non-deterministic") {
    Circuit c(1, 1);
    c.h(0).measure(0, 0);
    REQUIRE_THROWS_AS(runDeterministic(c, "0"), NonDeterministicOutcome);
}

TEST_CASE("readout without measurement is an error") {
    Circuit c(1);
    c.h(0);
    REQUIRE_THROWS_AS(runDeterministic(c, "0"), std::invalid_argument);
}

TEST_CASE("shot sampling is seed-reproducible") {
    Circuit c(1, 1);
    c.h(0).measure(0, 0);

    const ShotHistogram a = runShots(c, "0", 4096, 99);
    const ShotHistogram b = runShots(c, "0", 4096, 99);
    REQUIRE(a.counts == b.counts);
    REQUIRE(a.shots == 4096);

    std::int64_t total = 0;
    for (const auto& [key, count] : a.counts) total += count;
    REQUIRE(total == 4096);

    // 5 sigma around the fair-coin mean of 2048 (sigma = 32).
    REQUIRE(a.counts.at("0") > 2048 - 160);
    REQUIRE(a.counts.at("0") < 2048 + 160);

    const ShotHistogram other = runShots(c, "0", 4096, 100);
    REQUIRE(a.counts != other.counts);
}

TEST_CASE("shots on a deterministic circuit hit one bucket") {
    Circuit c(2, 2);
    c.x(0).measure(0, 0).measure(1, 1);
    const ShotHistogram histogram = runShots(c, "00", 64, 1);
    REQUIRE(histogram.counts.size() == 1);
    // Keys render c0 rightmost: c0 = 1, c1 = 0 reads "01".
    REQUIRE(histogram.counts.at("01") == 64);
}

TEST_CASE("shot count must be positive") {
    Circuit c(1, 1);
    c.h(0).measure(0, 0);
    REQUIRE_THROWS_AS(runShots(c, "0", 0, 1), std::invalid_argument);
}

TEST_CASE("circuitUnitary reproduces the gate matrices") {
    Circuit h(1);
    h.h(0);
    REQUIRE(qt::maxAbsDiff(circuitUnitary(h), hadamardMatrix()) < 1e-12);

    Circuit cp(2);
    cp.cphase(3, 0, 1);
    REQUIRE(qt::maxAbsDiff(circuitUnitary(cp), controlledPhaseMatrix(3)) < 1e-12);

    Circuit measured(1, 1);
    measured.measure(0, 0);
    REQUIRE_THROWS_AS(circuitUnitary(measured), std::invalid_argument);
}
