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

#include "qftlogic/qft.hpp"

#include <stdexcept>

namespace qftlogic {

namespace {

void checkWidth(int n) {
    if (n < 1 || n > 10) {
        throw std::invalid_argument("QFT width must be between 1 and 10");
    }
}

}  // namespace

bool isFourierTagged(const Circuit& circuit) {
    const std::string& label = circuit.label;
    return label.size() >= kFourierBasisTag.size() &&
           label.compare(label.size() - kFourierBasisTag.size(), kFourierBasisTag.size(),
                         kFourierBasisTag) == 0;
}

Circuit& tagFourier(Circuit& circuit) {
    if (!isFourierTagged(circuit)) {
        if (!circuit.label.empty()) {
            circuit.label += ' ';
        }
        circuit.label += kFourierBasisTag;
    }
    return circuit;
}

Circuit& clearFourierTag(Circuit& circuit) {
    if (isFourierTagged(circuit)) {
        circuit.label.erase(circuit.label.size() - kFourierBasisTag.size());
        while (!circuit.label.empty() && circuit.label.back() == ' ') {
            circuit.label.pop_back();
        }
    }
    return circuit;
}

Circuit buildQft(int n) {
    checkWidth(n);
    Circuit circuit(n, 0, "qft" + std::to_string(n));
    for (int j = 0; j < n; ++j) {
        circuit.h(j);
        for (int d = 1; d <= n - 1 - j; ++d) {
            circuit.cphase(d + 1, j + d, j);
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        circuit.swap(i, n - 1 - i);
    }
    return tagFourier(circuit);
}

Circuit buildIqft(int n) {
    checkWidth(n);
    Circuit circuit = inverse(buildQft(n));
    circuit.label = "iqft" + std::to_string(n);
    return circuit;
}

}  // namespace qftlogic
