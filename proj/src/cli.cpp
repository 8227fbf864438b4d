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

#include "qftlogic/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string_view>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "qftlogic/adder.hpp"
#include "qftlogic/logic.hpp"
#include "qftlogic/qasm.hpp"
#include "qftlogic/qft.hpp"
#include "qftlogic/simulator.hpp"
#include "qftlogic/state_vector.hpp"

namespace qftlogic {

namespace {

// Empty strings when styling is off, so plain concatenation works everywhere.
struct Palette {
    std::string green;
    std::string red;
    std::string bold;
    std::string reset;
};

Palette makePalette(const std::ostream& out) {
    const char* env = std::getenv("QFT_LOGIC_COLOR");
    const std::string_view mode = env == nullptr ? "auto" : env;
    bool enabled = false;
    if (mode == "always") {
        enabled = true;
    } else if (mode == "never") {
        enabled = false;
    } else {
        enabled = (&out == &std::cout) && isatty(STDOUT_FILENO) == 1;
    }
    if (!enabled) return {};
    return {"\x1b[32m", "\x1b[31m", "\x1b[1m", "\x1b[0m"};
}

struct Options {
    std::string gate;
    std::string circuit;
    int inputs = 0;
    std::string bits;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string output_path;
    std::string format = "text";
    bool parity_decode = false;
};

std::string fmt(const char* spec, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, value);
    return buf;
}

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text;
}

// Classical key rendering matches ShotHistogram: c0 is the rightmost char.
std::string classicalKey(const std::vector<int>& bits) {
    std::string key;
    for (std::size_t i = bits.size(); i-- > 0;) {
        key += static_cast<char>('0' + bits[i]);
    }
    return key;
}

std::vector<int> bitsFromKey(std::string_view key) {
    std::vector<int> bits(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        bits[key.size() - 1 - i] = key[i] - '0';
    }
    return bits;
}

std::string bitOrderLabel(int num_bits) {
    std::string label;
    for (int i = num_bits - 1; i >= 0; --i) {
        label += "c" + std::to_string(i);
    }
    return label;
}

SynthesizedGate makeGate(const Options& o) {
    SynthesisOptions synth;
    if (o.parity_decode) synth.xor_readout = XorReadout::SumBit;
    return synthesize(parseLogicGateName(o.gate), o.inputs, synth);
}

int cmdTruthTable(const Options& o, std::ostream& out) {
    const SynthesizedGate gate = makeGate(o);
    const TruthTableReport report = verifyTruthTable(gate);

    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["gate"] = logicGateName(report.kind);
        doc["n"] = report.num_inputs;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const TruthTableRow& row : report.rows) {
            doc["rows"].push_back({{"input", row.input},
                                   {"measured", row.measured},
                                   {"expected", row.expected},
                                   {"match", row.match}});
        }
        doc["pass"] = report.pass;
        out << doc.dump(2) << "\n";
        return report.pass ? kExitOk : kExitMismatch;
    }

    const Palette pal = makePalette(out);
    out << "gate: " << logicGateName(report.kind) << "  inputs: " << report.num_inputs
        << "  qubits: " << gate.layout.totalQubits() << "\n\n";

    const std::size_t w_in = std::max<std::size_t>(5, static_cast<std::size_t>(report.num_inputs));
    out << pad("input", w_in) << "  measured  expected  result\n";
    std::size_t matched = 0;
    for (const TruthTableRow& row : report.rows) {
        const std::string measured = row.measured < 0 ? "?" : std::to_string(row.measured);
        out << pad(row.input, w_in) << "  " << pad(measured, 8) << "  "
            << pad(std::to_string(row.expected), 8) << "  "
            << (row.match ? pal.green + "ok" + pal.reset : pal.red + "MISMATCH" + pal.reset)
            << "\n";
        if (row.match) ++matched;
    }
    out << "\n";
    if (report.pass) {
        out << pal.bold << pal.green << "PASS" << pal.reset << ": " << matched << "/"
            << report.rows.size() << " rows match\n";
    } else {
        out << pal.bold << pal.red << "FAIL" << pal.reset << ": "
            << report.rows.size() - matched << "/" << report.rows.size() << " rows mismatch\n";
    }
    return report.pass ? kExitOk : kExitMismatch;
}

int cmdSimulate(const Options& o, std::ostream& out) {
    const SynthesizedGate gate = makeGate(o);
    const std::string full_bits = fullInputBits(gate.layout, o.bits);
    const int num_bits = gate.circuit.num_classical_bits;

    out << "gate: " << logicGateName(gate.kind) << "  inputs: " << o.inputs << "  bits: " << o.bits
        << "\n";

    if (o.shots > 0) {
        const ShotHistogram histogram = runShots(gate.circuit, full_bits, o.shots, o.seed);
        out << "shots: " << histogram.shots << "  seed: " << o.seed << "\n";
        out << "counts [" << bitOrderLabel(num_bits) << "]:\n";
        for (const auto& [key, count] : histogram.counts) {
            MeasurementRecord record{bitsFromKey(key), 1.0};
            out << "  " << key << ": " << count << "  (output " << outputFromRecord(gate, record)
                << ")\n";
        }
        return kExitOk;
    }

    const MeasurementRecord record = runDeterministic(gate.circuit, full_bits);
    out << "measured [" << bitOrderLabel(num_bits) << "]: " << classicalKey(record.classical_bits)
        << "\n";
    out << "output: " << outputFromRecord(gate, record) << "\n";
    out << "confidence: " << fmt("%.6f", record.confidence) << "\n";
    return kExitOk;
}

int cmdState(const Options& o, std::ostream& out) {
    if (o.gate.empty() == o.circuit.empty()) {
        throw std::invalid_argument("provide exactly one of --gate or --circuit");
    }

    Circuit circuit;
    std::string full_bits;
    if (!o.gate.empty()) {
        const SynthesizedGate gate = makeGate(o);
        circuit = gate.circuit;
        full_bits = fullInputBits(
            gate.layout,
            o.bits.empty() ? std::string(static_cast<std::size_t>(o.inputs), '0') : o.bits);
    } else if (o.circuit == "qft" || o.circuit == "iqft") {
        circuit = o.circuit == "qft" ? buildQft(o.inputs) : buildIqft(o.inputs);
        full_bits =
            o.bits.empty() ? std::string(static_cast<std::size_t>(o.inputs), '0') : o.bits;
    } else {
        circuit = buildAdderCore(o.inputs);
        full_bits = fullInputBits(
            adderLayout(o.inputs),
            o.bits.empty() ? std::string(static_cast<std::size_t>(o.inputs), '0') : o.bits);
    }

    const StateVector state = runState(circuit, full_bits);
    const int n = circuit.num_qubits;

    out << "circuit: " << circuit.label << "  qubits: " << n << "\n\n";
    const std::size_t w_idx =
        std::max<std::size_t>(5, std::to_string(state.size() - 1).size());
    const std::size_t w_bits = std::max<std::size_t>(4, static_cast<std::size_t>(n));
    out << pad("index", w_idx) << "  " << pad("bits", w_bits) << "  " << pad("re", 9) << "  "
        << pad("im", 9) << "  probability\n";
    for (Index i = 0; i < state.size(); ++i) {
        const ComplexAmplitude a = state[i];
        out << pad(std::to_string(i), w_idx) << "  " << pad(bitsFromBasisIndex(i, n), w_bits)
            << "  " << fmt("%+9.6f", a.real()) << "  " << fmt("%+9.6f", a.imag()) << "  "
            << fmt("%.6f", std::norm(a)) << "\n";
    }
    return kExitOk;
}

int cmdExportQasm(const Options& o, std::ostream& out, std::ostream& err) {
    const SynthesizedGate gate = makeGate(o);
    const QasmDocument doc = toQasm(gate.circuit);

    std::ofstream file(o.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << o.output_path << "' for writing\n";
        return kExitIo;
    }
    file << doc.text;
    file.close();
    if (!file) {
        err << "error: failed writing '" << o.output_path << "'\n";
        return kExitIo;
    }
    out << "qubits: " << doc.declared_qubits << "\n";
    out << "gates: " << doc.gate_count << "\n";
    out << "wrote " << o.output_path << "\n";
    return kExitOk;
}

int cmdResources(const Options& o, std::ostream& out) {
    const LogicGateKind kind = parseLogicGateName(o.gate);
    const ResourceCount count = resourceCount(kind, o.inputs);
    out << "gate: " << o.gate << "  inputs: " << o.inputs << "\n";
    out << "qubits: " << count.qubits << "\n";
    out << "gate ops: " << count.gates << "\n";
    out << "toffoli cascade baseline qubits: " << 2 * o.inputs - 1 << "\n";
    return kExitOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean logic gates synthesized from a Fourier-basis adder"};
    app.name("qft-logic");
    app.require_subcommand(1);

    Options o;
    int exit_code = kExitOk;

    const auto gate_member = CLI::IsMember({"and", "nand", "or", "nor", "xor"});
    auto addGate = [&](CLI::App* cmd) {
        return cmd->add_option("--gate", o.gate, "Logic gate: and, nand, or, nor, xor")
            ->required()
            ->check(gate_member);
    };
    auto addInputs = [&](CLI::App* cmd, int lo, int hi) {
        return cmd->add_option("--inputs", o.inputs, "Number of data qubits")
            ->required()
            ->check(CLI::Range(lo, hi));
    };
    auto addParity = [&](CLI::App* cmd) {
        cmd->add_flag("--parity-decode", o.parity_decode,
                      "Read xor from the adder sum bit (parity); required for xor with more "
                      "than 2 inputs");
    };

    CLI::App* tt = app.add_subcommand(
        "truth-table", "Verify a gate against its classical truth table on all basis inputs");
    addGate(tt);
    addInputs(tt, 2, 8);
    addParity(tt);
    tt->add_option("--format", o.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    tt->callback([&] { exit_code = cmdTruthTable(o, out); });

    CLI::App* sim = app.add_subcommand("simulate",
                                       "Run a gate on one basis input and read the output");
    addGate(sim);
    addInputs(sim, 2, 8);
    addParity(sim);
    sim->add_option("--bits", o.bits, "Input bits, one per data qubit, q0 first")->required();
    auto* shots_opt = sim->add_option("--shots", o.shots, "Sample this many measurement shots")
                          ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
    auto* seed_opt =
        sim->add_option("--seed", o.seed, "Random seed for sampling (required with --shots)");
    shots_opt->needs(seed_opt);
    seed_opt->needs(shots_opt);
    sim->callback([&] { exit_code = cmdSimulate(o, out); });

    CLI::App* st = app.add_subcommand("state",
                                      "Print the final state amplitudes before measurement");
    auto* st_gate = st->add_option("--gate", o.gate, "Logic gate: and, nand, or, nor, xor")
                        ->check(gate_member);
    auto* st_circuit =
        st->add_option("--circuit", o.circuit, "Raw circuit instead of a gate: qft, iqft, adder")
            ->check(CLI::IsMember({"qft", "iqft", "adder"}));
    st_gate->excludes(st_circuit);
    st_circuit->excludes(st_gate);
    addInputs(st, 1, 10);
    st->add_option("--bits", o.bits, "Initial basis bits (defaults to all zeros)");
    addParity(st);
    st->callback([&] { exit_code = cmdState(o, out); });

    CLI::App* ex = app.add_subcommand("export-qasm", "Write the gate circuit as OpenQASM 2.0");
    addGate(ex);
    addInputs(ex, 2, 8);
    addParity(ex);
    ex->add_option("-o,--output", o.output_path, "Output file path")->required();
    ex->callback([&] { exit_code = cmdExportQasm(o, out, err); });

    CLI::App* res = app.add_subcommand(
        "resources", "Print qubit and gate counts with the Toffoli cascade baseline");
    addGate(res);
    addInputs(res, 2, 8);
    res->callback([&] { exit_code = cmdResources(o, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return exit_code;
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'qft-logic --help' for usage\n";
        return kExitUsage;
    } catch (const NonDeterministicOutcome& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const QasmParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace qftlogic
