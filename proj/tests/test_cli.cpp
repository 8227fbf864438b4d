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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qftlogic/cli.hpp"

using namespace qftlogic;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

// Scoped env override; the color tests must not inherit the caller's value.
class EnvGuard {
  public:
    EnvGuard(const char* name, const char* value) : name_(name) {
        const char* old = std::getenv(name);
        if (old != nullptr) {
            saved_ = old;
            had_ = true;
        }
        if (value != nullptr) {
            setenv(name, value, 1);
        } else {
            unsetenv(name);
        }
    }
    ~EnvGuard() {
        if (had_) {
            setenv(name_, saved_.c_str(), 1);
        } else {
            unsetenv(name_);
        }
    }

  private:
    const char* name_;
    std::string saved_;
    bool had_ = false;
};

}  // namespace

TEST_CASE("truth-table text output passes for and") {
    const EnvGuard color("QFT_LOGIC_COLOR", "never");
    const CliResult result = run({"truth-table", "--gate", "and", "--inputs", "2"});
    REQUIRE(result.code == kExitOk);
    REQUIRE(result.out.find("PASS: 4/4 rows match") != std::string::npos);
    REQUIRE(result.out.find("11     1         1         ok") != std::string::npos);
    REQUIRE(result.err.empty());
}

TEST_CASE("truth-table json matches the documented schema") {
    const CliResult result =
        run({"truth-table", "--gate", "xor", "--inputs", "2", "--format", "json"});
    REQUIRE(result.code == kExitOk);

    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc["gate"] == "xor");
    REQUIRE(doc["n"] == 2);
    REQUIRE(doc["pass"] == true);
    REQUIRE(doc["rows"].size() == 4);
    const int expected[] = {0, 1, 1, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(doc["rows"][i]["measured"] == expected[i]);
        REQUIRE(doc["rows"][i]["expected"] == expected[i]);
        REQUIRE(doc["rows"][i]["match"] == true);
    }
}

TEST_CASE("xor beyond two inputs needs the parity flag") {
    const CliResult refused = run({"truth-table", "--gate", "xor", "--inputs", "3"});
    REQUIRE(refused.code == kExitUsage);
    REQUIRE(refused.err.find("2 inputs") != std::string::npos);

    const CliResult allowed =
        run({"truth-table", "--gate", "xor", "--inputs", "3", "--parity-decode"});
    REQUIRE(allowed.code == kExitOk);
}

TEST_CASE("usage errors exit 2") {
    REQUIRE(run({}).code == kExitUsage);
    REQUIRE(run({"truth-table"}).code == kExitUsage);
    REQUIRE(run({"truth-table", "--gate", "foo", "--inputs", "2"}).code == kExitUsage);
    REQUIRE(run({"truth-table", "--gate", "and", "--inputs", "9"}).code == kExitUsage);
    REQUIRE(run({"no-such-command"}).code == kExitUsage);
}

TEST_CASE("help exits 0") {
    const CliResult top = run({"--help"});
    REQUIRE(top.code == kExitOk);
    REQUIRE(top.out.find("truth-table") != std::string::npos);

    const CliResult sub = run({"simulate", "--help"});
    REQUIRE(sub.code == kExitOk);
    REQUIRE(sub.out.find("--shots") != std::string::npos);
}

TEST_CASE("simulate reads out a deterministic run") {
    const CliResult result = run({"simulate", "--gate", "or", "--inputs", "3", "--bits", "010"});
    REQUIRE(result.code == kExitOk);
    REQUIRE(result.out.find("output: 1") != std::string::npos);
    REQUIRE(result.out.find("confidence: 1.000000") != std::string::npos);
}

TEST_CASE("simulate with shots requires a seed") {
    const CliResult missing =
        run({"simulate", "--gate", "xor", "--inputs", "2", "--bits", "11", "--shots", "64"});
    REQUIRE(missing.code == kExitUsage);
    REQUIRE(missing.err.find("--seed") != std::string::npos);

    const CliResult sampled = run({"simulate", "--gate", "xor", "--inputs", "2", "--bits", "11",
                                   "--shots", "64", "--seed", "5"});
    REQUIRE(sampled.code == kExitOk);
    REQUIRE(sampled.out.find("0: 64") != std::string::npos);
}

TEST_CASE("equal seeds reproduce shot output byte for byte") {
    const std::vector<std::string> args = {"simulate", "--gate", "and", "--inputs", "2",
                                           "--bits",   "11",     "--shots", "256",  "--seed", "9"};
    REQUIRE(run(args).out == run(args).out);
}

TEST_CASE("state prints the uniform qft superposition") {
    const CliResult result = run({"state", "--circuit", "qft", "--inputs", "2", "--bits", "00"});
    REQUIRE(result.code == kExitOk);
    REQUIRE(result.out.find("qft2") != std::string::npos);
    // All four amplitudes are +0.5.
    std::size_t hits = 0;
    std::size_t at = 0;
    while ((at = result.out.find("+0.500000  +0.000000  0.250000", at)) != std::string::npos) {
        ++hits;
        ++at;
    }
    REQUIRE(hits == 4);
}

TEST_CASE("state rejects bits of the wrong length") {
    const CliResult result = run({"state", "--gate", "or", "--inputs", "2", "--bits", "0"});
    REQUIRE(result.code == kExitUsage);
    REQUIRE_FALSE(result.err.empty());
}

TEST_CASE("state needs exactly one source") {
    REQUIRE(run({"state", "--inputs", "2"}).code == kExitUsage);
    REQUIRE(run({"state", "--gate", "and", "--circuit", "qft", "--inputs", "2"}).code ==
            kExitUsage);
}

TEST_CASE("export writes a parseable file and reports counts") {
    const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/qftlogic_cli_test_nand2.qasm";
    const CliResult result =
        run({"export-qasm", "--gate", "nand", "--inputs", "2", "-o", path});
    REQUIRE(result.code == kExitOk);
    REQUIRE(result.out.find("qubits: 3") != std::string::npos);

    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    REQUIRE(buffer.str().find("// nand2\n") == 0);
    std::remove(path.c_str());
}

TEST_CASE("export to an unwritable path exits 3") {
    const CliResult result = run({"export-qasm", "--gate", "and", "--inputs", "2", "-o",
                                  "/nonexistent-dir/out.qasm"});
    REQUIRE(result.code == kExitIo);
    REQUIRE_FALSE(result.err.empty());
}

TEST_CASE("resources prints the baseline comparison") {
    const CliResult result = run({"resources", "--gate", "nand", "--inputs", "4"});
    REQUIRE(result.code == kExitOk);
    REQUIRE(result.out.find("qubits: 6") != std::string::npos);
    REQUIRE(result.out.find("baseline qubits: 7") != std::string::npos);
}

TEST_CASE("color control via environment") {
    {
        const EnvGuard color("QFT_LOGIC_COLOR", "always");
        const CliResult result = run({"truth-table", "--gate", "and", "--inputs", "2"});
        REQUIRE(result.out.find("\x1b[32m") != std::string::npos);
    }
    {
        const EnvGuard color("QFT_LOGIC_COLOR", "never");
        const CliResult result = run({"truth-table", "--gate", "and", "--inputs", "2"});
        REQUIRE(result.out.find("\x1b[") == std::string::npos);
    }
    {
        // auto with a non-terminal stream stays plain.
        const EnvGuard color("QFT_LOGIC_COLOR", nullptr);
        const CliResult result = run({"truth-table", "--gate", "and", "--inputs", "2"});
        REQUIRE(result.out.find("\x1b[") == std::string::npos);
    }
}

TEST_CASE("shotless commands are byte-deterministic") {
    const std::vector<std::string> invocations[] = {
        {"truth-table", "--gate", "nor", "--inputs", "3"},
        {"state", "--gate", "and", "--inputs", "2", "--bits", "11"},
        {"resources", "--gate", "xor", "--inputs", "2"},
    };
    for (const auto& args : invocations) {
        REQUIRE(run(args).out == run(args).out);
    }
}
