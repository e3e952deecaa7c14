#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "printers.h"
#include "stabnf/circuit_io.h"
#include "stabnf/cli.h"

namespace stabnf {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_on(RunConfig cfg, const std::string &stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    int code = run(cfg, in, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(Command command) {
    RunConfig cfg;
    cfg.command = command;
    return cfg;
}

std::string write_temp(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("stabnf_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const std::string kInput = "qubits 3\nH 0\nCX 0 1\nY 2\nCZ 1 2\nSWAP 0 2\nPDG 1\nGPHASE 5\n";

TEST(Cli, NormalizeEmitsEquivalentCircuit) {
    Result r = run_on(config(Command::Normalize), kInput);
    ASSERT_EQ(r.code, exit_code::kOk) << r.err;
    EXPECT_NE(r.out.find("# layer H (h)"), std::string::npos);
    Circuit emitted = parse_circuit(r.out);
    EXPECT_TRUE(assert_equal(circuit_unitary(emitted), circuit_unitary(parse_circuit(kInput))).equal);
}

TEST(Cli, NormalizeWithVerifyReportsOnStderr) {
    RunConfig cfg = config(Command::Normalize);
    cfg.verify = true;
    Result r = run_on(cfg, kInput);
    EXPECT_EQ(r.code, exit_code::kOk);
    EXPECT_EQ(r.err, "EXACT-EQUAL\n");
}

TEST(Cli, CzReduceBoundsLayers) {
    RunConfig cfg = config(Command::Stats);
    cfg.cz_reduced = true;
    cfg.json = true;
    Result r = run_on(cfg, kInput);
    ASSERT_EQ(r.code, exit_code::kOk) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["n"], 3);
    EXPECT_EQ(doc["layers"].size(), 11u);
    for (const auto &s : doc["counts"]["cz_layer_sizes"]) {
        EXPECT_LE(s.get<size_t>(), 1u);
    }

    Result emitted = run_on(config(Command::CzReduce), kInput);
    EXPECT_NE(emitted.out.find("(A1)"), std::string::npos);
}

TEST(Cli, StatsJsonShape) {
    RunConfig cfg = config(Command::Stats);
    cfg.json = true;
    Result r = run_on(cfg, "qubits 2\nCX 0 1\nH 0\nCX 0 1\n");
    ASSERT_EQ(r.code, exit_code::kOk);
    auto doc = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"n", "phase_k", "layers", "counts"}));
    EXPECT_EQ(doc["layers"].size(), 9u);
    EXPECT_EQ(doc["counts"]["cz_layer_sizes"].size(), 2u);
    size_t sum = 0;
    for (const char *kind : {"CX", "CZ", "H", "P", "X", "Z"}) {
        sum += doc["counts"][kind].get<size_t>();
    }
    EXPECT_EQ(doc["counts"]["total"].get<size_t>(), sum);
}

TEST(Cli, StatsText) {
    Result r = run_on(config(Command::Stats), kInput);
    ASSERT_EQ(r.code, exit_code::kOk);
    EXPECT_EQ(r.out.rfind("qubits 3\nphase_k ", 0), 0u);
    EXPECT_NE(r.out.find("cz_layer_sizes"), std::string::npos);
}

TEST(Cli, VerifyAgainstCandidate) {
    std::string same = write_temp("same.txt", "qubits 2\nCZ 0 1\n");
    std::string phased = write_temp("phased.txt", "qubits 2\nCZ 1 0\nGPHASE 2\n");
    std::string other = write_temp("other.txt", "qubits 2\nCX 0 1\n");

    RunConfig cfg = config(Command::Verify);
    cfg.candidate = same;
    EXPECT_EQ(run_on(cfg, "qubits 2\nH 1\nCX 0 1\nH 1\n").out, "EXACT-EQUAL\n");

    cfg.candidate = phased;
    Result r = run_on(cfg, "qubits 2\nCZ 0 1\n");
    EXPECT_EQ(r.code, exit_code::kVerifyFailed);
    EXPECT_EQ(r.out, "UNEQUAL (differs by global phase e^{i2pi/4})\n");

    cfg.candidate = other;
    r = run_on(cfg, "qubits 2\nCZ 0 1\n");
    EXPECT_EQ(r.code, exit_code::kVerifyFailed);
    EXPECT_EQ(r.out, "UNEQUAL\n");
}

TEST(Cli, VerifyOwnForms) {
    RunConfig cfg = config(Command::Verify);
    EXPECT_EQ(run_on(cfg, kInput).out, "EXACT-EQUAL\n");
    cfg.cz_reduced = true;
    EXPECT_EQ(run_on(cfg, kInput).out, "EXACT-EQUAL\n");
}

TEST(Cli, ParseErrorExitCode) {
    Result r = run_on(config(Command::Normalize), "qubits 2\nCX 1 1\n");
    EXPECT_EQ(r.code, exit_code::kParseError);
    EXPECT_NE(r.err.find("2"), std::string::npos);

    RunConfig missing = config(Command::Normalize);
    missing.input = "/nonexistent/circuit.txt";
    EXPECT_EQ(run_on(missing, "").code, exit_code::kParseError);
}

TEST(Cli, ResourceGuardExitCode) {
    RunConfig cfg = config(Command::Verify);
    cfg.max_oracle_qubits = 2;
    Result r = run_on(cfg, kInput);
    EXPECT_EQ(r.code, exit_code::kResourceGuard);
    EXPECT_FALSE(r.err.empty());

    // Normal forms themselves have no size limit.
    std::string wide = "qubits 40\nH 0\nCX 0 39\n";
    EXPECT_EQ(run_on(config(Command::Normalize), wide).code, exit_code::kOk);
}

TEST(Cli, OutputIsDeterministic) {
    for (Command c : {Command::Normalize, Command::CzReduce, Command::Stats}) {
        EXPECT_EQ(run_on(config(c), kInput).out, run_on(config(c), kInput).out);
    }
}

}  // namespace
}  // namespace stabnf
