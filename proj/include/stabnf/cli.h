#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "stabnf/exact_sim.h"

namespace stabnf {

enum class Command { Normalize, CzReduce, Verify, Stats };

struct RunConfig {
    Command command = Command::Normalize;
    /// Empty or "-" reads standard input.
    std::string input;
    /// verify only: compare the input against this circuit instead of its own form.
    std::optional<std::string> candidate;
    bool cz_reduced = false;
    bool verify = false;
    bool json = false;
    size_t max_oracle_qubits = kDefaultOracleQubits;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kVerifyFailed = 2;
constexpr int kResourceGuard = 3;
}  // namespace exit_code

/// Runs one command. `in` is used when the input path is empty or "-".
int run(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace stabnf
