#include <CLI11.hpp>
#include <iostream>

#include "stabnf/cli.h"

int main(int argc, char **argv) {
    CLI::App app{"Rewrites stabilizer circuits into layered normal forms"};
    app.require_subcommand(1);

    stabnf::RunConfig cfg;
    std::string candidate;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("input", cfg.input, "circuit file (default: standard input)");
        sub->add_flag("--cz-reduced", cfg.cz_reduced, "use the CZ-reduced form");
        sub->add_flag("--verify", cfg.verify, "check the result against the exact simulator");
        sub->add_flag("--json", cfg.json, "JSON output (stats)");
        sub->add_option("--max-oracle-qubits", cfg.max_oracle_qubits, "qubit limit of the exact simulator")
            ->capture_default_str();
    };

    auto *normalize = app.add_subcommand("normalize", "print the normal form as a circuit");
    add_common(normalize);
    auto *reduce = app.add_subcommand("cz-reduce", "print the CZ-reduced form as a circuit");
    add_common(reduce);
    auto *verify = app.add_subcommand("verify", "compare a circuit with its form, or with a candidate");
    add_common(verify);
    verify->add_option("candidate", candidate, "circuit to compare against");
    auto *stats = app.add_subcommand("stats", "per-layer gate counts");
    add_common(stats);

    CLI11_PARSE(app, argc, argv);

    if (normalize->parsed()) {
        cfg.command = stabnf::Command::Normalize;
    } else if (reduce->parsed()) {
        cfg.command = stabnf::Command::CzReduce;
    } else if (verify->parsed()) {
        cfg.command = stabnf::Command::Verify;
        if (!candidate.empty()) {
            cfg.candidate = candidate;
        }
    } else {
        cfg.command = stabnf::Command::Stats;
    }
    return stabnf::run(cfg, std::cin, std::cout, std::cerr);
}
