#include "stabnf/cli.h"

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "stabnf/circuit_io.h"

namespace stabnf {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string &path, std::istream &in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw InputError("cannot open '" + path + "'");
    }
    buf << file.rdbuf();
    return buf.str();
}

LayeredCircuit build_form(const Circuit &c, bool cz_reduced) {
    NormalForm nf = normalize(c);
    if (cz_reduced) {
        return to_circuit(cz_reduce(nf));
    }
    return to_circuit(nf);
}

Verdict compare(const Circuit &a, const Circuit &b, size_t max_qubits) {
    if (a.num_qubits != b.num_qubits) {
        return {};
    }
    return assert_equal(circuit_unitary(a, max_qubits), circuit_unitary(b, max_qubits), true);
}

void report(const Verdict &v, std::ostream &out) {
    if (v.equal) {
        out << "EXACT-EQUAL\n";
    } else if (v.phase_k) {
        out << "UNEQUAL (differs by global phase e^{i" << *v.phase_k << "pi/4})\n";
    } else {
        out << "UNEQUAL\n";
    }
}

std::string bit_string(const std::vector<Gate> &gates, size_t n) {
    std::string s(n, '0');
    for (const auto &g : gates) {
        s[g.a] = '1';
    }
    return s;
}

nlohmann::ordered_json stats_json(const LayeredCircuit &form) {
    nlohmann::ordered_json layers = nlohmann::ordered_json::array();
    std::map<std::string, size_t> totals;
    nlohmann::ordered_json cz_sizes = nlohmann::ordered_json::array();
    for (const auto &layer : form.layers) {
        nlohmann::ordered_json entry;
        entry["kind"] = layer.kind;
        entry["label"] = layer.name;
        if (layer.kind == "CX") {
            nlohmann::ordered_json gates = nlohmann::ordered_json::array();
            for (const auto &g : layer.gates) {
                gates.push_back({g.control(), g.target()});
            }
            entry["gates"] = gates;
        } else if (layer.kind == "CZ") {
            nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
            for (const auto &g : layer.gates) {
                pairs.push_back({g.a, g.b});
            }
            entry["pairs"] = pairs;
            cz_sizes.push_back(layer.gates.size());
        } else {
            entry["vector"] = bit_string(layer.gates, form.num_qubits);
        }
        layers.push_back(entry);
        totals[layer.kind] += layer.gates.size();
    }
    nlohmann::ordered_json counts;
    size_t total = 0;
    for (const char *kind : {"CX", "CZ", "H", "P", "X", "Z"}) {
        counts[kind] = totals[kind];
        total += totals[kind];
    }
    counts["total"] = total;
    counts["cz_layer_sizes"] = cz_sizes;

    nlohmann::ordered_json doc;
    doc["n"] = form.num_qubits;
    doc["phase_k"] = form.phase.k();
    doc["layers"] = layers;
    doc["counts"] = counts;
    return doc;
}

void stats_text(const LayeredCircuit &form, std::ostream &out) {
    auto doc = stats_json(form);
    out << "qubits " << form.num_qubits << "\n";
    out << "phase_k " << form.phase.k() << "\n";
    for (const auto &layer : form.layers) {
        out << "layer " << layer.kind << " (" << layer.name << "): " << layer.gates.size() << "\n";
    }
    const auto &counts = doc["counts"];
    out << "total";
    for (const char *kind : {"CX", "CZ", "H", "P", "X", "Z"}) {
        out << " " << kind << "=" << counts[kind].get<size_t>();
    }
    out << "\n";
    out << "cz_layer_sizes";
    for (const auto &s : counts["cz_layer_sizes"]) {
        out << " " << s.get<size_t>();
    }
    out << "\n";
}

int run_checked(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Circuit input = parse_circuit(read_all(cfg.input, in));
    bool reduced = cfg.cz_reduced || cfg.command == Command::CzReduce;

    if (cfg.command == Command::Verify) {
        Circuit other = cfg.candidate ? parse_circuit(read_all(*cfg.candidate, in))
                                      : build_form(input, reduced).flatten();
        Verdict v = compare(input, other, cfg.max_oracle_qubits);
        report(v, out);
        return v.equal ? exit_code::kOk : exit_code::kVerifyFailed;
    }

    LayeredCircuit form = build_form(input, reduced);
    if (cfg.command == Command::Stats) {
        if (cfg.json) {
            out << stats_json(form).dump(2) << "\n";
        } else {
            stats_text(form, out);
        }
    } else {
        out << emit_layered(form);
    }
    if (cfg.verify) {
        Verdict v = compare(input, form.flatten(), cfg.max_oracle_qubits);
        report(v, err);
        if (!v.equal) {
            return exit_code::kVerifyFailed;
        }
    }
    return exit_code::kOk;
}

}  // namespace

int run(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    try {
        return run_checked(cfg, in, out, err);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::kParseError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kParseError;
    } catch (const ResourceGuardError &e) {
        err << "resource guard: " << e.what() << " (raise --max-oracle-qubits)\n";
        return exit_code::kResourceGuard;
    }
}

}  // namespace stabnf
