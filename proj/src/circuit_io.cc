#include "stabnf/circuit_io.h"

#include <charconv>
#include <sstream>
#include <vector>

namespace stabnf {

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            pos++;
        }
        size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            pos++;
        }
        if (pos > start) {
            words.push_back(line.substr(start, pos - start));
        }
    }
    return words;
}

long parse_int(std::string_view word, size_t line_no) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(word) + "'");
    }
    return value;
}

struct Mnemonic {
    std::string_view name;
    GateKind kind;
};

constexpr Mnemonic kMnemonics[] = {
    {"H", GateKind::H},   {"P", GateKind::P},   {"PDG", GateKind::PDG}, {"X", GateKind::X},
    {"Y", GateKind::Y},   {"Z", GateKind::Z},   {"CX", GateKind::CX},   {"CZ", GateKind::CZ},
    {"SWAP", GateKind::SWAP},
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        if (words[0] == "qubits") {
            if (have_header) {
                throw ParseError(line_no, "duplicate qubits header");
            }
            if (words.size() != 2) {
                throw ParseError(line_no, "expected 'qubits <n>'");
            }
            long n = parse_int(words[1], line_no);
            if (n < 1) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            c.num_qubits = static_cast<size_t>(n);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "missing 'qubits <n>' header before the first gate");
        }
        if (words[0] == "GPHASE") {
            if (words.size() != 2) {
                throw ParseError(line_no, "expected 'GPHASE <k>'");
            }
            c.phase += PhaseZ8(static_cast<int>(parse_int(words[1], line_no) % 8));
            continue;
        }
        const Mnemonic *found = nullptr;
        for (const auto &m : kMnemonics) {
            if (m.name == words[0]) {
                found = &m;
            }
        }
        if (found == nullptr) {
            if (words[0] == "T" || words[0] == "TDG") {
                throw ParseError(line_no, "T is not a Clifford gate and cannot be normalized");
            }
            throw ParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
        }
        size_t arity = is_two_qubit(found->kind) ? 2 : 1;
        if (words.size() != arity + 1) {
            throw ParseError(line_no, std::string(found->name) + " takes " + std::to_string(arity) +
                                          " qubit index" + (arity == 2 ? "es" : ""));
        }
        uint32_t q[2] = {0, 0};
        for (size_t k = 0; k < arity; k++) {
            long idx = parse_int(words[k + 1], line_no);
            if (idx < 0 || static_cast<size_t>(idx) >= c.num_qubits) {
                throw ParseError(line_no, "qubit index " + std::to_string(idx) + " out of range for " +
                                              std::to_string(c.num_qubits) + " qubits");
            }
            q[k] = static_cast<uint32_t>(idx);
        }
        if (arity == 2 && q[0] == q[1]) {
            throw ParseError(line_no, std::string(found->name) + " needs two distinct qubits");
        }
        if (found->kind == GateKind::CX) {
            c.gates.push_back(Gate::cnot(q[1], q[0]));
        } else {
            c.gates.push_back(Gate{found->kind, q[0], q[1]});
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'qubits <n>' header");
    }
    return c;
}

Circuit desugar(const Circuit &c) {
    c.validate();
    Circuit out{c.num_qubits, {}, c.phase};
    auto &g = out.gates;
    g.reserve(c.gates.size());
    auto z = [&](uint32_t q) {
        g.push_back(Gate::p(q));
        g.push_back(Gate::p(q));
    };
    auto x = [&](uint32_t q) {
        g.push_back(Gate::h(q));
        z(q);
        g.push_back(Gate::h(q));
    };
    for (const auto &gate : c.gates) {
        switch (gate.kind) {
            case GateKind::H:
            case GateKind::P:
            case GateKind::CX:
                g.push_back(gate);
                break;
            case GateKind::PDG:
                g.push_back(Gate::p(gate.a));
                z(gate.a);
                break;
            case GateKind::Z:
                z(gate.a);
                break;
            case GateKind::X:
                x(gate.a);
                break;
            case GateKind::Y:
                // Y = i X Z: Z acts first.
                z(gate.a);
                x(gate.a);
                out.phase += PhaseZ8(2);
                break;
            case GateKind::CZ:
                g.push_back(Gate::h(gate.a));
                g.push_back(Gate::cnot(gate.a, gate.b));
                g.push_back(Gate::h(gate.a));
                break;
            case GateKind::SWAP:
                g.push_back(Gate::cnot(gate.a, gate.b));
                g.push_back(Gate::cnot(gate.b, gate.a));
                g.push_back(Gate::cnot(gate.a, gate.b));
                break;
        }
    }
    return out;
}

namespace {

void write_gate(std::ostringstream &out, const Gate &g) {
    out << gate_name(g.kind);
    if (g.kind == GateKind::CX) {
        out << ' ' << g.control() << ' ' << g.target();
    } else if (is_two_qubit(g.kind)) {
        out << ' ' << g.a << ' ' << g.b;
    } else {
        out << ' ' << g.a;
    }
    out << '\n';
}

}  // namespace

std::string emit_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits << '\n';
    for (const auto &g : c.gates) {
        write_gate(out, g);
    }
    if (!c.phase.is_identity()) {
        out << "GPHASE " << c.phase.k() << '\n';
    }
    return out.str();
}

std::string emit_layered(const LayeredCircuit &c, const EmitOptions &options) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits << '\n';
    for (const auto &layer : c.layers) {
        if (layer.gates.empty()) {
            continue;
        }
        if (options.layer_banners) {
            out << "# layer " << layer.kind << " (" << layer.name << ")\n";
        }
        for (const auto &g : layer.gates) {
            write_gate(out, g);
        }
    }
    if (options.always_phase || !c.phase.is_identity()) {
        out << "GPHASE " << c.phase.k() << '\n';
    }
    return out.str();
}

}  // namespace stabnf
