#include "stabnf/circuit.h"

#include <stdexcept>
#include <string>

namespace stabnf {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::P:
            return "P";
        case GateKind::PDG:
            return "PDG";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CX:
            return "CX";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SWAP:
            return "SWAP";
    }
    return "?";
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::SWAP;
}

void validate_gate(const Gate &g, size_t n) {
    if (g.a >= n || (is_two_qubit(g.kind) && g.b >= n)) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": qubit index out of range for " +
                                    std::to_string(n) + " qubits");
    }
    if (is_two_qubit(g.kind) && g.a == g.b) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": qubits must be distinct");
    }
}

void Circuit::validate() const {
    for (const auto &g : gates) {
        validate_gate(g, num_qubits);
    }
}

Circuit LayeredCircuit::flatten() const {
    Circuit c{num_qubits, {}, phase};
    for (const auto &layer : layers) {
        c.gates.insert(c.gates.end(), layer.gates.begin(), layer.gates.end());
    }
    return c;
}

}  // namespace stabnf
