#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabnf/phase_pauli.h"

namespace stabnf {

enum class GateKind : uint8_t { H, P, PDG, X, Y, Z, CX, CZ, SWAP };

std::string_view gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);

/// One gate of a stabilizer circuit.
///
/// For CX the fields follow the target-first convention X_[ij]: `a` is the target and
/// `b` the control, so X_[ij]|x> = |T_ij x>. Use Gate::cnot to avoid mixing them up.
/// CZ and SWAP are symmetric. Single-qubit gates only use `a`.
struct Gate {
    GateKind kind;
    uint32_t a;
    uint32_t b = 0;

    static Gate h(uint32_t q) { return {GateKind::H, q}; }
    static Gate p(uint32_t q) { return {GateKind::P, q}; }
    static Gate pdg(uint32_t q) { return {GateKind::PDG, q}; }
    static Gate x(uint32_t q) { return {GateKind::X, q}; }
    static Gate y(uint32_t q) { return {GateKind::Y, q}; }
    static Gate z(uint32_t q) { return {GateKind::Z, q}; }
    static Gate cnot(uint32_t target, uint32_t control) { return {GateKind::CX, target, control}; }
    static Gate cz(uint32_t q0, uint32_t q1) { return {GateKind::CZ, q0, q1}; }
    static Gate swap(uint32_t q0, uint32_t q1) { return {GateKind::SWAP, q0, q1}; }

    uint32_t target() const { return a; }
    uint32_t control() const { return b; }

    bool operator==(const Gate &) const = default;
};

/// A stabilizer circuit. gates[0] is applied to the state first, so the circuit
/// denotes the operator e^{i phase pi/4} gates[L-1] ... gates[0].
struct Circuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;
    PhaseZ8 phase;

    /// Throws std::invalid_argument on an index >= num_qubits or a repeated index.
    void validate() const;
    bool operator==(const Circuit &) const = default;
};

void validate_gate(const Gate &g, size_t n);

/// One layer of an emitted form, e.g. kind "CZ" and name "B" for Z_B.
struct Layer {
    std::string kind;
    std::string name;
    std::vector<Gate> gates;
};

/// A form emitted as a sequence of layers in circuit order, plus its global phase.
struct LayeredCircuit {
    size_t num_qubits = 0;
    std::vector<Layer> layers;
    PhaseZ8 phase;

    Circuit flatten() const;
};

}  // namespace stabnf
