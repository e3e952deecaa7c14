#pragma once

#include <cstdint>
#include <optional>

#include "stabnf/circuit.h"
#include "stabnf/czxp.h"
#include "stabnf/phase_pauli.h"

namespace stabnf {

/// H_w P_b Z_B h e^{i phase pi/4} X_u Z_v P_d Z_D X_A, with h the Hadamard on every
/// qubit. The Pauli factor e^{i phase pi/4} X_u Z_v is held in `pauli`.
struct NormalForm {
    BitVector w;
    BitVector b;
    PairMatrix B;
    PauliOp pauli;
    BitVector d;
    PairMatrix D;
    BitMatrix A;

    size_t size() const { return w.size(); }
    bool operator==(const NormalForm &) const = default;
};

/// Tally of the branches taken by the prepend operations.
struct CaseCounts {
    uint64_t h = 0;
    uint64_t p_outside_h = 0;    // w_i = 0
    uint64_t p_inside_h = 0;     // w_i = 1, b_i = 0
    uint64_t p_inside_h_b = 0;   // w_i = 1, b_i = 1
    uint64_t cx_plain = 0;       // w_i = w_j = 0
    uint64_t cx_reversed = 0;    // w_i = w_j = 1
    uint64_t cx_to_cz = 0;       // w_i = 1, w_j = 0
    uint64_t cx_zh_swap = 0;     // w_i = 0, w_j = 1 and {i,j} in B
    uint64_t cx_zh[4] = {};      // w_i = 0, w_j = 1, indexed by 2 b_i + b_j after the swap step

    bool operator==(const CaseCounts &) const = default;
};

/// The form of the identity: w = 1...1 (h h = I), everything else trivial.
NormalForm identity_form(size_t n);

/// nf <- H_i nf.
void prepend_h(NormalForm &nf, size_t i, CaseCounts *counts = nullptr);
/// nf <- P_i nf.
void prepend_p(NormalForm &nf, size_t i, CaseCounts *counts = nullptr);
/// nf <- X_[ij] nf, i.e. a CNOT with target i and control j.
void prepend_cnot(NormalForm &nf, size_t i, size_t j, CaseCounts *counts = nullptr);
/// Dispatches on H, P and CX; other kinds throw std::invalid_argument.
void prepend_gate(NormalForm &nf, const Gate &g, CaseCounts *counts = nullptr);

/// Normal form of a circuit. Sugar gates are desugared first and the circuit phase is
/// carried into the Pauli factor. Cost O(l n^2).
NormalForm normalize(const Circuit &c, CaseCounts *counts = nullptr);

/// X_A as CNOT gates in circuit order, from a Gaussian-elimination word of A.
std::vector<Gate> cnot_layer(const BitMatrix &a);

/// Nine layers in circuit order: CX (A), CZ (D), P (d), Z (v), X (u), H (h), CZ (B),
/// P (b), H (w). X_A is synthesized by Gaussian elimination.
LayeredCircuit to_circuit(const NormalForm &nf);

}  // namespace stabnf
