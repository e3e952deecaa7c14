#pragma once

#include <optional>
#include <span>

#include "stabnf/circuit.h"
#include "stabnf/gf2.h"
#include "stabnf/pair_matrix.h"

namespace stabnf {

/// Z_a P_b Z_B, an element of the group generated by the P_i and Z_ij gates.
struct CzpElement {
    BitVector a;
    BitVector b;
    PairMatrix B;

    static CzpElement identity(size_t n) { return {BitVector(n), BitVector(n), PairMatrix(n)}; }
    bool operator==(const CzpElement &) const = default;
};

/// Z_a P_b Z_B X_A, the unique decomposition of an element of <P_i, Z_ij, X_[ij]>.
/// `word`, when present, is a product of generators equal to A and is kept in sync
/// by cto. The dense A is authoritative.
struct CzxpElement {
    BitVector a;
    BitVector b;
    PairMatrix B;
    BitMatrix A;
    std::optional<TransvectionWord> word;

    static CzxpElement identity(size_t n, bool track_word = true);
    size_t size() const { return a.size(); }
    CzpElement czp() const { return {a, b, B}; }

    /// Compares (a, b, B, A); the word annotation is ignored.
    bool operator==(const CzxpElement &other) const;
};

/// (Z_a P_b Z_B)(Z_a' P_b' Z_B') = Z_{a + a' + b b'} P_{b + b'} Z_{B + B'}.
CzpElement czp_mul(const CzpElement &x, const CzpElement &y);

/// Left-multiplies `e` by one gate of kind P, CZ or CX.
void cto_prepend(CzxpElement &e, const Gate &g);

/// The decomposition of (gates[0] gates[1] ... gates[l-1]) * init. The list is in
/// operator order (gates[0] is the leftmost factor); it is consumed from the right,
/// so the cost is O(n l). Only P, CZ and CX gates are accepted.
CzxpElement cto(std::span<const Gate> gates, CzxpElement init);

/// Decomposition of a circuit over {P, CZ, CX} (circuit order, zero global phase).
CzxpElement cto_circuit(const Circuit &c);

/// X_W (Z_a P_b Z_B) X_W^{-1} for a word W, letter by letter.
CzpElement conj_czp_by_XA(CzpElement e, const TransvectionWord &word);

struct ConjugatedCz {
    BitVector a;
    PairMatrix B;
};
/// X_A Z_B X_A^{-1} = Z_{q_B(A^{-1})} Z_{A^{-T} B A^{-1}}. Throws SingularMatrixError.
ConjugatedCz conj_ZB_by_XA(const PairMatrix &b, const BitMatrix &a);

/// Circuit over {P, CZ, CX} realizing Z_a P_b Z_B X_A. Z_a is emitted as P P.
/// X_A uses the word when present, otherwise Gaussian elimination.
Circuit czxp_to_circuit(const CzxpElement &e);

enum class GroupGenerators {
    Cnot,         ///< {X_[ij]}
    CzCnotPhase,  ///< {P_i, Z_ij, X_[ij]}
};

/// Order of the group generated on n qubits, by breadth-first closure over monomial
/// matrices with entries in {1, i, -1, -i}. n is limited to 3.
uint64_t enumerate_group(size_t n, GroupGenerators generators);

}  // namespace stabnf
