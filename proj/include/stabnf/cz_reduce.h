#pragma once

#include "stabnf/normal_form.h"

namespace stabnf {

/// B_s for s of length floor(n/2): the pairs {t, t + floor(n/2)} with s_t = 1.
PairMatrix reduced_pattern(const BitVector &s, size_t n);

struct Reduction {
    BitVector s;
    BitMatrix A;
    /// Product of transpositions and transvections equal to A.
    TransvectionWord word;
};

/// Finds A in GL(n,2) with A^T B A = B_s.
///
/// Slot t = 0, 1, ... takes the first nonzero entry (r, c), r < c, of rows t..n-1 of
/// the working matrix, moves it to (t, t+p) with transpositions, then clears row t
/// and row t+p with transvections. The first slot without a pivot ends the scan.
Reduction reduce_symmetric(const PairMatrix &b);

/// H_w P_b X_A1 Z_{B_s} h e^{i phase pi/4} X_u Z_v X_A2 Z_{B_s2} X_A3 P_d.
struct CzReducedForm {
    BitVector w;
    BitVector b;
    BitMatrix A1;
    BitVector s;
    PauliOp pauli;
    BitMatrix A2;
    BitVector s2;
    BitMatrix A3;
    BitVector d;

    size_t size() const { return w.size(); }
    bool operator==(const CzReducedForm &) const = default;
};

/// Rewrites both CZ layers of a normal form into reduced patterns of at most
/// floor(n/2) gates each, at the price of three CNOT layers.
CzReducedForm cz_reduce(const NormalForm &nf);

/// Eleven layers in circuit order: P (d), CX (A3), CZ (s2), CX (A2), Z (v), X (u),
/// H (h), CZ (s), CX (A1), P (b), H (w).
LayeredCircuit to_circuit(const CzReducedForm &f);

}  // namespace stabnf
