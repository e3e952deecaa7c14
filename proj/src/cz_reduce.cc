#include "stabnf/cz_reduce.h"

#include <stdexcept>

namespace stabnf {

PairMatrix reduced_pattern(const BitVector &s, size_t n) {
    size_t p = n / 2;
    if (s.size() != p) {
        throw std::invalid_argument("reduced_pattern: s must have length floor(n/2)");
    }
    PairMatrix out(n);
    for (size_t t : s.support()) {
        out.toggle(t, t + p);
    }
    return out;
}

Reduction reduce_symmetric(const PairMatrix &b) {
    size_t n = b.size();
    size_t p = n / 2;
    PairMatrix work = b;
    Reduction out{BitVector(p), BitMatrix::identity(n), {}};

    auto transpose = [&](size_t x, size_t y) {
        work.congruence_transposition(x, y);
        out.A.swap_columns(x, y);
        out.word.append(GlLetter::transposition(static_cast<uint32_t>(x), static_cast<uint32_t>(y)));
    };
    auto transvect = [&](size_t x, size_t y) {
        work.congruence_transvection(x, y);
        out.A.transvect_right(x, y);
        out.word.append(GlLetter::transvection(static_cast<uint32_t>(x), static_cast<uint32_t>(y)));
    };

    for (size_t t = 0; t < p; t++) {
        size_t r = n;
        size_t c = n;
        for (size_t row = t; row < n && r == n; row++) {
            for (size_t col : work.row(row).support()) {
                if (col > row) {
                    r = row;
                    c = col;
                    break;
                }
            }
        }
        if (r == n) {
            break;
        }
        if (r != t) {
            transpose(t, r);
        }
        if (c != t + p) {
            transpose(t + p, c);
        }
        for (size_t k : work.row(t).support()) {
            if (k != t + p) {
                transvect(t + p, k);
            }
        }
        for (size_t k : work.row(t + p).support()) {
            if (k != t) {
                transvect(t, k);
            }
        }
        out.s.set(t, true);
    }
    return out;
}

CzReducedForm cz_reduce(const NormalForm &nf) {
    size_t n = nf.size();

    // X_A^{-1} P_d Z_D X_A = Z_a' P_b' Z_B'
    TransvectionWord a_word = synthesize_word(nf.A);
    std::vector<Gate> inverse_gates;
    for (const auto &letter : a_word.inverse().letters) {
        inverse_gates.push_back(Gate::cnot(letter.i, letter.j));
    }
    CzxpElement right = cto(inverse_gates, CzxpElement{BitVector(n), nf.d, nf.D, nf.A, std::nullopt});
    if (!right.A.is_identity()) {
        throw std::logic_error("cz_reduce: X_A^{-1} X_A did not cancel");
    }

    Reduction first = reduce_symmetric(nf.B);
    Reduction second = reduce_symmetric(right.B);
    BitMatrix a1_inv = invert(first.A);
    BitMatrix a2_inv = invert(second.A);
    // Z_B = X_A1 Z_{B_s} X_A1^{-1} Z_c1 with c1 = q_{B_s}(A1^{-1}), and likewise for B'.
    BitVector c1 = quadratic_form_columns(reduced_pattern(first.s, n), a1_inv);
    BitVector c2 = quadratic_form_columns(reduced_pattern(second.s, n), a2_inv);

    BitMatrix a_inv_t = transpose_inverse(nf.A);
    BitVector u = nf.pauli.u ^ c1;
    BitVector v = nf.pauli.v ^ (a_inv_t * (right.a ^ c2));

    CzReducedForm out;
    out.w = nf.w;
    out.b = nf.b;
    out.s = first.s;
    out.pauli = {nf.pauli.phase, first.A.transposed() * u, a1_inv * v};
    out.A2 = first.A.transposed() * nf.A * second.A;
    out.s2 = second.s;
    out.A3 = std::move(a2_inv);
    out.d = right.b;
    out.A1 = std::move(first.A);
    return out;
}

namespace {

std::vector<Gate> single_qubit_layer(GateKind kind, const BitVector &x) {
    std::vector<Gate> gates;
    for (size_t q : x.support()) {
        gates.push_back(Gate{kind, static_cast<uint32_t>(q)});
    }
    return gates;
}

std::vector<Gate> pattern_layer(const BitVector &s, size_t n) {
    std::vector<Gate> gates;
    for (size_t t : s.support()) {
        gates.push_back(Gate::cz(static_cast<uint32_t>(t), static_cast<uint32_t>(t + n / 2)));
    }
    return gates;
}

}  // namespace

LayeredCircuit to_circuit(const CzReducedForm &f) {
    size_t n = f.size();
    LayeredCircuit out{n, {}, f.pauli.phase};
    out.layers = {
        {"P", "d", single_qubit_layer(GateKind::P, f.d)},
        {"CX", "A3", cnot_layer(f.A3)},
        {"CZ", "s2", pattern_layer(f.s2, n)},
        {"CX", "A2", cnot_layer(f.A2)},
        {"Z", "v", single_qubit_layer(GateKind::Z, f.pauli.v)},
        {"X", "u", single_qubit_layer(GateKind::X, f.pauli.u)},
        {"H", "h", single_qubit_layer(GateKind::H, BitVector::ones(n))},
        {"CZ", "s", pattern_layer(f.s, n)},
        {"CX", "A1", cnot_layer(f.A1)},
        {"P", "b", single_qubit_layer(GateKind::P, f.b)},
        {"H", "w", single_qubit_layer(GateKind::H, f.w)},
    };
    return out;
}

}  // namespace stabnf
