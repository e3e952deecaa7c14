#include "stabnf/normal_form.h"

#include <stdexcept>
#include <vector>

#include "stabnf/circuit_io.h"

namespace stabnf {

NormalForm identity_form(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("identity_form: n must be at least 1");
    }
    return {BitVector::ones(n), BitVector(n), PairMatrix(n), PauliOp::identity(n),
            BitVector(n), PairMatrix(n), BitMatrix::identity(n)};
}

namespace {

void check_qubit(const NormalForm &nf, size_t i) {
    if (i >= nf.size()) {
        throw std::out_of_range("qubit index " + std::to_string(i) + " out of range for " +
                                std::to_string(nf.size()) + " qubits");
    }
}

// Operator-order gate list of X_W for a word W.
std::vector<Gate> word_gates(const TransvectionWord &word) {
    std::vector<Gate> gates;
    gates.reserve(word.size());
    for (const auto &letter : word.letters) {
        if (letter.is_transposition()) {
            gates.push_back(Gate::cnot(letter.i, letter.j));
            gates.push_back(Gate::cnot(letter.j, letter.i));
            gates.push_back(Gate::cnot(letter.i, letter.j));
        } else {
            gates.push_back(Gate::cnot(letter.i, letter.j));
        }
    }
    return gates;
}

// nf currently reads H_w [Z_a' P_b' Z_B' X_A'] h Pauli P_d Z_D X_A, with the bracket
// given by `left` (whose word must be tracked). Moves X_A' through h, where it becomes
// X_{A'^{-T}}, conjugates the Pauli factor by it, folds it into P_d Z_D X_A, and moves
// Z_a' through h as X_a'.
void install_left(NormalForm &nf, const CzxpElement &left) {
    TransvectionWord moved = left.word->transpose_inverse();
    nf.pauli = conj_by_XA(std::move(nf.pauli), moved);
    nf.pauli.u ^= left.a;

    std::vector<Gate> gates = word_gates(moved);
    CzxpElement right{BitVector(nf.size()), std::move(nf.d), std::move(nf.D), std::move(nf.A), std::nullopt};
    right = cto(gates, std::move(right));
    nf.pauli.v ^= right.a;
    nf.d = std::move(right.b);
    nf.D = std::move(right.B);
    nf.A = std::move(right.A);

    nf.b = left.b;
    nf.B = left.B;
}

// P_i with w_i = 1: P_i H_w = H_w P_i^h, and P_i^h moves through h as P_i.
void prepend_p_inside_h(NormalForm &nf, size_t i, CaseCounts *counts) {
    size_t n = nf.size();
    nf.pauli = conj_by_Pi(std::move(nf.pauli), i);
    if (nf.d[i]) {
        nf.pauli.v.flip(i);
    }
    nf.d.flip(i);

    BitVector k_set = nf.B.row(i);
    if (nf.b[i]) {
        // P_i^h P_i P_i^{-h} = e^{i pi/4} H_i X_i, and the X_i travels right through
        // Z_B (picking up Z_K) and through h.
        if (counts) counts->p_inside_h_b++;
        nf.w.flip(i);
        nf.b.flip(i);
        PauliOp picked{PhaseZ8(1), k_set, BitVector::basis(n, i)};
        nf.pauli = pauli_mul(picked, nf.pauli);
    } else if (counts) {
        counts->p_inside_h++;
    }

    // P_i^h Z_B P_i^{-h} = Z_{B without i} prod_k Z_ik X_[ik] P_k. Each factor is an
    // involution and no e^{-i pi/4} appears; the exact simulator confirms this.
    std::vector<Gate> gates;
    uint32_t qi = static_cast<uint32_t>(i);
    for (size_t k : k_set.support()) {
        uint32_t qk = static_cast<uint32_t>(k);
        gates.push_back(Gate::cz(qi, qk));
        gates.push_back(Gate::cnot(qi, qk));
        gates.push_back(Gate::p(qk));
    }

    CzxpElement left = cto(gates, CzxpElement::identity(n));
    PairMatrix rest = nf.B;
    rest.clear_qubit(i);
    CzpElement front = czp_mul({BitVector(n), nf.b, rest}, left.czp());
    left.a = std::move(front.a);
    left.b = std::move(front.b);
    left.B = std::move(front.B);
    install_left(nf, left);
}

void prepend_cnot_plain(NormalForm &nf, size_t i, size_t j) {
    size_t n = nf.size();
    CzxpElement left{BitVector(n), nf.b, nf.B, BitMatrix::identity(n), TransvectionWord{}};
    cto_prepend(left, Gate::cnot(static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
    install_left(nf, left);
}

void swap_qubits(NormalForm &nf, size_t i, size_t j) {
    nf.b.swap_bits(i, j);
    nf.B.congruence_transposition(i, j);
    nf.pauli.u.swap_bits(i, j);
    nf.pauli.v.swap_bits(i, j);
    nf.d.swap_bits(i, j);
    nf.D.congruence_transposition(i, j);
    nf.A.swap_rows(i, j);
}

// Runs `steps` on the form with H_w removed, then puts H_w back in front.
template <typename F>
void without_h(NormalForm &nf, F steps) {
    BitVector saved = nf.w;
    nf.w.clear();
    steps();
    nf.w ^= saved;
}

void prepend_p_conjugated(NormalForm &nf, size_t q, CaseCounts *counts) {
    prepend_h(nf, q, counts);
    prepend_p(nf, q, counts);
    prepend_h(nf, q, counts);
}

// X_[ij] with w_i = 0, w_j = 1: H_w X_[ij] H_w = Z_ij^h.
void prepend_cnot_zh(NormalForm &nf, size_t i, size_t j, CaseCounts *counts) {
    size_t n = nf.size();
    if (nf.B.contains(i, j)) {
        // Z_ij^h Z_ij = H_i H_j X_(ij) Z_ij^h; the swap travels to the right end.
        if (counts) counts->cx_zh_swap++;
        nf.B.toggle(i, j);
        nf.w.flip(i);
        nf.w.flip(j);
        swap_qubits(nf, i, j);
    }

    nf.pauli = conj_by_Zij(std::move(nf.pauli), i, j);
    nf.D.toggle(i, j);

    // Z_ij^h Z_B Z_ij^h = Z_{B without i, j} prod_{k in K_i} Z_ik X_[jk] prod_{k in K_j} Z_jk X_[ik].
    std::vector<Gate> gates;
    uint32_t qi = static_cast<uint32_t>(i);
    uint32_t qj = static_cast<uint32_t>(j);
    for (size_t k : nf.B.row(i).support()) {
        gates.push_back(Gate::cz(qi, static_cast<uint32_t>(k)));
        gates.push_back(Gate::cnot(qj, static_cast<uint32_t>(k)));
    }
    for (size_t k : nf.B.row(j).support()) {
        gates.push_back(Gate::cz(qj, static_cast<uint32_t>(k)));
        gates.push_back(Gate::cnot(qi, static_cast<uint32_t>(k)));
    }
    CzxpElement left = cto(gates, CzxpElement::identity(n));
    PairMatrix rest = nf.B;
    rest.clear_qubit(i);
    rest.clear_qubit(j);
    left.B ^= rest;

    BitVector pb = nf.b;
    install_left(nf, left);

    // What is left is H_w (Z_ij^h P_b Z_ij^h) N with N already in normal form.
    bool bi = pb[i];
    bool bj = pb[j];
    if (counts) counts->cx_zh[2 * bi + bj]++;
    if (!bi && !bj) {
        nf.b = pb;
    } else if (!bi && bj) {
        // Z_ij^h P_b Z_ij^h = P_i^h X_[ij] P_b
        nf.b = pb;
        without_h(nf, [&] {
            prepend_cnot(nf, i, j, counts);
            prepend_p_conjugated(nf, i, counts);
        });
    } else if (bi && !bj) {
        nf.b = pb;
        without_h(nf, [&] {
            prepend_cnot(nf, j, i, counts);
            prepend_p_conjugated(nf, j, counts);
        });
    } else {
        // Z_ij^h P_b Z_ij^h = P_i^h X_[ij] P_b P_j^h X_[ji]
        without_h(nf, [&] {
            prepend_cnot(nf, j, i, counts);
            prepend_p_conjugated(nf, j, counts);
            for (size_t k : pb.support()) {
                prepend_p(nf, k, counts);
            }
            prepend_cnot(nf, i, j, counts);
            prepend_p_conjugated(nf, i, counts);
        });
    }
}

}  // namespace

void prepend_h(NormalForm &nf, size_t i, CaseCounts *counts) {
    check_qubit(nf, i);
    if (counts) counts->h++;
    nf.w.flip(i);
}

void prepend_p(NormalForm &nf, size_t i, CaseCounts *counts) {
    check_qubit(nf, i);
    if (!nf.w[i]) {
        // P_i P_b = Z_i^{b_i} P_{b + e_i}, and Z_i crosses h as X_i.
        if (counts) counts->p_outside_h++;
        if (nf.b[i]) {
            nf.pauli.u.flip(i);
        }
        nf.b.flip(i);
        return;
    }
    prepend_p_inside_h(nf, i, counts);
}

void prepend_cnot(NormalForm &nf, size_t i, size_t j, CaseCounts *counts) {
    check_qubit(nf, i);
    check_qubit(nf, j);
    if (i == j) {
        throw std::invalid_argument("prepend_cnot: target and control must differ");
    }
    bool wi = nf.w[i];
    bool wj = nf.w[j];
    if (!wi && !wj) {
        if (counts) counts->cx_plain++;
        prepend_cnot_plain(nf, i, j);
    } else if (wi && wj) {
        // h X_[ij] h = X_[ji]
        if (counts) counts->cx_reversed++;
        prepend_cnot_plain(nf, j, i);
    } else if (wi && !wj) {
        // H_i X_[ij] H_i = Z_ij
        if (counts) counts->cx_to_cz++;
        nf.B.toggle(i, j);
    } else {
        prepend_cnot_zh(nf, i, j, counts);
    }
}

void prepend_gate(NormalForm &nf, const Gate &g, CaseCounts *counts) {
    switch (g.kind) {
        case GateKind::H:
            prepend_h(nf, g.a, counts);
            break;
        case GateKind::P:
            prepend_p(nf, g.a, counts);
            break;
        case GateKind::CX:
            prepend_cnot(nf, g.target(), g.control(), counts);
            break;
        default:
            throw std::invalid_argument("prepend_gate: " + std::string(gate_name(g.kind)) +
                                        " must be desugared first");
    }
}

NormalForm normalize(const Circuit &c, CaseCounts *counts) {
    Circuit plain = desugar(c);
    NormalForm nf = identity_form(plain.num_qubits);
    for (const auto &g : plain.gates) {
        prepend_gate(nf, g, counts);
    }
    nf.pauli.phase += plain.phase;
    return nf;
}

namespace {

std::vector<Gate> single_qubit_layer(GateKind kind, const BitVector &x) {
    std::vector<Gate> gates;
    for (size_t q : x.support()) {
        gates.push_back(Gate{kind, static_cast<uint32_t>(q)});
    }
    return gates;
}

std::vector<Gate> cz_layer(const PairMatrix &b) {
    std::vector<Gate> gates;
    for (auto [i, j] : b.pairs()) {
        gates.push_back(Gate::cz(static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
    }
    return gates;
}

}  // namespace

std::vector<Gate> cnot_layer(const BitMatrix &a) {
    TransvectionWord word = synthesize_word(a);
    std::vector<Gate> gates = word_gates(word);
    return {gates.rbegin(), gates.rend()};
}

LayeredCircuit to_circuit(const NormalForm &nf) {
    size_t n = nf.size();
    LayeredCircuit out{n, {}, nf.pauli.phase};
    out.layers = {
        {"CX", "A", cnot_layer(nf.A)},
        {"CZ", "D", cz_layer(nf.D)},
        {"P", "d", single_qubit_layer(GateKind::P, nf.d)},
        {"Z", "v", single_qubit_layer(GateKind::Z, nf.pauli.v)},
        {"X", "u", single_qubit_layer(GateKind::X, nf.pauli.u)},
        {"H", "h", single_qubit_layer(GateKind::H, BitVector::ones(n))},
        {"CZ", "B", cz_layer(nf.B)},
        {"P", "b", single_qubit_layer(GateKind::P, nf.b)},
        {"H", "w", single_qubit_layer(GateKind::H, nf.w)},
    };
    return out;
}

}  // namespace stabnf
