#include "stabnf/czxp.h"

#include <unordered_set>

namespace stabnf {

CzxpElement CzxpElement::identity(size_t n, bool track_word) {
    CzxpElement e{BitVector(n), BitVector(n), PairMatrix(n), BitMatrix::identity(n), std::nullopt};
    if (track_word) {
        e.word.emplace();
    }
    return e;
}

bool CzxpElement::operator==(const CzxpElement &other) const {
    return a == other.a && b == other.b && B == other.B && A == other.A;
}

CzpElement czp_mul(const CzpElement &x, const CzpElement &y) {
    if (x.a.size() != y.a.size()) {
        throw std::invalid_argument("czp_mul: dimension mismatch");
    }
    return {x.a ^ y.a ^ (x.b & y.b), x.b ^ y.b, x.B ^ y.B};
}

namespace {

// X_[ij] (Z_a P_b Z_B) X_[ij] for the phase-free part; indices already validated.
void conj_czp_by_Xij(BitVector &a, BitVector &b, PairMatrix &B, size_t i, size_t j) {
    bool bi = b[i];
    bool bj = b[j];
    bool bij = B.contains(i, j);
    if (a[i]) {
        a.flip(j);
    }
    if ((bi && bj) != bij) {
        a.flip(j);
    }
    if (bi) {
        b.flip(j);
    }
    B.congruence_transvection(i, j);
    if (bi) {
        B.toggle(i, j);
    }
}

void conj_czp_by_Sij(BitVector &a, BitVector &b, PairMatrix &B, size_t i, size_t j) {
    a.swap_bits(i, j);
    b.swap_bits(i, j);
    B.congruence_transposition(i, j);
}

}  // namespace

void cto_prepend(CzxpElement &e, const Gate &g) {
    size_t n = e.size();
    validate_gate(g, n);
    switch (g.kind) {
        case GateKind::CZ:
            e.B.toggle(g.a, g.b);
            break;
        case GateKind::P:
            if (e.b[g.a]) {
                e.a.flip(g.a);
            }
            e.b.flip(g.a);
            break;
        case GateKind::CX: {
            size_t i = g.target();
            size_t j = g.control();
            conj_czp_by_Xij(e.a, e.b, e.B, i, j);
            e.A.transvect_left(i, j);
            if (e.word) {
                e.word->prepend(GlLetter::transvection(static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
            }
            break;
        }
        default:
            throw std::invalid_argument("cto: gate " + std::string(gate_name(g.kind)) +
                                        " is not in the group generated by P, CZ and CX");
    }
}

CzxpElement cto(std::span<const Gate> gates, CzxpElement init) {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        cto_prepend(init, *it);
    }
    return init;
}

CzxpElement cto_circuit(const Circuit &c) {
    if (!c.phase.is_identity()) {
        throw std::invalid_argument("cto_circuit: circuits in <P, CZ, CX> carry no global phase");
    }
    CzxpElement e = CzxpElement::identity(c.num_qubits);
    for (const auto &g : c.gates) {
        cto_prepend(e, g);
    }
    return e;
}

CzpElement conj_czp_by_XA(CzpElement e, const TransvectionWord &word) {
    word.check_indices(e.a.size());
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (it->is_transposition()) {
            conj_czp_by_Sij(e.a, e.b, e.B, it->i, it->j);
        } else {
            conj_czp_by_Xij(e.a, e.b, e.B, it->i, it->j);
        }
    }
    return e;
}

ConjugatedCz conj_ZB_by_XA(const PairMatrix &b, const BitMatrix &a) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("conj_ZB_by_XA: dimension mismatch");
    }
    BitMatrix a_inv = invert(a);
    BitVector z = quadratic_form_columns(b, a_inv);
    // A congruence of an alternating form is alternating, so from_matrix never sees a
    // nonzero diagonal here.
    BitMatrix congruent = a_inv.transposed() * b.as_matrix() * a_inv;
    return {std::move(z), PairMatrix::from_matrix(congruent)};
}

Circuit czxp_to_circuit(const CzxpElement &e) {
    size_t n = e.size();
    Circuit c{n, {}, PhaseZ8()};
    TransvectionWord word = e.word ? *e.word : synthesize_word(e.A);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (it->is_transposition()) {
            c.gates.push_back(Gate::cnot(it->i, it->j));
            c.gates.push_back(Gate::cnot(it->j, it->i));
            c.gates.push_back(Gate::cnot(it->i, it->j));
        } else {
            c.gates.push_back(Gate::cnot(it->i, it->j));
        }
    }
    for (auto [i, j] : e.B.pairs()) {
        c.gates.push_back(Gate::cz(static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
    }
    for (size_t q : e.b.support()) {
        c.gates.push_back(Gate::p(static_cast<uint32_t>(q)));
    }
    for (size_t q : e.a.support()) {
        c.gates.push_back(Gate::p(static_cast<uint32_t>(q)));
        c.gates.push_back(Gate::p(static_cast<uint32_t>(q)));
    }
    return c;
}

namespace {

// Column x of a monomial matrix is i^phase |row>; packed as 5 bits per column.
struct Monomial {
    std::vector<uint8_t> row;
    std::vector<uint8_t> phase;

    uint64_t key() const {
        uint64_t k = 0;
        for (size_t x = 0; x < row.size(); x++) {
            k |= uint64_t((row[x] << 2) | phase[x]) << (5 * x);
        }
        return k;
    }
};

Monomial apply(const Monomial &m, const Gate &g) {
    Monomial out = m;
    for (size_t x = 0; x < m.row.size(); x++) {
        uint8_t r = m.row[x];
        switch (g.kind) {
            case GateKind::P:
                out.phase[x] = (m.phase[x] + ((r >> g.a) & 1)) & 3;
                break;
            case GateKind::CZ:
                out.phase[x] = (m.phase[x] + 2 * ((r >> g.a) & (r >> g.b) & 1)) & 3;
                break;
            case GateKind::CX:
                out.row[x] = static_cast<uint8_t>(r ^ (((r >> g.control()) & 1) << g.target()));
                break;
            default:
                break;
        }
    }
    return out;
}

}  // namespace

uint64_t enumerate_group(size_t n, GroupGenerators generators) {
    if (n == 0 || n > 3) {
        throw std::invalid_argument("enumerate_group: n must be in 1..3 (resource guard)");
    }
    std::vector<Gate> gens;
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = 0; j < n; j++) {
            if (i != j) {
                gens.push_back(Gate::cnot(i, j));
            }
        }
    }
    if (generators == GroupGenerators::CzCnotPhase) {
        for (uint32_t i = 0; i < n; i++) {
            gens.push_back(Gate::p(i));
            for (uint32_t j = i + 1; j < n; j++) {
                gens.push_back(Gate::cz(i, j));
            }
        }
    }
    size_t dim = size_t{1} << n;
    Monomial id{std::vector<uint8_t>(dim), std::vector<uint8_t>(dim, 0)};
    for (size_t x = 0; x < dim; x++) {
        id.row[x] = static_cast<uint8_t>(x);
    }
    std::unordered_set<uint64_t> seen{id.key()};
    std::vector<Monomial> frontier{id};
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto &m : frontier) {
            for (const auto &g : gens) {
                Monomial nm = apply(m, g);
                if (seen.insert(nm.key()).second) {
                    next.push_back(std::move(nm));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace stabnf
