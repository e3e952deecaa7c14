#include "stabnf/phase_pauli.h"

#include <sstream>

namespace stabnf {

namespace {

void check_sizes(const PauliOp &p, size_t n, const char *what) {
    if (p.u.size() != n || p.v.size() != n) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

std::string PauliOp::str() const {
    std::ostringstream out;
    out << "e^{i" << phase.k() << "pi/4} X_" << u.str() << " Z_" << v.str();
    return out.str();
}

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q) {
    check_sizes(q, p.size(), "pauli_mul");
    PauliOp out{p.phase + q.phase, p.u ^ q.u, p.v ^ q.v};
    // Z_v X_{u'} = (-1)^{u'.v} X_{u'} Z_v
    if (q.u.dot(p.v)) {
        out.phase += PhaseZ8(4);
    }
    return out;
}

PauliOp pauli_inverse(const PauliOp &p) {
    // (X_u Z_v)^{-1} = Z_v X_u = (-1)^{u.v} X_u Z_v
    PauliOp out{-p.phase, p.u, p.v};
    if (p.u.dot(p.v)) {
        out.phase += PhaseZ8(4);
    }
    return out;
}

PauliOp conj_by_Pi(PauliOp p, size_t i) {
    if (p.u.get(i)) {
        p.phase += PhaseZ8(2);
        p.v.flip(i);
    }
    return p;
}

PauliOp conj_by_Pb(PauliOp p, const BitVector &b) {
    check_sizes(p, b.size(), "conj_by_Pb");
    BitVector hit = b & p.u;
    p.phase += PhaseZ8(2 * static_cast<int>(hit.popcount() & 3));
    p.v ^= hit;
    return p;
}

PauliOp conj_by_Xij(PauliOp p, size_t i, size_t j) {
    if (i >= p.size() || j >= p.size() || i == j) {
        throw std::invalid_argument("conj_by_Xij: bad index pair");
    }
    if (p.u[j]) {
        p.u.flip(i);
    }
    if (p.v[i]) {
        p.v.flip(j);
    }
    return p;
}

PauliOp conj_by_XA(PauliOp p, const TransvectionWord &word) {
    word.check_indices(p.size());
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (it->is_transposition()) {
            p.u.swap_bits(it->i, it->j);
            p.v.swap_bits(it->i, it->j);
        } else {
            p = conj_by_Xij(std::move(p), it->i, it->j);
        }
    }
    return p;
}

PauliOp conj_by_XA(PauliOp p, const BitMatrix &a, const BitMatrix &a_inv_t) {
    check_sizes(p, a.size(), "conj_by_XA");
    p.u = a * p.u;
    p.v = a_inv_t * p.v;
    return p;
}

PauliOp conj_by_Zij(PauliOp p, size_t i, size_t j) {
    if (i >= p.size() || j >= p.size() || i == j) {
        throw std::invalid_argument("conj_by_Zij: bad index pair");
    }
    bool ui = p.u[i];
    bool uj = p.u[j];
    if (ui && uj) {
        p.phase += PhaseZ8(4);
    }
    if (uj) {
        p.v.flip(i);
    }
    if (ui) {
        p.v.flip(j);
    }
    return p;
}

PauliOp conj_by_ZB(PauliOp p, const PairMatrix &b) {
    check_sizes(p, b.size(), "conj_by_ZB");
    if (quadratic_form(b, p.u)) {
        p.phase += PhaseZ8(4);
    }
    p.v ^= b * p.u;
    return p;
}

PauliOp conj_by_h(PauliOp p) {
    if (p.u.dot(p.v)) {
        p.phase += PhaseZ8(4);
    }
    std::swap(p.u, p.v);
    return p;
}

}  // namespace stabnf
