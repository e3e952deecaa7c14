#include "operator_builder.h"

namespace stabnf::testing {

Op &Op::gate(Gate g) {
    factors_.push_back([g](DenseUnitary &u) { u.apply(g); });
    return *this;
}

Op &Op::h_all() {
    for (size_t q = 0; q < n_; q++) {
        h(q);
    }
    return *this;
}

Op &Op::phase(int k) {
    factors_.push_back([k](DenseUnitary &u) { u.apply_phase(PhaseZ8(k)); });
    return *this;
}

Op &Op::z_vec(const BitVector &a) {
    for (size_t q : a.support()) {
        z(q);
    }
    return *this;
}

Op &Op::p_vec(const BitVector &b) {
    factors_.push_back([b](DenseUnitary &u) { u.apply_pb(b); });
    return *this;
}

Op &Op::p_vec_inv(const BitVector &b) {
    for (size_t q : b.support()) {
        pdg(q);
    }
    return *this;
}

Op &Op::h_vec(const BitVector &w) {
    for (size_t q : w.support()) {
        h(q);
    }
    return *this;
}

Op &Op::zb(const PairMatrix &b) {
    factors_.push_back([b](DenseUnitary &u) { u.apply_zb(b); });
    return *this;
}

Op &Op::xa(const BitMatrix &a) {
    factors_.push_back([a](DenseUnitary &u) { u.apply_xa(a); });
    return *this;
}

Op &Op::pauli(const PauliOp &p) {
    factors_.push_back([p](DenseUnitary &u) { u.apply_pauli(p); });
    return *this;
}

Op &Op::czp(const CzpElement &e) { return z_vec(e.a).p_vec(e.b).zb(e.B); }

Op &Op::czxp(const CzxpElement &e) { return z_vec(e.a).p_vec(e.b).zb(e.B).xa(e.A); }

DenseUnitary Op::eval() const {
    DenseUnitary u = DenseUnitary::identity(n_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        (*it)(u);
    }
    return u;
}

}  // namespace stabnf::testing
