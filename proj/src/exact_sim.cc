#include "stabnf/exact_sim.h"

#include <string>

namespace stabnf {

DenseUnitary::DenseUnitary(size_t n) : n_(n), dim_(size_t{1} << n), entries_(dim_ * dim_) {}

DenseUnitary DenseUnitary::identity(size_t n) {
    DenseUnitary u(n);
    for (size_t x = 0; x < u.dim_; x++) {
        u.at(x, x) = Cyclo8::one();
    }
    return u;
}

BitVector DenseUnitary::index_bits(size_t x) const {
    BitVector v(n_);
    for (size_t q = 0; q < n_; q++) {
        if (x & qubit_mask(q)) {
            v.set(q, true);
        }
    }
    return v;
}

size_t DenseUnitary::bits_index(const BitVector &v) const {
    size_t x = 0;
    for (size_t q = 0; q < n_; q++) {
        if (v[q]) {
            x |= qubit_mask(q);
        }
    }
    return x;
}

// Row x moves to row target[x].
void DenseUnitary::permute_rows(const std::vector<size_t> &target) {
    std::vector<Cyclo8> out(entries_.size());
    for (size_t x = 0; x < dim_; x++) {
        std::move(entries_.begin() + x * dim_, entries_.begin() + (x + 1) * dim_, out.begin() + target[x] * dim_);
    }
    entries_ = std::move(out);
}

void DenseUnitary::apply_h(size_t q) {
    size_t mask = qubit_mask(q);
    for (size_t r0 = 0; r0 < dim_; r0++) {
        if (r0 & mask) {
            continue;
        }
        size_t r1 = r0 | mask;
        for (size_t c = 0; c < dim_; c++) {
            Cyclo8 &x = at(r0, c);
            Cyclo8 &y = at(r1, c);
            if (x.is_zero() && y.is_zero()) {
                continue;
            }
            Cyclo8 sum = x + y;
            Cyclo8 diff = x - y;
            x = std::move(sum.div_sqrt2());
            y = std::move(diff.div_sqrt2());
        }
    }
}

void DenseUnitary::apply_phase(PhaseZ8 phase) {
    if (phase.is_identity()) {
        return;
    }
    for (auto &e : entries_) {
        e.mul_zeta(phase.k());
    }
}

void DenseUnitary::apply(const Gate &g) {
    validate_gate(g, n_);
    size_t ma = qubit_mask(g.a);
    size_t mb = is_two_qubit(g.kind) ? qubit_mask(g.b) : 0;
    auto scale_rows = [&](auto zeta_k_of_row) {
        for (size_t x = 0; x < dim_; x++) {
            int k = zeta_k_of_row(x);
            if (k % 8 == 0) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                at(x, c).mul_zeta(k);
            }
        }
    };
    auto move_rows = [&](auto image) {
        std::vector<size_t> target(dim_);
        for (size_t x = 0; x < dim_; x++) {
            target[x] = image(x);
        }
        permute_rows(target);
    };
    switch (g.kind) {
        case GateKind::H:
            apply_h(g.a);
            break;
        case GateKind::P:
            scale_rows([&](size_t x) { return (x & ma) ? 2 : 0; });
            break;
        case GateKind::PDG:
            scale_rows([&](size_t x) { return (x & ma) ? 6 : 0; });
            break;
        case GateKind::Z:
            scale_rows([&](size_t x) { return (x & ma) ? 4 : 0; });
            break;
        case GateKind::X:
            move_rows([&](size_t x) { return x ^ ma; });
            break;
        case GateKind::Y:
            // Y|0> = i|1>, Y|1> = -i|0>
            scale_rows([&](size_t x) { return (x & ma) ? 6 : 2; });
            move_rows([&](size_t x) { return x ^ ma; });
            break;
        case GateKind::CX:
            // a is the target, b the control
            move_rows([&](size_t x) { return (x & mb) ? x ^ ma : x; });
            break;
        case GateKind::CZ:
            scale_rows([&](size_t x) { return ((x & ma) && (x & mb)) ? 4 : 0; });
            break;
        case GateKind::SWAP:
            move_rows([&](size_t x) {
                bool ba = x & ma;
                bool bb = x & mb;
                return (x & ~(ma | mb)) | (ba ? mb : 0) | (bb ? ma : 0);
            });
            break;
    }
}

void DenseUnitary::apply_xa(const BitMatrix &a) {
    std::vector<size_t> target(dim_);
    for (size_t x = 0; x < dim_; x++) {
        target[x] = bits_index(a * index_bits(x));
    }
    permute_rows(target);
}

void DenseUnitary::apply_zb(const PairMatrix &b) {
    for (size_t x = 0; x < dim_; x++) {
        if (!quadratic_form(b, index_bits(x))) {
            continue;
        }
        for (size_t c = 0; c < dim_; c++) {
            at(x, c).mul_zeta(4);
        }
    }
}

void DenseUnitary::apply_pb(const BitVector &b) {
    for (size_t x = 0; x < dim_; x++) {
        size_t hits = (b & index_bits(x)).popcount();
        if (hits % 4 == 0) {
            continue;
        }
        for (size_t c = 0; c < dim_; c++) {
            at(x, c).mul_zeta(static_cast<int>(2 * (hits % 4)));
        }
    }
}

void DenseUnitary::apply_pauli(const PauliOp &p) {
    // Z_v acts first, then X_u, then the phase.
    for (size_t x = 0; x < dim_; x++) {
        if (!p.v.dot(index_bits(x))) {
            continue;
        }
        for (size_t c = 0; c < dim_; c++) {
            at(x, c).mul_zeta(4);
        }
    }
    size_t shift = bits_index(p.u);
    std::vector<size_t> target(dim_);
    for (size_t x = 0; x < dim_; x++) {
        target[x] = x ^ shift;
    }
    permute_rows(target);
    apply_phase(p.phase);
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("DenseUnitary: dimension mismatch");
    }
    DenseUnitary out(n_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            const Cyclo8 &x = at(r, k);
            if (x.is_zero()) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                const Cyclo8 &y = other.at(k, c);
                if (!y.is_zero()) {
                    out.at(r, c) += x * y;
                }
            }
        }
    }
    return out;
}

DenseUnitary DenseUnitary::adjoint() const {
    DenseUnitary out(n_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out.at(c, r) = at(r, c).conj();
        }
    }
    return out;
}

bool DenseUnitary::is_identity() const { return *this == identity(n_); }

void check_oracle_size(size_t n, size_t max_qubits) {
    if (n > max_qubits) {
        throw ResourceGuardError("exact simulation of " + std::to_string(n) + " qubits exceeds the limit of " +
                                 std::to_string(max_qubits));
    }
}

DenseUnitary gate_matrix(const Gate &g, size_t n) {
    DenseUnitary u = DenseUnitary::identity(n);
    u.apply(g);
    return u;
}

DenseUnitary circuit_unitary(const Circuit &c, size_t max_qubits) {
    check_oracle_size(c.num_qubits, max_qubits);
    DenseUnitary u = DenseUnitary::identity(c.num_qubits);
    for (const auto &g : c.gates) {
        u.apply(g);
    }
    u.apply_phase(c.phase);
    return u;
}

namespace {

void apply_h_layer(DenseUnitary &u, const BitVector &w) {
    for (size_t q : w.support()) {
        u.apply_h(q);
    }
}

void apply_pattern(DenseUnitary &u, const BitVector &s) {
    u.apply_zb(reduced_pattern(s, u.num_qubits()));
}

}  // namespace

DenseUnitary unitary_of(const NormalForm &nf, size_t max_qubits) {
    size_t n = nf.size();
    check_oracle_size(n, max_qubits);
    DenseUnitary u = DenseUnitary::identity(n);
    u.apply_xa(nf.A);
    u.apply_zb(nf.D);
    u.apply_pb(nf.d);
    u.apply_pauli(nf.pauli);
    apply_h_layer(u, BitVector::ones(n));
    u.apply_zb(nf.B);
    u.apply_pb(nf.b);
    apply_h_layer(u, nf.w);
    return u;
}

DenseUnitary unitary_of(const CzReducedForm &f, size_t max_qubits) {
    size_t n = f.size();
    check_oracle_size(n, max_qubits);
    DenseUnitary u = DenseUnitary::identity(n);
    u.apply_pb(f.d);
    u.apply_xa(f.A3);
    apply_pattern(u, f.s2);
    u.apply_xa(f.A2);
    u.apply_pauli(f.pauli);
    apply_h_layer(u, BitVector::ones(n));
    apply_pattern(u, f.s);
    u.apply_xa(f.A1);
    u.apply_pb(f.b);
    apply_h_layer(u, f.w);
    return u;
}

bool is_unitary(const DenseUnitary &u) { return (u * u.adjoint()).is_identity(); }

Verdict assert_equal(const DenseUnitary &u1, const DenseUnitary &u2, bool include_phase) {
    if (u1.num_qubits() != u2.num_qubits()) {
        throw std::invalid_argument("assert_equal: dimension mismatch");
    }
    Verdict verdict;
    for (size_t r = 0; r < u1.dim() && !verdict.phase_k; r++) {
        for (size_t c = 0; c < u1.dim(); c++) {
            const Cyclo8 &x = u1.at(r, c);
            if (x.is_zero()) {
                continue;
            }
            for (int k = 0; k < 8; k++) {
                Cyclo8 y = x;
                if (y.mul_zeta(k) == u2.at(r, c)) {
                    verdict.phase_k = k;
                }
            }
            if (!verdict.phase_k) {
                return verdict;
            }
            break;
        }
    }
    if (!verdict.phase_k) {
        // u1 is zero only when dim is zero
        return verdict;
    }
    for (size_t r = 0; r < u1.dim(); r++) {
        for (size_t c = 0; c < u1.dim(); c++) {
            Cyclo8 y = u1.at(r, c);
            if (!(y.mul_zeta(*verdict.phase_k) == u2.at(r, c))) {
                verdict.phase_k.reset();
                return verdict;
            }
        }
    }
    verdict.equal = !include_phase || *verdict.phase_k == 0;
    return verdict;
}

}  // namespace stabnf
