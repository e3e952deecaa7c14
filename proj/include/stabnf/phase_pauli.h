#pragma once

#include <cstdint>
#include <string>

#include "stabnf/gf2.h"
#include "stabnf/pair_matrix.h"

namespace stabnf {

/// Global phase e^{i k pi/4}, k in Z_8. A Pauli phase i^lambda is stored as k = 2 lambda.
class PhaseZ8 {
   public:
    constexpr PhaseZ8() = default;
    constexpr explicit PhaseZ8(int k) : k_(static_cast<uint8_t>(((k % 8) + 8) % 8)) {}
    static constexpr PhaseZ8 from_i_power(int lambda) { return PhaseZ8(2 * lambda); }

    constexpr int k() const { return k_; }
    constexpr bool is_identity() const { return k_ == 0; }

    constexpr PhaseZ8 &operator+=(PhaseZ8 other) {
        k_ = static_cast<uint8_t>((k_ + other.k_) & 7);
        return *this;
    }
    constexpr PhaseZ8 &operator-=(PhaseZ8 other) {
        k_ = static_cast<uint8_t>((k_ + 8 - other.k_) & 7);
        return *this;
    }
    friend constexpr PhaseZ8 operator+(PhaseZ8 a, PhaseZ8 b) { return a += b; }
    friend constexpr PhaseZ8 operator-(PhaseZ8 a, PhaseZ8 b) { return a -= b; }
    constexpr PhaseZ8 operator-() const { return PhaseZ8(-k_); }
    constexpr bool operator==(const PhaseZ8 &) const = default;

   private:
    uint8_t k_ = 0;
};

/// e^{i k pi/4} X_u Z_v, with all X factors to the left of all Z factors.
struct PauliOp {
    PhaseZ8 phase;
    BitVector u;
    BitVector v;

    static PauliOp identity(size_t n) { return {PhaseZ8(), BitVector(n), BitVector(n)}; }
    static PauliOp x(size_t n, size_t i) { return {PhaseZ8(), BitVector::basis(n, i), BitVector(n)}; }
    static PauliOp z(size_t n, size_t i) { return {PhaseZ8(), BitVector(n), BitVector::basis(n, i)}; }

    size_t size() const { return u.size(); }
    bool operator==(const PauliOp &) const = default;
    std::string str() const;
};

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q);
PauliOp pauli_inverse(const PauliOp &p);

/// P_i p P_i^{-1}: phase gains i^{u_i}, v_i ^= u_i.
PauliOp conj_by_Pi(PauliOp p, size_t i);
/// P_b p P_b^{-1}.
///
/// The phase is i^{|b AND u|}: only the qubits carrying both a P and an X contribute
/// (P X P^{-1} = i X Z on one qubit, and the single-qubit factors commute). A sum over
/// all of u, as a literal reading of the general rule suggests, disagrees with the
/// exact simulator whenever u has support outside b.
PauliOp conj_by_Pb(PauliOp p, const BitVector &b);
/// X_[ij] p X_[ij]: u <- [ij] u, v <- [ji] v.
PauliOp conj_by_Xij(PauliOp p, size_t i, size_t j);
/// X_A p X_A^{-1} with A given as a word; letters act innermost (rightmost) first.
PauliOp conj_by_XA(PauliOp p, const TransvectionWord &word);
/// Dense route: u <- A u, v <- A_inv_t v where A_inv_t = (A^T)^{-1}.
PauliOp conj_by_XA(PauliOp p, const BitMatrix &a, const BitMatrix &a_inv_t);
/// Z_ij p Z_ij.
PauliOp conj_by_Zij(PauliOp p, size_t i, size_t j);
/// Z_B p Z_B: phase gains (-1)^{q_B(u)}, v ^= B u.
PauliOp conj_by_ZB(PauliOp p, const PairMatrix &b);
/// h p h, h = Hadamard on every qubit: u and v swap and the phase gains (-1)^{u.v}
/// because h X_u h h Z_v h = Z_u X_v = (-1)^{u.v} X_v Z_u.
PauliOp conj_by_h(PauliOp p);

}  // namespace stabnf
