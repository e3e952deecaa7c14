#pragma once

#include <utility>
#include <vector>

#include "stabnf/gf2.h"

namespace stabnf {

/// A set of unordered qubit pairs {i,j}, i != j, held as the symmetric zero-diagonal
/// matrix over F_2 with one bitset row per qubit. It names the CZ layer Z_B and the
/// alternating bilinear form of the quadratic form q_B.
class PairMatrix {
   public:
    PairMatrix() = default;
    explicit PairMatrix(size_t n);

    static PairMatrix from_pairs(size_t n, std::initializer_list<std::pair<size_t, size_t>> pairs);
    static PairMatrix from_pairs(size_t n, const std::vector<std::pair<size_t, size_t>> &pairs);
    /// Validates symmetry and zero diagonal.
    static PairMatrix from_matrix(const BitMatrix &m);

    size_t size() const { return rows_.size(); }
    bool contains(size_t i, size_t j) const { return rows_[i][j]; }
    void toggle(size_t i, size_t j);
    /// Neighbours of qubit i.
    const BitVector &row(size_t i) const { return rows_[i]; }

    /// Symmetric difference.
    PairMatrix &operator^=(const PairMatrix &other);
    friend PairMatrix operator^(PairMatrix x, const PairMatrix &y) { return x ^= y; }
    BitVector operator*(const BitVector &u) const;

    /// B <- [ji] B [ij], the congruence by the transvection T_ij.
    void congruence_transvection(size_t i, size_t j);
    /// B <- (ij) B (ij).
    void congruence_transposition(size_t i, size_t j);
    /// Removes every pair containing i.
    void clear_qubit(size_t i);

    /// Pairs with i < j in lexicographic order.
    std::vector<std::pair<size_t, size_t>> pairs() const;
    size_t pair_count() const;
    bool empty() const;
    BitMatrix as_matrix() const;

    bool operator==(const PairMatrix &) const = default;

   private:
    std::vector<BitVector> rows_;
};

/// q_B(x) = sum over {i,j} in B of x_i x_j (mod 2).
bool quadratic_form(const PairMatrix &b, const BitVector &x);
/// The vector [q_B(C_0), ..., q_B(C_{n-1})] over the columns C_k of m.
BitVector quadratic_form_columns(const PairMatrix &b, const BitMatrix &m);

}  // namespace stabnf
