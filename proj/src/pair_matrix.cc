#include "stabnf/pair_matrix.h"

#include <bit>

namespace stabnf {

PairMatrix::PairMatrix(size_t n) : rows_(n, BitVector(n)) {}

PairMatrix PairMatrix::from_pairs(size_t n, std::initializer_list<std::pair<size_t, size_t>> pairs) {
    return from_pairs(n, std::vector<std::pair<size_t, size_t>>(pairs));
}

PairMatrix PairMatrix::from_pairs(size_t n, const std::vector<std::pair<size_t, size_t>> &pairs) {
    PairMatrix out(n);
    for (auto [i, j] : pairs) {
        out.toggle(i, j);
    }
    return out;
}

PairMatrix PairMatrix::from_matrix(const BitMatrix &m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; i++) {
        if (m.get(i, i)) {
            throw std::invalid_argument("PairMatrix: diagonal entry " + std::to_string(i) + " is nonzero");
        }
    }
    if (!m.is_symmetric()) {
        throw std::invalid_argument("PairMatrix: matrix is not symmetric");
    }
    PairMatrix out(n);
    for (size_t i = 0; i < n; i++) {
        out.rows_[i] = m.row(i);
    }
    return out;
}

void PairMatrix::toggle(size_t i, size_t j) {
    if (i >= size() || j >= size()) {
        throw std::out_of_range("PairMatrix::toggle: qubit index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("PairMatrix::toggle: a pair needs two distinct qubits");
    }
    rows_[i].flip(j);
    rows_[j].flip(i);
}

PairMatrix &PairMatrix::operator^=(const PairMatrix &other) {
    if (other.size() != size()) {
        throw std::invalid_argument("PairMatrix: dimension mismatch");
    }
    for (size_t i = 0; i < size(); i++) {
        rows_[i] ^= other.rows_[i];
    }
    return *this;
}

BitVector PairMatrix::operator*(const BitVector &u) const {
    if (u.size() != size()) {
        throw std::invalid_argument("PairMatrix * BitVector: dimension mismatch");
    }
    BitVector out(size());
    for (size_t r = 0; r < size(); r++) {
        if (rows_[r].dot(u)) {
            out.flip(r);
        }
    }
    return out;
}

void PairMatrix::congruence_transvection(size_t i, size_t j) {
    if (i >= size() || j >= size() || i == j) {
        throw std::invalid_argument("PairMatrix::congruence_transvection: bad index pair");
    }
    // Right factor: column i added into column j; the symmetric row update follows.
    // The (j,j) entry picks up B_ij twice and stays zero.
    BitVector col_i = rows_[i];
    for (size_t r : col_i.support()) {
        rows_[r].flip(j);
    }
    rows_[j] ^= rows_[i];
}

void PairMatrix::congruence_transposition(size_t i, size_t j) {
    if (i >= size() || j >= size()) {
        throw std::out_of_range("PairMatrix::congruence_transposition: index out of range");
    }
    if (i == j) {
        return;
    }
    std::swap(rows_[i], rows_[j]);
    for (auto &row : rows_) {
        row.swap_bits(i, j);
    }
}

void PairMatrix::clear_qubit(size_t i) {
    for (size_t k : rows_[i].support()) {
        rows_[k].flip(i);
    }
    rows_[i].clear();
}

std::vector<std::pair<size_t, size_t>> PairMatrix::pairs() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < size(); i++) {
        for (size_t j : rows_[i].support()) {
            if (j > i) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

size_t PairMatrix::pair_count() const {
    size_t total = 0;
    for (const auto &row : rows_) {
        total += row.popcount();
    }
    return total / 2;
}

bool PairMatrix::empty() const {
    for (const auto &row : rows_) {
        if (!row.is_zero()) {
            return false;
        }
    }
    return true;
}

BitMatrix PairMatrix::as_matrix() const {
    BitMatrix m(size());
    for (size_t i = 0; i < size(); i++) {
        m.row(i) = rows_[i];
    }
    return m;
}

bool quadratic_form(const PairMatrix &b, const BitVector &x) {
    if (x.size() != b.size()) {
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    }
    // Each pair inside supp(x) is seen twice when summing |row_i & x| over i in supp(x).
    size_t twice = 0;
    for (size_t i : x.support()) {
        auto r = b.row(i).words();
        auto xw = x.words();
        for (size_t k = 0; k < r.size(); k++) {
            twice += std::popcount(r[k] & xw[k]);
        }
    }
    return (twice / 2) & 1;
}

BitVector quadratic_form_columns(const PairMatrix &b, const BitMatrix &m) {
    if (m.size() != b.size()) {
        throw std::invalid_argument("quadratic_form_columns: dimension mismatch");
    }
    BitMatrix t = m.transposed();
    BitVector out(m.size());
    for (size_t c = 0; c < m.size(); c++) {
        if (quadratic_form(b, t.row(c))) {
            out.set(c, true);
        }
    }
    return out;
}

}  // namespace stabnf
