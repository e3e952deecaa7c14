#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabnf {

/// Raised when an operation needs an element of GL(n,2) but receives a singular matrix.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Element of F_2^n, bit-packed into 64-bit words. Bits beyond size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t n);

    static BitVector basis(size_t n, size_t i);
    static BitVector ones(size_t n);
    /// Parses a string such as "1001" (index 0 first).
    static BitVector from_string(std::string_view bits);
    static BitVector from_bits(std::initializer_list<int> bits);

    size_t size() const { return n_; }
    bool operator[](size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool get(size_t i) const;
    void set(size_t i, bool value);
    void flip(size_t i);
    void swap_bits(size_t i, size_t j);
    void clear();

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector x, const BitVector &y) { return x ^= y; }
    friend BitVector operator&(BitVector x, const BitVector &y) { return x &= y; }

    /// Inner product over F_2.
    bool dot(const BitVector &other) const;
    size_t popcount() const;
    bool is_zero() const;
    std::vector<size_t> support() const;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    bool operator==(const BitVector &) const = default;
    std::string str() const;

   private:
    void check_same_size(const BitVector &other) const;

    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// Square matrix over F_2 stored as bit-packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(size_t n);

    static BitMatrix identity(size_t n);
    /// Row strings such as {"110", "010", "001"}.
    static BitMatrix from_rows(std::initializer_list<std::string_view> rows);

    size_t size() const { return rows_.size(); }
    bool get(size_t r, size_t c) const { return rows_[r][c]; }
    void set(size_t r, size_t c, bool value) { rows_[r].set(c, value); }
    const BitVector &row(size_t r) const { return rows_[r]; }
    BitVector &row(size_t r) { return rows_[r]; }
    BitVector column(size_t c) const;

    /// In place M <- T_ij M: row j is added into row i.
    void transvect_left(size_t i, size_t j);
    /// In place M <- M T_ij: column i is added into column j.
    void transvect_right(size_t i, size_t j);
    void swap_rows(size_t i, size_t j);
    void swap_columns(size_t i, size_t j);

    BitVector operator*(const BitVector &x) const;
    BitMatrix operator*(const BitMatrix &other) const;
    BitMatrix transposed() const;
    bool is_identity() const;
    bool is_symmetric() const;

    bool operator==(const BitMatrix &) const = default;
    std::string str() const;

   private:
    std::vector<BitVector> rows_;
};

BitMatrix transvect_left(BitMatrix m, size_t i, size_t j);
BitMatrix transvect_right(BitMatrix m, size_t i, size_t j);

/// Inverse by Gauss-Jordan elimination (first nonzero pivot). Throws SingularMatrixError.
BitMatrix invert(const BitMatrix &a);
/// (A^T)^{-1}.
BitMatrix transpose_inverse(const BitMatrix &a);
size_t rank(BitMatrix a);

/// Generator of GL(n,2): the transvection [ij] = I + E_ij or the transposition matrix (ij).
struct GlLetter {
    enum class Kind : uint8_t { Transvection, Transposition };
    Kind kind;
    uint32_t i;
    uint32_t j;

    static GlLetter transvection(uint32_t i, uint32_t j) { return {Kind::Transvection, i, j}; }
    static GlLetter transposition(uint32_t i, uint32_t j) { return {Kind::Transposition, i, j}; }
    bool is_transposition() const { return kind == Kind::Transposition; }
    bool operator==(const GlLetter &) const = default;
};

/// Ordered product of GL(n,2) generators; letters[0] is the leftmost factor.
struct TransvectionWord {
    std::deque<GlLetter> letters;

    TransvectionWord() = default;
    TransvectionWord(std::initializer_list<GlLetter> init) : letters(init) {}

    /// Parses the bracket notation "[35][01](42)"; indices are single digits or
    /// comma separated ("[10,3]").
    static TransvectionWord parse(std::string_view text);

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    void append(GlLetter g) { letters.push_back(g); }
    void prepend(GlLetter g) { letters.push_front(g); }
    void append(const TransvectionWord &other);
    /// Word of (A^T)^{-1}: [ij] becomes [ji], transpositions are unchanged.
    TransvectionWord transpose_inverse() const;
    /// Word of A^{-1}: letters reversed.
    TransvectionWord inverse() const;
    void check_indices(size_t n) const;

    bool operator==(const TransvectionWord &) const = default;
    std::string str() const;
};

/// Evaluates the word with one row operation per letter.
BitMatrix word_to_matrix(const TransvectionWord &word, size_t n);

/// Gaussian elimination synthesis: a transvection-only word whose product equals A.
/// At most n^2 letters. Throws SingularMatrixError.
TransvectionWord synthesize_word(const BitMatrix &a);

}  // namespace stabnf
