#include "stabnf/gf2.h"

#include <bit>
#include <cctype>
#include <sstream>

namespace stabnf {

namespace {

size_t num_words(size_t n) { return (n + 63) >> 6; }

void check_index(size_t i, size_t n, const char *what) {
    if (i >= n) {
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " out of range for size " +
                                std::to_string(n));
    }
}

void check_pair(size_t i, size_t j, size_t n, const char *what) {
    check_index(i, n, what);
    check_index(j, n, what);
    if (i == j) {
        throw std::invalid_argument(std::string(what) + ": indices must differ, got " + std::to_string(i) + " twice");
    }
}

}  // namespace

BitVector::BitVector(size_t n) : n_(n), words_(num_words(n), 0) {}

BitVector BitVector::basis(size_t n, size_t i) {
    check_index(i, n, "BitVector::basis");
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::ones(size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, true);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
    }
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    size_t i = 0;
    for (int b : bits) {
        v.set(i++, b & 1);
    }
    return v;
}

bool BitVector::get(size_t i) const {
    check_index(i, n_, "BitVector::get");
    return (*this)[i];
}

void BitVector::set(size_t i, bool value) {
    check_index(i, n_, "BitVector::set");
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVector::flip(size_t i) {
    check_index(i, n_, "BitVector::flip");
    words_[i >> 6] ^= uint64_t{1} << (i & 63);
}

void BitVector::swap_bits(size_t i, size_t j) {
    bool bi = get(i);
    bool bj = get(j);
    if (bi != bj) {
        flip(i);
        flip(j);
    }
}

void BitVector::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

void BitVector::check_same_size(const BitVector &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("BitVector length mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_));
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

bool BitVector::dot(const BitVector &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back((k << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t n) : rows_(n, BitVector(n)) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n);
    for (size_t i = 0; i < n; i++) {
        m.rows_[i].set(i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
    BitMatrix m(rows.size());
    size_t r = 0;
    for (auto row : rows) {
        if (row.size() != rows.size()) {
            throw std::invalid_argument("BitMatrix::from_rows: matrix must be square");
        }
        m.rows_[r++] = BitVector::from_string(row);
    }
    return m;
}

BitVector BitMatrix::column(size_t c) const {
    check_index(c, size(), "BitMatrix::column");
    BitVector out(size());
    for (size_t r = 0; r < size(); r++) {
        if (rows_[r][c]) {
            out.set(r, true);
        }
    }
    return out;
}

void BitMatrix::transvect_left(size_t i, size_t j) {
    check_pair(i, j, size(), "transvect_left");
    rows_[i] ^= rows_[j];
}

void BitMatrix::transvect_right(size_t i, size_t j) {
    check_pair(i, j, size(), "transvect_right");
    size_t wi = i >> 6, bi = i & 63;
    size_t wj = j >> 6, bj = j & 63;
    for (auto &row : rows_) {
        auto words = row.words();
        uint64_t bit = (words[wi] >> bi) & 1;
        words[wj] ^= bit << bj;
    }
}

void BitMatrix::swap_rows(size_t i, size_t j) {
    check_index(i, size(), "swap_rows");
    check_index(j, size(), "swap_rows");
    std::swap(rows_[i], rows_[j]);
}

void BitMatrix::swap_columns(size_t i, size_t j) {
    check_index(i, size(), "swap_columns");
    check_index(j, size(), "swap_columns");
    for (auto &row : rows_) {
        row.swap_bits(i, j);
    }
}

BitVector BitMatrix::operator*(const BitVector &x) const {
    if (x.size() != size()) {
        throw std::invalid_argument("BitMatrix * BitVector: dimension mismatch");
    }
    BitVector out(size());
    for (size_t r = 0; r < size(); r++) {
        if (rows_[r].dot(x)) {
            out.set(r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("BitMatrix * BitMatrix: dimension mismatch");
    }
    BitMatrix out(size());
    for (size_t r = 0; r < size(); r++) {
        for (size_t k : rows_[r].support()) {
            out.rows_[r] ^= other.rows_[k];
        }
    }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(size());
    for (size_t r = 0; r < size(); r++) {
        for (size_t c : rows_[r].support()) {
            out.rows_[c].set(r, true);
        }
    }
    return out;
}

bool BitMatrix::is_identity() const { return *this == identity(size()); }

bool BitMatrix::is_symmetric() const { return *this == transposed(); }

std::string BitMatrix::str() const {
    std::string s;
    for (const auto &row : rows_) {
        s += row.str();
        s += '\n';
    }
    return s;
}

BitMatrix transvect_left(BitMatrix m, size_t i, size_t j) {
    m.transvect_left(i, j);
    return m;
}

BitMatrix transvect_right(BitMatrix m, size_t i, size_t j) {
    m.transvect_right(i, j);
    return m;
}

BitMatrix invert(const BitMatrix &a) {
    size_t n = a.size();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t pivot = c;
        while (pivot < n && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot == n) {
            throw SingularMatrixError("invert: matrix is singular (no pivot in column " + std::to_string(c) + ")");
        }
        if (pivot != c) {
            work.swap_rows(pivot, c);
            inv.swap_rows(pivot, c);
        }
        for (size_t r = 0; r < n; r++) {
            if (r != c && work.get(r, c)) {
                work.row(r) ^= work.row(c);
                inv.row(r) ^= inv.row(c);
            }
        }
    }
    return inv;
}

BitMatrix transpose_inverse(const BitMatrix &a) { return invert(a).transposed(); }

size_t rank(BitMatrix a) {
    size_t n = a.size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; c++) {
        size_t pivot = r;
        while (pivot < n && !a.get(pivot, c)) {
            pivot++;
        }
        if (pivot == n) {
            continue;
        }
        a.swap_rows(pivot, r);
        for (size_t k = 0; k < n; k++) {
            if (k != r && a.get(k, c)) {
                a.row(k) ^= a.row(r);
            }
        }
        r++;
    }
    return r;
}

TransvectionWord TransvectionWord::parse(std::string_view text) {
    TransvectionWord word;
    size_t pos = 0;
    auto read_index = [&](size_t &p, bool comma_mode) -> uint32_t {
        if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) {
            throw std::invalid_argument("TransvectionWord::parse: expected digit");
        }
        if (!comma_mode) {
            return static_cast<uint32_t>(text[p++] - '0');
        }
        uint32_t v = 0;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            v = v * 10 + static_cast<uint32_t>(text[p++] - '0');
        }
        return v;
    };
    while (pos < text.size()) {
        char open = text[pos];
        if (std::isspace(static_cast<unsigned char>(open))) {
            pos++;
            continue;
        }
        char close;
        GlLetter::Kind kind;
        if (open == '[') {
            close = ']';
            kind = GlLetter::Kind::Transvection;
        } else if (open == '(') {
            close = ')';
            kind = GlLetter::Kind::Transposition;
        } else {
            throw std::invalid_argument("TransvectionWord::parse: unexpected character");
        }
        size_t end = text.find(close, pos);
        if (end == std::string_view::npos) {
            throw std::invalid_argument("TransvectionWord::parse: unterminated letter");
        }
        bool comma_mode = text.substr(pos, end - pos).find(',') != std::string_view::npos;
        size_t p = pos + 1;
        uint32_t i = read_index(p, comma_mode);
        if (comma_mode) {
            if (p >= end || text[p] != ',') {
                throw std::invalid_argument("TransvectionWord::parse: expected ','");
            }
            p++;
        }
        uint32_t j = read_index(p, comma_mode);
        if (p != end) {
            throw std::invalid_argument("TransvectionWord::parse: malformed letter");
        }
        if (i == j) {
            throw std::invalid_argument("TransvectionWord::parse: letter indices must differ");
        }
        word.letters.push_back({kind, i, j});
        pos = end + 1;
    }
    return word;
}

void TransvectionWord::append(const TransvectionWord &other) {
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
}

TransvectionWord TransvectionWord::transpose_inverse() const {
    TransvectionWord out;
    for (const auto &g : letters) {
        out.letters.push_back(g.is_transposition() ? g : GlLetter::transvection(g.j, g.i));
    }
    return out;
}

TransvectionWord TransvectionWord::inverse() const {
    TransvectionWord out;
    out.letters.assign(letters.rbegin(), letters.rend());
    return out;
}

void TransvectionWord::check_indices(size_t n) const {
    for (const auto &g : letters) {
        check_pair(g.i, g.j, n, "TransvectionWord");
    }
}

std::string TransvectionWord::str() const {
    std::ostringstream out;
    for (const auto &g : letters) {
        bool wide = g.i > 9 || g.j > 9;
        out << (g.is_transposition() ? '(' : '[') << g.i;
        if (wide) {
            out << ',';
        }
        out << g.j << (g.is_transposition() ? ')' : ']');
    }
    return out.str();
}

BitMatrix word_to_matrix(const TransvectionWord &word, size_t n) {
    word.check_indices(n);
    BitMatrix m = BitMatrix::identity(n);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (it->is_transposition()) {
            m.swap_rows(it->i, it->j);
        } else {
            m.transvect_left(it->i, it->j);
        }
    }
    return m;
}

TransvectionWord synthesize_word(const BitMatrix &a) {
    size_t n = a.size();
    BitMatrix work = a;
    TransvectionWord word;
    // Row operations R_k ... R_1 A = I give A = R_1 ... R_k since each T_ij is an involution.
    for (size_t c = 0; c < n; c++) {
        if (!work.get(c, c)) {
            size_t pivot = c + 1;
            while (pivot < n && !work.get(pivot, c)) {
                pivot++;
            }
            if (pivot == n) {
                throw SingularMatrixError("synthesize_word: matrix is singular");
            }
            work.transvect_left(c, pivot);
            word.append(GlLetter::transvection(static_cast<uint32_t>(c), static_cast<uint32_t>(pivot)));
        }
        for (size_t r = 0; r < n; r++) {
            if (r != c && work.get(r, c)) {
                work.transvect_left(r, c);
                word.append(GlLetter::transvection(static_cast<uint32_t>(r), static_cast<uint32_t>(c)));
            }
        }
    }
    return word;
}

}  // namespace stabnf
