#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "stabnf/circuit.h"
#include "stabnf/cyclo8.h"
#include "stabnf/cz_reduce.h"
#include "stabnf/normal_form.h"

namespace stabnf {

/// Raised when an exact simulation would exceed the configured qubit limit.
struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr size_t kDefaultOracleQubits = 8;

/// 2^n x 2^n matrix over Z[zeta, 1/sqrt2], row-major. Basis index x has qubit 0 as its
/// most significant bit, so |x_0 x_1 ... x_{n-1}> reads left to right like a ket.
class DenseUnitary {
   public:
    DenseUnitary() = default;
    explicit DenseUnitary(size_t n);

    static DenseUnitary identity(size_t n);

    size_t num_qubits() const { return n_; }
    size_t dim() const { return dim_; }
    const Cyclo8 &at(size_t r, size_t c) const { return entries_[r * dim_ + c]; }
    Cyclo8 &at(size_t r, size_t c) { return entries_[r * dim_ + c]; }

    /// Bit of basis index x that holds qubit q.
    size_t qubit_mask(size_t q) const { return size_t{1} << (n_ - 1 - q); }

    /// U <- G U for one gate, by row operations.
    void apply(const Gate &g);
    void apply_h(size_t q);
    /// U <- zeta^k U.
    void apply_phase(PhaseZ8 phase);
    /// U <- X_A U, where X_A |x> = |A x>.
    void apply_xa(const BitMatrix &a);
    /// U <- Z_B U, diagonal (-1)^{q_B(x)}.
    void apply_zb(const PairMatrix &b);
    /// U <- P_b U, diagonal i^{|b AND x|}.
    void apply_pb(const BitVector &b);
    /// U <- e^{i k pi/4} X_u Z_v U.
    void apply_pauli(const PauliOp &p);

    DenseUnitary operator*(const DenseUnitary &other) const;
    DenseUnitary adjoint() const;
    bool is_identity() const;

    bool operator==(const DenseUnitary &) const = default;

   private:
    BitVector index_bits(size_t x) const;
    size_t bits_index(const BitVector &v) const;
    void permute_rows(const std::vector<size_t> &target);

    size_t n_ = 0;
    size_t dim_ = 0;
    std::vector<Cyclo8> entries_;
};

/// Throws ResourceGuardError if n > max_qubits.
void check_oracle_size(size_t n, size_t max_qubits);

DenseUnitary gate_matrix(const Gate &g, size_t n);
/// Exact unitary of a circuit, sugar gates and global phase included.
DenseUnitary circuit_unitary(const Circuit &c, size_t max_qubits = kDefaultOracleQubits);
/// Product of the layer matrices, each built from its definition.
DenseUnitary unitary_of(const NormalForm &nf, size_t max_qubits = kDefaultOracleQubits);
DenseUnitary unitary_of(const CzReducedForm &f, size_t max_qubits = kDefaultOracleQubits);

bool is_unitary(const DenseUnitary &u);

struct Verdict {
    bool equal = false;
    /// k with U2 = zeta^k U1, when such a k exists.
    std::optional<int> phase_k;
};

/// Exact comparison. With include_phase the matrices must be identical; without it a
/// factor zeta^k is allowed. phase_k is reported in both modes.
Verdict assert_equal(const DenseUnitary &u1, const DenseUnitary &u2, bool include_phase = true);

}  // namespace stabnf
