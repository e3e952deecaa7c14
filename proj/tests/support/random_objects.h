#pragma once

#include <random>

#include "stabnf/circuit.h"
#include "stabnf/czxp.h"
#include "stabnf/gf2.h"
#include "stabnf/normal_form.h"

namespace stabnf::testing {

using Rng = std::mt19937_64;

enum class GateSet {
    Generators,  ///< H, P, CX
    Sugar,       ///< every mnemonic of the text format
    Czxp,        ///< P, CZ, CX
};

Gate random_gate(Rng &rng, size_t n, GateSet set);
/// Two-qubit kinds are skipped when n = 1.
Circuit random_circuit(Rng &rng, size_t n, size_t length, GateSet set);

BitVector random_vector(Rng &rng, size_t n);
PairMatrix random_pairs(Rng &rng, size_t n);
BitMatrix random_matrix(Rng &rng, size_t n);
BitMatrix random_invertible(Rng &rng, size_t n);
TransvectionWord random_word(Rng &rng, size_t n, size_t length);
PauliOp random_pauli(Rng &rng, size_t n);
/// The form of a random generator circuit, so every field is reachable.
NormalForm random_form(Rng &rng, size_t n, size_t length);

/// Every matrix of GL(n,2), n <= 4, by enumeration of all square bit patterns.
std::vector<BitMatrix> all_invertible(size_t n);
std::vector<BitVector> all_vectors(size_t n);
std::vector<PairMatrix> all_pair_sets(size_t n);

}  // namespace stabnf::testing
