#include "random_objects.h"

#include <stdexcept>

namespace stabnf::testing {

namespace {

uint32_t pick(Rng &rng, size_t n) { return static_cast<uint32_t>(std::uniform_int_distribution<size_t>(0, n - 1)(rng)); }

std::pair<uint32_t, uint32_t> pick_pair(Rng &rng, size_t n) {
    uint32_t i = pick(rng, n);
    uint32_t j = pick(rng, n - 1);
    if (j >= i) {
        j++;
    }
    return {i, j};
}

}  // namespace

Gate random_gate(Rng &rng, size_t n, GateSet set) {
    static constexpr GateKind generators[] = {GateKind::H, GateKind::P, GateKind::CX};
    static constexpr GateKind sugar[] = {GateKind::H, GateKind::P, GateKind::PDG, GateKind::X, GateKind::Y,
                                         GateKind::Z, GateKind::CX, GateKind::CZ, GateKind::SWAP};
    static constexpr GateKind czxp[] = {GateKind::P, GateKind::CZ, GateKind::CX};
    std::span<const GateKind> kinds = set == GateSet::Generators ? std::span<const GateKind>(generators)
                                      : set == GateSet::Sugar    ? std::span<const GateKind>(sugar)
                                                                 : std::span<const GateKind>(czxp);
    while (true) {
        GateKind kind = kinds[pick(rng, kinds.size())];
        if (is_two_qubit(kind)) {
            if (n < 2) {
                continue;
            }
            auto [i, j] = pick_pair(rng, n);
            return Gate{kind, i, j};
        }
        return Gate{kind, pick(rng, n)};
    }
}

Circuit random_circuit(Rng &rng, size_t n, size_t length, GateSet set) {
    Circuit c{n, {}, PhaseZ8()};
    for (size_t k = 0; k < length; k++) {
        c.gates.push_back(random_gate(rng, n, set));
    }
    return c;
}

BitVector random_vector(Rng &rng, size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, rng() & 1);
    }
    return v;
}

PairMatrix random_pairs(Rng &rng, size_t n) {
    PairMatrix b(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (rng() & 1) {
                b.toggle(i, j);
            }
        }
    }
    return b;
}

BitMatrix random_matrix(Rng &rng, size_t n) {
    BitMatrix m(n);
    for (size_t r = 0; r < n; r++) {
        m.row(r) = random_vector(rng, n);
    }
    return m;
}

BitMatrix random_invertible(Rng &rng, size_t n) {
    while (true) {
        BitMatrix m = random_matrix(rng, n);
        if (rank(m) == n) {
            return m;
        }
    }
}

TransvectionWord random_word(Rng &rng, size_t n, size_t length) {
    TransvectionWord w;
    for (size_t k = 0; k < length; k++) {
        auto [i, j] = pick_pair(rng, n);
        w.append(rng() % 4 == 0 ? GlLetter::transposition(i, j) : GlLetter::transvection(i, j));
    }
    return w;
}

PauliOp random_pauli(Rng &rng, size_t n) {
    return {PhaseZ8(static_cast<int>(rng() % 8)), random_vector(rng, n), random_vector(rng, n)};
}

NormalForm random_form(Rng &rng, size_t n, size_t length) {
    Circuit c = random_circuit(rng, n, length, GateSet::Generators);
    c.phase = PhaseZ8(static_cast<int>(rng() % 8));
    return normalize(c);
}

std::vector<BitVector> all_vectors(size_t n) {
    std::vector<BitVector> out;
    for (size_t x = 0; x < (size_t{1} << n); x++) {
        BitVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set(i, (x >> i) & 1);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<BitMatrix> all_invertible(size_t n) {
    if (n > 4) {
        throw std::invalid_argument("all_invertible: n <= 4");
    }
    std::vector<BitMatrix> out;
    auto rows = all_vectors(n);
    size_t count = rows.size();
    size_t total = 1;
    for (size_t r = 0; r < n; r++) {
        total *= count;
    }
    for (size_t code = 0; code < total; code++) {
        BitMatrix m(n);
        size_t c = code;
        for (size_t r = 0; r < n; r++) {
            m.row(r) = rows[c % count];
            c /= count;
        }
        if (rank(m) == n) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<PairMatrix> all_pair_sets(size_t n) {
    std::vector<std::pair<size_t, size_t>> slots;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            slots.emplace_back(i, j);
        }
    }
    std::vector<PairMatrix> out;
    for (size_t mask = 0; mask < (size_t{1} << slots.size()); mask++) {
        PairMatrix b(n);
        for (size_t s = 0; s < slots.size(); s++) {
            if ((mask >> s) & 1) {
                b.toggle(slots[s].first, slots[s].second);
            }
        }
        out.push_back(b);
    }
    return out;
}

}  // namespace stabnf::testing
