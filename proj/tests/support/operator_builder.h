#pragma once

#include <functional>
#include <vector>

#include "stabnf/exact_sim.h"

namespace stabnf::testing {

/// Builds an exact operator from factors written left to right as in a product
/// formula; evaluation applies the rightmost factor first.
class Op {
   public:
    explicit Op(size_t n) : n_(n) {}

    Op &gate(Gate g);
    Op &h(size_t q) { return gate(Gate::h(q)); }
    Op &p(size_t q) { return gate(Gate::p(q)); }
    Op &pdg(size_t q) { return gate(Gate::pdg(q)); }
    Op &x(size_t q) { return gate(Gate::x(q)); }
    Op &y(size_t q) { return gate(Gate::y(q)); }
    Op &z(size_t q) { return gate(Gate::z(q)); }
    /// X_[ij]: target i, control j.
    Op &cx(size_t i, size_t j) { return gate(Gate::cnot(i, j)); }
    Op &cz(size_t i, size_t j) { return gate(Gate::cz(i, j)); }
    Op &swap(size_t i, size_t j) { return gate(Gate::swap(i, j)); }
    /// h, the Hadamard on every qubit.
    Op &h_all();
    /// P_i^h = h P_i h and its inverse.
    Op &p_h(size_t i) { return h(i).p(i).h(i); }
    Op &p_h_inv(size_t i) { return h(i).pdg(i).h(i); }
    /// Z_ij^h = h Z_ij h.
    Op &cz_h(size_t i, size_t j) { return h(i).h(j).cz(i, j).h(i).h(j); }
    Op &phase(int k);

    Op &z_vec(const BitVector &a);
    Op &p_vec(const BitVector &b);
    Op &p_vec_inv(const BitVector &b);
    Op &h_vec(const BitVector &w);
    Op &zb(const PairMatrix &b);
    Op &xa(const BitMatrix &a);
    Op &pauli(const PauliOp &p);
    Op &czp(const CzpElement &e);
    Op &czxp(const CzxpElement &e);

    DenseUnitary eval() const;
    size_t size() const { return n_; }

   private:
    size_t n_;
    std::vector<std::function<void(DenseUnitary &)>> factors_;
};

}  // namespace stabnf::testing
