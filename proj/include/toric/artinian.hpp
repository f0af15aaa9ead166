#pragma once

#include "toric/family.hpp"
#include "toric/groebner.hpp"
#include "toric/poly.hpp"

namespace toric {

// Image of the generators in k[x_3, x_5, ..., x_{2n+3}] under the linear
// quotient x_0 -> 0, x_{2n+4} -> 0, x_{2i} -> x_{2i+1}. J[k-1] records which
// variable survives in the trailing monomial of the image of s_k (0 when the
// monomial was killed by x_0 or x_{2n+4}).
struct HatGeneratorSet {
    int n = 0;
    TypeVector t;
    VarSet vars;
    std::vector<Polynomial> gens;  // gens[k-1] = image of s_k
    std::vector<int> J;
};

HatGeneratorSet hat_reduce(int n, const TypeVector& t);

// The J values computed from the j-sequence alone: j_k = 0 stays 0,
// even j_k becomes j_k + 1, odd j_k is kept. Must agree with hat_reduce.
std::vector<int> hat_j_values(int n, const TypeVector& t);

GroebnerCheck hat_is_groebner(const HatGeneratorSet& h);

// (x_3^2, x_{2i+1}x_{2i+3}, x_{2i+3}^2 : 1 <= i <= n)
MonomialIdeal hat_initial_ideal(int n);

// Monomial basis of the reduced ring in degree d: squarefree products of d
// odd labels from {3, 5, ..., 2n+3} with consecutive choices at least 4 apart.
std::vector<Monomial> standard_basis(int n, int d);

// Number of such products:
//   1 for d = 0, 0 for d > n/2 + 1, else (1/d!) prod_{j=1..d} (n + j - 2(d-1)).
long long closed_form_dim(int n, int d);

// Degreewise dimensions d_{n, 0..floor(n/2)+1}, computed by basis
// enumeration and cross-checked against the recursion
// d_{n,i} = d_{n-1,i} + d_{n-2,i-1} and against closed_form_dim.
// A disagreement throws std::runtime_error.
struct HilbertVector {
    std::vector<long long> d;
    long long sum() const;
    int top_degree() const { return static_cast<int>(d.size()) - 1; }
    bool operator==(const HilbertVector& o) const { return d == o.d; }
};

HilbertVector hilbert_vector(int n);

// Total vector space dimension of the reduced ring; equals fibonacci(n+3).
long long length(int n);

// F(0) = 0, F(1) = 1. Iterative; k up to 90.
long long fibonacci(int k);

// Table of d_{n,i} for n = 0..max_n, one row per n, one column per i.
std::string hilbert_table_csv(int max_n);

}  // namespace toric
