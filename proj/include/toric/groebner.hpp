#pragma once

#include "toric/family.hpp"
#include "toric/poly.hpp"

namespace toric {

Polynomial binomial_poly(const VarSet& vars, const QuadBinomial& b);
std::vector<Polynomial> generator_polys(const VarSet& vars, const GeneratorSet& gs);

// S(f, g) = (lcm / lt f) f - (lcm / lt g) g, lcm over the lead monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct GroebnerCheck {
    bool ok = false;
    // witness of the first failing pair (indices into the basis), with the
    // nonzero remainder of its S-polynomial; unset when ok
    int i = -1;
    int j = -1;
    Polynomial remainder;
};

// Certifies the basis by reducing every pairwise S-polynomial to zero.
// Pairs run in lexicographic index order; no pair is skipped.
GroebnerCheck is_groebner(const std::vector<Polynomial>& basis);

// Buchberger completion. Pair selection: minimal lcm degree, then smallest
// pair index. Pairs with coprime lead monomials are discarded. New elements
// are appended monic. Returns a Groebner basis extending gens.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens);

// Monomial ideal with a minimal generating set, kept in decreasing order.
class MonomialIdeal {
  public:
    MonomialIdeal(VarSet vars, std::vector<Monomial> gens);

    const VarSet& vars() const { return vars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t numvars() const { return vars_.size(); }
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const { return vars_ == o.vars_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  private:
    VarSet vars_;
    std::vector<Monomial> gens_;
};

// Lead monomials of a certified basis, minimalized.
MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis);

// The t-independent lead ideal of the ladder generators:
// (x_2x_3, x_{2i+1}x_{2i+3}, x_{2i+2}x_{2i+3} : 1 <= i <= n).
MonomialIdeal ladder_initial_ideal(int n);

// All degree-d monomials outside the ideal, in decreasing order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& M, int degree);

// Coefficients of the Hilbert series numerator of S/M over (1-t)^numvars,
// index k holding the coefficient of t^k. Pivot recursion on the variable
// occurring in the most generators (ties: largest precedence).
using HilbertNumerator = std::vector<long long>;
HilbertNumerator hilbert_numerator(const MonomialIdeal& M);

// Polynomial helpers on numerator coefficient vectors.
HilbertNumerator poly_mul(const HilbertNumerator& a, const HilbertNumerator& b);
HilbertNumerator one_minus_t_power(int k);
long long poly_eval_at_one(const HilbertNumerator& p);
// Exact division by (1-t)^k; throws std::domain_error when not divisible.
HilbertNumerator divide_by_one_minus_t(HilbertNumerator p, int k);
// Coefficient of t^d in p / (1-t)^numvars.
long long series_coefficient(const HilbertNumerator& p, int numvars, int d);

// numvars minus the size of a minimum vertex cover of the generator
// supports, found by subset enumeration in increasing cardinality.
// Requires a squarefree ideal and at most 24 variables.
int krull_dimension(const MonomialIdeal& M);

}  // namespace toric
