#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// Exact coefficients. Never compare a Rational against an integer: boost
// 1.74's mixed comparisons self-recurse under C++20 overload rewriting.
// Compare numerator()/denominator() or another Rational instead.
using Rational = boost::rational<long long>;

// Ordered variable universe. Variables are identified by their external
// index (the grid labels: 0, 2, 3, ..., skipping 1) and stored in
// decreasing order of precedence, so slot 0 holds the largest variable.
class VarSet {
  public:
    VarSet() = default;
    explicit VarSet(std::vector<int> indices);

    // x_0 > x_2 > x_3 > ... > x_{2n+4}
    static VarSet full_ring(int n);
    // x_3 > x_5 > ... > x_{2n+3}
    static VarSet hat_ring(int n);

    std::size_t size() const { return indices_.size(); }
    int index_at(std::size_t slot) const { return indices_.at(slot); }
    std::size_t slot_of(int index) const;
    bool contains(int index) const;
    std::string name_at(std::size_t slot) const;
    const std::vector<int>& indices() const { return indices_; }

    bool operator==(const VarSet& o) const { return indices_ == o.indices_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

  private:
    std::vector<int> indices_;
};

// Exponent vector over a VarSet, slot-aligned.
struct Monomial {
    std::vector<int> exps;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    static Monomial var(std::size_t nvars, std::size_t slot, int e = 1);

    int degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    Monomial times(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;
    Monomial lcm_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Degree first, ties broken by the reverse lexicographic rule: scanning
// from the least variable upward, the monomial with the smaller exponent
// at the first difference is the larger one. Returns -1, 0 or +1.
int degrevlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    Rational c;
};

// Polynomial with exact rational coefficients, terms kept in strictly
// decreasing monomial order.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}
    Polynomial(VarSet vars, std::vector<Term> terms);

    static Polynomial zero(const VarSet& vars) { return Polynomial(vars); }
    static Polynomial monomial(const VarSet& vars, Monomial m, Rational c = Rational(1));

    const VarSet& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().m; }
    const Rational& lead_coeff() const { return lead().c; }
    int degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string render() const;

  private:
    void normalize(std::vector<Term> terms);
    void check_same_vars(const Polynomial& o) const;

    VarSet vars_;
    std::vector<Term> terms_;
};

// Remainder of f on division by the divisors, tried in list order at every
// step. The remainder contains no monomial divisible by any divisor lead.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

}  // namespace toric
