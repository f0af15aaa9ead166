#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/poly.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace toric;

namespace {

Monomial mono(std::initializer_list<int> exps) { return Monomial{std::vector<int>(exps)}; }

// Matrix-order formulation of degrevlex: weight row (1,...,1), then rows
// -e_k, -e_{k-1}, ..., compared lexicographically. Independent of the
// scan-from-the-back implementation.
int oracle_compare(const Monomial& a, const Monomial& b) {
    const std::size_t k = a.exps.size();
    std::vector<long long> wa, wb;
    long long da = 0, db = 0;
    for (std::size_t i = 0; i < k; ++i) da += a.exps[i];
    for (std::size_t i = 0; i < k; ++i) db += b.exps[i];
    wa.push_back(da);
    wb.push_back(db);
    for (std::size_t i = k; i-- > 0;) {
        wa.push_back(-a.exps[i]);
        wb.push_back(-b.exps[i]);
    }
    if (wa < wb) return -1;
    if (wa > wb) return 1;
    return 0;
}

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    Monomial m = Monomial::one(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.exps[i] = d(rng);
    return m;
}

}  // namespace

TEST_CASE("VarSet slots follow the external label order") {
    VarSet full = VarSet::full_ring(2);  // x0 x2 x3 x4 x5 x6 x7 x8
    CHECK(full.size() == 8);
    CHECK(full.index_at(0) == 0);
    CHECK(full.index_at(1) == 2);
    CHECK(full.index_at(7) == 8);
    CHECK(full.slot_of(0) == 0);
    CHECK(full.slot_of(5) == 4);
    CHECK(full.contains(4));
    CHECK(!full.contains(1));
    CHECK(full.name_at(1) == "x2");
    CHECK_THROWS_AS(full.slot_of(1), std::invalid_argument);

    VarSet hat = VarSet::hat_ring(2);  // x3 x5 x7
    CHECK(hat.size() == 3);
    CHECK(hat.index_at(0) == 3);
    CHECK(hat.index_at(2) == 7);

    CHECK_THROWS_AS(VarSet({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(VarSet({5, 3}), std::invalid_argument);
}

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({2, 0, 1});
    Monomial b = mono({1, 1, 0});
    CHECK(a.degree() == 3);
    CHECK(a.times(b) == mono({3, 1, 1}));
    CHECK(a.lcm_with(b) == mono({2, 1, 1}));
    CHECK(a.times(b).divisible_by(a));
    CHECK(!a.divisible_by(b));
    CHECK(a.times(b).divided_by(b) == a);
    CHECK_THROWS_AS(a.divided_by(b), std::invalid_argument);
    CHECK(mono({1, 1, 0}).is_squarefree());
    CHECK(!a.is_squarefree());
    CHECK(Monomial::one(3).is_one());
    CHECK(Monomial::var(3, 1) == mono({0, 1, 0}));
}

TEST_CASE("degrevlex on knowns") {
    // within degree 2 on three slots: x^2 > xy > y^2 > xz > yz > z^2
    std::vector<Monomial> expected = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                      mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        for (std::size_t j = 0; j < expected.size(); ++j) {
            int want = i == j ? 0 : (i < j ? 1 : -1);
            CHECK(degrevlex_compare(expected[i], expected[j]) == want);
        }
    }
    // degree dominates
    CHECK(degrevlex_compare(mono({0, 0, 3}), mono({2, 0, 0})) > 0);
    CHECK_THROWS_AS(degrevlex_compare(mono({1, 0}), mono({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("degrevlex agrees with the matrix-order oracle and is an order") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 4000; ++trial) {
        std::size_t nv = 1 + trial % 6;
        Monomial a = random_monomial(rng, nv, 4);
        Monomial b = random_monomial(rng, nv, 4);
        Monomial c = random_monomial(rng, nv, 4);
        CHECK(degrevlex_compare(a, b) == oracle_compare(a, b));
        // antisymmetry, transitivity, multiplicativity, 1 is minimal
        CHECK(degrevlex_compare(a, b) == -degrevlex_compare(b, a));
        if (degrevlex_compare(a, b) >= 0 && degrevlex_compare(b, c) >= 0) {
            CHECK(degrevlex_compare(a, c) >= 0);
        }
        CHECK(degrevlex_compare(a.times(c), b.times(c)) == degrevlex_compare(a, b));
        if (!a.is_one()) CHECK(degrevlex_compare(a, Monomial::one(nv)) > 0);
    }
}

TEST_CASE("polynomial normalization merges and strips") {
    VarSet v({0, 2, 3});
    Monomial xy = mono({1, 1, 0});
    Monomial z = mono({0, 0, 1});
    Polynomial p(v, {Term{xy, Rational(1)}, Term{z, Rational(2)}, Term{xy, Rational(-1)}});
    CHECK(p.terms().size() == 1);
    CHECK(p.lead_monomial() == z);
    CHECK(p.lead_coeff() == Rational(2));

    Polynomial q(v, {Term{xy, Rational(1)}, Term{xy, Rational(-1)}});
    CHECK(q.is_zero());
    CHECK(q.degree() == -1);
    CHECK(Polynomial::zero(v).is_zero());
}

TEST_CASE("polynomial arithmetic round-trips") {
    std::mt19937 rng(424242);
    VarSet v({0, 2, 3, 4});
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_poly = [&]() {
        std::vector<Term> ts;
        for (int i = 0; i < 5; ++i) {
            ts.push_back(Term{random_monomial(rng, 4, 3), Rational(coeff(rng))});
        }
        return Polynomial(v, std::move(ts));
    };
    for (int trial = 0; trial < 500; ++trial) {
        Polynomial f = random_poly(), g = random_poly(), h = random_poly();
        CHECK((f + g) - g == f);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f - f).is_zero());
        CHECK(f.scaled(Rational(3)).scaled(Rational(1, 3)) == f);
        CHECK(-(-f) == f);
        if (!f.is_zero()) {
            CHECK(f.monic().lead_coeff() == Rational(1));
            Monomial m = random_monomial(rng, 4, 2);
            Polynomial fm = f.times_term(m, Rational(2));
            CHECK(fm.lead_monomial() == f.lead_monomial().times(m));
            CHECK(fm.terms().size() == f.terms().size());
        }
    }
}

TEST_CASE("render") {
    VarSet v = VarSet::full_ring(0);  // x0 x2 x3 x4
    Monomial x2x3 = mono({0, 1, 1, 0});
    Monomial x0x4 = mono({1, 0, 0, 1});
    Polynomial s1(v, {Term{x2x3, Rational(1)}, Term{x0x4, Rational(-1)}});
    CHECK(s1.render() == "x2*x3 - x0*x4");
    CHECK((-s1).render() == "-x2*x3 + x0*x4");
    CHECK(Polynomial::zero(v).render() == "0");
    Polynomial c(v, {Term{Monomial::one(4), Rational(3, 2)}});
    CHECK(c.render() == "3/2");
    Polynomial sq(v, {Term{mono({0, 2, 0, 0}), Rational(-5)}});
    CHECK(sq.render() == "-5*x2^2");
}

TEST_CASE("reduce leaves nothing divisible and subtracts exactly") {
    VarSet v({3, 5});
    // f = x3^2 x5 + x3 x5, divisors x3^2 - x5 and x5^2:
    // x3^2 x5 -> x5^2 (killed) so remainder is x3 x5
    Polynomial d1(v, {Term{mono({2, 0}), Rational(1)}, Term{mono({0, 1}), Rational(-1)}});
    Polynomial d2(v, {Term{mono({0, 2}), Rational(1)}});
    Polynomial f(v, {Term{mono({2, 1}), Rational(1)}, Term{mono({1, 1}), Rational(1)}});
    Polynomial r = reduce(f, {d1, d2});
    CHECK(r == Polynomial(v, {Term{mono({1, 1}), Rational(1)}}));

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Term> ts;
        for (int i = 0; i < 4; ++i) {
            ts.push_back(Term{random_monomial(rng, 2, 4), Rational(coeff(rng))});
        }
        Polynomial g(v, std::move(ts));
        Polynomial rem = reduce(g, {d1, d2});
        for (const Term& t : rem.terms()) {
            CHECK(!t.m.divisible_by(d1.lead_monomial()));
            CHECK(!t.m.divisible_by(d2.lead_monomial()));
        }
        // g - rem reduces to zero, so rem is g's normal form
        Polynomial diff = reduce(g - rem, {d1, d2});
        CHECK(diff.is_zero());
    }
}
