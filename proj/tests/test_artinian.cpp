#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/artinian.hpp"

#include <random>
#include <sstream>

using namespace toric;

namespace {

Monomial mono(std::initializer_list<int> exps) { return Monomial{std::vector<int>(exps)}; }

// fast doubling: F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2
long long fib_doubling(int k) {
    if (k == 0) return 0;
    long long a = 0, b = 1;  // F(i), F(i+1) walking bits of k from the top
    for (int bit = 31 - __builtin_clz(static_cast<unsigned>(k)); bit >= 0; --bit) {
        long long c = a * (2 * b - a);
        long long d = a * a + b * b;
        a = c;
        b = d;
        if ((k >> bit) & 1) {
            long long t = a + b;
            a = b;
            b = t;
        }
    }
    return a;
}

}  // namespace

TEST_CASE("hat reduction goldens") {
    // n = 0: single generator s_1 = x2 x3 - x0 x4 maps to x3^2
    HatGeneratorSet h0 = hat_reduce(0, TypeVector::parse(0, "1"));
    CHECK(h0.vars == VarSet({3}));
    REQUIRE(h0.gens.size() == 1);
    CHECK(h0.gens[0] == Polynomial(h0.vars, {Term{mono({2}), Rational(1)}}));
    CHECK(h0.J == std::vector<int>{0});

    // n = 1: x3^2, x3 x5, x5^2 (both t values give the same images)
    for (const auto& tv : TypeVector::enumerate(1)) {
        HatGeneratorSet h1 = hat_reduce(1, tv);
        CHECK(h1.vars == VarSet({3, 5}));
        REQUIRE(h1.gens.size() == 3);
        CHECK(h1.gens[0] == Polynomial(h1.vars, {Term{mono({2, 0}), Rational(1)}}));
        CHECK(h1.gens[1] == Polynomial(h1.vars, {Term{mono({1, 1}), Rational(1)}}));
        CHECK(h1.gens[2] == Polynomial(h1.vars, {Term{mono({0, 2}), Rational(1)}}));
        CHECK(h1.J == std::vector<int>({0, 0, 0}));
    }

    // n = 2, t = (0,0,0): x3^2, x3 x5, x5^2 - x3 x7, x5 x7, x7^2
    HatGeneratorSet h2 = hat_reduce(2, TypeVector::parse(2, "000"));
    CHECK(h2.vars == VarSet({3, 5, 7}));
    REQUIRE(h2.gens.size() == 5);
    CHECK(h2.gens[0] == Polynomial(h2.vars, {Term{mono({2, 0, 0}), Rational(1)}}));
    CHECK(h2.gens[1] == Polynomial(h2.vars, {Term{mono({1, 1, 0}), Rational(1)}}));
    CHECK(h2.gens[2] == Polynomial(h2.vars, {Term{mono({0, 2, 0}), Rational(1)},
                                             Term{mono({1, 0, 1}), Rational(-1)}}));
    CHECK(h2.gens[3] == Polynomial(h2.vars, {Term{mono({0, 1, 1}), Rational(1)}}));
    CHECK(h2.gens[4] == Polynomial(h2.vars, {Term{mono({0, 0, 2}), Rational(1)}}));
    CHECK(h2.J == std::vector<int>({0, 0, 3, 0, 0}));
}

TEST_CASE("trailing variable rule reproduces the reduction") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& tv : TypeVector::enumerate(n)) {
            HatGeneratorSet h = hat_reduce(n, tv);
            CHECK(h.J == hat_j_values(n, tv));
            // J entry 0 exactly when the image is a single monomial
            for (std::size_t k = 0; k < h.gens.size(); ++k) {
                CHECK((h.J[k] == 0) == (h.gens[k].terms().size() == 1));
            }
        }
    }
}

TEST_CASE("hat bases certify with the closed-form initial ideal") {
    for (int n = 0; n <= 6; ++n) {
        MonomialIdeal closed = hat_initial_ideal(n);
        REQUIRE(closed.gens().size() == static_cast<std::size_t>(2 * n + 1));
        for (const auto& tv : TypeVector::enumerate(n)) {
            HatGeneratorSet h = hat_reduce(n, tv);
            CHECK(hat_is_groebner(h).ok);
            CHECK(initial_ideal(h.gens) == closed);
        }
    }
}

TEST_CASE("standard basis is the gap-4 squarefree family") {
    for (int n = 0; n <= 14; ++n) {
        for (int d = 0; d <= n / 2 + 2; ++d) {
            auto basis = standard_basis(n, d);
            CHECK(static_cast<long long>(basis.size()) == closed_form_dim(n, d));
            for (const Monomial& m : basis) {
                CHECK(m.is_squarefree());
                CHECK(m.degree() == d);
                // labels of chosen slots ascend by at least 4
                int prev = -100;
                for (std::size_t s = 0; s < m.exps.size(); ++s) {
                    if (m.exps[s] == 0) continue;
                    int label = 3 + 2 * static_cast<int>(s);
                    CHECK(label - prev >= 4);
                    prev = label;
                }
            }
        }
        CHECK(standard_basis(n, n / 2 + 2).empty());
    }
    // d = 0 is the empty product
    CHECK(standard_basis(3, 0).size() == 1);
    CHECK(closed_form_dim(0, 4) == 0);
}

TEST_CASE("hilbert vector goldens and fibonacci lengths") {
    CHECK(hilbert_vector(0) == HilbertVector{{1, 1}});
    CHECK(hilbert_vector(1) == HilbertVector{{1, 2}});
    CHECK(hilbert_vector(2) == HilbertVector{{1, 3, 1}});
    CHECK(hilbert_vector(5) == HilbertVector{{1, 6, 10, 4}});
    CHECK(hilbert_vector(8) == HilbertVector{{1, 9, 28, 35, 15, 1}});
    CHECK(length(0) == 2);
    CHECK(length(1) == 3);
    for (int n = 0; n <= 14; ++n) {
        HilbertVector hv = hilbert_vector(n);
        CHECK(hv.top_degree() == n / 2 + 1);
        CHECK(hv.sum() == fibonacci(n + 3));
        CHECK(length(n) == fibonacci(n + 3));
        // recursion d_{n,i} = d_{n-1,i} + d_{n-2,i-1}
        if (n >= 2) {
            HilbertVector a = hilbert_vector(n - 1), b = hilbert_vector(n - 2);
            for (int i = 0; i <= hv.top_degree(); ++i) {
                long long lhs = hv.d[i];
                long long r1 = i <= a.top_degree() ? a.d[i] : 0;
                long long r2 = (i >= 1 && i - 1 <= b.top_degree()) ? b.d[i - 1] : 0;
                CHECK(lhs == r1 + r2);
            }
        }
    }
}

TEST_CASE("hat quotient dimensions equal the combinatorial count") {
    // standard monomials of the initial ideal vs standard_basis, degree by degree
    for (int n = 0; n <= 8; ++n) {
        MonomialIdeal M = hat_initial_ideal(n);
        for (int d = 0; d <= n / 2 + 2; ++d) {
            CHECK(standard_monomials(M, d).size() == standard_basis(n, d).size());
        }
    }
}

TEST_CASE("fibonacci against fast doubling") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(17) == 1597);
    for (int k = 0; k <= 90; ++k) CHECK(fibonacci(k) == fib_doubling(k));
    CHECK_THROWS_AS(fibonacci(91), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);
}

TEST_CASE("csv table") {
    std::string csv = hilbert_table_csv(5);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,d0,d1,d2,d3");
    std::getline(in, line);
    CHECK(line == "0,1,1,0,0");
    std::getline(in, line);
    CHECK(line == "1,1,2,0,0");
    std::getline(in, line);
    CHECK(line == "2,1,3,1,0");
    std::getline(in, line);
    CHECK(line == "3,1,4,3,0");
    std::getline(in, line);
    CHECK(line == "4,1,5,6,1");
    std::getline(in, line);
    CHECK(line == "5,1,6,10,4");
    CHECK(!std::getline(in, line));
}
