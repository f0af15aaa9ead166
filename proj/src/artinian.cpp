#include "toric/artinian.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

HatGeneratorSet hat_reduce(int n, const TypeVector& t) {
    GeneratorSet gs = standard_generators(n, t);
    HatGeneratorSet h;
    h.n = n;
    h.t = t;
    h.vars = VarSet::hat_ring(n);

    // x_0 and x_{2n+4} vanish, x_{2i} folds onto x_{2i+1}
    auto image = [&](int label) -> int {
        if (label == 0 || label == 2 * n + 4) return -1;
        return (label % 2 == 0) ? label + 1 : label;
    };
    auto mono_image = [&](const std::array<int, 2>& mono) -> Monomial {
        Monomial m = Monomial::one(h.vars.size());
        for (int label : mono) {
            int im = image(label);
            if (im < 0) return Monomial{{}};  // killed; marked by empty exps
            m.exps[h.vars.slot_of(im)] += 1;
        }
        return m;
    };

    for (const QuadBinomial& s : gs.gens) {
        Monomial p = mono_image(s.pos);
        Monomial q = mono_image(s.neg);
        std::vector<Term> terms;
        if (!p.exps.empty()) terms.push_back(Term{p, Rational(1)});
        if (!q.exps.empty()) terms.push_back(Term{q, Rational(-1)});
        h.gens.emplace_back(h.vars, std::move(terms));
        // the positive image is x_{2i+1}x_{2i+3} or x_{2i+3}^2, never killed;
        // J is read off the trailing monomial: its smaller variable, or the
        // repeated one for a square (s_1 maps to x_3^2 - x_{J_1} x_5)
        if (q.exps.empty()) {
            h.J.push_back(0);
        } else {
            int a = image(s.neg[0]), b = image(s.neg[1]);
            h.J.push_back(std::min(a, b));
        }
    }
    return h;
}

std::vector<int> hat_j_values(int n, const TypeVector& t) {
    JSequence js = j_sequence(n, t);
    std::vector<int> J(js.size());
    for (int k = 1; k <= static_cast<int>(js.size()); ++k) {
        if (k >= 2 * n) {
            J[k - 1] = 0;  // trailing monomial carries x_{2n+4}
        } else {
            int jk = js.at(k);
            if (jk == 0) {
                J[k - 1] = 0;
            } else {
                J[k - 1] = (jk % 2 == 0) ? jk + 1 : jk;
            }
        }
    }
    return J;
}

GroebnerCheck hat_is_groebner(const HatGeneratorSet& h) {
    return is_groebner(h.gens);
}

MonomialIdeal hat_initial_ideal(int n) {
    VarSet vars = VarSet::hat_ring(n);
    auto mono = [&vars](int a, int b) {
        Monomial m = Monomial::one(vars.size());
        m.exps[vars.slot_of(a)] += 1;
        m.exps[vars.slot_of(b)] += 1;
        return m;
    };
    std::vector<Monomial> gens;
    gens.push_back(mono(3, 3));
    for (int i = 1; i <= n; ++i) {
        gens.push_back(mono(2 * i + 1, 2 * i + 3));
        gens.push_back(mono(2 * i + 3, 2 * i + 3));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

namespace {

void gap_combinations(int n, int d, int next, std::vector<int>& picked,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(picked.size()) == d) {
        out.push_back(picked);
        return;
    }
    for (int label = next; label <= 2 * n + 3; label += 2) {
        picked.push_back(label);
        gap_combinations(n, d, label + 4, picked, out);
        picked.pop_back();
    }
}

}  // namespace

std::vector<Monomial> standard_basis(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("standard_basis: negative argument");
    std::vector<std::vector<int>> combos;
    std::vector<int> picked;
    gap_combinations(n, d, 3, picked, combos);
    VarSet vars = VarSet::hat_ring(n);
    std::vector<Monomial> out;
    out.reserve(combos.size());
    for (const auto& combo : combos) {
        Monomial m = Monomial::one(vars.size());
        for (int label : combo) m.exps[vars.slot_of(label)] = 1;
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return degrevlex_compare(a, b) > 0;
    });
    return out;
}

long long closed_form_dim(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("closed_form_dim: negative argument");
    if (d == 0) return 1;
    if (2 * d > n + 2) return 0;
    long long num = 1;
    for (int j = 1; j <= d; ++j) num *= n + j - 2 * (d - 1);
    long long fact = 1;
    for (int j = 2; j <= d; ++j) fact *= j;
    if (num % fact != 0) throw std::logic_error("closed_form_dim: product not divisible by d!");
    return num / fact;
}

long long HilbertVector::sum() const {
    long long s = 0;
    for (long long x : d) s += x;
    return s;
}

HilbertVector hilbert_vector(int n) {
    if (n < 0) throw std::invalid_argument("hilbert_vector: n must be >= 0");
    const int top = n / 2 + 1;

    HilbertVector by_basis;
    for (int i = 0; i <= top; ++i) {
        by_basis.d.push_back(static_cast<long long>(standard_basis(n, i).size()));
    }

    // rows n = 0 and 1 seed the recursion d_{m,i} = d_{m-1,i} + d_{m-2,i-1}
    std::vector<std::vector<long long>> rows;
    rows.push_back({1, 1});
    rows.push_back({1, 2});
    for (int m = 2; m <= n; ++m) {
        std::vector<long long> row(static_cast<std::size_t>(m / 2 + 2), 0);
        for (int i = 0; i < static_cast<int>(row.size()); ++i) {
            long long a = i < static_cast<int>(rows[m - 1].size()) ? rows[m - 1][i] : 0;
            long long b = (i >= 1 && i - 1 < static_cast<int>(rows[m - 2].size())) ? rows[m - 2][i - 1] : 0;
            row[i] = a + b;
        }
        rows.push_back(std::move(row));
    }
    const std::vector<long long>& by_recursion = rows[n];

    for (int i = 0; i <= top; ++i) {
        long long closed = closed_form_dim(n, i);
        if (by_basis.d[i] != closed || by_basis.d[i] != by_recursion[i]) {
            std::ostringstream os;
            os << "hilbert_vector cross-check failed at n=" << n << ", i=" << i << ": basis "
               << by_basis.d[i] << ", recursion " << by_recursion[i] << ", closed form " << closed;
            throw std::runtime_error(os.str());
        }
    }
    if (by_basis.d[top] == 0) {
        throw std::runtime_error("hilbert_vector: top degree entry vanished");
    }
    return by_basis;
}

long long length(int n) {
    return hilbert_vector(n).sum();
}

long long fibonacci(int k) {
    if (k < 0 || k > 90) throw std::invalid_argument("fibonacci: k out of range");
    long long a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return a;
}

std::string hilbert_table_csv(int max_n) {
    const int max_i = max_n / 2 + 1;
    std::ostringstream os;
    os << "n";
    for (int i = 0; i <= max_i; ++i) os << ",d" << i;
    os << "\n";
    for (int n = 0; n <= max_n; ++n) {
        HilbertVector hv = hilbert_vector(n);
        os << n;
        for (int i = 0; i <= max_i; ++i) {
            os << ",";
            if (i < static_cast<int>(hv.d.size())) os << hv.d[i];
            else os << 0;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace toric
