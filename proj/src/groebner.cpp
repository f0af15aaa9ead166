#include "toric/groebner.hpp"

#include <algorithm>
#include <set>

namespace toric {

Polynomial binomial_poly(const VarSet& vars, const QuadBinomial& b) {
    auto mono = [&vars](const std::array<int, 2>& m) {
        Monomial r = Monomial::one(vars.size());
        r.exps[vars.slot_of(m[0])] += 1;
        r.exps[vars.slot_of(m[1])] += 1;
        return r;
    };
    return Polynomial(vars, {Term{mono(b.pos), Rational(1)}, Term{mono(b.neg), Rational(-1)}});
}

std::vector<Polynomial> generator_polys(const VarSet& vars, const GeneratorSet& gs) {
    std::vector<Polynomial> out;
    out.reserve(gs.gens.size());
    for (const auto& g : gs.gens) out.push_back(binomial_poly(vars, g));
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    if (f.vars() != g.vars()) throw std::invalid_argument("s_polynomial: VarSet mismatch");
    Monomial l = f.lead_monomial().lcm_with(g.lead_monomial());
    Polynomial a = f.times_term(l.divided_by(f.lead_monomial()), Rational(1) / f.lead_coeff());
    Polynomial b = g.times_term(l.divided_by(g.lead_monomial()), Rational(1) / g.lead_coeff());
    return a - b;
}

GroebnerCheck is_groebner(const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw std::invalid_argument("is_groebner: empty basis");
    for (const Polynomial& p : basis) {
        if (p.is_zero()) throw std::invalid_argument("is_groebner: zero basis element");
    }
    GroebnerCheck res;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial r = reduce(s_polynomial(basis[i], basis[j]), basis);
            if (!r.is_zero()) {
                res.ok = false;
                res.i = static_cast<int>(i);
                res.j = static_cast<int>(j);
                res.remainder = std::move(r);
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

namespace {

bool coprime_leads(const Polynomial& f, const Polynomial& g) {
    const auto& a = f.lead_monomial().exps;
    const auto& b = g.lead_monomial().exps;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > 0 && b[k] > 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty input");
    for (const Polynomial& p : gens) {
        if (p.is_zero()) throw std::invalid_argument("buchberger: zero input element");
    }
    // (lcm degree, i, j), smallest first
    std::set<std::tuple<int, int, int>> queue;
    auto push_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            int deg = gens[i].lead_monomial().lcm_with(gens[upto].lead_monomial()).degree();
            queue.insert({deg, i, upto});
        }
    };
    for (std::size_t j = 1; j < gens.size(); ++j) push_pairs(static_cast<int>(j));

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        if (coprime_leads(gens[i], gens[j])) continue;
        Polynomial r = reduce(s_polynomial(gens[i], gens[j]), gens);
        if (r.is_zero()) continue;
        gens.push_back(r.monic());
        push_pairs(static_cast<int>(gens.size()) - 1);
    }
    return gens;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return degrevlex_compare(a, b) < 0;
    });
    std::vector<Monomial> kept;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (m.divisible_by(k)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(VarSet vars, std::vector<Monomial> gens) : vars_(std::move(vars)) {
    for (const Monomial& m : gens) {
        if (m.exps.size() != vars_.size()) {
            throw std::invalid_argument("MonomialIdeal: exponent width mismatch");
        }
        if (m.is_one()) throw std::invalid_argument("MonomialIdeal: unit generator");
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_) {
        if (m.divisible_by(g)) return true;
    }
    return false;
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw std::invalid_argument("initial_ideal: empty basis");
    std::vector<Monomial> leads;
    leads.reserve(basis.size());
    for (const Polynomial& p : basis) leads.push_back(p.lead_monomial());
    return MonomialIdeal(basis.front().vars(), std::move(leads));
}

MonomialIdeal ladder_initial_ideal(int n) {
    VarSet vars = VarSet::full_ring(n);
    auto quad = [&vars](int a, int b) {
        Monomial m = Monomial::one(vars.size());
        m.exps[vars.slot_of(a)] += 1;
        m.exps[vars.slot_of(b)] += 1;
        return m;
    };
    std::vector<Monomial> gens;
    gens.push_back(quad(2, 3));
    for (int i = 1; i <= n; ++i) {
        gens.push_back(quad(2 * i + 1, 2 * i + 3));
        gens.push_back(quad(2 * i + 2, 2 * i + 3));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

namespace {

void enumerate_standard(const MonomialIdeal& M, std::size_t slot, int remaining, Monomial& cur,
                        std::vector<Monomial>& out) {
    if (M.contains(cur)) return;
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (slot == cur.exps.size()) return;
    for (int e = remaining; e >= 0; --e) {
        cur.exps[slot] = e;
        enumerate_standard(M, slot + 1, remaining - e, cur, out);
    }
    cur.exps[slot] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& M, int degree) {
    if (degree < 0) throw std::invalid_argument("standard_monomials: negative degree");
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(M.numvars());
    enumerate_standard(M, 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return degrevlex_compare(a, b) > 0;
    });
    return out;
}

namespace {

HilbertNumerator poly_add(const HilbertNumerator& a, const HilbertNumerator& b) {
    HilbertNumerator r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

HilbertNumerator poly_shift(HilbertNumerator a, int k) {
    if (a.empty()) return a;
    a.insert(a.begin(), static_cast<std::size_t>(k), 0);
    return a;
}

HilbertNumerator numerator_rec(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};

    const std::size_t nslots = gens.front().exps.size();
    std::vector<int> freq(nslots, 0);
    for (const Monomial& g : gens) {
        for (std::size_t s = 0; s < nslots; ++s) {
            if (g.exps[s] > 0) freq[s]++;
        }
    }
    std::size_t pivot = 0;
    for (std::size_t s = 0; s < nslots; ++s) {
        if (freq[s] > freq[pivot]) pivot = s;
    }
    if (freq[pivot] <= 1) {
        // pairwise coprime: the numerator factors completely
        HilbertNumerator r{1};
        for (const Monomial& g : gens) {
            HilbertNumerator f(static_cast<std::size_t>(g.degree()) + 1, 0);
            f[0] = 1;
            f[static_cast<std::size_t>(g.degree())] = -1;
            r = poly_mul(r, f);
        }
        return r;
    }

    std::vector<Monomial> sum;  // gens + (x_pivot)
    for (const Monomial& g : gens) {
        if (g.exps[pivot] == 0) sum.push_back(g);
    }
    sum.push_back(Monomial::var(nslots, pivot));
    std::vector<Monomial> colon;  // gens : x_pivot
    for (const Monomial& g : gens) {
        Monomial h = g;
        if (h.exps[pivot] > 0) h.exps[pivot]--;
        colon.push_back(std::move(h));
    }
    return poly_add(numerator_rec(std::move(sum)), poly_shift(numerator_rec(std::move(colon)), 1));
}

}  // namespace

HilbertNumerator poly_mul(const HilbertNumerator& a, const HilbertNumerator& b) {
    if (a.empty() || b.empty()) return {};
    HilbertNumerator r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

HilbertNumerator one_minus_t_power(int k) {
    HilbertNumerator r{1};
    for (int i = 0; i < k; ++i) r = poly_mul(r, HilbertNumerator{1, -1});
    return r;
}

long long poly_eval_at_one(const HilbertNumerator& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
}

HilbertNumerator divide_by_one_minus_t(HilbertNumerator p, int k) {
    for (int step = 0; step < k; ++step) {
        if (p.empty()) continue;
        // p = (1-t) q means q is the running prefix sum of p, with total 0
        HilbertNumerator q(p.size(), 0);
        long long acc = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc += p[i];
            q[i] = acc;
        }
        if (q.back() != 0) throw std::domain_error("not divisible by (1-t)");
        q.pop_back();
        p = std::move(q);
    }
    return p;
}

long long series_coefficient(const HilbertNumerator& p, int numvars, int d) {
    auto binom = [](long long m, long long k) {
        if (k < 0 || k > m) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
        return r;
    };
    long long total = 0;
    for (std::size_t k = 0; k < p.size() && static_cast<int>(k) <= d; ++k) {
        total += p[k] * binom(numvars + (d - static_cast<int>(k)) - 1, d - static_cast<int>(k));
    }
    return total;
}

HilbertNumerator hilbert_numerator(const MonomialIdeal& M) {
    return numerator_rec(M.gens());
}

int krull_dimension(const MonomialIdeal& M) {
    if (M.numvars() > 24) throw std::invalid_argument("krull_dimension: more than 24 variables");
    std::vector<unsigned> masks;
    unsigned support = 0;
    for (const Monomial& g : M.gens()) {
        if (!g.is_squarefree()) throw std::invalid_argument("krull_dimension: ideal not squarefree");
        unsigned m = 0;
        for (std::size_t s = 0; s < g.exps.size(); ++s) {
            if (g.exps[s] > 0) m |= 1u << s;
        }
        masks.push_back(m);
        support |= m;
    }
    std::vector<int> vars;
    for (std::size_t s = 0; s < M.numvars(); ++s) {
        if (support & (1u << s)) vars.push_back(static_cast<int>(s));
    }
    const int u = static_cast<int>(vars.size());

    auto covers = [&masks](unsigned subset) {
        for (unsigned m : masks) {
            if ((m & subset) == 0) return false;
        }
        return true;
    };
    for (int k = 0; k <= u; ++k) {
        // subsets of the support of size k, in index order
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            unsigned subset = 0;
            for (int i : idx) subset |= 1u << vars[i];
            if (covers(subset)) return static_cast<int>(M.numvars()) - k;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == u - k + pos) --pos;
            if (pos < 0) break;
            idx[pos]++;
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    throw std::logic_error("krull_dimension: no cover found");
}

}  // namespace toric
