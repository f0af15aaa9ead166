#include "toric/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

VarSet::VarSet(std::vector<int> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 0; i + 1 < indices_.size(); ++i) {
        if (indices_[i] >= indices_[i + 1]) {
            throw std::invalid_argument("VarSet indices must be strictly increasing");
        }
    }
}

VarSet VarSet::full_ring(int n) {
    if (n < 0) throw std::invalid_argument("full_ring: n must be >= 0");
    std::vector<int> idx;
    idx.push_back(0);
    for (int i = 2; i <= 2 * n + 4; ++i) idx.push_back(i);
    return VarSet(std::move(idx));
}

VarSet VarSet::hat_ring(int n) {
    if (n < 0) throw std::invalid_argument("hat_ring: n must be >= 0");
    std::vector<int> idx;
    for (int i = 3; i <= 2 * n + 3; i += 2) idx.push_back(i);
    return VarSet(std::move(idx));
}

std::size_t VarSet::slot_of(int index) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
    if (it == indices_.end() || *it != index) {
        throw std::invalid_argument("variable x" + std::to_string(index) + " not in VarSet");
    }
    return static_cast<std::size_t>(it - indices_.begin());
}

bool VarSet::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::string VarSet::name_at(std::size_t slot) const {
    return "x" + std::to_string(indices_.at(slot));
}

Monomial Monomial::var(std::size_t nvars, std::size_t slot, int e) {
    Monomial m = one(nvars);
    m.exps.at(slot) = e;
    return m;
}

int Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e <= 1; });
}

Monomial Monomial::times(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("monomial size mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("monomial size mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < o.exps[i]) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!divisible_by(o)) throw std::invalid_argument("monomial division is not exact");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
    return r;
}

Monomial Monomial::lcm_with(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("monomial size mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::max(r.exps[i], o.exps[i]);
    return r;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) {
        throw std::invalid_argument("degrevlex_compare: monomials over different VarSets");
    }
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    return 0;
}

Polynomial::Polynomial(VarSet vars, std::vector<Term> terms) : vars_(std::move(vars)) {
    for (const Term& t : terms) {
        if (t.m.exps.size() != vars_.size()) {
            throw std::invalid_argument("term exponent width does not match VarSet");
        }
    }
    normalize(std::move(terms));
}

Polynomial Polynomial::monomial(const VarSet& vars, Monomial m, Rational c) {
    return Polynomial(vars, {Term{std::move(m), std::move(c)}});
}

void Polynomial::normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return degrevlex_compare(x.m, y.m) > 0;
    });
    terms_.clear();
    for (Term& t : terms) {
        if (t.c.numerator() == 0) continue;
        if (!terms_.empty() && terms_.back().m == t.m) {
            terms_.back().c += t.c;
            if (terms_.back().c.numerator() == 0) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different VarSets");
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw std::logic_error("lead term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.front().m.degree();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_vars(o);
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(vars_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(Rational(-1));
}

Polynomial Polynomial::operator-() const {
    return scaled(Rational(-1));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c.numerator() == 0) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(vars_);
    if (c.numerator() == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        r.terms_.push_back(Term{t.m.times(m), t.c * c});
    }
    // multiplying by a fixed monomial preserves the term order
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / lead_coeff());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    }
    return true;
}

namespace {

std::string render_monomial(const VarSet& vars, const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t s = 0; s < m.exps.size(); ++s) {
        if (m.exps[s] == 0) continue;
        if (!first) os << "*";
        os << vars.name_at(s);
        if (m.exps[s] > 1) os << "^" << m.exps[s];
        first = false;
    }
    return os.str();
}

std::string render_coeff(const Rational& c) {
    std::ostringstream os;
    os << c.numerator();
    if (c.denominator() != 1) os << "/" << c.denominator();
    return os.str();
}

}  // namespace

std::string Polynomial::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        Rational c = terms_[i].c;
        bool negative = c.numerator() < 0;
        if (i == 0) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        std::string mono = render_monomial(vars_, terms_[i].m);
        if (mono == "1") {
            os << render_coeff(c);
        } else {
            if (c.numerator() != 1 || c.denominator() != 1) os << render_coeff(c) << "*";
            os << mono;
        }
    }
    return os.str();
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    for (const Polynomial& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("reduce: zero divisor polynomial");
        if (d.vars() != f.vars()) throw std::invalid_argument("reduce: VarSet mismatch");
    }
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lt = p.lead();
        bool divided = false;
        for (const Polynomial& d : divisors) {
            if (lt.m.divisible_by(d.lead_monomial())) {
                p = p - d.times_term(lt.m.divided_by(d.lead_monomial()), lt.c / d.lead_coeff());
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder.push_back(lt);
            p = p - Polynomial::monomial(f.vars(), lt.m, lt.c);
        }
    }
    return Polynomial(f.vars(), std::move(remainder));
}

}  // namespace toric
