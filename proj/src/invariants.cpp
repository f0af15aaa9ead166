#include "toric/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

// Degreewise dimensions of the quotient by the given zero-dimensional
// monomial ideal, enumerated until they vanish.
std::vector<long long> quotient_dimensions(const MonomialIdeal& M) {
    std::vector<long long> dims;
    for (int d = 0;; ++d) {
        long long c = static_cast<long long>(standard_monomials(M, d).size());
        if (c == 0) break;
        dims.push_back(c);
        if (d > 2 * static_cast<int>(M.numvars()) + 2) {
            throw std::runtime_error("quotient_dimensions: ideal is not zero-dimensional");
        }
    }
    return dims;
}

HilbertNumerator certified_numerator(int n, const TypeVector& t) {
    std::vector<Polynomial> basis = generator_polys(VarSet::full_ring(n), standard_generators(n, t));
    if (!is_groebner(basis).ok) {
        throw std::runtime_error("certified_numerator: generators are not a Groebner basis");
    }
    return hilbert_numerator(initial_ideal(basis));
}

HilbertNumerator certified_hat_polynomial(int n, const TypeVector& t) {
    HatGeneratorSet h = hat_reduce(n, t);
    if (!hat_is_groebner(h).ok) {
        throw std::runtime_error("certified_hat_polynomial: reduced generators are not a Groebner basis");
    }
    std::vector<long long> dims = quotient_dimensions(initial_ideal(h.gens));
    return HilbertNumerator(dims.begin(), dims.end());
}

}  // namespace

bool regular_sequence_certificate(int n, const TypeVector& t) {
    HilbertNumerator lhs = certified_numerator(n, t);
    HilbertNumerator rhs = poly_mul(certified_hat_polynomial(n, t), one_minus_t_power(n + 1));
    return lhs == rhs;
}

CombGraph comb_graph(int n) {
    if (n < 0) throw std::invalid_argument("comb_graph: n must be >= 0");
    CombGraph g;
    g.n = n;
    for (int i = 0; i <= n; ++i) g.spine.push_back(2 * i + 3);
    g.tines.push_back(2);
    for (int i = 1; i <= n; ++i) g.tines.push_back(2 * i + 2);
    g.edges.push_back({2, 3});
    for (int i = 1; i <= n; ++i) {
        g.edges.push_back({2 * i + 1, 2 * i + 3});
        g.edges.push_back({2 * i + 2, 2 * i + 3});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

bool adjacent(const CombGraph& g, int u, int v) {
    std::array<int, 2> e{std::min(u, v), std::max(u, v)};
    return std::binary_search(g.edges.begin(), g.edges.end(), e);
}

bool compatible(const CombGraph& g, const std::array<int, 2>& e, const std::array<int, 2>& f) {
    for (int u : e) {
        for (int v : f) {
            if (u == v || adjacent(g, u, v)) return false;
        }
    }
    return true;
}

void search_matching(const CombGraph& g, std::size_t from, std::vector<std::array<int, 2>>& cur,
                     MatchingResult& best) {
    if (static_cast<int>(cur.size()) > best.size) {
        best.size = static_cast<int>(cur.size());
        best.witness = cur;
    }
    if (static_cast<int>(cur.size() + (g.edges.size() - from)) <= best.size) return;
    for (std::size_t k = from; k < g.edges.size(); ++k) {
        bool ok = true;
        for (const auto& e : cur) {
            if (!compatible(g, e, g.edges[k])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            cur.push_back(g.edges[k]);
            search_matching(g, k + 1, cur, best);
            cur.pop_back();
        }
    }
}

}  // namespace

bool is_induced_matching(const CombGraph& g, const std::vector<std::array<int, 2>>& edges) {
    for (const auto& e : edges) {
        std::array<int, 2> s{std::min(e[0], e[1]), std::max(e[0], e[1])};
        if (!std::binary_search(g.edges.begin(), g.edges.end(), s)) return false;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!compatible(g, edges[i], edges[j])) return false;
        }
    }
    return true;
}

MatchingResult max_induced_matching(const CombGraph& g) {
    MatchingResult best;
    std::vector<std::array<int, 2>> cur;
    search_matching(g, 0, cur, best);
    return best;
}

std::pair<int, int> reg_bounds(int n, const TypeVector& t) {
    BipartiteGraph g = build_graph(build_ladder(n, t));
    if (!is_chordal_bipartite(g)) throw std::runtime_error("reg_bounds: graph is not chordal bipartite");
    if (g.min_degree() < 2) throw std::runtime_error("reg_bounds: graph has a vertex of degree < 2");
    int lower = max_induced_matching(comb_graph(n)).size + 1;
    int upper = std::min(g.num_rows, g.num_cols);
    return {lower, upper};
}

InvariantReport full_report(int n, const TypeVector& t) {
    InvariantReport r;
    r.n = n;
    r.t = t;

    std::vector<Polynomial> basis = generator_polys(VarSet::full_ring(n), standard_generators(n, t));
    GroebnerCheck gb = is_groebner(basis);
    bool quadratic = std::all_of(basis.begin(), basis.end(),
                                 [](const Polynomial& p) { return p.degree() == 2; });
    r.koszul = gb.ok && quadratic;
    if (!gb.ok) throw std::runtime_error("full_report: generators are not a Groebner basis");

    MonomialIdeal lead = initial_ideal(basis);
    r.dim = krull_dimension(lead);
    r.fibonacci_index = n + 3;

    HilbertNumerator numerator = hilbert_numerator(lead);
    HilbertNumerator hat = certified_hat_polynomial(n, t);
    r.cm_certified = numerator == poly_mul(hat, one_minus_t_power(n + 1));
    if (r.cm_certified) {
        // depth equals dim, so projective dimension is the codimension
        r.pdim = static_cast<int>(lead.numvars()) - r.dim;
        r.multiplicity = poly_eval_at_one(divide_by_one_minus_t(numerator, n + 1));
    }

    r.reg_ring = static_cast<int>(hat.size()) - 1;  // top socle degree of the reduction
    auto [lo, hi] = reg_bounds(n, t);
    if (lo != hi) throw std::runtime_error("full_report: regularity bounds do not meet");
    r.reg_ideal = lo;
    if (r.reg_ideal != r.reg_ring + 1) {
        throw std::runtime_error("full_report: regularity routes disagree");
    }
    r.induced_matching_witness = max_induced_matching(comb_graph(n)).witness;
    return r;
}

nlohmann::ordered_json report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["t"] = r.t.to_string();
    j["dim"] = r.dim;
    if (r.cm_certified) {
        j["pdim"] = r.pdim;
    } else {
        j["pdim"] = nullptr;
    }
    j["reg_ring"] = r.reg_ring;
    j["reg_ideal"] = r.reg_ideal;
    if (r.cm_certified) {
        j["multiplicity"] = r.multiplicity;
    } else {
        j["multiplicity"] = nullptr;
    }
    j["fibonacci_index"] = r.fibonacci_index;
    j["koszul"] = r.koszul;
    j["cm_certified"] = r.cm_certified;
    auto wit = nlohmann::ordered_json::array();
    for (const auto& e : r.induced_matching_witness) wit.push_back({e[0], e[1]});
    j["witnesses"] = nlohmann::ordered_json{{"induced_matching", std::move(wit)}};
    return j;
}

}  // namespace toric
