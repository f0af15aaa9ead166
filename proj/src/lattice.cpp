#include "toric/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

PosetState::PosetState(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.size() > 26) throw std::invalid_argument("PosetState: more than 26 elements");
    above_.assign(elems_.size(), 0);
    below_.assign(elems_.size(), 0);
    inc_.assign(elems_.size(), 0);
    must_.assign(elems_.size(), 0);
}

std::size_t PosetState::slot_of(int element) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), element);
    if (it == elems_.end() || *it != element) {
        throw std::invalid_argument("PosetState: unknown element x" + std::to_string(element));
    }
    return static_cast<std::size_t>(it - elems_.begin());
}

bool PosetState::fail(const std::string& why) {
    failed_ = true;
    reason_ = why;
    return false;
}

bool PosetState::add_less(int a, int b) {
    if (failed_) return false;
    if (a == b) return fail("antisymmetry");
    if (less(a, b)) return true;
    // relate everything at or below a with everything at or above b
    std::uint32_t lows = below_[a] | (1u << a);
    std::uint32_t highs = above_[b] | (1u << b);
    for (int x = 0; x < static_cast<int>(elems_.size()); ++x) {
        if (!((lows >> x) & 1u)) continue;
        for (int y = 0; y < static_cast<int>(elems_.size()); ++y) {
            if (!((highs >> y) & 1u)) continue;
            if (x == y || less(y, x)) return fail("antisymmetry");
            if ((inc_[x] >> y) & 1u) return fail("incomparable pair became comparable");
            above_[x] |= 1u << y;
            below_[y] |= 1u << x;
        }
    }
    return true;
}

bool PosetState::declare_incomparable(int a, int b) {
    if (failed_) return false;
    if (a == b) throw std::invalid_argument("declare_incomparable: identical elements");
    if (comparable(a, b)) return fail("incomparable pair became comparable");
    if ((must_[a] >> b) & 1u) return fail("required pair declared incomparable");
    inc_[a] |= 1u << b;
    inc_[b] |= 1u << a;
    return true;
}

void PosetState::require_comparable(int a, int b) {
    must_[a] |= 1u << b;
    must_[b] |= 1u << a;
}

bool PosetState::orient(const QuadBinomial& g, int f, int join_high) {
    if (failed_) return false;
    const auto& incpair = (f == 0) ? g.pos : g.neg;
    const auto& cmppair = (f == 0) ? g.neg : g.pos;
    int p = static_cast<int>(slot_of(incpair[0]));
    int q = static_cast<int>(slot_of(incpair[1]));
    int join = static_cast<int>(slot_of(cmppair[join_high ? 1 : 0]));
    int meet = static_cast<int>(slot_of(cmppair[join_high ? 0 : 1]));
    if (join == p || join == q || meet == p || meet == q) {
        return fail("join or meet inside its incomparable pair");
    }
    if (!declare_incomparable(p, q)) return false;
    if (!add_less(meet, p) || !add_less(meet, q) || !add_less(p, join) || !add_less(q, join)) {
        return false;
    }
    records_.push_back({p, q, join, meet});
    return sweep();
}

bool PosetState::sweep() {
    if (failed_) return false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const JoinRecord& r : records_) {
            std::uint32_t ub = above_[r.p] & above_[r.q] & ~(1u << r.join);
            std::uint32_t lb = below_[r.p] & below_[r.q] & ~(1u << r.meet);
            for (int u = 0; u < static_cast<int>(elems_.size()); ++u) {
                if ((ub >> u) & 1u) {
                    if (!less(r.join, u)) {
                        if (!add_less(r.join, u)) return false;
                        changed = true;
                    }
                }
                if ((lb >> u) & 1u) {
                    if (!less(u, r.meet)) {
                        if (!add_less(u, r.meet)) return false;
                        changed = true;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<std::pair<int, int>> PosetState::unresolved_required_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < static_cast<int>(elems_.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(elems_.size()); ++b) {
            if (((must_[a] >> b) & 1u) && !comparable(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

nlohmann::ordered_json PosetState::to_json() const {
    nlohmann::ordered_json j;
    auto elems = nlohmann::ordered_json::array();
    for (int e : elems_) elems.push_back(e);
    j["elements"] = std::move(elems);
    auto rel = nlohmann::ordered_json::array();
    for (int a = 0; a < static_cast<int>(elems_.size()); ++a) {
        for (int b = 0; b < static_cast<int>(elems_.size()); ++b) {
            if (less(a, b)) rel.push_back({elems_[a], elems_[b]});
        }
    }
    j["less"] = std::move(rel);
    auto inc = nlohmann::ordered_json::array();
    for (int a = 0; a < static_cast<int>(elems_.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(elems_.size()); ++b) {
            if ((inc_[a] >> b) & 1u) inc.push_back({elems_[a], elems_[b]});
        }
    }
    j["incomparable"] = std::move(inc);
    j["unresolved_required"] = unresolved_required_pairs().size();
    return j;
}

namespace {

struct SearchContext {
    const std::vector<QuadBinomial>* gens = nullptr;
    RefutationResult* result = nullptr;
    std::size_t trace_limit = 0;
    std::string prefix;
    OrientationAssignment assignment;

    void record_contradiction(const std::string& reason) {
        result->contradictions++;
        result->reason_counts[reason]++;
        if (result->trace.size() < trace_limit) {
            result->trace.push_back({prefix, reason});
        }
    }
};

// Settles the required-comparable pairs: commits directions forced by a
// one-step trial, splits when neither direction is forced. Returns a fully
// resolved state or nullopt when every completion is contradictory.
std::optional<PosetState> resolve_required(PosetState state, SearchContext& ctx) {
    for (;;) {
        auto pairs = state.unresolved_required_pairs();
        if (pairs.empty()) return state;

        bool committed = false;
        for (const auto& [a, b] : pairs) {
            PosetState fwd = state;
            bool fwd_ok = fwd.add_less(a, b) && fwd.sweep();
            PosetState bwd = state;
            bool bwd_ok = bwd.add_less(b, a) && bwd.sweep();
            if (!fwd_ok && !bwd_ok) {
                ctx.record_contradiction("required pair unorderable");
                return std::nullopt;
            }
            if (fwd_ok != bwd_ok) {
                state = fwd_ok ? std::move(fwd) : std::move(bwd);
                committed = true;
                break;
            }
        }
        if (committed) continue;

        // no forced direction anywhere: split on the first pair
        auto [a, b] = pairs.front();
        ctx.result->pair_split_nodes++;
        PosetState fwd = state;
        if (fwd.add_less(a, b) && fwd.sweep()) {
            if (auto r = resolve_required(std::move(fwd), ctx)) return r;
        }
        PosetState bwd = std::move(state);
        if (bwd.add_less(b, a) && bwd.sweep()) {
            return resolve_required(std::move(bwd), ctx);
        }
        ctx.record_contradiction("required pair unorderable");
        return std::nullopt;
    }
}

bool orientation_dfs(const PosetState& state, std::size_t k, SearchContext& ctx) {
    if (k == ctx.gens->size()) {
        auto survivor = resolve_required(state, ctx);
        if (!survivor) return false;
        ctx.result->survivor_assignment = ctx.assignment;
        ctx.result->survivor_state = survivor->to_json();
        return true;
    }
    for (int f = 0; f <= 1; ++f) {
        for (int jb = 0; jb <= 1; ++jb) {
            ctx.result->orientation_nodes++;
            ctx.prefix.push_back(static_cast<char>('0' + 2 * f + jb));
            ctx.assignment.f_bits.push_back(f);
            ctx.assignment.join_bits.push_back(jb);
            PosetState next = state;
            bool ok = next.orient((*ctx.gens)[k], f, jb);
            if (ok) {
                if (orientation_dfs(next, k + 1, ctx)) return true;
            } else {
                ctx.record_contradiction(next.failure_reason());
            }
            ctx.prefix.pop_back();
            ctx.assignment.f_bits.pop_back();
            ctx.assignment.join_bits.pop_back();
        }
    }
    return false;
}

std::vector<int> variables_of(const std::vector<QuadBinomial>& gens) {
    std::vector<int> vars;
    for (const auto& g : gens) {
        vars.insert(vars.end(), {g.pos[0], g.pos[1], g.neg[0], g.neg[1]});
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::set<std::pair<int, int>> mentioned_pairs(const std::vector<QuadBinomial>& gens) {
    std::set<std::pair<int, int>> out;
    for (const auto& g : gens) {
        out.insert({g.pos[0], g.pos[1]});
        out.insert({g.neg[0], g.neg[1]});
    }
    return out;
}

}  // namespace

nlohmann::ordered_json RefutationResult::to_json() const {
    nlohmann::ordered_json j;
    j["refuted"] = refuted;
    j["orientation_nodes"] = orientation_nodes;
    j["pair_split_nodes"] = pair_split_nodes;
    j["contradictions"] = contradictions;
    auto reasons = nlohmann::ordered_json::object();
    for (const auto& [k, v] : reason_counts) reasons[k] = v;
    j["contradiction_reasons"] = std::move(reasons);
    if (refuted) {
        auto tr = nlohmann::ordered_json::array();
        for (const auto& e : trace) tr.push_back({{"branch", e.prefix}, {"reason", e.reason}});
        j["trace"] = std::move(tr);
    } else if (survivor_assignment) {
        nlohmann::ordered_json sa;
        sa["f_bits"] = survivor_assignment->f_bits;
        sa["join_bits"] = survivor_assignment->join_bits;
        j["survivor_assignment"] = std::move(sa);
        j["survivor_state"] = *survivor_state;
    }
    return j;
}

RefutationResult refute_lattice_realizability(const std::vector<QuadBinomial>& gens,
                                              std::size_t trace_limit) {
    if (gens.empty()) throw std::invalid_argument("refute_lattice_realizability: no generators");
    std::vector<int> vars = variables_of(gens);
    PosetState base(vars);
    auto mentioned = mentioned_pairs(gens);
    for (std::size_t a = 0; a < vars.size(); ++a) {
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
            if (!mentioned.count({vars[a], vars[b]})) {
                base.require_comparable(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }

    RefutationResult result;
    SearchContext ctx;
    ctx.gens = &gens;
    ctx.result = &result;
    ctx.trace_limit = trace_limit;
    result.refuted = !orientation_dfs(base, 0, ctx);
    return result;
}

std::vector<std::vector<int>> admissible_f_vectors(
    const std::vector<QuadBinomial>& gens,
    const std::vector<std::array<int, 2>>& forced_comparable) {
    if (gens.empty()) throw std::invalid_argument("admissible_f_vectors: no generators");
    std::vector<int> vars = variables_of(gens);
    for (const auto& p : forced_comparable) {
        vars.push_back(p[0]);
        vars.push_back(p[1]);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    PosetState base(vars);
    for (const auto& p : forced_comparable) {
        base.require_comparable(static_cast<int>(base.slot_of(p[0])),
                                static_cast<int>(base.slot_of(p[1])));
    }

    const std::size_t m = gens.size();
    std::vector<std::vector<int>> admissible;
    for (std::uint64_t fmask = 0; fmask < (std::uint64_t(1) << m); ++fmask) {
        std::vector<int> f(m);
        for (std::size_t i = 0; i < m; ++i) f[i] = static_cast<int>((fmask >> (m - 1 - i)) & 1);

        RefutationResult scratch;
        SearchContext ctx;
        ctx.result = &scratch;
        ctx.trace_limit = 0;

        // depth-first over join bits with the F pattern pinned
        std::vector<std::pair<PosetState, std::size_t>> stack;
        stack.emplace_back(base, 0);
        bool found = false;
        while (!stack.empty() && !found) {
            auto [state, k] = std::move(stack.back());
            stack.pop_back();
            if (k == m) {
                found = resolve_required(std::move(state), ctx).has_value();
                continue;
            }
            for (int jb = 1; jb >= 0; --jb) {  // stack order; jb = 0 explored first
                PosetState next = state;
                if (next.orient(gens[k], f[k], jb)) stack.emplace_back(std::move(next), k + 1);
            }
        }
        if (found) admissible.push_back(std::move(f));
    }
    return admissible;
}

LatticeTables lattice_tables(const FinitePoset& p) {
    LatticeTables t;
    t.join.assign(p.size, std::vector<int>(p.size, -1));
    t.meet.assign(p.size, std::vector<int>(p.size, -1));
    std::vector<std::uint32_t> up(p.size), down(p.size);
    for (int v = 0; v < p.size; ++v) {
        up[v] = p.above[v] | (1u << v);
        down[v] = 1u << v;
    }
    for (int a = 0; a < p.size; ++a) {
        for (int b = 0; b < p.size; ++b) {
            if (p.less(a, b)) down[b] |= 1u << a;
        }
    }
    for (int a = 0; a < p.size; ++a) {
        for (int b = a; b < p.size; ++b) {
            std::uint32_t ub = up[a] & up[b];
            std::uint32_t lb = down[a] & down[b];
            int join = -1, meet = -1;
            for (int u = 0; u < p.size; ++u) {
                if (((ub >> u) & 1u) && (ub & ~up[u]) == 0) join = u;
                if (((lb >> u) & 1u) && (lb & ~down[u]) == 0) meet = u;
            }
            if (join < 0 || meet < 0) return t;  // is_lattice stays false
            t.join[a][b] = t.join[b][a] = join;
            t.meet[a][b] = t.meet[b][a] = meet;
        }
    }
    t.is_lattice = true;
    return t;
}

bool is_lattice(const FinitePoset& p) {
    return lattice_tables(p).is_lattice;
}

bool is_distributive(const FinitePoset& p) {
    LatticeTables t = lattice_tables(p);
    if (!t.is_lattice) throw std::invalid_argument("is_distributive: poset is not a lattice");
    for (int a = 0; a < p.size; ++a) {
        for (int b = 0; b < p.size; ++b) {
            for (int c = 0; c < p.size; ++c) {
                if (t.meet[a][t.join[b][c]] != t.join[t.meet[a][b]][t.meet[a][c]]) return false;
            }
        }
    }
    return true;
}

NaturalLadderLattice natural_ladder_order(const LadderGrid& grid) {
    NaturalLadderLattice L;
    L.vars = grid.variables();
    L.poset.size = static_cast<int>(L.vars.size());
    L.poset.above.assign(L.vars.size(), 0);
    for (std::size_t i = 0; i < L.vars.size(); ++i) {
        auto pi = grid.position_of(L.vars[i]);
        for (std::size_t j = 0; j < L.vars.size(); ++j) {
            if (i == j) continue;
            auto pj = grid.position_of(L.vars[j]);
            // j sits weakly up-left of i, so it is the greater element
            if (pj->first <= pi->first && pj->second <= pi->second) {
                L.poset.above[i] |= 1u << j;
            }
        }
    }
    return L;
}

std::vector<QuadBinomial> join_meet_standard_generators(const NaturalLadderLattice& L) {
    LatticeTables t = lattice_tables(L.poset);
    if (!t.is_lattice) {
        throw std::invalid_argument("join_meet_standard_generators: order is not a lattice");
    }
    std::vector<QuadBinomial> out;
    for (int a = 0; a < L.poset.size; ++a) {
        for (int b = a + 1; b < L.poset.size; ++b) {
            if (L.poset.less(a, b) || L.poset.less(b, a)) continue;
            out.emplace_back(std::array{L.vars[a], L.vars[b]},
                             std::array{L.vars[t.join[a][b]], L.vars[t.meet[a][b]]});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadBinomial& x, const QuadBinomial& y) {
        if (x.neg[1] != y.neg[1]) return x.neg[1] < y.neg[1];
        return x.pos[0] < y.pos[0];
    });
    return out;
}

}  // namespace toric
