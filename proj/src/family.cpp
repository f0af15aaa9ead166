#include "toric/family.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toric {

TypeVector::TypeVector(int n_, std::vector<int> bits_) : n(n_), bits(std::move(bits_)) {
    if (n < 0) throw std::invalid_argument("TypeVector: n must be >= 0");
    if (bits.size() != static_cast<std::size_t>(n + 1)) {
        throw std::invalid_argument("TypeVector: expected n+1 entries");
    }
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("TypeVector: entries must be 0 or 1");
    }
}

TypeVector TypeVector::parse(int n, const std::string& s) {
    std::vector<int> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("type vector must be a 0/1 string");
        bits.push_back(c - '0');
    }
    return TypeVector(n, std::move(bits));
}

TypeVector TypeVector::all_ones(int n) {
    return TypeVector(n, std::vector<int>(n + 1, 1));
}

std::vector<TypeVector> TypeVector::enumerate(int n) {
    std::vector<TypeVector> out;
    const int len = n + 1;
    out.reserve(std::size_t(1) << len);
    for (long long v = 0; v < (1LL << len); ++v) {
        std::vector<int> bits(len);
        for (int i = 0; i < len; ++i) bits[i] = int((v >> (len - 1 - i)) & 1);
        out.emplace_back(n, std::move(bits));
    }
    return out;
}

int TypeVector::t(int k) const {
    if (k < 1 || k > n + 1) throw std::out_of_range("TypeVector: t_k out of range");
    return bits[k - 1];
}

std::string TypeVector::to_string() const {
    std::string s;
    for (int b : bits) s.push_back(char('0' + b));
    return s;
}

int LadderGrid::var_at(int r, int c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols) return -1;
    return cell[r][c];
}

std::optional<std::pair<int, int>> LadderGrid::position_of(int var) const {
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (cell[r][c] == var) return std::make_pair(r, c);
        }
    }
    return std::nullopt;
}

std::vector<int> LadderGrid::variables() const {
    std::vector<int> vs;
    for (const auto& row : cell) {
        for (int v : row) {
            if (v >= 0) vs.push_back(v);
        }
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::string LadderGrid::render() const {
    std::size_t width = 1;
    for (const auto& row : cell) {
        for (int v : row) {
            if (v >= 0) width = std::max(width, std::to_string(v).size() + 1);
        }
    }
    std::ostringstream os;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            std::string s = cell[r][c] >= 0 ? "x" + std::to_string(cell[r][c]) : ".";
            os << s << std::string(width + 2 - s.size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Column positions of the occupied cells of one row, left to right.
std::vector<int> occupied_cols(const LadderGrid& g, int r) {
    std::vector<int> cs;
    for (int c = 0; c < g.cols; ++c) {
        if (g.cell[r][c] >= 0) cs.push_back(c);
    }
    return cs;
}

std::vector<int> occupied_rows(const LadderGrid& g, int c) {
    std::vector<int> rs;
    for (int r = 0; r < g.rows; ++r) {
        if (g.cell[r][c] >= 0) rs.push_back(r);
    }
    return rs;
}

}  // namespace

LadderGrid build_ladder(int n, const TypeVector& t) {
    if (n < 0) throw std::invalid_argument("build_ladder: n must be >= 0");
    if (t.n != n) throw std::invalid_argument("build_ladder: type vector length mismatch");

    LadderGrid g;
    g.n = n;
    g.t = t;
    g.rows = n / 2 + 2;
    g.cols = (n + 1) / 2 + 2;
    g.cell.assign(g.rows, std::vector<int>(g.cols, -1));

    // base 2x2 block
    g.cell[0][0] = 0;
    g.cell[0][1] = 2;
    g.cell[1][0] = 3;
    g.cell[1][1] = 4;
    if (n >= 1) {
        g.cell[0][2] = 5;
        g.cell[1][2] = 6;
    }

    for (int m = 2; m <= n; ++m) {
        // step m places x_{2m+3} and x_{2m+4}; t_{m+1} picks the anchor
        const int pick = t.t(m + 1);  // 0: first occupied, 1: second occupied
        if (m % 2 == 0) {
            const int r = m / 2 + 1;      // new row
            const int c = m / 2 + 1;      // ultimate column so far
            auto prev = occupied_cols(g, r - 1);
            g.cell[r][prev.at(pick)] = 2 * m + 3;
            g.cell[r][c] = 2 * m + 4;
        } else {
            const int c = (m + 1) / 2 + 1;  // new column
            const int r = (m - 1) / 2 + 1;  // ultimate row so far
            auto prev = occupied_rows(g, c - 1);
            g.cell[prev.at(pick)][c] = 2 * m + 3;
            g.cell[r][c] = 2 * m + 4;
        }
    }
    return g;
}

int JSequence::at(int k) const {
    if (k < 1 || k > static_cast<int>(j.size())) throw std::out_of_range("JSequence index");
    return j[k - 1];
}

JSequence j_sequence(int n, const TypeVector& t) {
    if (n < 0) throw std::invalid_argument("j_sequence: n must be >= 0");
    if (t.n != n) throw std::invalid_argument("j_sequence: type vector length mismatch");
    JSequence js;
    js.j.assign(2 * n + 1, 0);
    auto set = [&js](int k, int v) { js.j[k - 1] = v; };
    set(1, 0);
    if (n >= 1) {
        set(2, 0);
        set(3, 2);
    }
    for (int i = 2; i <= n; ++i) {
        if (t.t(i + 1) == 0) {
            set(2 * i, js.at(2 * i - 2));
            set(2 * i + 1, 2 * i - 1);
        } else {
            set(2 * i, js.at(2 * i - 1));
            set(2 * i + 1, 2 * i);
        }
    }
    return js;
}

QuadBinomial::QuadBinomial(std::array<int, 2> p, std::array<int, 2> ng) : pos(p), neg(ng) {
    if (pos[0] > pos[1]) std::swap(pos[0], pos[1]);
    if (neg[0] > neg[1]) std::swap(neg[0], neg[1]);
    if (pos[0] == pos[1] || neg[0] == neg[1]) {
        throw std::invalid_argument("QuadBinomial: monomials must use distinct variables");
    }
    if (pos == neg) throw std::invalid_argument("QuadBinomial: zero binomial");
}

bool QuadBinomial::same_up_to_sign(const QuadBinomial& o) const {
    return (pos == o.pos && neg == o.neg) || (pos == o.neg && neg == o.pos);
}

std::string QuadBinomial::render() const {
    std::ostringstream os;
    os << "x" << pos[0] << "*x" << pos[1] << " - x" << neg[0] << "*x" << neg[1];
    return os.str();
}

bool QuadBinomial::operator<(const QuadBinomial& o) const {
    if (pos != o.pos) return pos < o.pos;
    return neg < o.neg;
}

bool GeneratorSet::same_up_to_sign(const GeneratorSet& o) const {
    if (gens.size() != o.gens.size()) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].same_up_to_sign(o.gens[i])) return false;
    }
    return true;
}

GeneratorSet standard_generators(int n, const TypeVector& t) {
    JSequence js = j_sequence(n, t);
    GeneratorSet out;
    out.n = n;
    out.gens.reserve(2 * n + 1);
    out.gens.emplace_back(std::array{2, 3}, std::array{js.at(1), 4});
    for (int i = 1; i <= n; ++i) {
        out.gens.emplace_back(std::array{2 * i + 1, 2 * i + 3}, std::array{js.at(2 * i), 2 * i + 4});
        out.gens.emplace_back(std::array{2 * i + 2, 2 * i + 3}, std::array{js.at(2 * i + 1), 2 * i + 4});
    }
    return out;
}

GeneratorSet distinguished_minors(const LadderGrid& grid) {
    std::vector<QuadBinomial> found;
    for (int r1 = 0; r1 < grid.rows; ++r1) {
        for (int r2 = r1 + 1; r2 < grid.rows; ++r2) {
            for (int c1 = 0; c1 < grid.cols; ++c1) {
                for (int c2 = c1 + 1; c2 < grid.cols; ++c2) {
                    int a = grid.cell[r1][c1], b = grid.cell[r1][c2];
                    int c = grid.cell[r2][c1], d = grid.cell[r2][c2];
                    if (a < 0 || b < 0 || c < 0 || d < 0) continue;
                    found.emplace_back(std::array{b, c}, std::array{a, d});
                }
            }
        }
    }
    // labels grow down and right, so the negative pair brackets the positive
    // one; ordering by (largest label, smallest positive label) recovers the
    // s_1, s_2, ... sequence
    std::sort(found.begin(), found.end(), [](const QuadBinomial& x, const QuadBinomial& y) {
        if (x.neg[1] != y.neg[1]) return x.neg[1] < y.neg[1];
        return x.pos[0] < y.pos[0];
    });
    GeneratorSet out;
    out.n = grid.n;
    out.gens = std::move(found);
    return out;
}

std::optional<BipartiteGraph::Edge> BipartiteGraph::edge_for(int var) const {
    for (const Edge& e : edges) {
        if (e.var == var) return e;
    }
    return std::nullopt;
}

int BipartiteGraph::min_degree() const {
    std::vector<int> deg(num_rows + num_cols, 0);
    for (const Edge& e : edges) {
        deg[e.row]++;
        deg[num_rows + e.col]++;
    }
    int m = edges.empty() ? 0 : deg[0];
    for (int d : deg) m = std::min(m, d);
    return m;
}

BipartiteGraph build_graph(const LadderGrid& grid) {
    BipartiteGraph g;
    g.num_rows = grid.rows;
    g.num_cols = grid.cols;
    for (int v : grid.variables()) {
        auto pos = grid.position_of(v);
        g.edges.push_back({v, pos->first, pos->second});
    }
    return g;
}

bool is_chordal_bipartite(const BipartiteGraph& g) {
    const int nv = g.num_rows + g.num_cols;
    if (nv > 26) throw std::invalid_argument("is_chordal_bipartite: graph too large for subset scan");
    std::vector<unsigned> adj(nv, 0);
    for (const auto& e : g.edges) {
        adj[e.row] |= 1u << (g.num_rows + e.col);
        adj[g.num_rows + e.col] |= 1u << e.row;
    }
    // an induced cycle is exactly a connected 2-regular induced subgraph;
    // bipartiteness rules out length < 6 once at least 5 vertices are used
    for (unsigned s = 0; s < (1u << nv); ++s) {
        if (__builtin_popcount(s) < 5) continue;
        bool regular = true;
        for (int v = 0; v < nv && regular; ++v) {
            if (s & (1u << v)) regular = __builtin_popcount(adj[v] & s) == 2;
        }
        if (!regular) continue;
        unsigned seen = s & (~s + 1);  // lowest vertex
        for (;;) {
            unsigned grow = seen;
            for (int v = 0; v < nv; ++v) {
                if (seen & (1u << v)) grow |= adj[v] & s;
            }
            if (grow == seen) break;
            seen = grow;
        }
        if (seen == s) return false;
    }
    return true;
}

std::vector<FourCycle> four_cycles(const BipartiteGraph& g) {
    std::map<std::pair<int, int>, int> at;
    for (const auto& e : g.edges) at[{e.row, e.col}] = e.var;
    std::vector<FourCycle> out;
    for (int r1 = 0; r1 < g.num_rows; ++r1) {
        for (int r2 = r1 + 1; r2 < g.num_rows; ++r2) {
            for (int c1 = 0; c1 < g.num_cols; ++c1) {
                for (int c2 = c1 + 1; c2 < g.num_cols; ++c2) {
                    auto a = at.find({r1, c1}), b = at.find({r1, c2});
                    auto c = at.find({r2, c1}), d = at.find({r2, c2});
                    if (a == at.end() || b == at.end() || c == at.end() || d == at.end()) continue;
                    FourCycle fc;
                    fc.pair_a = {a->second, d->second};
                    fc.pair_b = {b->second, c->second};
                    if (fc.pair_a[0] > fc.pair_a[1]) std::swap(fc.pair_a[0], fc.pair_a[1]);
                    if (fc.pair_b[0] > fc.pair_b[1]) std::swap(fc.pair_b[0], fc.pair_b[1]);
                    if (fc.pair_b[0] < fc.pair_a[0]) std::swap(fc.pair_a, fc.pair_b);
                    out.push_back(fc);
                }
            }
        }
    }
    return out;
}

bool edge_map_vanishing(const QuadBinomial& b, const BipartiteGraph& g) {
    auto endpoints = [&g](const std::array<int, 2>& mono) {
        std::vector<int> vs;
        for (int var : mono) {
            auto e = g.edge_for(var);
            if (!e) throw std::invalid_argument("edge_map_vanishing: unknown edge label x" + std::to_string(var));
            vs.push_back(e->row);
            vs.push_back(g.num_rows + e->col);
        }
        std::sort(vs.begin(), vs.end());
        return vs;
    };
    return endpoints(b.pos) == endpoints(b.neg);
}

nlohmann::ordered_json grid_to_json(const LadderGrid& grid) {
    nlohmann::ordered_json j;
    j["n"] = grid.n;
    j["t"] = grid.t.to_string();
    j["rows"] = grid.rows;
    j["cols"] = grid.cols;
    auto cells = nlohmann::ordered_json::array();
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            if (grid.cell[r][c] >= 0) {
                cells.push_back({{"r", r + 1}, {"c", c + 1}, {"var", grid.cell[r][c]}});
            }
        }
    }
    j["cells"] = std::move(cells);
    return j;
}

nlohmann::ordered_json generators_to_json(const GeneratorSet& gs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : gs.gens) {
        arr.push_back({{"pos", {g.pos[0], g.pos[1]}}, {"neg", {g.neg[0], g.neg[1]}}});
    }
    return arr;
}

}  // namespace toric
