#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace toric {

// Type vector t = (t_1, ..., t_{n+1}), each entry 0 or 1. Entries beyond
// t_3 steer the iterative grid construction; t_1, t_2 are carried along so
// every instance is addressed uniformly.
struct TypeVector {
    int n = 0;
    std::vector<int> bits;  // bits[i] = t_{i+1}

    TypeVector() = default;
    TypeVector(int n_, std::vector<int> bits_);

    static TypeVector parse(int n, const std::string& s);
    static TypeVector all_ones(int n);
    static std::vector<TypeVector> enumerate(int n);  // lexicographic by bitstring

    int t(int k) const;  // 1-based: t(1) = t_1
    std::string to_string() const;
    bool operator==(const TypeVector& o) const { return n == o.n && bits == o.bits; }
};

// Stairstep grid of variable labels. rows = floor(n/2)+2, cols = ceil(n/2)+2,
// exactly 2n+4 occupied cells labelled 0, 2, 3, ..., 2n+4 (label 1 unused).
// Cells are 0-based internally; serialization is 1-based like matrix notation.
struct LadderGrid {
    int n = 0;
    TypeVector t;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> cell;  // cell[r][c] = label, or -1 if empty

    int var_at(int r, int c) const;  // -1 when out of range or empty
    std::optional<std::pair<int, int>> position_of(int var) const;
    std::vector<int> variables() const;  // occupied labels, ascending
    std::string render() const;          // fixed-width matrix, "." for gaps
};

LadderGrid build_ladder(int n, const TypeVector& t);

// j_1 = j_2 = 0, j_3 = 2, and for i >= 2 the recursion
//   t_{i+1} = 0:  j_{2i} = j_{2i-2},  j_{2i+1} = 2i-1
//   t_{i+1} = 1:  j_{2i} = j_{2i-1},  j_{2i+1} = 2i
struct JSequence {
    std::vector<int> j;            // j[k-1] = j_k, k = 1..2n+1
    int at(int k) const;           // 1-based
    std::size_t size() const { return j.size(); }
};

JSequence j_sequence(int n, const TypeVector& t);

// Difference of two degree-2 monomials in distinct variables,
// pos[0]*pos[1] - neg[0]*neg[1]. Pairs are kept sorted ascending.
struct QuadBinomial {
    std::array<int, 2> pos{};
    std::array<int, 2> neg{};

    QuadBinomial() = default;
    QuadBinomial(std::array<int, 2> p, std::array<int, 2> ng);

    bool same_up_to_sign(const QuadBinomial& o) const;
    std::string render() const;
    bool operator==(const QuadBinomial& o) const { return pos == o.pos && neg == o.neg; }
    bool operator<(const QuadBinomial& o) const;
};

struct GeneratorSet {
    int n = 0;
    std::vector<QuadBinomial> gens;  // gens[k-1] = s_k

    bool same_up_to_sign(const GeneratorSet& o) const;
};

// s_1 = x_2x_3 - x_0x_4, s_{2i} = x_{2i+1}x_{2i+3} - x_{j_{2i}}x_{2i+4},
// s_{2i+1} = x_{2i+2}x_{2i+3} - x_{j_{2i+1}}x_{2i+4}; 2n+1 binomials.
GeneratorSet standard_generators(int n, const TypeVector& t);

// All 2x2 fully occupied subarrays of the grid, as binomials oriented with
// the antidiagonal product positive (the two middle labels of the four).
// Sorted to line up with standard_generators.
GeneratorSet distinguished_minors(const LadderGrid& grid);

// Bipartite incidence graph: one vertex per grid row and per grid column,
// one edge per occupied cell, labelled by the cell's variable.
struct BipartiteGraph {
    int num_rows = 0;
    int num_cols = 0;
    struct Edge {
        int var;
        int row;  // 0-based
        int col;
    };
    std::vector<Edge> edges;  // ascending by var

    std::optional<Edge> edge_for(int var) const;
    int min_degree() const;
};

BipartiteGraph build_graph(const LadderGrid& grid);

// True when no induced cycle of length >= 6 exists. Exhaustive scan over
// vertex subsets; intended for small instances only.
bool is_chordal_bipartite(const BipartiteGraph& g);

// A 4-cycle recorded as its two opposite edge pairs (each sorted, pair_a
// holding the smallest label of the four).
struct FourCycle {
    std::array<int, 2> pair_a{};
    std::array<int, 2> pair_b{};
    QuadBinomial binomial() const { return QuadBinomial(pair_b, pair_a); }
};

std::vector<FourCycle> four_cycles(const BipartiteGraph& g);

// Whether the binomial maps to zero under edge -> product of endpoints,
// i.e. both monomials cover the same multiset of vertices.
bool edge_map_vanishing(const QuadBinomial& b, const BipartiteGraph& g);

nlohmann::ordered_json grid_to_json(const LadderGrid& grid);
nlohmann::ordered_json generators_to_json(const GeneratorSet& gs);

}  // namespace toric
