#pragma once

#include "toric/artinian.hpp"
#include "toric/family.hpp"
#include "toric/groebner.hpp"

#include <nlohmann/json.hpp>

namespace toric {

// Checks that cutting by the n+3 linear forms
//   x_0, x_2 - x_3, x_4 - x_5, ..., x_{2n+2} - x_{2n+3}, x_{2n+4}
// drops the Hilbert series by exactly (1-t)^{n+3}: the numerator of the
// quotient ring must equal (degreewise hat dimensions)(t) * (1-t)^{n+1}.
// Both sides are recomputed from certified Groebner data for this instance.
bool regular_sequence_certificate(int n, const TypeVector& t);

// Path x_3 - x_5 - ... - x_{2n+3} with a pendant even label on every path
// vertex (x_2 on x_3, x_{2i+2} on x_{2i+3}); its edges match the generators
// of the lead ideal read as an edge ideal.
struct CombGraph {
    int n = 0;
    std::vector<int> spine;
    std::vector<int> tines;
    std::vector<std::array<int, 2>> edges;  // each sorted, list sorted
};

CombGraph comb_graph(int n);

struct MatchingResult {
    int size = 0;
    std::vector<std::array<int, 2>> witness;
};

// Exact maximum induced matching by edge-subset search with pruning.
MatchingResult max_induced_matching(const CombGraph& g);

bool is_induced_matching(const CombGraph& g, const std::vector<std::array<int, 2>>& edges);

// (lower, upper) bounds for the regularity of the defining ideal:
// induced matching size + 1 from below, the smaller side of the bipartition
// from above. Requires the chordal bipartite, min-degree >= 2 graph.
std::pair<int, int> reg_bounds(int n, const TypeVector& t);

struct InvariantReport {
    int n = 0;
    TypeVector t;
    int dim = 0;
    int pdim = -1;  // -1 when the certificate failed
    int reg_ring = 0;
    int reg_ideal = 0;
    long long multiplicity = -1;
    int fibonacci_index = 0;
    bool koszul = false;
    bool cm_certified = false;
    std::vector<std::array<int, 2>> induced_matching_witness;
};

InvariantReport full_report(int n, const TypeVector& t);

nlohmann::ordered_json report_to_json(const InvariantReport& r);

}  // namespace toric
