#pragma once

#include "toric/family.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace toric {

// Partial order under construction over a fixed element set. Tracks strict
// relations (closed under transitivity), pairs declared incomparable, pairs
// required to end up comparable, and join/meet designations taken on by
// oriented generators. All mutations either succeed or mark a contradiction.
class PosetState {
  public:
    explicit PosetState(std::vector<int> elements);

    const std::vector<int>& elements() const { return elems_; }
    bool failed() const { return failed_; }
    const std::string& failure_reason() const { return reason_; }

    bool add_less(int a, int b);              // slots
    bool declare_incomparable(int a, int b);  // slots
    void require_comparable(int a, int b);    // slots; set before search
    bool less(int a, int b) const { return (above_[a] >> b) & 1u; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    bool incomparable_declared(int a, int b) const { return (inc_[a] >> b) & 1u; }

    // Orients one generator: F picks the incomparable monomial (0 = positive),
    // join_high picks which element of the other monomial is the join.
    bool orient(const QuadBinomial& g, int f, int join_high);

    // Join/meet closure: every common strict upper bound of an oriented
    // incomparable pair lies above its join, dually for meets. Runs to a
    // fixpoint together with transitivity.
    bool sweep();

    std::vector<std::pair<int, int>> unresolved_required_pairs() const;
    std::size_t slot_of(int element) const;

    nlohmann::ordered_json to_json() const;

  private:
    bool fail(const std::string& why);

    std::vector<int> elems_;
    std::vector<std::uint32_t> above_;  // above_[v] = slots strictly greater than v
    std::vector<std::uint32_t> below_;
    std::vector<std::uint32_t> inc_;
    std::vector<std::uint32_t> must_;
    struct JoinRecord {
        int p, q, join, meet;
    };
    std::vector<JoinRecord> records_;
    bool failed_ = false;
    std::string reason_;
};

struct OrientationAssignment {
    std::vector<int> f_bits;
    std::vector<int> join_bits;
};

struct RefutationResult {
    bool refuted = false;
    long long orientation_nodes = 0;  // nodes of the 4-way orientation tree
    long long pair_split_nodes = 0;   // binary splits spent resolving required pairs
    long long contradictions = 0;
    std::map<std::string, long long> reason_counts;
    struct TraceEntry {
        std::string prefix;  // one digit per oriented generator: 2*F + join bit
        std::string reason;
    };
    std::vector<TraceEntry> trace;  // capped
    std::optional<OrientationAssignment> survivor_assignment;
    std::optional<nlohmann::ordered_json> survivor_state;

    nlohmann::ordered_json to_json() const;
};

// Decides whether some partial order on the variables can have exactly the
// given binomials as its incomparable-pair relations. Explores every
// orientation (at most 4^|gens|); a branch survives only if constraint
// propagation stays consistent and every pair whose product appears in no
// generator monomial can be made comparable. Refuted means no branch
// survives; a survivor is a necessary-condition witness, not a lattice.
RefutationResult refute_lattice_realizability(const std::vector<QuadBinomial>& gens,
                                              std::size_t trace_limit = 200);

// All F-vectors (one bit per generator, 0 = positive monomial incomparable)
// admitting at least one consistent branch, with the given pairs required
// comparable. Sorted lexicographically.
std::vector<std::vector<int>> admissible_f_vectors(const std::vector<QuadBinomial>& gens,
                                                   const std::vector<std::array<int, 2>>& forced_comparable);

// Explicit finite poset on slots 0..size-1; strict relations, transitively
// closed by the caller.
struct FinitePoset {
    int size = 0;
    std::vector<std::uint32_t> above;  // above[i] = slots strictly greater than i

    bool less(int a, int b) const { return (above[a] >> b) & 1u; }
};

// Join and meet tables when the poset is a lattice.
struct LatticeTables {
    bool is_lattice = false;
    std::vector<std::vector<int>> join;
    std::vector<std::vector<int>> meet;
};

LatticeTables lattice_tables(const FinitePoset& p);
bool is_lattice(const FinitePoset& p);
// Requires a lattice; checks meet-over-join distributivity on all triples.
bool is_distributive(const FinitePoset& p);

// Grid cells ordered by dominance: a cell is above another when its row and
// column are both no larger. The top-left label x_0 is the maximum.
struct NaturalLadderLattice {
    std::vector<int> vars;  // ascending labels; slot i of the poset
    FinitePoset poset;
};

NaturalLadderLattice natural_ladder_order(const LadderGrid& grid);

// One binomial a*b - join(a,b)*meet(a,b) per incomparable pair, ordered like
// the distinguished minors. Requires a lattice.
std::vector<QuadBinomial> join_meet_standard_generators(const NaturalLadderLattice& L);

}  // namespace toric
