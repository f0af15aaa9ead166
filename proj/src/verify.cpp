#include "toric/verify.hpp"

#include "toric/artinian.hpp"
#include "toric/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace toric {

namespace {

bool labels_monotone(const LadderGrid& grid) {
    for (int r = 0; r < grid.rows; ++r) {
        int prev = -1;
        for (int c = 0; c < grid.cols; ++c) {
            int v = grid.var_at(r, c);
            if (v < 0) continue;
            if (prev >= 0 && v <= prev) return false;
            prev = v;
        }
    }
    for (int c = 0; c < grid.cols; ++c) {
        int prev = -1;
        for (int r = 0; r < grid.rows; ++r) {
            int v = grid.var_at(r, c);
            if (v < 0) continue;
            if (prev >= 0 && v <= prev) return false;
            prev = v;
        }
    }
    return true;
}

int occupied_in_row(const LadderGrid& grid, int r) {
    int k = 0;
    for (int c = 0; c < grid.cols; ++c) {
        if (grid.var_at(r, c) >= 0) ++k;
    }
    return k;
}

int occupied_in_col(const LadderGrid& grid, int c) {
    int k = 0;
    for (int r = 0; r < grid.rows; ++r) {
        if (grid.var_at(r, c) >= 0) ++k;
    }
    return k;
}

// Degreewise vector space dimensions of vars/M; M must contain a power of
// every variable.
std::vector<long long> quotient_dims(const MonomialIdeal& M) {
    std::vector<long long> dims;
    for (int d = 0;; ++d) {
        auto count = standard_monomials(M, d).size();
        if (count == 0) break;
        dims.push_back(static_cast<long long>(count));
        if (d > 4 * static_cast<int>(M.numvars()) + 4) {
            throw std::logic_error("quotient_dims: quotient does not look Artinian");
        }
    }
    return dims;
}

}  // namespace

InstanceVerdict verify_instance(const TypeVector& tv, bool include_lattice,
                                std::size_t trace_limit) {
    const int n = tv.n;
    InstanceVerdict v;
    v.n = n;
    v.t = tv.to_string();
    auto check = [&v](bool ok, const std::string& name) {
        if (!ok) v.failures.push_back(name);
        return ok;
    };

    // grid shape and labelling
    LadderGrid grid = build_ladder(n, tv);
    std::vector<int> labels = grid.variables();
    std::vector<int> expected_labels = VarSet::full_ring(n).indices();
    check(grid.rows == n / 2 + 2 && grid.cols == (n + 1) / 2 + 2, "grid-shape");
    check(labels == expected_labels, "grid-labels");
    check(labels_monotone(grid), "grid-monotone");
    bool lines_ok = true;
    for (int r = 0; r < grid.rows; ++r) lines_ok = lines_ok && occupied_in_row(grid, r) >= 2;
    for (int c = 0; c < grid.cols; ++c) lines_ok = lines_ok && occupied_in_col(grid, c) >= 2;
    check(lines_ok, "grid-line-occupancy");

    // incidence graph facts
    BipartiteGraph graph = build_graph(grid);
    check(graph.num_rows + graph.num_cols == n + 4, "graph-vertex-count");
    check(static_cast<int>(graph.edges.size()) == 2 * n + 4, "graph-edge-count");
    check(graph.min_degree() >= 2, "graph-min-degree");
    check(is_chordal_bipartite(graph), "graph-chordal-bipartite");

    // generators three ways: j-sequence recursion, distinguished minors,
    // 4-cycles of the graph
    GeneratorSet gens = standard_generators(n, tv);
    GeneratorSet minors = distinguished_minors(grid);
    check(static_cast<int>(gens.gens.size()) == 2 * n + 1, "generator-count");
    check(gens.gens == minors.gens, "generators-match-minors");
    std::vector<FourCycle> cycles = four_cycles(graph);
    bool cycles_ok = cycles.size() == gens.gens.size();
    if (cycles_ok) {
        std::vector<QuadBinomial> from_cycles;
        from_cycles.reserve(cycles.size());
        for (const auto& c : cycles) from_cycles.push_back(c.binomial());
        std::sort(from_cycles.begin(), from_cycles.end());
        std::vector<QuadBinomial> sorted_gens = gens.gens;
        std::sort(sorted_gens.begin(), sorted_gens.end());
        for (std::size_t i = 0; i < sorted_gens.size(); ++i) {
            cycles_ok = cycles_ok && from_cycles[i].same_up_to_sign(sorted_gens[i]);
        }
    }
    check(cycles_ok, "four-cycles-match-generators");
    bool vanish = true;
    for (const auto& g : gens.gens) vanish = vanish && edge_map_vanishing(g, graph);
    check(vanish, "edge-map-vanishing");

    // basis certification and the lead-term ideal
    VarSet ring = VarSet::full_ring(n);
    std::vector<Polynomial> polys = generator_polys(ring, gens);
    GroebnerCheck gb = is_groebner(polys);
    check(gb.ok, "groebner-certified");
    check(buchberger(polys).size() == polys.size(), "buchberger-no-growth");
    MonomialIdeal lead = initial_ideal(polys);
    check(lead == ladder_initial_ideal(n), "initial-ideal-closed-form");
    check(krull_dimension(lead) == n + 3, "dimension");

    // Artinian reduction
    HatGeneratorSet hat = hat_reduce(n, tv);
    GroebnerCheck hat_gb = hat_is_groebner(hat);
    check(hat_gb.ok, "hat-groebner-certified");
    check(hat.J == hat_j_values(n, tv), "hat-trailing-variable-rule");
    MonomialIdeal hat_lead = initial_ideal(hat.gens);
    check(hat_lead == hat_initial_ideal(n), "hat-initial-ideal-closed-form");
    try {
        HilbertVector hv = hilbert_vector(n);
        check(quotient_dims(hat_lead) == hv.d, "hat-hilbert-vector");
        check(hv.sum() == fibonacci(n + 3), "length-fibonacci");
    } catch (const std::exception&) {
        check(false, "hilbert-vector-cross-check");
    }

    // depth certificate and the report's closed forms
    try {
        check(regular_sequence_certificate(n, tv), "regular-sequence-certificate");
    } catch (const std::exception&) {
        check(false, "regular-sequence-certificate");
    }
    try {
        InvariantReport rep = full_report(n, tv);
        check(rep.dim == n + 3, "report-dim");
        check(rep.cm_certified && rep.pdim == n + 1, "report-pdim");
        check(rep.reg_ring == n / 2 + 1, "report-reg-ring");
        check(rep.reg_ideal == n / 2 + 2, "report-reg-ideal");
        check(rep.multiplicity == fibonacci(n + 3), "report-multiplicity");
        check(rep.fibonacci_index == n + 3, "report-fibonacci-index");
        check(rep.koszul, "report-koszul");
        check(static_cast<int>(rep.induced_matching_witness.size()) == n / 2 + 1 &&
                  is_induced_matching(comb_graph(n), rep.induced_matching_witness),
              "report-matching-witness");
        v.report = std::move(rep);
    } catch (const std::exception&) {
        check(false, "report-construction");
    }

    // dominance order on the grid for the all-ones type
    if (tv == TypeVector::all_ones(n) && n <= 6) {
        NaturalLadderLattice nat = natural_ladder_order(grid);
        bool lattice_ok = is_lattice(nat.poset) && is_distributive(nat.poset);
        check(lattice_ok, "dominance-order-distributive-lattice");
        if (lattice_ok) {
            check(join_meet_standard_generators(nat) == gens.gens,
                  "dominance-order-generators");
        }
    }

    if (include_lattice) {
        RefutationResult rr = refute_lattice_realizability(gens.gens, trace_limit);
        v.lattice_refuted = rr.refuted;
        if (tv == TypeVector::all_ones(n)) {
            check(!rr.refuted, "refuter-rejects-existing-lattice");
        }
    }
    return v;
}

nlohmann::ordered_json InstanceVerdict::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["t"] = t;
    j["ok"] = ok();
    j["failures"] = failures;
    if (report) j["report"] = report_to_json(*report);
    if (lattice_refuted) j["lattice_refuted"] = *lattice_refuted;
    return j;
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    j["instances"] = instances;
    j["failed_instances"] = failed_instances;
    j["skipped_over_cap"] = skipped_over_cap;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) arr.push_back(v.to_json());
    j["verdicts"] = std::move(arr);
    return j;
}

VerifyReport run_verify(const VerifyOptions& opt) {
    std::vector<TypeVector> work;
    VerifyReport report;
    if (opt.only) {
        work.push_back(*opt.only);
    } else {
        for (int n = 0; n <= opt.max_n; ++n) {
            auto all = TypeVector::enumerate(n);
            work.insert(work.end(), all.begin(), all.end());
        }
    }
    std::erase_if(work, [&report](const TypeVector& tv) {
        if (tv.n > kMaxVerifyN) {
            report.skipped_over_cap++;
            return true;
        }
        return false;
    });

    report.instances = static_cast<int>(work.size());
    report.verdicts.resize(work.size());

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || work.size() <= 1) {
        for (std::size_t i = 0; i < work.size(); ++i) {
            report.verdicts[i] = verify_instance(work[i], opt.include_lattice, opt.trace_limit);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= work.size()) return;
                report.verdicts[i] =
                    verify_instance(work[i], opt.include_lattice, opt.trace_limit);
            }
        };
        std::vector<std::thread> pool;
        int threads = std::min<std::size_t>(jobs, work.size());
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& v : report.verdicts) {
        if (!v.ok()) report.failed_instances++;
    }
    report.ok = report.failed_instances == 0;
    return report;
}

}  // namespace toric
