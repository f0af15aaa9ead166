// Command-line front end: builds the ladder family, certifies the algebraic
// facts, and emits reports. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 resource cap exceeded.
#include "toric/artinian.hpp"
#include "toric/family.hpp"
#include "toric/groebner.hpp"
#include "toric/invariants.hpp"
#include "toric/lattice.hpp"
#include "toric/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

int env_jobs() {
    const char* s = std::getenv("LADDERTORIC_JOBS");
    if (!s || !*s) return 1;
    try {
        int v = std::stoi(s);
        return v >= 1 ? v : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

// Shared by the single-instance commands: --n and a t bitstring of length n+1.
struct InstanceArgs {
    int n = 0;
    std::string t;

    toric::TypeVector parse() const { return toric::TypeVector::parse(n, t); }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("--n", args.n, "family index n >= 0")->required();
    cmd->add_option("--t", args.t,
                    "type bitstring of length n+1, leftmost bit is t_1 (entries t_3.. steer "
                    "the construction)")
        ->required();
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_ladder(const InstanceArgs& args, const std::string& format) {
    toric::TypeVector tv = args.parse();
    toric::LadderGrid grid = toric::build_ladder(tv.n, tv);
    toric::BipartiteGraph graph = toric::build_graph(grid);
    if (format == "json") {
        nlohmann::ordered_json j = toric::grid_to_json(grid);
        j["graph"] = {{"vertices", graph.num_rows + graph.num_cols},
                      {"edges", graph.edges.size()},
                      {"bipartition", {graph.num_rows, graph.num_cols}},
                      {"min_degree", graph.min_degree()},
                      {"chordal_bipartite", toric::is_chordal_bipartite(graph)}};
        emit(j);
    } else {
        std::cout << grid.render();
        std::cout << "graph: " << graph.num_rows + graph.num_cols << " vertices ("
                  << graph.num_rows << "+" << graph.num_cols << "), " << graph.edges.size()
                  << " edges, min degree " << graph.min_degree() << ", chordal bipartite: "
                  << (toric::is_chordal_bipartite(graph) ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_generators(const InstanceArgs& args, const std::string& format) {
    toric::TypeVector tv = args.parse();
    toric::GeneratorSet gens = toric::standard_generators(tv.n, tv);
    if (format == "json") {
        emit(toric::generators_to_json(gens));
    } else {
        toric::JSequence js = toric::j_sequence(tv.n, tv);
        std::cout << "j =";
        for (int v : js.j) std::cout << " " << v;
        std::cout << "\n";
        for (std::size_t k = 0; k < gens.gens.size(); ++k) {
            std::cout << "s_" << k + 1 << " = " << gens.gens[k].render() << "\n";
        }
    }
    return kExitOk;
}

int cmd_groebner_check(const InstanceArgs& args, const std::string& format) {
    toric::TypeVector tv = args.parse();
    if (tv.n > toric::kMaxVerifyN) {
        std::cerr << "error: n > " << toric::kMaxVerifyN
                  << " exceeds the 24-variable dimension cap\n";
        return kExitResourceCap;
    }
    toric::VarSet ring = toric::VarSet::full_ring(tv.n);
    auto polys = toric::generator_polys(ring, toric::standard_generators(tv.n, tv));
    toric::GroebnerCheck gb = toric::is_groebner(polys);
    toric::MonomialIdeal lead = toric::initial_ideal(polys);
    toric::HilbertNumerator num = toric::hilbert_numerator(lead);
    int dim = toric::krull_dimension(lead);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = tv.n;
        j["t"] = tv.to_string();
        j["groebner"] = gb.ok;
        auto init = nlohmann::ordered_json::array();
        for (const auto& m : lead.gens()) {
            init.push_back(toric::Polynomial::monomial(lead.vars(), m).render());
        }
        j["initial"] = std::move(init);
        j["dimension"] = dim;
        j["numerator"] = num;
        emit(j);
    } else {
        std::cout << "groebner: " << (gb.ok ? "certified" : "NOT a basis") << "\n";
        std::cout << "initial ideal:";
        for (const auto& m : lead.gens()) {
            std::cout << " " << toric::Polynomial::monomial(lead.vars(), m).render();
        }
        std::cout << "\ndimension: " << dim << "\nnumerator:";
        for (long long c : num) std::cout << " " << c;
        std::cout << "\n";
    }
    return gb.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_hilbert(int max_n, const std::string& format) {
    if (max_n < 0 || max_n > 40) {
        std::cerr << "error: --max-n must be between 0 and 40\n";
        return max_n < 0 ? kExitUsage : kExitResourceCap;
    }
    if (format == "csv") {
        std::cout << toric::hilbert_table_csv(max_n);
    } else if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (int n = 0; n <= max_n; ++n) {
            toric::HilbertVector hv = toric::hilbert_vector(n);
            arr.push_back({{"n", n},
                           {"d", hv.d},
                           {"length", hv.sum()},
                           {"fibonacci_index", n + 3}});
        }
        emit(arr);
    } else {
        for (int n = 0; n <= max_n; ++n) {
            toric::HilbertVector hv = toric::hilbert_vector(n);
            std::cout << "n=" << n << ":";
            for (long long c : hv.d) std::cout << " " << c;
            std::cout << "  (length " << hv.sum() << " = F(" << n + 3 << "))\n";
        }
    }
    return kExitOk;
}

int cmd_invariants(const InstanceArgs& args, const std::string& format) {
    toric::TypeVector tv = args.parse();
    if (tv.n > toric::kMaxVerifyN) {
        std::cerr << "error: n > " << toric::kMaxVerifyN
                  << " exceeds the 24-variable dimension cap\n";
        return kExitResourceCap;
    }
    toric::InvariantReport rep = toric::full_report(tv.n, tv);
    if (format == "json") {
        emit(toric::report_to_json(rep));
    } else {
        std::cout << "n=" << rep.n << " t=" << tv.to_string() << "\n"
                  << "dim:          " << rep.dim << "\n"
                  << "pdim:         " << rep.pdim << (rep.cm_certified ? "" : " (uncertified)")
                  << "\n"
                  << "reg (ring):   " << rep.reg_ring << "\n"
                  << "reg (ideal):  " << rep.reg_ideal << "\n"
                  << "multiplicity: " << rep.multiplicity << " = F(" << rep.fibonacci_index
                  << ")\n"
                  << "koszul flag:  " << (rep.koszul ? "quadratic basis found" : "no") << "\n"
                  << "cm certified: " << (rep.cm_certified ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_lattice(const InstanceArgs& args, std::size_t trace_limit, const std::string& format) {
    toric::TypeVector tv = args.parse();
    if (2 * tv.n + 4 > 26) {
        std::cerr << "error: n > 11 exceeds the 26-element order-search cap\n";
        return kExitResourceCap;
    }
    toric::GeneratorSet gens = toric::standard_generators(tv.n, tv);
    toric::RefutationResult rr = toric::refute_lattice_realizability(gens.gens, trace_limit);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = tv.n;
        j["t"] = tv.to_string();
        j["result"] = rr.to_json();
        emit(j);
    } else {
        std::cout << (rr.refuted ? "Refuted" : "Unrefuted") << ": " << rr.orientation_nodes
                  << " orientation nodes, " << rr.pair_split_nodes << " pair splits, "
                  << rr.contradictions << " contradictions\n";
        for (const auto& [reason, count] : rr.reason_counts) {
            std::cout << "  " << reason << ": " << count << "\n";
        }
        if (rr.refuted) {
            for (const auto& e : rr.trace) {
                std::cout << "  branch " << e.prefix << " -> " << e.reason << "\n";
            }
        } else if (rr.survivor_assignment) {
            std::cout << "surviving orientation:";
            for (std::size_t i = 0; i < rr.survivor_assignment->f_bits.size(); ++i) {
                std::cout << " " << rr.survivor_assignment->f_bits[i]
                          << rr.survivor_assignment->join_bits[i];
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(int max_n, const std::string& t_bits, bool lattice, int jobs,
               std::size_t trace_limit, const std::string& format) {
    toric::VerifyOptions opt;
    opt.max_n = max_n;
    opt.include_lattice = lattice;
    opt.jobs = jobs;
    opt.trace_limit = trace_limit;
    if (!t_bits.empty()) {
        int n = static_cast<int>(t_bits.size()) - 1;
        if (max_n >= 0 && max_n != n) {
            std::cerr << "error: --t of length " << t_bits.size() << " means n = " << n
                      << ", which contradicts --max-n " << max_n << "\n";
            return kExitUsage;
        }
        opt.only = toric::TypeVector::parse(n, t_bits);
    } else if (max_n < 0) {
        opt.max_n = 5;
    }

    toric::VerifyReport report = toric::run_verify(opt);
    if (format == "json") {
        emit(report.to_json());
    } else {
        std::cout << "checked " << report.instances << " instance"
                  << (report.instances == 1 ? "" : "s") << ": "
                  << report.instances - report.failed_instances << " passed, "
                  << report.failed_instances << " failed";
        if (report.skipped_over_cap > 0) {
            std::cout << " (" << report.skipped_over_cap << " skipped over the n <= "
                      << toric::kMaxVerifyN << " cap)";
        }
        std::cout << "\n";
        for (const auto& v : report.verdicts) {
            if (!v.ok()) {
                std::cout << "FAIL n=" << v.n << " t=" << v.t << ":";
                for (const auto& f : v.failures) std::cout << " " << f;
                std::cout << "\n";
            }
            if (v.lattice_refuted) {
                std::cout << "lattice n=" << v.n << " t=" << v.t << ": "
                          << (*v.lattice_refuted ? "Refuted" : "Unrefuted") << "\n";
            }
        }
    }
    if (report.skipped_over_cap > 0) return kExitResourceCap;
    return report.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_report(int max_n, const std::string& t_bits, int jobs) {
    std::vector<toric::TypeVector> work;
    if (!t_bits.empty()) {
        int n = static_cast<int>(t_bits.size()) - 1;
        if (max_n >= 0 && max_n != n) {
            std::cerr << "error: --t of length " << t_bits.size() << " means n = " << n
                      << ", which contradicts --max-n " << max_n << "\n";
            return kExitUsage;
        }
        work.push_back(toric::TypeVector::parse(n, t_bits));
    } else {
        if (max_n < 0) max_n = 5;
        for (int n = 0; n <= max_n; ++n) {
            auto all = toric::TypeVector::enumerate(n);
            work.insert(work.end(), all.begin(), all.end());
        }
    }
    for (const auto& tv : work) {
        if (tv.n > toric::kMaxVerifyN) {
            std::cerr << "error: n > " << toric::kMaxVerifyN
                      << " exceeds the 24-variable dimension cap\n";
            return kExitResourceCap;
        }
    }

    std::vector<toric::InvariantReport> reports(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            reports[i] = toric::full_report(work[i].n, work[i]);
        }
    };
    int threads = static_cast<int>(std::min<std::size_t>(std::max(1, jobs), work.size()));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(toric::report_to_json(r));
    emit(arr);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ladder-family toric rings: construction, certification, and reports.\n"
        "t bitstrings are written t_1 first. Dimension checks cap at n <= 10\n"
        "(24 variables); the order-refutation search caps at n <= 11."};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    InstanceArgs ladder_args;
    CLI::App* ladder = app.add_subcommand("ladder", "render the grid and its incidence graph");
    add_instance_options(ladder, ladder_args);

    InstanceArgs gens_args;
    CLI::App* generators =
        app.add_subcommand("generators", "list the defining binomials s_1..s_{2n+1}");
    add_instance_options(generators, gens_args);

    InstanceArgs gb_args;
    CLI::App* groebner = app.add_subcommand(
        "groebner-check", "certify the generators as a degrevlex basis; initial ideal, "
                          "dimension, Hilbert numerator");
    add_instance_options(groebner, gb_args);

    int hilbert_max_n = 8;
    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "degreewise dimensions of the reduced ring, one row per n");
    hilbert->add_option("--max-n", hilbert_max_n, "largest n (<= 40)")->capture_default_str();

    InstanceArgs inv_args;
    CLI::App* invariants =
        app.add_subcommand("invariants", "dimension, depth certificate, regularity, "
                                         "multiplicity for one instance");
    add_instance_options(invariants, inv_args);

    InstanceArgs lat_args;
    std::size_t lat_trace = 200;
    CLI::App* lattice = app.add_subcommand(
        "lattice", "search for a partial order realizing the generators as join/meet "
                   "relations; refutation trace or surviving state");
    add_instance_options(lattice, lat_args);
    lattice->add_option("--trace-limit", lat_trace, "contradiction trace entries to keep")
        ->capture_default_str();

    int verify_max_n = -1;
    std::string verify_t;
    bool verify_lattice = false;
    int verify_jobs = env_jobs();
    std::size_t verify_trace = 0;
    CLI::App* verify = app.add_subcommand(
        "verify", "run every check on every instance with n <= max-n (default 5)");
    verify->add_option("--max-n", verify_max_n, "largest n to sweep");
    verify->add_option("--t", verify_t, "check a single type bitstring instead of sweeping");
    verify->add_flag("--all-t", "sweep all t per n (the default)");
    verify->add_flag("--lattice", verify_lattice,
                     "also run the order-refutation search per instance");
    verify->add_option("--jobs", verify_jobs,
                       "worker threads (default: LADDERTORIC_JOBS or 1)");
    verify->add_option("--trace-limit", verify_trace, "refutation trace entries to keep");

    int report_max_n = -1;
    std::string report_t;
    int report_jobs = env_jobs();
    CLI::App* report = app.add_subcommand(
        "report", "JSON invariant reports, sorted by n then t (default n <= 5)");
    report->add_option("--max-n", report_max_n, "largest n to sweep");
    report->add_option("--t", report_t, "report a single type bitstring");
    report->add_option("--jobs", report_jobs,
                       "worker threads (default: LADDERTORIC_JOBS or 1)");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ladder) return cmd_ladder(ladder_args, format);
        if (*generators) return cmd_generators(gens_args, format);
        if (*groebner) return cmd_groebner_check(gb_args, format);
        if (*hilbert) return cmd_hilbert(hilbert_max_n, format);
        if (*invariants) return cmd_invariants(inv_args, format);
        if (*lattice) return cmd_lattice(lat_args, lat_trace, format);
        if (*verify)
            return cmd_verify(verify_max_n, verify_t, verify_lattice, verify_jobs, verify_trace,
                              format);
        if (*report) return cmd_report(report_max_n, report_t, report_jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
