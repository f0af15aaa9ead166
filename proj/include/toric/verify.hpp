#pragma once

#include "toric/invariants.hpp"
#include "toric/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace toric {

// Largest n the dimension search accepts: 2n+4 variables must stay within
// the 24-variable vertex-cover envelope.
inline constexpr int kMaxVerifyN = 10;

struct VerifyOptions {
    int max_n = 5;
    std::optional<TypeVector> only;  // check a single instance instead of sweeping
    bool include_lattice = false;    // also run the order-refutation search per instance
    int jobs = 1;
    std::size_t trace_limit = 0;  // refutation trace entries kept per instance
};

// Outcome of every check on one (n, t) instance. `failures` lists the names
// of the checks that did not hold; empty means the instance passed.
struct InstanceVerdict {
    int n = 0;
    std::string t;
    std::vector<std::string> failures;
    std::optional<InvariantReport> report;
    std::optional<bool> lattice_refuted;

    bool ok() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
};

struct VerifyReport {
    bool ok = false;
    int instances = 0;
    int failed_instances = 0;
    int skipped_over_cap = 0;  // instances dropped for exceeding kMaxVerifyN
    std::vector<InstanceVerdict> verdicts;  // sorted by n, then t bitstring

    nlohmann::ordered_json to_json() const;
};

InstanceVerdict verify_instance(const TypeVector& t, bool include_lattice,
                                std::size_t trace_limit = 0);

// Sweeps every t for every n <= max_n (or just `only`), running the whole
// check battery per instance. Instances with n > kMaxVerifyN are skipped and
// counted, yielding a partial report. Deterministic for fixed options
// regardless of `jobs`.
VerifyReport run_verify(const VerifyOptions& opt);

}  // namespace toric
