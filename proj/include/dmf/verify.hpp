#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dmf/expr.hpp"

namespace dmf {

/// Runtime configuration of a verification run: one (q, pi, N) instance.
struct SuiteConfig {
    int p = 3;
    int r = 1;
    std::vector<std::uint32_t> modulus;  // optional defining polynomial, r > 1
    std::string pi_text = "T";
    int prec = 365;
    std::string format = "json";  // json | table
    std::string out;              // output file; empty = stdout only
    int jobs = 1;

    FqPtr field() const;
    PrimePi pi() const;
    /// Checks N >= 4 q^2, jobs >= 1 and the format; pi irreducibility is
    /// enforced by the PrimePi constructor.
    void validate() const;
    std::string label() const;  // e.g. "q=3 pi=T N=365"
};

struct CheckResult {
    std::string id;    // "A1" .. "A14"
    std::string name;  // what the check asserts
    bool pass = false;
    nlohmann::json details;
};

struct SuiteResult {
    std::string suite;
    SuiteConfig cfg;
    std::vector<CheckResult> checks;
    bool all_pass = false;
    double wall_ms = 0.0;      // excluded from the JSON form
    std::uint64_t repro_hash = 0;

    nlohmann::json to_json() const;
    std::string to_table() const;
};

/// Suites: "congruences" (A1-A3), "operators" (A4-A8, A13, A14),
/// "existence" (A9, A10), "counterexample" (A11), "filtration" (A12),
/// and "all".
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& id, const SuiteConfig& cfg);

/// Definition-chasing filtration: the smallest weight k0 whose reduced
/// monomial basis spans the class of f mod pi, searched from below. The
/// independent oracle for the divisibility-based filtration.
long filtration_bruteforce(const SeriesForm& f, const PrimePi& pi);

/// The default verification matrix: q = 3 with pi in {T, T+1, T^2+1} at
/// N = 365, and q = 5 with pi = T at N = 130.
std::vector<SuiteConfig> acceptance_matrix();

nlohmann::json proof_trace_report_json(const ProofTraceReport& rep);
nlohmann::json congruence_report_json(const CongruenceReport& rep);

}  // namespace dmf
