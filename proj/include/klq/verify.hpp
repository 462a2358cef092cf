#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klq/coxeter.hpp"
#include "klq/klpoly.hpp"
#include "klq/moment_graph.hpp"

namespace klq {

struct RunConfig {
    std::string group = "A3";
    std::optional<int> max_ldiff;
    std::optional<uint64_t> sample_count; // stratified by length difference
    uint64_t seed = 42;                   // drives mt19937_64; fixed PRNG across versions
    uint64_t budget = 10'000'000;         // g_min subset budget
    // independent subset search (from size 1) runs only when its subset
    // count estimate stays below this; the theorem-backed witness pins g
    // either way
    uint64_t search_cap = 200'000;
    int workers = 1;
    bool with_dimv = true;
    bool with_search = true;
};

// One row of a sweep. Every flag defaults to the passing state; the
// computation only ever lowers them.
struct IntervalReport {
    std::string x_word, y_word;
    int ldiff = 0;
    int c = 0;
    long long d = 0;
    long long dim_v = -1; // -1 when not computed
    long long g = -1;
    long long q = 0;
    std::string r_str, p_str;
    std::vector<long long> r_coeffs, p_coeffs; // ascending degree

    bool theorem_ok = true;      // q == c - g
    bool glt_ok = true;          // all three clauses, every minimal reflection
    bool ladder_ok = true;       // chain found and independently validated
    bool drect_ok = true;
    bool onenotsmaller_ok = true;
    bool newmin_ok = true;
    bool bounds_ok = true;       // d <= g <= min(|at|,|coat|,ldiff), witnesses verified
    bool kl_ok = true;           // constant term, degree bound, identity, positivity
    bool cross_ok = true;        // dimV == d, witness size == d, search agreement
    bool budget_flag = false;    // independent search ran out of budget
    bool search_ran = false;
    long long g_search = -1;
    // bounds established by the search when it ran out of budget
    long long g_lower = -1, g_upper = -1;

    std::vector<std::pair<std::string, std::string>> witness_pairs; // edge endpoints as words
    std::string error; // nonempty when the computation itself failed

    bool failed() const {
        return !error.empty() || !theorem_ok || !glt_ok || !ladder_ok || !drect_ok ||
               !onenotsmaller_ok || !newmin_ok || !bounds_ok || !kl_ok || !cross_ok;
    }
};

struct VerifySummary {
    std::string group;
    uint64_t total = 0;
    uint64_t failures = 0;
    uint64_t budget_exceeded = 0;
    uint64_t errors = 0;
    std::vector<IntervalReport> reports; // deterministic order
};

// Full per-interval computation with all cross-checks. Throws
// std::invalid_argument when x is not below y.
IntervalReport compute_interval_report(const CoxeterSystem& sys, Bruhat& order, KLContext& kl,
                                       const Element& x, const Element& y, const RunConfig& cfg);

// The minimum generating witness a report would show: the lex-first
// search witness when the search is affordable, otherwise the
// theorem-backed constructive one.
EdgeSet reported_min_witness(const CoxeterSystem& sys, Bruhat& order, KLContext& kl,
                             const IntervalGraph& graph, const RunConfig& cfg);

// Sweep over all (or stratified-sampled) comparable pairs x < y within
// the length-difference cap. Identical config gives byte-identical CSV
// regardless of worker count.
VerifySummary run_verify(const RunConfig& cfg);

// csv columns: group,x,y,ldiff,c,d,dimV,g,q,theorem_ok,glt_ok,ladder_ok,budget_flag
std::string reports_csv(const VerifySummary& s);
std::string summary_json(const VerifySummary& s);
// single-interval JSON, including the lifting report (AD set, minimal
// reflections, chosen, per-reflection GLT booleans and ladder words)
std::string interval_report_json(const CoxeterSystem& sys, Bruhat& order, KLContext& kl,
                                 const Element& x, const Element& y, const IntervalReport& rep);

// type-A strengthening sweep helper used by tests (optional property)
} // namespace klq
