#pragma once

// Experiment driver: exhaustive and randomized searches over double
// circulant codes, the volume-matched target radius, invariant verification
// suites, and deterministic JSON/CSV reports. Results are identical for any
// worker count: work is chunked in a fixed order, merges are total-order
// deterministic, and the budget is checked at chunk boundaries.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circulattice/counting.hpp"
#include "circulattice/dcode.hpp"
#include "circulattice/lattice.hpp"
#include "circulattice/modp.hpp"

namespace circ {

enum class SearchMode { Exhaustive, Random };

struct SearchConfig {
    int64_t q = 3;
    int64_t p = 0;  // 0: pick with select_p_direct(q)
    SearchMode mode = SearchMode::Exhaustive;
    uint64_t samples = 1000;       // random mode only
    std::optional<int64_t> w_sq;   // default: volume_matched_w_sq
    double c = 0;                  // 0: density_constant()
    uint64_t seed = 1;
    uint64_t budget = 100'000'000;  // word-visit cap
    int workers = 1;                // 0: OpenMP default
};

struct SearchResult {
    SearchConfig config;
    int64_t p = 0;     // resolved
    int64_t w_sq = 0;  // resolved
    uint64_t domain = 0;     // p^q or samples
    uint64_t processed = 0;  // codes actually examined
    uint64_t words_visited = 0;
    bool exhausted = false;  // stopped at the budget; partial results
    std::map<int64_t, uint64_t> histogram;  // d2 -> number of codes
    std::vector<int64_t> best_a;
    int64_t best_d2 = 0;
    uint64_t hits = 0;  // codes with a nonzero word of norm^2 <= w_sq
    BigRat prob_estimate;
    std::optional<MomentBound> moment;  // absent when p is not primitive mod q
    std::optional<DensityReport> density_report;
    double c_achieved = 0;  // |B(best_d2)| / (n p^{n/2})
};

// Largest integer w_sq with vol S_n(sqrt(w_sq)) <= c n p^{n/2}.
int64_t volume_matched_w_sq(const Params& pr, double c);

SearchResult run_search(const SearchConfig& cfg);

// Reference path: plain odometer scans, no orbit reduction, single thread.
SearchResult run_search_serial(const SearchConfig& cfg);

struct LemmaCheck {
    std::string name;
    std::string status;  // pass | fail | skipped | not-applicable
    std::string detail;
};

struct LemmaReport {
    int64_t q = 0, p = 0;
    std::vector<LemmaCheck> checks;
    int failures = 0;
};

// Runs the invariant suites (syndrome identity and distribution, code
// structure, orbit structure, first-moment chain) against one parameter
// pair. Failures are data, not exceptions; checks that exceed the budget are
// reported as skipped.
LemmaReport verify_lemmas(const Params& pr, uint64_t budget = 100'000'000);

std::string to_json(const SearchResult& r);
std::string to_json(const LemmaReport& r);
std::string histogram_csv(const SearchResult& r);

}  // namespace circ
