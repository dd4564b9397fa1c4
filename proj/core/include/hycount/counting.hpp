#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "hycount/oracle.hpp"
#include "hycount/profile.hpp"
#include "hycount/rat.hpp"
#include "hycount/rng.hpp"
#include "hycount/universe.hpp"

namespace hycount {

// Counters for off-contract paths.  All atomics so concurrent median
// repetitions can bump them freely; purely diagnostic, never read by the
// estimator itself.
struct Diagnostics {
    std::atomic<std::uint64_t> deg_bot_zeroed{0};  // degree fallback median came back Bot
    std::atomic<std::uint64_t> heavy_bots{0};      // heavy-set discovery hit budget/size cap
    std::atomic<std::uint64_t> base_overflows{0};  // exact base case exceeded its cap
    std::atomic<std::uint64_t> median_bots{0};     // a median round returned Bot
    void reset();
};

// One recursion level of the main estimator, for debugging runs.
struct TraceEntry {
    enum class Branch { kBot, kBaseExact, kBaseOverflow, kRecurse };
    std::uint32_t level = 0;
    Rat lambda;                             // threshold at this level
    std::vector<std::uint32_t> class_sizes; // |V| per class on entry
    std::uint64_t heavy_found = 0;          // |V_lambda| discovered
    Rat heavy_estimate;                     // contribution counted at this level
    Branch branch = Branch::kRecurse;
};

// Thread-safe capped collector of TraceEntry.  With concurrent median
// repetitions the interleaving across repetitions is nondeterministic; use a
// single thread when a reproducible trace is needed.
class TraceSink {
public:
    explicit TraceSink(std::size_t cap = 100000) : cap_(cap) {}
    void record(TraceEntry entry);
    std::vector<TraceEntry> snapshot() const;
    bool truncated() const;

private:
    mutable std::mutex mu_;
    std::size_t cap_;
    bool truncated_ = false;
    std::vector<TraceEntry> entries_;
};

struct EstimatorOptions {
    // Production mode: finite discovery budget, heavy-set size cap, base-case
    // cap.  false removes all three (never returns Bot from those paths);
    // with the same seed and no Bot the two modes produce identical values.
    bool budgeted = true;
    // Concurrency across median repetitions; everything below one repetition
    // runs sequentially, so results match the single-threaded run exactly.
    unsigned threads = 1;
    Diagnostics* diag = nullptr;
    TraceSink* trace = nullptr;
};

// Value-or-Bot outcome of the recursive estimator and its median wrapper.
struct Estimate {
    bool bot = false;
    Rat value;
    static Estimate make_bot() { return Estimate{true, Rat(0)}; }
    static Estimate of(Rat v) { return Estimate{false, std::move(v)}; }
};

// Value-or-TooLarge outcome of the doubling search.
struct GuessOutcome {
    bool too_large = false;
    Rat value;
};

// Lower median: sort ascending, take index floor((len-1)/2).
Rat median_of(std::vector<Rat> values);

// Estimate of the degree of v inside U (edges of U containing v), reliable
// above the threshold lambda_prime.  k = 1 answers the singleton query
// exactly; otherwise the oracle is pinned at v and the (k-1)-dimensional
// estimator runs on U minus v's class.  A Bot from the median fallback is
// returned as 0 and counted in Diagnostics::deg_bot_zeroed.
Rat deg_approx(const DetectionOracle& oracle, VertexId v, const Rat& lambda_prime,
               const SubVertexSet& U, const ParamProfile& prof, RngStream rng,
               const EstimatorOptions& opts = {});

// Sum of degree estimates over the discovered heavy vertices, each taken in
// the set with all previously processed heavy vertices removed (ascending
// (class, ordinal) order), so shared edges are not double counted.
Rat count_heavy(const DetectionOracle& oracle, const SubVertexSet& V,
                const SubVertexSet& heavy, const Rat& lambda_low, const ParamProfile& prof,
                RngStream rng, const EstimatorOptions& opts = {});

// Main recursion: discover a superset of lambda-heavy vertices, count their
// edges via degree estimates, then recurse on a half-sample of the rest with
// threshold lambda*2^-k and scale by 2^k.  At lambda <= 1 the exact
// bounded counter runs on the discovered set.  Bot propagates unchanged.
Estimate recursive_apx(const DetectionOracle& oracle, const SubVertexSet& V,
                       const Rat& lambda, const ParamProfile& prof, RngStream rng,
                       const EstimatorOptions& opts = {});

// r_median independent repetitions of recursive_apx at threshold
// L*eps'^2/Q; Bot when at least a tenth of them fail, otherwise the lower
// median of the successful values.
Estimate median_apx(const DetectionOracle& oracle, const SubVertexSet& V, const Rat& L,
                    const ParamProfile& prof, RngStream rng,
                    const EstimatorOptions& opts = {});

// Doubling search: try L, 2L, 4L, ... for k*ceil(log2 n) + 1 rounds; the
// first non-Bot median at or above its own threshold is the value; a non-Bot
// median below threshold (or round exhaustion) means L was too large.
GuessOutcome guess_apx(const DetectionOracle& oracle, const SubVertexSet& V, const Rat& L,
                       const ParamProfile& prof, RngStream rng,
                       const EstimatorOptions& opts = {});

struct ApproxResult {
    Rat estimate;
    std::uint32_t terminal_index = 0; // halving index at which the search stopped
    Rat terminal_L;                   // mu(V)*2^-terminal_index
    bool degenerate_zero = false;     // every guess said TooLarge (or mu(V) = 0)
};

// Top-level estimator: run the doubling search at L = mu(V)*2^-i for
// i = 0..k*ceil(log2 n) and return the first value.  mu(V) = 0 returns 0
// without queries; a single-vertex universe is answered by one exact query;
// all-TooLarge returns 0 (the m = 0 convention).
ApproxResult hyperedge_approx(const DetectionOracle& oracle, const SubVertexSet& V,
                              const ParamProfile& prof, RngStream rng,
                              const EstimatorOptions& opts = {});

// The a-priori bound on any single query's measure for a run that stopped at
// res.terminal_L: max(zeta^k, terminal_L * (6*log2 n)^k * xi).  nullopt when
// the bound is not representable (astronomically large faithful parameters),
// in which case any check against it passes vacuously.
std::optional<Rat> declared_measure_bound(const ParamProfile& prof, const ApproxResult& res);

} // namespace hycount
