#pragma once

// Heavy-vertex discovery.
//
// A vertex is Lambda-heavy when at least Lambda hyperedges run through it.
// find_heavy recovers (with high probability) every Lambda-heavy vertex while
// admitting no Lambda_low-light vertex, by running a discovery experiment for
// every admissible sampling vector and taking the union of the outputs.
// find_heavy_bounded is the budgeted variant: it gives up (Bot) once either a
// query budget is spent or the assembled set exceeds the size cap zeta.

#include <cstdint>
#include <vector>

#include "hycount/oracle.hpp"
#include "hycount/profile.hpp"
#include "hycount/rng.hpp"

namespace hycount {

// Per-class downsampling exponents: class i keeps vertices independently with
// probability 2^-j_i; the vector's weight is w(P) = 2^-sum(j_i).
struct SamplingVector {
    std::vector<std::uint32_t> j;

    std::uint32_t exponent_sum() const {
        std::uint32_t s = 0;
        for (auto e : j) s += e;
        return s;
    }
};

// All exponent tuples (j_1..j_k), j_i in {0..ceil(log2 n)}, whose weight is at
// most 1/lambda (i.e. 2^sum >= lambda), in lexicographic order.  n is the
// total vertex count of the top-level universe.
std::vector<SamplingVector> product_vectors(std::uint32_t k, std::uint64_t n,
                                            const Rat& lambda);

// Independent Bernoulli(2^-j) downsampling of each class of V, by exact coin
// flips drawn from `rng` (one word batch per 64 list entries per exponent
// level, so the stream consumption pattern depends only on |V| and P).
SubVertexSet sample_by_vector(const SubVertexSet& V, const SamplingVector& P, RngStream rng);

// Bernoulli(1/2) downsampling of all classes (the recursion's halving step).
SubVertexSet sample_half(const SubVertexSet& V, RngStream rng);

// One discovery experiment for sampling vector P (Algorithm: repeat
// r_discovery times per threshold level sigma = 2^j; vertices hit in at least
// 3*r*q/4 repetitions are returned at the first level whose overflow count is
// small).  A repetition whose sample trips the measure guard
// mu(U) >= mu(V) * w(P) * (6 log2 n)^k is skipped entirely; a repetition whose
// find_non_isolated overflows counts toward b_j and contributes no hits.
SubVertexSet discovery_experiment(const DetectionOracle& oracle, const SubVertexSet& V,
                                  const SamplingVector& P, const ParamProfile& prof,
                                  RngStream rng);

// Union of discovery experiments over product_vectors(k, n, lambda_mid).
SubVertexSet find_heavy(const DetectionOracle& oracle, const SubVertexSet& V,
                        const Rat& lambda, const ParamProfile& prof, RngStream rng);

struct HeavyResult {
    bool bot = false;
    SubVertexSet vertices;
};

// Budgeted find_heavy: at most budget_C * psi * zeta oracle queries and at
// most zeta assembled vertices; exceeding either yields Bot.  With the same
// stream and no truncation the output equals find_heavy's exactly.
HeavyResult find_heavy_bounded(const DetectionOracle& oracle, const SubVertexSet& V,
                               const Rat& lambda, const ParamProfile& prof, RngStream rng);

} // namespace hycount
