#pragma once

// Deterministic enumeration subroutines built on the detection oracle:
//
//  * find_non_isolated -- the exact set of vertices incident to at least one
//    hyperedge of G[U], or an overflow verdict when that set is too large.
//  * base_case_count   -- exact hyperedge count of G[U] by recursive halving,
//    capped.
//
// Query-count guarantees (documented constants, checked by tests):
//   find_non_isolated: <= kFniQueryConst * k * sigma * ceil(log2 n) + 1
//   base_case_count:   <= kBccQueryConst * (count+1) * k * ceil(log2 n) + 1

#include <cstdint>

#include "hycount/oracle.hpp"

namespace hycount {

inline constexpr std::uint64_t kFniQueryConst = 8;
inline constexpr std::uint64_t kBccQueryConst = 8;

struct NonIsolatedResult {
    bool overflow = false;     // more than sigma-ish non-isolated vertices
    SubVertexSet vertices;     // exact non-isolated set when !overflow
    std::uint64_t queries_used = 0;
};

// Exact non-isolated set of G[U], processing classes independently: the
// surviving candidate list of a class is repeatedly split into sigma balanced
// blocks (sizes differing by at most one, ordinal order); blocks answering
// false are discarded; a round that discards nothing while >= sigma non-empty
// blocks answer true is an overflow witness.  Once fewer than sigma candidates
// survive they are tested as singletons.  Overflow is reported on a per-class
// witness or when the assembled set reaches sigma vertices.  sigma >= 2.
NonIsolatedResult find_non_isolated(const DetectionOracle& oracle, const SubVertexSet& U,
                                    std::uint64_t sigma);

struct BaseCaseResult {
    bool overflow = false;     // more than `cap` hyperedges
    std::uint64_t count = 0;   // exact count when !overflow
    std::uint64_t queries_used = 0;
};

// Exact hyperedge count of G[U]: recursively split the lowest-indexed class
// with >= 2 candidates into halves and recurse into halves answering true;
// an all-singleton box answering true is one hyperedge.  Stops with overflow
// once more than `cap` edges are found (cap >= 1).
BaseCaseResult base_case_count(const DetectionOracle& oracle, const SubVertexSet& U,
                               std::uint64_t cap);

} // namespace hycount
