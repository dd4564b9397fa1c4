#pragma once

#include <cstdint>

#include "hycount/problems/graph.hpp"
#include "hycount/problems/ksum.hpp"
#include "hycount/universe.hpp"

namespace hycount {

// Plain enumeration counters — the ground truth every estimator and clever
// oracle is tested against.  All exponential in k; intended for small
// instances only.

// Colorful cliques of g with one vertex per class inside u.
std::uint64_t count_colorful_cliques(const KPartiteGraph& g, const SubVertexSet& u);
std::uint64_t count_colorful_cliques(const KPartiteGraph& g);

// Unordered k-cliques of a simple graph.
std::uint64_t count_cliques(const SimpleGraph& h, std::uint32_t k);

// Special dominating tuples within u: one vertex per copy class, distinct
// names, closed neighborhoods covering all of h.
std::uint64_t count_special_ds(const SimpleGraph& h, std::uint32_t k, const SubVertexSet& u);
std::uint64_t count_special_ds(const SimpleGraph& h, std::uint32_t k);

// Unordered k-subsets of distinct vertices that dominate h.
std::uint64_t count_dominating_sets(const SimpleGraph& h, std::uint32_t k);

// Zero-sum colorful tuples of a k-sum instance within u.
std::uint64_t count_zero_tuples(const KSumInstance& inst, const SubVertexSet& u);
std::uint64_t count_zero_tuples(const KSumInstance& inst);

// Ordered index k-tuples (repetition allowed) of one plain list that sum to
// zero — the uncolored side of the k-sum reduction identity.
std::uint64_t count_ordered_zero_ktuples(const std::vector<long long>& values, std::uint32_t k);

} // namespace hycount
