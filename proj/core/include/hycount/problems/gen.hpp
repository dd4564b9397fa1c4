#pragma once

// Seeded instance generators.  All randomness flows through the caller's
// RngStream, so one master seed reproduces every instance byte for byte.

#include <cstdint>
#include <vector>

#include "hycount/problems/graph.hpp"
#include "hycount/rng.hpp"

namespace hycount {

// Erdos-Renyi G(n, p): each unordered pair is an edge independently with
// probability `density`.
SimpleGraph random_graph(std::uint32_t n, double density, RngStream& rng);

// Overlay `count` cliques of size k onto g, each on k distinct vertices chosen
// uniformly.  Planted cliques may overlap; ground truth for the resulting
// clique count always comes from exhaustive counting, never from `count`.
void plant_cliques(SimpleGraph& g, std::uint32_t k, std::uint32_t count, RngStream& rng);

// Exactly m distinct hyperedges over the given class sizes, sampled uniformly
// without replacement (each edge: one ordinal per class, in class order).
// Output is sorted lexicographically so equal seeds give identical files.
// Throws std::invalid_argument if m exceeds the tuple space, or if the
// request is denser than half of a tuple space too large to enumerate.
std::vector<std::vector<std::uint32_t>> random_hyperedges(
    const std::vector<std::uint32_t>& parts, std::uint64_t m, RngStream& rng);

// n values uniform in [-bound, bound], then `planted` zero-sum k-tuples are
// forced in by overwriting one entry of k freshly chosen distinct positions
// with the negated sum of the other k-1.  Requires n >= k >= 2, bound >= 1.
// The realized number of zero tuples can exceed `planted` by accident; exact
// counts come from enumeration.
std::vector<long long> random_ksum_values(std::uint32_t n, std::uint32_t k, long long bound,
                                          std::uint32_t planted, RngStream& rng);

} // namespace hycount
