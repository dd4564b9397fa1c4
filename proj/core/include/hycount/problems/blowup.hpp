#pragma once

#include <cstdint>
#include <vector>

#include "hycount/problems/graph.hpp"
#include "hycount/universe.hpp"

namespace hycount {

// Duplication description for lifting a sub-universe back to full class
// sizes: every kept vertex of class c is copied `copies[c]` times, where
// copies[c] = ceil(|V_c| / |U_c|), multiplying each solution by `factor`.
struct DuplicateBlowup {
    std::vector<std::uint64_t> copies;
    std::uint64_t factor = 1;
};

// Throws std::invalid_argument when a class of u is empty.
DuplicateBlowup duplicate_blowup(const SubVertexSet& u, const PartitionedUniverse& uni);

// Test utility realizing the blow-up on an explicit k-partite graph: class c
// of the result has |U_c|*copies[c] vertices, copy t of kept position p
// landing at ordinal p*copies[c] + t, with adjacency inherited.
KPartiteGraph blow_up_graph(const KPartiteGraph& g, const SubVertexSet& u,
                            const std::vector<std::uint64_t>& copies);

} // namespace hycount
