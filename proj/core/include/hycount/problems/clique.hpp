#pragma once

#include <cstdint>

#include "hycount/oracle.hpp"
#include "hycount/problems/graph.hpp"

namespace hycount {

// Detection oracle for colorful cliques of a k-partite graph.  k <= 2 scans
// directly.  k >= 3 groups the classes into three parts with balanced
// log-size weights, lists the clique-inducing tuples of each part, connects
// two tuples when their union stays a clique, and answers via a nonzero
// trace of the triple matrix product.  When every part is a single class the
// tuple lists are the classes themselves and the matrices are masked
// adjacency rows, walked with early exit instead of being materialized.
class CliqueOracle final : public DetectionOracle {
public:
    explicit CliqueOracle(KPartiteGraph g);

    std::uint32_t dimension() const override { return g_.k(); }
    const PartitionedUniverse& universe() const override { return uni_; }
    bool query(const SubVertexSet& u) const override;

    // Exact colorful-clique count through the same partition machinery with
    // an integer trace; test-scale only (materializes the tuple lists).
    std::uint64_t count_by_trace(const SubVertexSet& u) const;

    const KPartiteGraph& graph() const { return g_; }

private:
    bool query_three_singleton(const SubVertexSet& u) const;

    KPartiteGraph g_;
    PartitionedUniverse uni_;
};

} // namespace hycount
