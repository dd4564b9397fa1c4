#pragma once

#include <cstdint>

#include "hycount/oracle.hpp"
#include "hycount/problems/graph.hpp"

namespace hycount {

// Detection oracle for special k-dominating sets: tuples with one vertex per
// copy class, pairwise-distinct original names, whose closed neighborhoods
// cover the base graph.  k = 1 scans the class directly; k >= 2 splits the
// classes into two groups with balanced tuple products, lists the
// name-distinct tuples of each group with their undominated-vertex bitsets,
// and accepts when some cross pair has disjoint names and jointly empty
// undominated set (the zero entries of the integer product of the two
// undominated-count matrices).
class DsOracle final : public DetectionOracle {
public:
    DsOracle(SimpleGraph base, std::uint32_t k);

    std::uint32_t dimension() const override { return k_; }
    const PartitionedUniverse& universe() const override { return uni_; }
    bool query(const SubVertexSet& u) const override;

    const SimpleGraph& base() const { return h_; }

private:
    SimpleGraph h_;
    std::uint32_t k_;
    PartitionedUniverse uni_;
    std::vector<bool> dominates_alone_; // closed neighborhood covers everything
};

} // namespace hycount
