#pragma once

#include <cstdint>
#include <vector>

#include "hycount/oracle.hpp"

namespace hycount {

// Colorful k-sum instance: k value lists; a hyperedge is a choice of one
// value per list summing to zero.  Values are held in 128-bit integers so
// shifted constructions keep exact headroom.
struct KSumInstance {
    std::vector<std::vector<__int128>> classes;
    __int128 bound = 0; // declared magnitude bound on the original values

    std::uint32_t k() const { return static_cast<std::uint32_t>(classes.size()); }
};

// Turn one list into a colorful instance whose zero-sum tuples are exactly
// the ordered zero-sum k-tuples of the input: class i gets the values
// shifted by 3^(i+1)*10*bound and the last class absorbs the negative of the
// shift total, so per-class picks always cancel the offsets.  Throws
// std::overflow_error when the shifted magnitudes would not leave headroom
// for summing k of them in 128 bits.
KSumInstance ksum_to_colorful(const std::vector<long long>& values, std::uint32_t k,
                              long long bound);

// Meet-in-the-middle detection oracle: split the classes into two groups with
// balanced tuple products, enumerate each group's partial sums, sort the
// larger table once, and look up the negation of every sum in the smaller.
class KSumOracle final : public DetectionOracle {
public:
    explicit KSumOracle(KSumInstance inst);

    std::uint32_t dimension() const override { return inst_.k(); }
    const PartitionedUniverse& universe() const override { return uni_; }
    bool query(const SubVertexSet& u) const override;

    const KSumInstance& instance() const { return inst_; }

private:
    KSumInstance inst_;
    PartitionedUniverse uni_;
};

} // namespace hycount
