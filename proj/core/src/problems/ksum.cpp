#include "hycount/problems/ksum.hpp"

#include <algorithm>
#include <stdexcept>

#include "hycount/problems/partition.hpp"

namespace hycount {

namespace {

constexpr __int128 kI128Max = static_cast<__int128>((~static_cast<unsigned __int128>(0)) >> 1);

__int128 checked_mul_i128(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ksum: shift overflow");
    return r;
}

// Partial sums of one vertex per class over the given class group; the empty
// group contributes the single sum 0.
std::vector<__int128> partial_sums(const KSumInstance& inst, const SubVertexSet& u,
                                   const std::vector<std::uint32_t>& classes) {
    std::vector<__int128> sums{0};
    for (std::uint32_t c : classes) {
        const auto& ords = u.ords(c);
        std::vector<__int128> next;
        next.reserve(sums.size() * ords.size());
        for (const __int128 s : sums) {
            for (const std::uint32_t o : ords) next.push_back(s + inst.classes[c][o]);
        }
        sums = std::move(next);
    }
    return sums;
}

} // namespace

KSumInstance ksum_to_colorful(const std::vector<long long>& values, std::uint32_t k,
                              long long bound) {
    if (k < 1) throw std::invalid_argument("ksum_to_colorful: k must be >= 1");
    if (bound < 0) throw std::invalid_argument("ksum_to_colorful: negative bound");
    for (const long long v : values) {
        if (v > bound || v < -bound) {
            throw std::invalid_argument("ksum_to_colorful: value exceeds declared bound");
        }
    }

    const __int128 unit = checked_mul_i128(static_cast<__int128>(bound), 10);
    std::vector<__int128> offsets(k, 0);
    __int128 total = 0;
    __int128 p3 = 1;
    for (std::uint32_t i = 0; i + 1 < k; ++i) {
        p3 = checked_mul_i128(p3, 3);
        offsets[i] = checked_mul_i128(p3, unit);
        if (__builtin_add_overflow(total, offsets[i], &total)) {
            throw std::overflow_error("ksum: shift overflow");
        }
    }
    offsets[k - 1] = -total;

    // A query sums one shifted value per class; insist k*(bound + max offset)
    // leaves headroom so no partial sum can wrap.
    __int128 max_mag = static_cast<__int128>(bound) + total;
    __int128 budget;
    if (__builtin_mul_overflow(max_mag, static_cast<__int128>(k) + 1, &budget) ||
        budget > kI128Max / 2) {
        throw std::overflow_error("ksum: instance exceeds 128-bit headroom");
    }

    KSumInstance inst;
    inst.bound = bound;
    inst.classes.assign(k, {});
    for (std::uint32_t i = 0; i < k; ++i) {
        inst.classes[i].reserve(values.size());
        for (const long long v : values) {
            inst.classes[i].push_back(static_cast<__int128>(v) + offsets[i]);
        }
    }
    return inst;
}

KSumOracle::KSumOracle(KSumInstance inst) : inst_(std::move(inst)), uni_([&] {
    if (inst_.classes.empty()) throw std::invalid_argument("KSumOracle: k must be >= 1");
    std::vector<std::uint32_t> sizes;
    sizes.reserve(inst_.classes.size());
    for (const auto& cls : inst_.classes) {
        sizes.push_back(static_cast<std::uint32_t>(cls.size()));
    }
    return PartitionedUniverse(sizes);
}()) {}

bool KSumOracle::query(const SubVertexSet& u) const {
    if (u.k() != inst_.k()) throw std::invalid_argument("KSumOracle: k mismatch");
    if (u.any_class_empty()) return false;

    std::vector<std::uint64_t> sizes(inst_.k());
    for (std::uint32_t c = 0; c < inst_.k(); ++c) sizes[c] = u.ords(c).size();
    const auto parts = partition_two(sizes);

    std::vector<__int128> left = partial_sums(inst_, u, parts[0]);
    std::vector<__int128> right = partial_sums(inst_, u, parts[1]);
    if (left.size() > right.size()) left.swap(right);
    std::sort(right.begin(), right.end());
    for (const __int128 s : left) {
        if (std::binary_search(right.begin(), right.end(), -s)) return true;
    }
    return false;
}

} // namespace hycount
