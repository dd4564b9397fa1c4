#include "hycount/problems/domset.hpp"

#include "hycount/problems/partition.hpp"

namespace hycount {

namespace {

// Name-distinct tuples over the given classes; for each, the bitset of base
// vertices left undominated and the bitset of names used.  Rows are stored
// flattened with `words` words per tuple.
struct SideTuples {
    std::vector<std::uint64_t> undominated;
    std::vector<std::uint64_t> names;
    std::size_t count = 0;
};

SideTuples enumerate_side(const SimpleGraph& h, const SubVertexSet& u,
                          const std::vector<std::uint32_t>& classes, std::size_t words) {
    SideTuples side;
    std::vector<std::uint64_t> undom(words), used(words);
    // Everything starts undominated.
    for (std::uint32_t v = 0; v < h.n(); ++v) undom[v >> 6] |= 1ull << (v & 63);

    struct Frame {
        std::vector<std::uint64_t> undom, used;
    };
    std::vector<Frame> stack(classes.size() + 1);
    stack[0].undom = undom;
    stack[0].used.assign(words, 0);

    std::vector<std::size_t> pos(classes.size() + 1, 0);
    std::size_t level = 0;
    while (true) {
        if (level == classes.size()) {
            side.undominated.insert(side.undominated.end(), stack[level].undom.begin(),
                                    stack[level].undom.end());
            side.names.insert(side.names.end(), stack[level].used.begin(),
                              stack[level].used.end());
            ++side.count;
            if (level == 0) break;
            --level;
            ++pos[level];
            continue;
        }
        const auto& ords = u.ords(classes[level]);
        bool advanced = false;
        while (pos[level] < ords.size()) {
            const std::uint32_t o = ords[pos[level]];
            if ((stack[level].used[o >> 6] >> (o & 63)) & 1u) {
                ++pos[level]; // name already used: not distinct
                continue;
            }
            auto& next = stack[level + 1];
            next.undom = stack[level].undom;
            next.used = stack[level].used;
            const std::uint64_t* cover = h.closed_row(o);
            for (std::size_t w = 0; w < words; ++w) next.undom[w] &= ~cover[w];
            next.used[o >> 6] |= 1ull << (o & 63);
            ++level;
            if (level < classes.size()) pos[level] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (level == 0) break;
        --level;
        ++pos[level];
    }
    return side;
}

} // namespace

DsOracle::DsOracle(SimpleGraph base, std::uint32_t k)
    : h_(std::move(base)), k_(k),
      uni_(std::vector<std::uint32_t>(std::max<std::uint32_t>(k, 1), h_.n())) {
    if (k_ < 1) throw std::invalid_argument("DsOracle: k must be >= 1");
    dominates_alone_.assign(h_.n(), false);
    for (std::uint32_t v = 0; v < h_.n(); ++v) {
        std::uint64_t covered = 0;
        const std::uint64_t* row = h_.closed_row(v);
        for (std::size_t w = 0; w < h_.row_words(); ++w) {
            covered += static_cast<std::uint64_t>(__builtin_popcountll(row[w]));
        }
        dominates_alone_[v] = covered == h_.n();
    }
}

bool DsOracle::query(const SubVertexSet& u) const {
    if (u.k() != k_) throw std::invalid_argument("DsOracle: k mismatch");
    if (u.any_class_empty()) return false;
    if (h_.n() == 0) return false;
    if (k_ == 1) {
        for (std::uint32_t v : u.ords(0)) {
            if (dominates_alone_[v]) return true;
        }
        return false;
    }

    std::vector<std::uint64_t> sizes(k_);
    for (std::uint32_t c = 0; c < k_; ++c) sizes[c] = u.ords(c).size();
    const auto parts = partition_two(sizes);

    const std::size_t words = h_.row_words();
    const SideTuples a = enumerate_side(h_, u, parts[0], words);
    if (a.count == 0) return false;
    const SideTuples b = enumerate_side(h_, u, parts[1], words);
    if (b.count == 0) return false;

    // Zero joint undominated count plus name-disjointness makes a hyperedge.
    for (std::size_t x = 0; x < a.count; ++x) {
        const std::uint64_t* ux = a.undominated.data() + x * words;
        const std::uint64_t* nx = a.names.data() + x * words;
        for (std::size_t y = 0; y < b.count; ++y) {
            const std::uint64_t* uy = b.undominated.data() + y * words;
            const std::uint64_t* ny = b.names.data() + y * words;
            bool ok = true;
            for (std::size_t w = 0; w < words; ++w) {
                if ((ux[w] & uy[w]) != 0 || (nx[w] & ny[w]) != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

} // namespace hycount
