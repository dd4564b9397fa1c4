#include "hycount/problems/blowup.hpp"

#include <stdexcept>

namespace hycount {

DuplicateBlowup duplicate_blowup(const SubVertexSet& u, const PartitionedUniverse& uni) {
    if (u.k() != uni.k()) throw std::invalid_argument("duplicate_blowup: k mismatch");
    DuplicateBlowup out;
    out.copies.reserve(u.k());
    for (std::uint32_t c = 0; c < u.k(); ++c) {
        const std::uint64_t kept = u.ords(c).size();
        if (kept == 0) throw std::invalid_argument("duplicate_blowup: empty class");
        const std::uint64_t full = uni.class_size(c);
        const std::uint64_t s = (full + kept - 1) / kept;
        out.copies.push_back(std::max<std::uint64_t>(1, s));
        if (__builtin_mul_overflow(out.factor, out.copies.back(), &out.factor)) {
            throw std::overflow_error("duplicate_blowup: factor overflow");
        }
    }
    return out;
}

KPartiteGraph blow_up_graph(const KPartiteGraph& g, const SubVertexSet& u,
                            const std::vector<std::uint64_t>& copies) {
    if (u.k() != g.k() || copies.size() != g.k()) {
        throw std::invalid_argument("blow_up_graph: k mismatch");
    }
    std::vector<std::uint32_t> sizes(g.k());
    for (std::uint32_t c = 0; c < g.k(); ++c) {
        sizes[c] = static_cast<std::uint32_t>(u.ords(c).size() * copies[c]);
    }
    KPartiteGraph out(sizes);
    for (std::uint32_t c = 0; c < g.k(); ++c) {
        const auto& oc = u.ords(c);
        for (std::uint32_t d = c + 1; d < g.k(); ++d) {
            const auto& od = u.ords(d);
            for (std::size_t pc = 0; pc < oc.size(); ++pc) {
                for (std::size_t pd = 0; pd < od.size(); ++pd) {
                    if (!g.adjacent(c, oc[pc], d, od[pd])) continue;
                    for (std::uint64_t tc = 0; tc < copies[c]; ++tc) {
                        for (std::uint64_t td = 0; td < copies[d]; ++td) {
                            out.add_edge(c, static_cast<std::uint32_t>(pc * copies[c] + tc), d,
                                         static_cast<std::uint32_t>(pd * copies[d] + td));
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace hycount
