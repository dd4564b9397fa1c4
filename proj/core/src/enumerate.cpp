#include "hycount/enumerate.hpp"

#include <stdexcept>

namespace hycount {

namespace {

struct QueryCounter {
    const DetectionOracle* oracle;
    std::uint64_t used = 0;

    bool ask(const SubVertexSet& U) {
        ++used;
        return oracle->query(U);
    }
};

} // namespace

NonIsolatedResult find_non_isolated(const DetectionOracle& oracle, const SubVertexSet& U,
                                    std::uint64_t sigma) {
    if (sigma < 2) throw std::invalid_argument("find_non_isolated: sigma must be >= 2");
    const std::uint32_t k = oracle.dimension();
    if (U.k() != k) throw std::invalid_argument("find_non_isolated: k mismatch");

    NonIsolatedResult res;
    res.vertices = SubVertexSet(k);
    QueryCounter q{&oracle};

    // A set with an empty class has no edges at all; otherwise one query on
    // the full set settles whether there is anything to find.
    if (U.any_class_empty() || !q.ask(U)) {
        res.queries_used = q.used;
        return res;
    }

    SubVertexSet work = U; // class h is replaced by candidate blocks in turn
    std::vector<std::uint32_t> cand, next;
    std::uint64_t found_total = 0;

    for (std::uint32_t h = 0; h < k; ++h) {
        cand.assign(U.ords(h).begin(), U.ords(h).end());

        // Block phase: balanced sigma-way splits of the survivors.
        while (cand.size() >= sigma) {
            next.clear();
            const std::uint64_t nblocks = sigma;
            const std::uint64_t base = cand.size() / nblocks;
            const std::uint64_t rem = cand.size() % nblocks;
            std::uint64_t truthy = 0;
            std::size_t pos = 0;
            for (std::uint64_t b = 0; b < nblocks; ++b) {
                const std::uint64_t len = base + (b < rem ? 1 : 0);
                if (len == 0) continue;
                work.assign_class(h, cand.data() + pos, cand.data() + pos + len);
                if (q.ask(work)) {
                    ++truthy;
                    next.insert(next.end(), cand.begin() + static_cast<std::ptrdiff_t>(pos),
                                cand.begin() + static_cast<std::ptrdiff_t>(pos + len));
                }
                pos += len;
            }
            if (next.size() == cand.size() && truthy >= sigma) {
                // Nothing was discarded and sigma non-empty blocks answered
                // true: each true block certifies a distinct non-isolated
                // vertex, so the class alone has >= sigma of them.
                res.overflow = true;
                res.queries_used = q.used;
                return res;
            }
            cand.swap(next);
        }

        // Singleton phase.
        res.vertices.reserve_class(h, cand.size());
        for (std::uint32_t v : cand) {
            work.set_single(h, v);
            if (q.ask(work)) {
                res.vertices.push_back(h, v);
                ++found_total;
            }
        }

        // Restore the full class before moving on.
        work.assign_class(h, U.ords(h).data(), U.ords(h).data() + U.ords(h).size());
    }

    if (found_total >= sigma) res.overflow = true;
    res.queries_used = q.used;
    return res;
}

namespace {

struct BccState {
    QueryCounter q;
    std::uint64_t cap = 0;
    std::uint64_t count = 0;
    bool overflow = false;
};

void bcc_recurse(BccState& st, SubVertexSet& W) {
    if (st.overflow) return;
    if (!st.q.ask(W)) return;

    // Lowest-indexed class with at least two candidates.
    std::uint32_t split = W.k();
    for (std::uint32_t c = 0; c < W.k(); ++c) {
        if (W.class_count(c) >= 2) {
            split = c;
            break;
        }
    }
    if (split == W.k()) {
        // All classes are singletons and the box answers true: one hyperedge.
        if (++st.count > st.cap) st.overflow = true;
        return;
    }

    std::vector<std::uint32_t> saved(W.ords(split));
    const std::size_t half = saved.size() / 2;
    W.assign_class(split, saved.data(), saved.data() + half);
    bcc_recurse(st, W);
    if (!st.overflow) {
        W.assign_class(split, saved.data() + half, saved.data() + saved.size());
        bcc_recurse(st, W);
    }
    W.set_class(split, std::move(saved));
}

} // namespace

BaseCaseResult base_case_count(const DetectionOracle& oracle, const SubVertexSet& U,
                               std::uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("base_case_count: cap must be >= 1");
    if (U.k() != oracle.dimension()) throw std::invalid_argument("base_case_count: k mismatch");

    BaseCaseResult res;
    if (U.any_class_empty()) return res;

    BccState st{QueryCounter{&oracle}, cap, 0, false};
    SubVertexSet work = U;
    bcc_recurse(st, work);
    res.overflow = st.overflow;
    res.count = st.overflow ? 0 : st.count;
    res.queries_used = st.q.used;
    return res;
}

} // namespace hycount
