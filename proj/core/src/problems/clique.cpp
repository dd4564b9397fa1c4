#include "hycount/problems/clique.hpp"

#include <cmath>

#include "hycount/problems/matmul.hpp"
#include "hycount/problems/partition.hpp"
#include "hycount/rat.hpp"

namespace hycount {

namespace {

// Clique-inducing tuples over the given classes (ascending), flattened with
// stride = classes.size(); lexicographic in the kept ordinals.
std::vector<std::uint32_t> clique_tuples(const KPartiteGraph& g, const SubVertexSet& u,
                                         const std::vector<std::uint32_t>& classes) {
    std::vector<std::uint32_t> out;
    const std::size_t depth = classes.size();
    std::vector<std::uint32_t> cur(depth);
    // Iterative DFS over per-class position indices.
    std::vector<std::size_t> pos(depth, 0);
    std::size_t level = 0;
    while (true) {
        if (level == depth) {
            out.insert(out.end(), cur.begin(), cur.end());
            if (level == 0) break;
            --level;
            ++pos[level];
            continue;
        }
        const auto& ords = u.ords(classes[level]);
        bool advanced = false;
        while (pos[level] < ords.size()) {
            const std::uint32_t cand = ords[pos[level]];
            bool ok = true;
            for (std::size_t p = 0; p < level; ++p) {
                if (!g.adjacent(classes[p], cur[p], classes[level], cand)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                cur[level] = cand;
                ++level;
                if (level < depth) pos[level] = 0;
                advanced = true;
                break;
            }
            ++pos[level];
        }
        if (advanced) continue;
        if (level == 0) break;
        --level;
        ++pos[level];
    }
    return out;
}

bool cross_clique(const KPartiteGraph& g, const std::vector<std::uint32_t>& ca,
                  const std::uint32_t* ta, const std::vector<std::uint32_t>& cb,
                  const std::uint32_t* tb) {
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (!g.adjacent(ca[i], ta[i], cb[j], tb[j])) return false;
        }
    }
    return true;
}

BoolMatrix cross_matrix(const KPartiteGraph& g, const std::vector<std::uint32_t>& ca,
                        const std::vector<std::uint32_t>& ta,
                        const std::vector<std::uint32_t>& cb,
                        const std::vector<std::uint32_t>& tb) {
    const std::size_t na = ca.empty() ? 0 : ta.size() / ca.size();
    const std::size_t nb = cb.empty() ? 0 : tb.size() / cb.size();
    BoolMatrix m(na, nb);
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            if (cross_clique(g, ca, ta.data() + x * ca.size(), cb, tb.data() + y * cb.size())) {
                m.set(x, y);
            }
        }
    }
    return m;
}

std::vector<Rat> log_weights(const SubVertexSet& u, const KPartiteGraph& g) {
    std::uint32_t base = 2;
    for (std::uint32_t c = 0; c < g.k(); ++c) base = std::max(base, g.class_size(c));
    const double lb = std::log2(static_cast<double>(base));
    std::vector<Rat> w;
    w.reserve(u.k());
    for (std::uint32_t c = 0; c < u.k(); ++c) {
        const double sz = static_cast<double>(u.ords(c).size());
        w.push_back(Rat::from_double(std::log2(std::max(1.0, sz)) / lb));
    }
    return w;
}

} // namespace

CliqueOracle::CliqueOracle(KPartiteGraph g) : g_(std::move(g)), uni_(g_.sizes()) {}

bool CliqueOracle::query_three_singleton(const SubVertexSet& u) const {
    // One class per part: walk a's neighborhoods with the other two classes
    // masked to u; first common neighbor wins.
    std::uint32_t p = 0;
    for (std::uint32_t c = 1; c < 3; ++c) {
        if (u.ords(c).size() < u.ords(p).size()) p = c;
    }
    const std::uint32_t q = p == 0 ? 1 : 0;
    const std::uint32_t s = p == 2 ? 1 : 2;
    const std::size_t wq = g_.row_words(q), ws = g_.row_words(s);
    const std::uint64_t* mq = u.mask(q, wq);
    const std::uint64_t* ms = u.mask(s, ws);
    for (std::uint32_t a : u.ords(p)) {
        const std::uint64_t* aq = g_.row(p, a, q);
        const std::uint64_t* as = g_.row(p, a, s);
        for (std::size_t w = 0; w < wq; ++w) {
            std::uint64_t bits = aq[w] & mq[w];
            while (bits != 0) {
                const std::uint32_t b =
                    static_cast<std::uint32_t>((w << 6) + __builtin_ctzll(bits));
                const std::uint64_t* bs = g_.row(q, b, s);
                for (std::size_t t = 0; t < ws; ++t) {
                    if ((bs[t] & as[t] & ms[t]) != 0) return true;
                }
                bits &= bits - 1;
            }
        }
    }
    return false;
}

bool CliqueOracle::query(const SubVertexSet& u) const {
    if (u.k() != g_.k()) throw std::invalid_argument("CliqueOracle: k mismatch");
    if (u.any_class_empty()) return false;
    const std::uint32_t k = g_.k();
    if (k == 1) return true; // every vertex is a 1-clique
    if (k == 2) {
        const std::uint32_t p = u.ords(0).size() <= u.ords(1).size() ? 0 : 1;
        const std::uint32_t d = 1 - p;
        const std::size_t wd = g_.row_words(d);
        const std::uint64_t* md = u.mask(d, wd);
        for (std::uint32_t a : u.ords(p)) {
            const std::uint64_t* row = g_.row(p, a, d);
            for (std::size_t w = 0; w < wd; ++w) {
                if ((row[w] & md[w]) != 0) return true;
            }
        }
        return false;
    }
    if (k == 3) return query_three_singleton(u);

    const auto parts = partition_three(log_weights(u, g_));
    std::array<std::vector<std::uint32_t>, 3> tuples;
    for (std::size_t i = 0; i < 3; ++i) {
        tuples[i] = clique_tuples(g_, u, parts[i]);
        if (tuples[i].empty()) return false;
    }
    const BoolMatrix m01 = cross_matrix(g_, parts[0], tuples[0], parts[1], tuples[1]);
    const BoolMatrix m12 = cross_matrix(g_, parts[1], tuples[1], parts[2], tuples[2]);
    const BoolMatrix m20 = cross_matrix(g_, parts[2], tuples[2], parts[0], tuples[0]);
    return trace_nonzero(m01, m12, m20);
}

std::uint64_t CliqueOracle::count_by_trace(const SubVertexSet& u) const {
    if (u.k() != g_.k()) throw std::invalid_argument("CliqueOracle: k mismatch");
    if (u.any_class_empty()) return 0;
    const std::uint32_t k = g_.k();
    if (k == 1) return u.ords(0).size();
    if (k == 2) {
        const std::size_t w1 = g_.row_words(1);
        const std::uint64_t* m1 = u.mask(1, w1);
        std::uint64_t total = 0;
        for (std::uint32_t a : u.ords(0)) {
            const std::uint64_t* row = g_.row(0, a, 1);
            for (std::size_t w = 0; w < w1; ++w) {
                total += static_cast<std::uint64_t>(__builtin_popcountll(row[w] & m1[w]));
            }
        }
        return total;
    }
    const auto parts = partition_three(log_weights(u, g_));
    std::array<std::vector<std::uint32_t>, 3> tuples;
    for (std::size_t i = 0; i < 3; ++i) {
        tuples[i] = clique_tuples(g_, u, parts[i]);
        if (tuples[i].empty()) return 0;
    }
    const BoolMatrix m01 = cross_matrix(g_, parts[0], tuples[0], parts[1], tuples[1]);
    const BoolMatrix m12 = cross_matrix(g_, parts[1], tuples[1], parts[2], tuples[2]);
    const BoolMatrix m20 = cross_matrix(g_, parts[2], tuples[2], parts[0], tuples[0]);
    return trace_count(m01, m12, m20);
}

} // namespace hycount
