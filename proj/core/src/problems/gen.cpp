#include "hycount/problems/gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hycount {

SimpleGraph random_graph(std::uint32_t n, double density, RngStream& rng) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0, 1]");
    SimpleGraph g(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (rng.next_unit() < density) g.add_edge(u, v);
        }
    }
    return g;
}

void plant_cliques(SimpleGraph& g, std::uint32_t k, std::uint32_t count, RngStream& rng) {
    if (k < 2) throw std::invalid_argument("plant_cliques: k must be >= 2");
    if (g.n() < k) throw std::invalid_argument("plant_cliques: graph smaller than k");
    std::vector<std::uint32_t> pool(g.n());
    for (std::uint32_t t = 0; t < count; ++t) {
        std::iota(pool.begin(), pool.end(), 0u);
        // Partial Fisher-Yates: the first k entries become the clique.
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + rng.next_below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t j = i + 1; j < k; ++j) g.add_edge(pool[i], pool[j]);
        }
    }
}

std::vector<std::vector<std::uint32_t>> random_hyperedges(
    const std::vector<std::uint32_t>& parts, std::uint64_t m, RngStream& rng) {
    const std::uint32_t k = static_cast<std::uint32_t>(parts.size());
    if (k == 0) throw std::invalid_argument("random_hyperedges: need k >= 1 classes");

    unsigned __int128 space = 1;
    for (const std::uint32_t s : parts) {
        space *= s;
        if (space > (unsigned __int128)~(std::uint64_t)0) break; // saturate past u64
    }
    if ((unsigned __int128)m > space) {
        throw std::invalid_argument("random_hyperedges: m exceeds the tuple space");
    }

    const bool code_fits_u64 = space <= (unsigned __int128)~(std::uint64_t)0;
    const auto decode = [&](std::uint64_t code) {
        std::vector<std::uint32_t> e(k);
        for (std::uint32_t c = k; c-- > 0;) {
            e[c] = static_cast<std::uint32_t>(code % parts[c]);
            code /= parts[c];
        }
        return e;
    };

    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(m);

    if (code_fits_u64 && 2 * (unsigned __int128)m > space) {
        // Dense request: rejection would thrash, so pick m codes from the full
        // space by partial shuffle.  Only viable when the space is enumerable.
        const std::uint64_t sp = static_cast<std::uint64_t>(space);
        if (sp > (1ull << 27)) {
            throw std::invalid_argument(
                "random_hyperedges: request too dense for a space this large");
        }
        std::vector<std::uint64_t> codes(sp);
        std::iota(codes.begin(), codes.end(), std::uint64_t{0});
        for (std::uint64_t i = 0; i < m; ++i) {
            const std::uint64_t j = i + rng.next_below(sp - i);
            std::swap(codes[i], codes[j]);
        }
        for (std::uint64_t i = 0; i < m; ++i) edges.push_back(decode(codes[i]));
    } else if (code_fits_u64) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(2 * m));
        while (seen.size() < m) {
            std::uint64_t code = 0;
            for (std::uint32_t c = 0; c < k; ++c) code = code * parts[c] + rng.next_below(parts[c]);
            if (seen.insert(code).second) edges.push_back(decode(code));
        }
    } else {
        // Space beyond 2^64: collisions are essentially impossible but are
        // still handled exactly via sorted dedup over the tuples themselves.
        std::vector<std::vector<std::uint32_t>> drawn;
        while (true) {
            while (drawn.size() < m) {
                std::vector<std::uint32_t> e(k);
                for (std::uint32_t c = 0; c < k; ++c) {
                    e[c] = static_cast<std::uint32_t>(rng.next_below(parts[c]));
                }
                drawn.push_back(std::move(e));
            }
            std::sort(drawn.begin(), drawn.end());
            drawn.erase(std::unique(drawn.begin(), drawn.end()), drawn.end());
            if (drawn.size() == m) break;
        }
        edges = std::move(drawn);
    }

    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<long long> random_ksum_values(std::uint32_t n, std::uint32_t k, long long bound,
                                          std::uint32_t planted, RngStream& rng) {
    if (k < 2) throw std::invalid_argument("random_ksum_values: k must be >= 2");
    if (n < k) throw std::invalid_argument("random_ksum_values: need n >= k");
    if (bound < 1) throw std::invalid_argument("random_ksum_values: bound must be >= 1");

    const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
    const auto draw = [&]() { return static_cast<long long>(rng.next_below(width)) - bound; };

    std::vector<long long> values(n);
    for (auto& v : values) v = draw();

    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t t = 0; t < planted; ++t) {
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + rng.next_below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        // Retry until the first k-1 chosen entries sum within bound; after a
        // few failures shrink them so the completion is forced to fit.
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 16) {
                const long long small = std::max(1ll, bound / static_cast<long long>(k));
                for (std::uint32_t i = 0; i + 1 < k; ++i) {
                    values[pool[i]] =
                        static_cast<long long>(rng.next_below(2 * small + 1)) - small;
                }
            }
            long long s = 0;
            for (std::uint32_t i = 0; i + 1 < k; ++i) s += values[pool[i]];
            if (std::llabs(s) <= bound) {
                values[pool[k - 1]] = -s;
                break;
            }
            for (std::uint32_t i = 0; i + 1 < k; ++i) values[pool[i]] = draw();
        }
    }
    return values;
}

} // namespace hycount
