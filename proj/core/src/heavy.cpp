#include "hycount/heavy.hpp"

#include <algorithm>
#include <cmath>

#include "hycount/enumerate.hpp"

namespace hycount {

namespace {

using u128 = unsigned __int128;
constexpr u128 kU128Max = ~static_cast<u128>(0);

u128 sat_mul(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kU128Max / b) return kU128Max;
    return a * b;
}

u128 sat_shl(u128 a, std::uint32_t e) {
    if (a == 0) return 0;
    for (; e >= 32; e -= 32) {
        if (a > (kU128Max >> 32)) return kU128Max;
        a <<= 32;
    }
    if (e != 0) {
        if (a > (kU128Max >> e)) return kU128Max;
        a <<= e;
    }
    return a;
}

} // namespace

std::vector<SamplingVector> product_vectors(std::uint32_t k, std::uint64_t n,
                                            const Rat& lambda) {
    if (k == 0) throw std::invalid_argument("product_vectors: k must be >= 1");
    if (lambda.sign() <= 0) throw std::invalid_argument("product_vectors: lambda must be positive");
    const std::uint32_t lg = ceil_log2(n < 2 ? 2 : n);

    // Smallest exponent sum S with 2^S >= lambda.
    std::uint32_t min_sum = 0;
    {
        Rat cur(1);
        while (cur < lambda) {
            cur = cur.times_pow2(1);
            if (++min_sum > k * lg) return {}; // heavier than any admissible vector
        }
    }

    std::vector<SamplingVector> out;
    SamplingVector cur;
    cur.j.assign(k, 0);
    // Lexicographic enumeration of {0..lg}^k keeping sum >= min_sum.
    for (;;) {
        if (cur.exponent_sum() >= min_sum) out.push_back(cur);
        std::uint32_t pos = k;
        while (pos > 0) {
            --pos;
            if (cur.j[pos] < lg) {
                ++cur.j[pos];
                for (std::uint32_t p = pos + 1; p < k; ++p) cur.j[p] = 0;
                break;
            }
            if (pos == 0) return out;
        }
    }
}

SubVertexSet sample_by_vector(const SubVertexSet& V, const SamplingVector& P, RngStream rng) {
    if (P.j.size() != V.k()) throw std::invalid_argument("sample_by_vector: k mismatch");
    SubVertexSet out(V.k());
    std::uint64_t wstack[32];
    std::vector<std::uint64_t> wheap;
    std::vector<std::uint32_t> picked;
    for (std::uint32_t c = 0; c < V.k(); ++c) {
        const auto& src = V.ords(c);
        const std::uint32_t j = P.j[c];
        if (j == 0) {
            out.assign_class(c, src.data(), src.data() + src.size());
            continue;
        }
        // Exact Bernoulli(2^-j) coins: AND of j random words gives 64 coins at
        // a time.  The number of words drawn depends only on |src| and j, so
        // the stream stays aligned across runs.  Coins are buffered first so
        // the kept list can be allocated at its exact size.
        const std::size_t nw = (src.size() + 63) / 64;
        std::uint64_t* wbuf = wstack;
        if (nw > 32) {
            wheap.resize(nw);
            wbuf = wheap.data();
        }
        std::size_t kept = 0;
        for (std::size_t w = 0; w < nw; ++w) {
            std::uint64_t x = rng.next_u64();
            for (std::uint32_t t = 1; t < j; ++t) x &= rng.next_u64();
            const std::size_t len = std::min<std::size_t>(64, src.size() - w * 64);
            if (len < 64) x &= (1ull << len) - 1;
            wbuf[w] = x;
            kept += static_cast<std::size_t>(__builtin_popcountll(x));
        }
        picked.clear();
        picked.reserve(kept);
        for (std::size_t w = 0; w < nw; ++w) {
            std::uint64_t x = wbuf[w];
            while (x != 0) {
                const unsigned b = static_cast<unsigned>(__builtin_ctzll(x));
                picked.push_back(src[w * 64 + b]);
                x &= x - 1;
            }
        }
        out.assign_class(c, picked.data(), picked.data() + picked.size());
    }
    return out;
}

SubVertexSet sample_half(const SubVertexSet& V, RngStream rng) {
    SamplingVector half;
    half.j.assign(V.k(), 1);
    return sample_by_vector(V, half, rng);
}

SubVertexSet discovery_experiment(const DetectionOracle& oracle, const SubVertexSet& V,
                                  const SamplingVector& P, const ParamProfile& prof,
                                  RngStream rng) {
    const std::uint32_t k = oracle.dimension();
    if (V.k() != k || P.j.size() != k) throw std::invalid_argument("discovery: k mismatch");

    const std::uint64_t r = prof.r_discovery;
    const double q = prof.q_disc;
    const double hit_need = 3.0 * static_cast<double>(r) * q / 4.0;
    const double bot_gate = static_cast<double>(r) * q / 10.0;

    // Measure guard threshold: mu(V) * w(P) * (6 log2 n)^k, compared as
    // mu(U) * 2^sum(j) >= mu(V) * (6 log2 n)^k to stay in integers.
    const std::uint32_t wexp = P.exponent_sum();
    u128 rhs = V.measure();
    for (std::uint32_t i = 0; i < k; ++i) rhs = sat_mul(rhs, 6 * prof.log2n);

    std::vector<std::vector<std::uint32_t>> hits(k);
    for (std::uint32_t c = 0; c < k; ++c) hits[c].assign(V.ords(c).size(), 0);

    for (std::uint32_t j = 0; j <= prof.log2n; ++j) {
        const std::uint64_t sigma = static_cast<std::uint64_t>(1) << j;
        const std::uint64_t sigma_fni = std::max<std::uint64_t>(
            2, static_cast<std::uint64_t>(std::ceil(static_cast<double>(sigma) * 100.0 / q)));

        for (std::uint32_t c = 0; c < k; ++c) {
            std::fill(hits[c].begin(), hits[c].end(), 0);
        }
        std::uint64_t b = 0;

        for (std::uint64_t i = 1; i <= r; ++i) {
            SubVertexSet U = sample_by_vector(V, P, rng.child(rnglabel::kDiscoveryRep, j, i));
            if (sat_shl(U.measure(), wexp) >= rhs) continue; // guard tripped: skip
            NonIsolatedResult res = find_non_isolated(oracle, U, sigma_fni);
            if (res.overflow) {
                ++b;
                continue;
            }
            for (std::uint32_t c = 0; c < k; ++c) {
                // Both lists are sorted and found is a subset of base, so one
                // merge pass locates every position.
                const auto& base = V.ords(c);
                std::size_t bi = 0;
                for (std::uint32_t v : res.vertices.ords(c)) {
                    while (bi < base.size() && base[bi] < v) ++bi;
                    if (bi < base.size() && base[bi] == v) hits[c][bi]++;
                }
            }
        }

        if (static_cast<double>(b) <= bot_gate) {
            SubVertexSet out(k);
            for (std::uint32_t c = 0; c < k; ++c) {
                const auto& base = V.ords(c);
                for (std::size_t p = 0; p < base.size(); ++p) {
                    if (static_cast<double>(hits[c][p]) >= hit_need) out.push_back(c, base[p]);
                }
            }
            return out;
        }
    }
    return SubVertexSet(k); // no admissible threshold level
}

namespace {

// Shared loop for the budgeted and unbudgeted variants; stream labels must
// coincide so the two couple exactly under one seed.
HeavyResult discovery_union(const DetectionOracle& oracle, const SubVertexSet& V,
                            const Rat& lambda, const ParamProfile& prof, RngStream rng,
                            const std::uint64_t* zeta_cap) {
    HeavyResult out;
    out.vertices = SubVertexSet(V.k());
    const std::vector<SamplingVector> vectors =
        product_vectors(prof.k, prof.n_total, prof.lambda_mid(lambda));
    for (std::size_t pi = 0; pi < vectors.size(); ++pi) {
        SubVertexSet found = discovery_experiment(oracle, V, vectors[pi], prof,
                                                  rng.child(rnglabel::kHeavyVector, pi));
        out.vertices = union_sets(out.vertices, found);
        if (zeta_cap != nullptr && out.vertices.total_size() > *zeta_cap) {
            out.bot = true;
            out.vertices = SubVertexSet(V.k());
            return out;
        }
    }
    return out;
}

} // namespace

SubVertexSet find_heavy(const DetectionOracle& oracle, const SubVertexSet& V,
                        const Rat& lambda, const ParamProfile& prof, RngStream rng) {
    return discovery_union(oracle, V, lambda, prof, rng, nullptr).vertices;
}

HeavyResult find_heavy_bounded(const DetectionOracle& oracle, const SubVertexSet& V,
                               const Rat& lambda, const ParamProfile& prof, RngStream rng) {
    const std::uint64_t cap = prof.zeta_cap_u64();
    BudgetedOracle budgeted(oracle, prof.discovery_budget_u64());
    try {
        return discovery_union(budgeted, V, lambda, prof, rng, &cap);
    } catch (const BudgetExhausted&) {
        HeavyResult bot;
        bot.bot = true;
        bot.vertices = SubVertexSet(V.k());
        return bot;
    }
}

} // namespace hycount
