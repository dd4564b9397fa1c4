#include "hycount/problems/reference.hpp"

#include <functional>

namespace hycount {

namespace {

SubVertexSet full_set(std::uint32_t k, const std::vector<std::uint32_t>& sizes) {
    SubVertexSet u(k);
    for (std::uint32_t c = 0; c < k; ++c) {
        std::vector<std::uint32_t> ords(sizes[c]);
        for (std::uint32_t o = 0; o < sizes[c]; ++o) ords[o] = o;
        u.set_class(c, std::move(ords));
    }
    return u;
}

} // namespace

std::uint64_t count_colorful_cliques(const KPartiteGraph& g, const SubVertexSet& u) {
    if (u.k() != g.k()) throw std::invalid_argument("count_colorful_cliques: k mismatch");
    const std::uint32_t k = g.k();
    std::vector<std::uint32_t> chosen(k);
    std::uint64_t total = 0;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t c) {
        if (c == k) {
            ++total;
            return;
        }
        for (const std::uint32_t o : u.ords(c)) {
            bool ok = true;
            for (std::uint32_t p = 0; p < c; ++p) {
                if (!g.adjacent(p, chosen[p], c, o)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[c] = o;
                rec(c + 1);
            }
        }
    };
    rec(0);
    return total;
}

std::uint64_t count_colorful_cliques(const KPartiteGraph& g) {
    return count_colorful_cliques(g, full_set(g.k(), g.sizes()));
}

std::uint64_t count_cliques(const SimpleGraph& h, std::uint32_t k) {
    if (k == 0) return 1; // the empty clique
    std::vector<std::uint32_t> chosen(k);
    std::uint64_t total = 0;
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t c,
                                                                std::uint32_t from) {
        if (c == k) {
            ++total;
            return;
        }
        for (std::uint32_t v = from; v < h.n(); ++v) {
            bool ok = true;
            for (std::uint32_t p = 0; p < c; ++p) {
                if (!h.adjacent(chosen[p], v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[c] = v;
                rec(c + 1, v + 1);
            }
        }
    };
    rec(0, 0);
    return total;
}

namespace {

std::uint64_t count_ds_tuples(const SimpleGraph& h, std::uint32_t k, const SubVertexSet& u) {
    const std::size_t words = h.row_words();
    std::vector<std::uint64_t> full(words, 0);
    for (std::uint32_t v = 0; v < h.n(); ++v) full[v >> 6] |= 1ull << (v & 63);

    std::uint64_t total = 0;
    std::vector<std::uint32_t> chosen(k);
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t c) {
        if (c == k) {
            std::vector<std::uint64_t> undom = full;
            for (std::uint32_t p = 0; p < k; ++p) {
                const std::uint64_t* cover = h.closed_row(chosen[p]);
                for (std::size_t w = 0; w < words; ++w) undom[w] &= ~cover[w];
            }
            for (const std::uint64_t w : undom) {
                if (w != 0) return;
            }
            ++total;
            return;
        }
        for (const std::uint32_t o : u.ords(c)) {
            bool distinct = true;
            for (std::uint32_t p = 0; p < c; ++p) {
                if (chosen[p] == o) {
                    distinct = false;
                    break;
                }
            }
            if (distinct) {
                chosen[c] = o;
                rec(c + 1);
            }
        }
    };
    rec(0);
    return total;
}

} // namespace

std::uint64_t count_special_ds(const SimpleGraph& h, std::uint32_t k, const SubVertexSet& u) {
    if (u.k() != k) throw std::invalid_argument("count_special_ds: k mismatch");
    if (h.n() == 0) return 0;
    return count_ds_tuples(h, k, u);
}

std::uint64_t count_special_ds(const SimpleGraph& h, std::uint32_t k) {
    return count_special_ds(h, k, full_set(k, std::vector<std::uint32_t>(k, h.n())));
}

std::uint64_t count_dominating_sets(const SimpleGraph& h, std::uint32_t k) {
    if (h.n() == 0) return 0;
    const std::size_t words = h.row_words();
    std::vector<std::uint64_t> full(words, 0);
    for (std::uint32_t v = 0; v < h.n(); ++v) full[v >> 6] |= 1ull << (v & 63);

    std::uint64_t total = 0;
    std::vector<std::uint32_t> chosen(k);
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t c,
                                                                std::uint32_t from) {
        if (c == k) {
            std::vector<std::uint64_t> undom = full;
            for (std::uint32_t p = 0; p < k; ++p) {
                const std::uint64_t* cover = h.closed_row(chosen[p]);
                for (std::size_t w = 0; w < words; ++w) undom[w] &= ~cover[w];
            }
            for (const std::uint64_t w : undom) {
                if (w != 0) return;
            }
            ++total;
            return;
        }
        for (std::uint32_t v = from; v < h.n(); ++v) {
            chosen[c] = v;
            rec(c + 1, v + 1);
        }
    };
    rec(0, 0);
    return total;
}

std::uint64_t count_zero_tuples(const KSumInstance& inst, const SubVertexSet& u) {
    if (u.k() != inst.k()) throw std::invalid_argument("count_zero_tuples: k mismatch");
    std::uint64_t total = 0;
    std::function<void(std::uint32_t, __int128)> rec = [&](std::uint32_t c, __int128 sum) {
        if (c == inst.k()) {
            if (sum == 0) ++total;
            return;
        }
        for (const std::uint32_t o : u.ords(c)) rec(c + 1, sum + inst.classes[c][o]);
    };
    rec(0, 0);
    return total;
}

std::uint64_t count_zero_tuples(const KSumInstance& inst) {
    std::vector<std::uint32_t> sizes;
    sizes.reserve(inst.k());
    for (const auto& cls : inst.classes) sizes.push_back(static_cast<std::uint32_t>(cls.size()));
    return count_zero_tuples(inst, full_set(inst.k(), sizes));
}

std::uint64_t count_ordered_zero_ktuples(const std::vector<long long>& values, std::uint32_t k) {
    std::uint64_t total = 0;
    std::function<void(std::uint32_t, __int128)> rec = [&](std::uint32_t c, __int128 sum) {
        if (c == k) {
            if (sum == 0) ++total;
            return;
        }
        for (const long long v : values) rec(c + 1, sum + v);
    };
    rec(0, 0);
    return total;
}

} // namespace hycount
