#include "hycount/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hycount {

void QueryStats::record_log(std::uint64_t m) {
    std::lock_guard<std::mutex> lk(log_mu);
    if (measure_log.size() < log_cap) measure_log.push_back(m);
}

void QueryStats::reset() {
    total_queries.store(0);
    max_measure.store(0);
    measure_overflowed_u64.store(false);
    std::lock_guard<std::mutex> lk(log_mu);
    measure_log.clear();
}

// ---------------------------------------------------------------------------

PinnedOracle::PinnedOracle(const DetectionOracle& inner, VertexId v)
    : inner_(&inner), pin_(v), reduced_(inner.universe().without_class(v.cls)) {
    if (v.cls >= inner.dimension() || v.ord >= inner.universe().class_size(v.cls)) {
        throw std::out_of_range("pin: vertex outside universe");
    }
    // without_class() already rejects dropping the last class (k would hit 0).
}

bool PinnedOracle::query(const SubVertexSet& U) const {
    if (U.k() != reduced_.k()) throw std::invalid_argument("pinned query: k mismatch");
    SubVertexSet full(inner_->dimension());
    for (std::uint32_t c = 0, rc = 0; c < inner_->dimension(); ++c) {
        if (c == pin_.cls) {
            full.set_single(c, pin_.ord);
        } else {
            const auto& o = U.ords(rc++);
            full.assign_class(c, o.data(), o.data() + o.size());
        }
    }
    return inner_->query(full);
}

// ---------------------------------------------------------------------------

BruteForceOracle::BruteForceOracle(PartitionedUniverse universe,
                                   std::vector<std::vector<std::uint32_t>> edges)
    : uni_(std::move(universe)), k_(uni_.k()) {
    if (k_ > 16) throw std::invalid_argument("brute-force oracle: k > 16 unsupported");
    for (const auto& e : edges) {
        if (e.size() != k_) throw std::invalid_argument("edge arity != k");
        for (std::uint32_t c = 0; c < k_; ++c) {
            if (e[c] >= uni_.class_size(c)) throw std::invalid_argument("edge ordinal out of range");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    m_ = edges.size();

    flat_.reserve(m_ * k_);
    for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());

    words_.resize(k_);
    for (std::uint32_t c = 0; c < k_; ++c) words_[c] = (uni_.class_size(c) + 63) / 64;

    // CSR partner index per class.
    const std::uint32_t stride = k_ - 1;
    partner_flat_.resize(k_);
    partner_start_.resize(k_);
    for (std::uint32_t c = 0; c < k_; ++c) {
        auto& start = partner_start_[c];
        start.assign(uni_.class_size(c) + 1, 0);
        for (std::uint64_t e = 0; e < m_; ++e) start[flat_[e * k_ + c] + 1]++;
        for (std::size_t v = 1; v < start.size(); ++v) start[v] += start[v - 1];
        auto& pf = partner_flat_[c];
        pf.resize(m_ * stride);
        std::vector<std::uint64_t> cursor(start.begin(), start.end() - 1);
        for (std::uint64_t e = 0; e < m_; ++e) {
            const std::uint32_t v = flat_[e * k_ + c];
            std::uint32_t* dst = pf.data() + cursor[v] * stride;
            ++cursor[v];
            for (std::uint32_t j = 0; j < k_; ++j) {
                if (j != c) *dst++ = flat_[e * k_ + j];
            }
        }
    }
}

std::vector<std::uint32_t> BruteForceOracle::edge(std::uint64_t i) const {
    if (i >= m_) throw std::out_of_range("edge index");
    return std::vector<std::uint32_t>(flat_.begin() + static_cast<std::ptrdiff_t>(i * k_),
                                      flat_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_));
}

bool BruteForceOracle::query(const SubVertexSet& U) const {
    if (U.k() != k_) throw std::invalid_argument("query: k mismatch");
    std::uint32_t pivot = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::uint32_t c = 0; c < k_; ++c) {
        const std::size_t sz = U.class_count(c);
        if (sz == 0) return false;
        if (sz < best) {
            best = sz;
            pivot = c;
        }
    }
    // Partner masks in index order skipping the pivot class.
    const std::uint64_t* masks[16];
    for (std::uint32_t c = 0, s = 0; c < k_; ++c) {
        if (c != pivot) masks[s++] = U.mask(c, words_[c]);
    }
    const std::uint32_t stride = k_ - 1;
    const auto& pf = partner_flat_[pivot];
    const auto& start = partner_start_[pivot];
    for (std::uint32_t v : U.ords(pivot)) {
        std::uint64_t e = start[v];
        const std::uint64_t e_end = start[v + 1];
        const std::uint32_t* p = pf.data() + e * stride;
        for (; e < e_end; ++e, p += stride) {
            bool all = true;
            for (std::uint32_t s = 0; s < stride; ++s) {
                const std::uint32_t o = p[s];
                if (((masks[s][o >> 6] >> (o & 63u)) & 1u) == 0) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
    }
    return false;
}

bool BruteForceOracle::edge_in(std::uint64_t eid, const std::uint64_t* const* masks) const {
    for (std::uint32_t c = 0; c < k_; ++c) {
        const std::uint32_t o = flat_[eid * k_ + c];
        if (((masks[c][o >> 6] >> (o & 63u)) & 1u) == 0) return false;
    }
    return true;
}

std::uint64_t BruteForceOracle::exact_count(const SubVertexSet& U) const {
    if (U.k() != k_) throw std::invalid_argument("exact_count: k mismatch");
    if (U.any_class_empty()) return 0;
    const std::uint64_t* masks[16];
    for (std::uint32_t c = 0; c < k_; ++c) masks[c] = U.mask(c, words_[c]);
    std::uint64_t n = 0;
    for (std::uint64_t e = 0; e < m_; ++e) {
        if (edge_in(e, masks)) ++n;
    }
    return n;
}

std::uint64_t BruteForceOracle::exact_degree(VertexId v, const SubVertexSet& U) const {
    if (U.k() != k_) throw std::invalid_argument("exact_degree: k mismatch");
    if (v.cls >= k_ || v.ord >= uni_.class_size(v.cls)) {
        throw std::out_of_range("exact_degree: vertex outside universe");
    }
    const std::uint64_t* masks[16];
    for (std::uint32_t c = 0, s = 0; c < k_; ++c) {
        if (c != v.cls) masks[s++] = U.mask(c, words_[c]);
    }
    const std::uint32_t stride = k_ - 1;
    const auto& pf = partner_flat_[v.cls];
    const auto& start = partner_start_[v.cls];
    std::uint64_t deg = 0;
    std::uint64_t e = start[v.ord];
    const std::uint64_t e_end = start[v.ord + 1];
    const std::uint32_t* p = pf.data() + e * stride;
    for (; e < e_end; ++e, p += stride) {
        bool all = true;
        for (std::uint32_t s = 0; s < stride; ++s) {
            const std::uint32_t o = p[s];
            if (((masks[s][o >> 6] >> (o & 63u)) & 1u) == 0) {
                all = false;
                break;
            }
        }
        if (all) ++deg;
    }
    return deg;
}

} // namespace hycount
