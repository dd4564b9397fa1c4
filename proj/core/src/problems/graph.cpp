#include "hycount/problems/graph.hpp"

#include <stdexcept>

namespace hycount {

SimpleGraph::SimpleGraph(std::uint32_t n)
    : n_(n), row_words_((std::size_t(n) + 63) / 64), adj_(std::size_t(n) * row_words_, 0),
      closed_(std::size_t(n) * row_words_, 0) {
    for (std::uint32_t u = 0; u < n_; ++u) {
        closed_[std::size_t(u) * row_words_ + (u >> 6)] |= 1ull << (u & 63);
    }
}

void SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("SimpleGraph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("SimpleGraph::add_edge: self-loop");
    adj_[std::size_t(u) * row_words_ + (v >> 6)] |= 1ull << (v & 63);
    adj_[std::size_t(v) * row_words_ + (u >> 6)] |= 1ull << (u & 63);
    closed_[std::size_t(u) * row_words_ + (v >> 6)] |= 1ull << (v & 63);
    closed_[std::size_t(v) * row_words_ + (u >> 6)] |= 1ull << (u & 63);
}

std::uint64_t SimpleGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint64_t w : adj_) twice += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        for (std::uint32_t v = u + 1; v < n_; ++v) {
            if ((r[v >> 6] >> (v & 63)) & 1u) out.emplace_back(u, v);
        }
    }
    return out;
}

KPartiteGraph::KPartiteGraph(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("KPartiteGraph: k must be >= 1");
    const std::uint32_t k = this->k();
    row_words_.resize(k);
    for (std::uint32_t d = 0; d < k; ++d) row_words_[d] = (std::size_t(sizes_[d]) + 63) / 64;
    blocks_.resize(std::size_t(k) * k);
    for (std::uint32_t c = 0; c < k; ++c) {
        for (std::uint32_t d = 0; d < k; ++d) {
            if (c == d) continue;
            blocks_[std::size_t(c) * k + d].assign(std::size_t(sizes_[c]) * row_words_[d], 0);
        }
    }
}

void KPartiteGraph::add_edge(std::uint32_t c, std::uint32_t u, std::uint32_t d, std::uint32_t v) {
    if (c == d) throw std::invalid_argument("KPartiteGraph::add_edge: intra-class edge");
    if (c >= k() || d >= k() || u >= sizes_[c] || v >= sizes_[d]) {
        throw std::out_of_range("KPartiteGraph::add_edge: endpoint out of range");
    }
    blocks_[std::size_t(c) * k() + d][std::size_t(u) * row_words_[d] + (v >> 6)] |= 1ull << (v & 63);
    blocks_[std::size_t(d) * k() + c][std::size_t(v) * row_words_[c] + (u >> 6)] |= 1ull << (u & 63);
}

const std::uint64_t* KPartiteGraph::row(std::uint32_t c, std::uint32_t u, std::uint32_t d) const {
    return blocks_[std::size_t(c) * k() + d].data() + std::size_t(u) * row_words_[d];
}

KPartiteGraph clique_to_kpartite(const SimpleGraph& h, std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("clique_to_kpartite: k must be >= 2");
    KPartiteGraph g(std::vector<std::uint32_t>(k, h.n()));
    for (const auto& [u, v] : h.edges()) {
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t j = i + 1; j < k; ++j) {
                g.add_edge(i, u, j, v);
                g.add_edge(i, v, j, u);
            }
        }
    }
    return g;
}

DsReduction ds_to_kpartite(const SimpleGraph& h, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("ds_to_kpartite: k must be >= 1");
    DsReduction red;
    red.k = k;
    red.graph = KPartiteGraph(std::vector<std::uint32_t>(k, h.n()));
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = i + 1; j < k; ++j) {
            for (const auto& [u, v] : h.edges()) {
                red.graph.add_edge(i, u, j, v);
                red.graph.add_edge(i, v, j, u);
            }
            for (std::uint32_t u = 0; u < h.n(); ++u) {
                red.graph.add_edge(i, u, j, u); // copies of one vertex stay connected
            }
        }
    }
    return red;
}

} // namespace hycount
