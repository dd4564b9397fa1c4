#pragma once

#include <cstdint>
#include <vector>

#include "hycount/universe.hpp"

namespace hycount {

// Undirected simple graph on vertices 0..n-1; adjacency kept as bitset rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    std::size_t row_words() const { return row_words_; }

    void add_edge(std::uint32_t u, std::uint32_t v); // rejects self-loops
    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    const std::uint64_t* row(std::uint32_t u) const { return adj_.data() + std::size_t(u) * row_words_; }

    // Row of u's closed neighborhood (u itself included).
    const std::uint64_t* closed_row(std::uint32_t u) const {
        return closed_.data() + std::size_t(u) * row_words_;
    }

    std::uint64_t edge_count() const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

private:
    std::uint32_t n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> closed_; // adj | identity
};

// k classes with cross-class adjacency only; rows stored for every ordered
// class pair so both directions read contiguously.
class KPartiteGraph {
public:
    KPartiteGraph() = default;
    explicit KPartiteGraph(std::vector<std::uint32_t> sizes);

    std::uint32_t k() const { return static_cast<std::uint32_t>(sizes_.size()); }
    std::uint32_t class_size(std::uint32_t c) const { return sizes_[c]; }
    const std::vector<std::uint32_t>& sizes() const { return sizes_; }
    PartitionedUniverse universe() const { return PartitionedUniverse(sizes_); }

    void add_edge(std::uint32_t c, std::uint32_t u, std::uint32_t d, std::uint32_t v);
    bool adjacent(std::uint32_t c, std::uint32_t u, std::uint32_t d, std::uint32_t v) const {
        return (row(c, u, d)[v >> 6] >> (v & 63)) & 1u;
    }
    // Bitset over class d of the neighbors of (c, u); valid for c != d.
    const std::uint64_t* row(std::uint32_t c, std::uint32_t u, std::uint32_t d) const;
    std::size_t row_words(std::uint32_t d) const { return row_words_[d]; }

private:
    std::vector<std::uint32_t> sizes_;
    std::vector<std::size_t> row_words_;              // per target class
    std::vector<std::vector<std::uint64_t>> blocks_;  // [c*k+d] -> sizes_[c] rows over class d
};

// k vertex-disjoint copies of H's vertex set; (u, i) ~ (v, j) for every edge
// (u, v) of H and i != j.  Tuples that induce cliques correspond to ordered
// k-cliques of H, so the colorful clique count is k! times H's count.
KPartiteGraph clique_to_kpartite(const SimpleGraph& h, std::uint32_t k);

// Dominating-set reduction: k copies of H's vertex set, cross-copy edges for
// every H-edge in both directions, plus cross-copy edges between the copies
// of one vertex (without them a vertex dominated only by itself would break
// the correspondence).  color_of/name_of describe the copy structure.
struct DsReduction {
    KPartiteGraph graph;
    std::uint32_t k = 0;
    // color of (class c, ordinal o) is c; its original name is o.
    std::uint32_t color_of(std::uint32_t c, std::uint32_t /*o*/) const { return c; }
    std::uint32_t name_of(std::uint32_t /*c*/, std::uint32_t o) const { return o; }
};

DsReduction ds_to_kpartite(const SimpleGraph& h, std::uint32_t k);

} // namespace hycount
