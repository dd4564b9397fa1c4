#pragma once

// Shared helpers for the test binaries: explicit-edge-list instances, random
// sub-vertex-sets, the star-shaped heavy/light fixture, and brute-force
// recomputations used as ground truth.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hycount/oracle.hpp"
#include "hycount/rng.hpp"
#include "hycount/universe.hpp"

namespace hytest {

using namespace hycount;

using Edge = std::vector<std::uint32_t>;
using EdgeList = std::vector<Edge>;

inline PartitionedUniverse uni_of(std::vector<std::uint32_t> sizes) {
    return PartitionedUniverse(std::move(sizes));
}

inline BruteForceOracle make_brute(std::vector<std::uint32_t> sizes, EdgeList edges) {
    return BruteForceOracle(PartitionedUniverse(std::move(sizes)), std::move(edges));
}

// Uniformly random sub-vertex-set; classes may come out empty unless
// `force_nonempty` keeps one random survivor per class.
inline SubVertexSet random_subset(const PartitionedUniverse& u, RngStream& rng,
                                  bool force_nonempty = false) {
    SubVertexSet s(u.k());
    for (std::uint32_t c = 0; c < u.k(); ++c) {
        std::vector<std::uint32_t> keep;
        for (std::uint32_t v = 0; v < u.class_size(c); ++v) {
            if (rng.next_coin()) keep.push_back(v);
        }
        if (force_nonempty && keep.empty() && u.class_size(c) > 0) {
            keep.push_back(static_cast<std::uint32_t>(rng.next_below(u.class_size(c))));
        }
        s.set_class(c, std::move(keep));
    }
    return s;
}

// Random edge list with exactly `m` distinct edges (rejection sampling; the
// tuple space must comfortably exceed m).
inline EdgeList random_edges(const PartitionedUniverse& u, std::uint64_t m, RngStream& rng) {
    std::set<Edge> out;
    while (out.size() < m) {
        Edge e(u.k());
        for (std::uint32_t c = 0; c < u.k(); ++c) {
            e[c] = static_cast<std::uint32_t>(rng.next_below(u.class_size(c)));
        }
        out.insert(std::move(e));
    }
    return EdgeList(out.begin(), out.end());
}

// The set of vertices of U incident to at least one edge fully inside U,
// recomputed directly from the edge list.
inline SubVertexSet brute_non_isolated(const EdgeList& edges, const SubVertexSet& U) {
    const std::uint32_t k = U.k();
    std::set<VertexId> hit;
    for (const Edge& e : edges) {
        bool inside = true;
        for (std::uint32_t c = 0; c < k && inside; ++c) inside = U.contains(c, e[c]);
        if (!inside) continue;
        for (std::uint32_t c = 0; c < k; ++c) hit.insert(VertexId{c, e[c]});
    }
    SubVertexSet s(k);
    for (const VertexId& v : hit) s.push_back(v.cls, v.ord);
    return s;
}

// Star fixture: `hub` = (0,0) sits on `hub_degree` edges whose partner pairs
// are all distinct (each partner vertex lands on exactly two hub edges);
// `leaf` = (0,1) sits on exactly one extra edge; every other class-0 vertex is
// isolated.  Requires k = 3 and hub_degree <= 2 * class size.
struct StarFixture {
    PartitionedUniverse uni;
    EdgeList edges;
    VertexId hub{0, 0};
    VertexId leaf{0, 1};
};

inline StarFixture make_star(std::uint32_t per_class, std::uint32_t hub_degree) {
    StarFixture f;
    f.uni = PartitionedUniverse({per_class, per_class, per_class});
    for (std::uint32_t i = 0; i < hub_degree; ++i) {
        const std::uint32_t b = i % per_class;
        const std::uint32_t c = i < per_class ? b : (b + 1) % per_class;
        f.edges.push_back({0, b, c});
    }
    f.edges.push_back({1, 0, per_class / 2});
    return f;
}

inline bool set_contains(const SubVertexSet& s, VertexId v) { return s.contains(v); }

} // namespace hytest
