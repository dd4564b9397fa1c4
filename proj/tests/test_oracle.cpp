#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <vector>

#include "hycount/oracle.hpp"
#include "hycount/rng.hpp"

#include "test_util.hpp"

using namespace hycount;
using hytest::Edge;
using hytest::EdgeList;

namespace {

// Direct containment scan, independent of the oracle's partner-list walk.
bool edges_hit(const EdgeList& edges, const SubVertexSet& U) {
    for (const Edge& e : edges) {
        bool inside = true;
        for (std::uint32_t c = 0; c < U.k() && inside; ++c) inside = U.contains(c, e[c]);
        if (inside) return true;
    }
    return false;
}

// All 2^size subsets of {0..size-1} per class, enumerated by bitmask.
std::vector<std::vector<std::uint32_t>> all_subsets(std::uint32_t size) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t bits = 0; bits < (1u << size); ++bits) {
        std::vector<std::uint32_t> s;
        for (std::uint32_t v = 0; v < size; ++v) {
            if (bits & (1u << v)) s.push_back(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

TEST_CASE("brute-force oracle with no edges answers false everywhere") {
    const BruteForceOracle o = hytest::make_brute({3, 3, 3}, {});
    const SubVertexSet full = SubVertexSet::full_of(o.universe());
    CHECK(!o.query(full));
    CHECK(o.edge_count() == 0);
    SubVertexSet part(3);
    part.set_single(0, 1);
    part.set_single(1, 2);
    part.set_single(2, 0);
    CHECK(!o.query(part));
}

TEST_CASE("brute-force oracle detects a single edge exactly on containment") {
    // Edge (a, b, c) = ordinals (1, 2, 0).
    const BruteForceOracle o = hytest::make_brute({3, 4, 2}, {{1, 2, 0}});
    SubVertexSet u(3);
    u.set_class(0, {0, 1});
    u.set_class(1, {2, 3});
    u.set_class(2, {0});
    CHECK(o.query(u));

    u.set_class(0, {0, 2});
    CHECK(!o.query(u)); // a missing
    u.set_class(0, {1});
    u.set_class(1, {0, 1, 3});
    CHECK(!o.query(u)); // b missing
    u.set_class(1, {2});
    u.set_class(2, {1});
    CHECK(!o.query(u)); // c missing
    u.set_class(2, {0, 1});
    CHECK(o.query(u));

    // An empty class forces measure 0 and a false answer.
    u.clear_class(1);
    CHECK(!o.query(u));
}

TEST_CASE("brute-force oracle agrees with a direct scan on random queries") {
    RngStream rng(2024);
    const PartitionedUniverse uni({10, 10, 10});
    const EdgeList edges = hytest::random_edges(uni, 50, rng);
    const BruteForceOracle o(uni, edges);
    CHECK(o.edge_count() == 50);

    for (int t = 0; t < 500; ++t) {
        const SubVertexSet U = hytest::random_subset(uni, rng);
        CHECK(o.query(U) == edges_hit(edges, U));
    }
}

TEST_CASE("brute-force oracle exact counts and degrees match a direct scan") {
    RngStream rng(99);
    const PartitionedUniverse uni({6, 7, 5});
    const EdgeList edges = hytest::random_edges(uni, 40, rng);
    const BruteForceOracle o(uni, edges);

    for (int t = 0; t < 100; ++t) {
        const SubVertexSet U = hytest::random_subset(uni, rng);
        std::uint64_t direct = 0;
        for (const Edge& e : edges) {
            bool inside = true;
            for (std::uint32_t c = 0; c < 3 && inside; ++c) inside = U.contains(c, e[c]);
            if (inside) ++direct;
        }
        CHECK(o.exact_count(U) == direct);

        const VertexId v{static_cast<std::uint32_t>(rng.next_below(3)),
                         static_cast<std::uint32_t>(rng.next_below(5))};
        std::uint64_t deg = 0;
        for (const Edge& e : edges) {
            if (e[v.cls] != v.ord) continue;
            bool inside = true;
            for (std::uint32_t c = 0; c < 3 && inside; ++c) {
                if (c != v.cls) inside = U.contains(c, e[c]);
            }
            if (inside) ++deg;
        }
        CHECK(o.exact_degree(v, U) == deg);
    }
}

TEST_CASE("brute-force oracle validates and deduplicates edges") {
    CHECK_THROWS_AS(hytest::make_brute({2, 2}, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(hytest::make_brute({2, 2}, {{0}}), std::invalid_argument);
    const BruteForceOracle o = hytest::make_brute({2, 2}, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(o.edge_count() == 2);
}

TEST_CASE("brute-force oracle is monotone on exhaustive tiny sweeps") {
    RngStream rng(5);
    const PartitionedUniverse uni({3, 3, 3});
    const EdgeList edges = hytest::random_edges(uni, 6, rng);
    const BruteForceOracle o(uni, edges);

    const auto subsets = all_subsets(3);
    std::vector<std::pair<SubVertexSet, bool>> answers;
    for (const auto& s0 : subsets) {
        for (const auto& s1 : subsets) {
            for (const auto& s2 : subsets) {
                SubVertexSet u(3);
                u.set_class(0, s0);
                u.set_class(1, s1);
                u.set_class(2, s2);
                const bool ans = o.query(u);
                CHECK(ans == (o.exact_count(u) > 0));
                answers.emplace_back(std::move(u), ans);
            }
        }
    }
    // U subset of W implies query(U) <= query(W).
    auto subset_of = [](const SubVertexSet& a, const SubVertexSet& b) {
        for (std::uint32_t c = 0; c < a.k(); ++c) {
            for (std::uint32_t v : a.ords(c)) {
                if (!b.contains(c, v)) return false;
            }
        }
        return true;
    };
    for (const auto& [u, au] : answers) {
        for (const auto& [w, aw] : answers) {
            if (au && !aw) CHECK(!subset_of(u, w));
        }
    }
}

TEST_CASE("instrumentation counts queries and tracks the maximum measure") {
    const BruteForceOracle inner = hytest::make_brute({4, 9, 4}, {{0, 0, 0}});
    auto stats = std::make_shared<QueryStats>();
    const InstrumentedOracle o(inner, stats);

    CHECK(stats->total_queries.load() == 0);
    CHECK(stats->max_measure.load() == 0);

    SubVertexSet u(3);
    // measure 4 = 4 * 1 * 1
    u.set_class(0, {0, 1, 2, 3});
    u.set_single(1, 0);
    u.set_single(2, 0);
    o.query(u);
    // measure 9
    u.set_class(0, {0});
    u.set_class(1, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    o.query(u);
    // measure 2
    u.set_class(1, {0, 1});
    o.query(u);

    CHECK(stats->total_queries.load() == 3);
    CHECK(stats->max_measure.load() == 9);
    CHECK(!stats->measure_overflowed_u64.load());

    stats->reset();
    CHECK(stats->total_queries.load() == 0);
    CHECK(stats->max_measure.load() == 0);
}

TEST_CASE("instrumentation saturates past 64-bit measures and flags it") {
    QueryStats stats;
    stats.record(static_cast<unsigned __int128>(1) << 100);
    CHECK(stats.total_queries.load() == 1);
    CHECK(stats.max_measure.load() == ~std::uint64_t{0});
    CHECK(stats.measure_overflowed_u64.load());
}

TEST_CASE("instrumentation measure log is capped") {
    const BruteForceOracle inner = hytest::make_brute({2, 2}, {});
    auto stats = std::make_shared<QueryStats>();
    stats->log_enabled = true;
    stats->log_cap = 5;
    const InstrumentedOracle o(inner, stats);
    const SubVertexSet full = SubVertexSet::full_of(inner.universe());
    for (int i = 0; i < 10; ++i) o.query(full);
    CHECK(stats->total_queries.load() == 10);
    CHECK(stats->measure_log.size() == 5);
    CHECK(stats->measure_log[0] == 4);
}

TEST_CASE("instrumented replays of the same seeded workload record identical stats") {
    RngStream gen(7);
    const PartitionedUniverse uni({8, 8});
    const EdgeList edges = hytest::random_edges(uni, 12, gen);
    const BruteForceOracle inner(uni, edges);

    auto run = [&](std::uint64_t seed) {
        auto stats = std::make_shared<QueryStats>();
        const InstrumentedOracle o(inner, stats);
        RngStream rng(seed);
        for (int i = 0; i < 300; ++i) {
            const SubVertexSet u = hytest::random_subset(uni, rng);
            o.query(u);
        }
        return std::pair<std::uint64_t, std::uint64_t>(stats->total_queries.load(),
                                                       stats->max_measure.load());
    };
    CHECK(run(11) == run(11));
    CHECK(run(11).first == 300);
}

TEST_CASE("budgeted oracle aborts at the limit") {
    const BruteForceOracle inner = hytest::make_brute({3, 3}, {{0, 0}});
    const BudgetedOracle o(inner, 4);
    const SubVertexSet full = SubVertexSet::full_of(inner.universe());
    for (int i = 0; i < 4; ++i) CHECK(o.query(full));
    CHECK(o.used() == 4);
    CHECK_THROWS_AS(o.query(full), BudgetExhausted);
    // Zero budget refuses the very first query.
    const BudgetedOracle z(inner, 0);
    CHECK_THROWS_AS(z.query(full), BudgetExhausted);
}

TEST_CASE("pinned oracle answers the single-edge example") {
    // Edge (a, b, c); pinning b reduces to classes {0, 2} (shifted to {0, 1}).
    const BruteForceOracle o = hytest::make_brute({3, 4, 2}, {{1, 2, 0}});
    const PinnedOracle pb(o, VertexId{1, 2});
    REQUIRE(pb.dimension() == 2);
    CHECK(pb.universe().class_size(0) == 3);
    CHECK(pb.universe().class_size(1) == 2);

    SubVertexSet u(2);
    u.set_single(0, 1); // {a}
    u.set_single(1, 0); // {c}
    CHECK(pb.query(u));
    u.set_single(0, 0);
    CHECK(!pb.query(u));
}

TEST_CASE("pinning an isolated vertex yields the all-false oracle") {
    const BruteForceOracle o = hytest::make_brute({3, 3, 3}, {{0, 0, 0}, {1, 1, 1}});
    const PinnedOracle p(o, VertexId{0, 2}); // ordinal 2 of class 0 is on no edge
    const auto subsets = all_subsets(3);
    for (const auto& s0 : subsets) {
        for (const auto& s1 : subsets) {
            SubVertexSet u(2);
            u.set_class(0, s0);
            u.set_class(1, s1);
            CHECK(!p.query(u));
        }
    }
}

TEST_CASE("pinned oracle equals the inner oracle with the pin added") {
    RngStream rng(31);
    const PartitionedUniverse uni({5, 6, 4});
    const EdgeList edges = hytest::random_edges(uni, 25, rng);
    const BruteForceOracle o(uni, edges);

    for (int t = 0; t < 1000; ++t) {
        const VertexId v{static_cast<std::uint32_t>(rng.next_below(3)),
                         static_cast<std::uint32_t>(rng.next_below(4))};
        const PinnedOracle p(o, v);
        const SubVertexSet u = hytest::random_subset(p.universe(), rng);

        // Lift U back to the full universe and add the pinned vertex.
        SubVertexSet lifted(3);
        std::uint32_t src = 0;
        for (std::uint32_t c = 0; c < 3; ++c) {
            if (c == v.cls) {
                lifted.set_single(c, v.ord);
            } else {
                lifted.set_class(c, u.ords(src++));
            }
        }
        CHECK(p.query(u) == o.query(lifted));
    }
}

TEST_CASE("pinning composes") {
    RngStream rng(77);
    const PartitionedUniverse uni({4, 5, 3, 4});
    const EdgeList edges = hytest::random_edges(uni, 30, rng);
    const BruteForceOracle o(uni, edges);

    // Pin v in class 1, then u in (reduced) class 1 = original class 2.
    const VertexId v{1, 3};
    const VertexId u_reduced{1, 2};
    const PinnedOracle p1(o, v);
    const PinnedOracle p2(p1, u_reduced);
    REQUIRE(p2.dimension() == 2);

    for (int t = 0; t < 200; ++t) {
        const SubVertexSet w = hytest::random_subset(p2.universe(), rng);
        SubVertexSet full(4);
        full.set_class(0, w.ords(0));
        full.set_single(1, v.ord);
        full.set_single(2, u_reduced.ord); // class 2 in original indexing
        full.set_class(3, w.ords(1));
        CHECK(p2.query(w) == o.query(full));
    }
}

TEST_CASE("pin validation") {
    const BruteForceOracle o = hytest::make_brute({2, 2}, {{0, 0}});
    CHECK_THROWS_AS(PinnedOracle(o, VertexId{0, 5}), std::out_of_range);
    CHECK_THROWS_AS(PinnedOracle(o, VertexId{7, 0}), std::out_of_range);
}
