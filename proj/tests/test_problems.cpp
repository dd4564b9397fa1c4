#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "hycount/problems/blowup.hpp"
#include "hycount/problems/clique.hpp"
#include "hycount/problems/domset.hpp"
#include "hycount/problems/gen.hpp"
#include "hycount/problems/graph.hpp"
#include "hycount/problems/ksum.hpp"
#include "hycount/problems/matmul.hpp"
#include "hycount/problems/partition.hpp"
#include "hycount/problems/reference.hpp"
#include "hycount/rng.hpp"

#include "test_util.hpp"

using namespace hycount;

namespace {

SimpleGraph complete_graph(std::uint32_t n) {
    SimpleGraph g(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph path_graph(std::uint32_t n) {
    SimpleGraph g(n);
    for (std::uint32_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

// Weight (in log units) of one part of a partition.
Rat part_weight(const std::vector<std::uint32_t>& part, const std::vector<Rat>& logs) {
    Rat w(0);
    for (std::uint32_t i : part) w = w + logs[i];
    return w;
}

} // namespace

TEST_CASE("simple graph stores symmetric adjacency and rejects bad edges") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 2}});
    // closed neighborhood row includes the vertex itself
    CHECK((g.closed_row(0)[0] & 1ull) != 0);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
}

TEST_CASE("k-partite graph keeps cross-class adjacency only") {
    KPartiteGraph g({2, 3});
    g.add_edge(0, 1, 1, 2);
    CHECK(g.adjacent(0, 1, 1, 2));
    CHECK(g.adjacent(1, 2, 0, 1));
    CHECK(!g.adjacent(0, 0, 1, 2));
    CHECK_THROWS_AS(g.add_edge(0, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 0, 1, 3), std::out_of_range);
}

TEST_CASE("clique reduction counts k! ordered copies of each clique") {
    SimpleGraph edge(2);
    edge.add_edge(0, 1);
    CHECK(count_colorful_cliques(clique_to_kpartite(edge, 2)) == 2);

    const SimpleGraph tri = complete_graph(3);
    CHECK(count_colorful_cliques(clique_to_kpartite(tri, 3)) == 6);

    const SimpleGraph none(4);
    CHECK(count_colorful_cliques(clique_to_kpartite(none, 3)) == 0);

    // No edges between copies of one vertex.
    const KPartiteGraph r = clique_to_kpartite(edge, 2);
    CHECK(!r.adjacent(0, 0, 1, 0));
    CHECK(r.adjacent(0, 0, 1, 1));

    CHECK_THROWS_AS(clique_to_kpartite(edge, 1), std::invalid_argument);
}

TEST_CASE("clique reduction identity against the plain clique counter") {
    RngStream gen(71);
    for (int t = 0; t < 12; ++t) {
        const std::uint32_t n = 4 + static_cast<std::uint32_t>(gen.next_below(4)); // 4..7
        SimpleGraph h = random_graph(n, 0.55, gen);
        for (std::uint32_t k = 2; k <= 3; ++k) {
            std::uint64_t factorial = 1;
            for (std::uint32_t i = 2; i <= k; ++i) factorial *= i;
            CHECK(count_colorful_cliques(clique_to_kpartite(h, k)) ==
                  factorial * count_cliques(h, k));
        }
    }
}

TEST_CASE("clique oracle answers the pinned singleton examples") {
    // Classes {a},{b},{c}: all three pairs adjacent -> true.
    KPartiteGraph all({1, 1, 1});
    all.add_edge(0, 0, 1, 0);
    all.add_edge(1, 0, 2, 0);
    all.add_edge(0, 0, 2, 0);
    const CliqueOracle yes(all);
    CHECK(yes.query(SubVertexSet::full_of(yes.universe())));

    // a-b and b-c adjacent, a-c missing -> false.
    KPartiteGraph chain({1, 1, 1});
    chain.add_edge(0, 0, 1, 0);
    chain.add_edge(1, 0, 2, 0);
    const CliqueOracle no(chain);
    CHECK(!no.query(SubVertexSet::full_of(no.universe())));
}

TEST_CASE("clique oracle agrees with exhaustive counting on every tiny subset") {
    RngStream gen(5);
    const SimpleGraph h = random_graph(3, 0.7, gen);
    const KPartiteGraph g = clique_to_kpartite(h, 3);
    const CliqueOracle oracle(g);

    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        SubVertexSet u(3);
        for (std::uint32_t c = 0; c < 3; ++c) {
            for (std::uint32_t o = 0; o < 3; ++o) {
                if (bits & (1u << (c * 3 + o))) u.push_back(c, o);
            }
        }
        CHECK(oracle.query(u) == (count_colorful_cliques(g, u) > 0));
    }
}

TEST_CASE("clique oracle handles k = 2 and k = 4 against the reference scan") {
    RngStream gen(31);
    for (int t = 0; t < 3; ++t) {
        const SimpleGraph h2 = random_graph(6, 0.5, gen);
        const KPartiteGraph g2 = clique_to_kpartite(h2, 2);
        const CliqueOracle o2(g2);
        for (int q = 0; q < 100; ++q) {
            const SubVertexSet u = hytest::random_subset(o2.universe(), gen);
            CHECK(o2.query(u) == (count_colorful_cliques(g2, u) > 0));
        }
    }
    for (int t = 0; t < 3; ++t) {
        const SimpleGraph h4 = random_graph(6, 0.6, gen);
        const KPartiteGraph g4 = clique_to_kpartite(h4, 4);
        const CliqueOracle o4(g4);
        for (int q = 0; q < 100; ++q) {
            const SubVertexSet u = hytest::random_subset(o4.universe(), gen);
            CHECK(o4.query(u) == (count_colorful_cliques(g4, u) > 0));
        }
    }
}

TEST_CASE("clique oracle exercises multi-class parts at k = 5") {
    RngStream gen(87);
    const SimpleGraph h = random_graph(5, 0.75, gen);
    const KPartiteGraph g = clique_to_kpartite(h, 5);
    const CliqueOracle oracle(g);
    int positives = 0;
    for (int q = 0; q < 100; ++q) {
        const SubVertexSet u = hytest::random_subset(oracle.universe(), gen);
        const bool expect = count_colorful_cliques(g, u) > 0;
        positives += expect ? 1 : 0;
        CHECK(oracle.query(u) == expect);
    }
    CHECK(oracle.query(SubVertexSet::full_of(oracle.universe())) ==
          (count_cliques(h, 5) > 0));
}

TEST_CASE("clique oracle's integer trace counts, not merely detects") {
    RngStream gen(13);
    for (int t = 0; t < 4; ++t) {
        const SimpleGraph h = random_graph(5, 0.6, gen);
        for (std::uint32_t k = 3; k <= 4; ++k) {
            const KPartiteGraph g = clique_to_kpartite(h, k);
            const CliqueOracle oracle(g);
            for (int q = 0; q < 50; ++q) {
                const SubVertexSet u = hytest::random_subset(oracle.universe(), gen);
                CHECK(oracle.count_by_trace(u) == count_colorful_cliques(g, u));
            }
        }
    }
}

TEST_CASE("three-way partition balances equal classes one apiece") {
    const auto p = partition_three({Rat(1), Rat(1), Rat(1)});
    CHECK(p[0] == std::vector<std::uint32_t>{0});
    CHECK(p[1] == std::vector<std::uint32_t>{1});
    CHECK(p[2] == std::vector<std::uint32_t>{2});
}

TEST_CASE("three-way partition puts the giant class alone") {
    // sizes (n, 1, 1): log weights (1, 0, 0).
    const auto p = partition_three({Rat(1), Rat(0), Rat(0)});
    CHECK(p[0] == std::vector<std::uint32_t>{1});
    CHECK(p[1] == std::vector<std::uint32_t>{2});
    CHECK(p[2] == std::vector<std::uint32_t>{0});
}

TEST_CASE("three-way partition satisfies the weight chain on a skewed input") {
    // log sizes (3,2,1,1)/3 (base n = 8): check w1 <= w2 <= w3 <= w1 + 1,
    // which an exhaustive enumeration of all 3^4 assignments confirms feasible.
    const std::vector<Rat> logs{Rat(1), Rat(2, 3), Rat(1, 3), Rat(1, 3)};
    const auto p = partition_three(logs);

    std::size_t covered = 0;
    for (const auto& part : p) covered += part.size();
    CHECK(covered == 4);

    const Rat w1 = part_weight(p[0], logs);
    const Rat w2 = part_weight(p[1], logs);
    const Rat w3 = part_weight(p[2], logs);
    CHECK(w1 <= w2);
    CHECK(w2 <= w3);
    CHECK(w3 <= w1 + Rat(1));

    bool feasible = false;
    for (int assign = 0; assign < 81; ++assign) {
        Rat w[3] = {Rat(0), Rat(0), Rat(0)};
        int count[3] = {0, 0, 0};
        int a = assign;
        for (int i = 0; i < 4; ++i, a /= 3) {
            w[a % 3] = w[a % 3] + logs[i];
            ++count[a % 3];
        }
        std::sort(w, w + 3);
        if (count[0] && count[1] && count[2] && w[0] <= w[1] && w[1] <= w[2] &&
            w[2] <= w[0] + Rat(1)) {
            feasible = true;
        }
    }
    CHECK(feasible);

    CHECK_THROWS_AS(partition_three({Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("two-way partition keeps products within the largest class factor") {
    RngStream gen(44);
    CHECK(partition_two({1, 1}) ==
          std::array<std::vector<std::uint32_t>, 2>{{{0}, {1}}});
    for (int t = 0; t < 40; ++t) {
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(gen.next_below(5));
        std::vector<std::uint64_t> sizes;
        std::uint64_t biggest = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            sizes.push_back(1 + gen.next_below(9));
            biggest = std::max(biggest, sizes.back());
        }
        const auto p = partition_two(sizes);
        REQUIRE(!p[0].empty());
        REQUIRE(!p[1].empty());
        CHECK(p[0].size() + p[1].size() == k);
        std::uint64_t prod[2] = {1, 1};
        for (int side = 0; side < 2; ++side) {
            for (std::uint32_t i : p[side]) prod[side] *= sizes[i];
        }
        const std::uint64_t lo = std::min(prod[0], prod[1]);
        const std::uint64_t hi = std::max(prod[0], prod[1]);
        CHECK(hi <= lo * biggest);
    }
}

TEST_CASE("boolean matrix product matches the naive computation") {
    // identity * identity
    BoolMatrix id(8, 8);
    for (std::size_t i = 0; i < 8; ++i) id.set(i, i);
    const BoolMatrix sq = bool_matmul(id, id);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) CHECK(sq.get(i, j) == (i == j));
    }

    // 1-row times 1-col of ones -> [1]
    BoolMatrix row(1, 3), col(3, 1);
    for (std::size_t j = 0; j < 3; ++j) {
        row.set(0, j);
        col.set(j, 0);
    }
    const BoolMatrix one = bool_matmul(row, col);
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 1);
    CHECK(one.get(0, 0));

    RngStream gen(90);
    for (int t = 0; t < 10; ++t) {
        BoolMatrix a(20, 30), b(30, 20), c(20, 20);
        for (std::size_t i = 0; i < 20; ++i) {
            for (std::size_t j = 0; j < 30; ++j) {
                if (gen.next_unit() < 0.2) a.set(i, j);
                if (gen.next_unit() < 0.2) b.set(j, i);
            }
            for (std::size_t j = 0; j < 20; ++j) {
                if (gen.next_unit() < 0.2) c.set(i, j);
            }
        }
        const BoolMatrix ab = bool_matmul(a, b);
        std::uint64_t naive_count = 0;
        bool naive_any = false;
        for (std::size_t i = 0; i < 20; ++i) {
            for (std::size_t l = 0; l < 20; ++l) {
                bool any = false;
                for (std::size_t j = 0; j < 30; ++j) {
                    any = any || (a.get(i, j) && b.get(j, l));
                }
                CHECK(ab.get(i, l) == any);
                if (any && c.get(l, i)) {
                    naive_any = true;
                    for (std::size_t j = 0; j < 30; ++j) {
                        if (a.get(i, j) && b.get(j, l)) ++naive_count;
                    }
                }
            }
        }
        CHECK(trace_nonzero(a, b, c) == naive_any);
        CHECK(trace_count(a, b, c) == naive_count);
    }

    CHECK_THROWS_AS(bool_matmul(BoolMatrix(2, 3), BoolMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(trace_nonzero(BoolMatrix(2, 3), BoolMatrix(3, 2), BoolMatrix(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("dominating-set reduction frozen counts") {
    const SimpleGraph lone(1);
    CHECK(count_special_ds(lone, 1) == 1);

    const SimpleGraph p3 = path_graph(3);
    CHECK(count_special_ds(p3, 1) == 1); // only the middle vertex dominates

    const SimpleGraph k4 = complete_graph(4);
    CHECK(count_special_ds(k4, 2) == 12); // 2! * C(4,2)
    CHECK(count_dominating_sets(k4, 2) == 6);

    CHECK_THROWS_AS(ds_to_kpartite(p3, 0), std::invalid_argument);
}

TEST_CASE("dominating-set reduction adds the copy edges") {
    SimpleGraph h(2);
    h.add_edge(0, 1);
    const DsReduction r = ds_to_kpartite(h, 2);
    CHECK(r.graph.k() == 2);
    CHECK(r.graph.adjacent(0, 0, 1, 0)); // copies of the same vertex
    CHECK(r.graph.adjacent(0, 0, 1, 1)); // base edge between copies
    CHECK(r.color_of(1, 0) == 1);
    CHECK(r.name_of(1, 0) == 0);
}

TEST_CASE("special dominating tuples are k! times the unordered count") {
    RngStream gen(52);
    for (int t = 0; t < 10; ++t) {
        const SimpleGraph h = random_graph(6, 0.4, gen);
        std::uint64_t factorial = 1;
        for (std::uint32_t k = 1; k <= 3; ++k) {
            factorial *= k;
            CHECK(count_special_ds(h, k) == factorial * count_dominating_sets(h, k));
        }
    }
}

TEST_CASE("dominating-set oracle answers the pinned examples") {
    const DsOracle k3(complete_graph(3), 2);
    CHECK(k3.query(SubVertexSet::full_of(k3.universe())));

    const DsOracle isolated(SimpleGraph(2), 1);
    CHECK(!isolated.query(SubVertexSet::full_of(isolated.universe())));
}

TEST_CASE("dominating-set oracle agrees with the exhaustive scan") {
    RngStream gen(23);
    for (int t = 0; t < 2; ++t) {
        const SimpleGraph h = random_graph(8, 0.3, gen);
        const DsOracle oracle(h, 3);
        for (int q = 0; q < 100; ++q) {
            const SubVertexSet u = hytest::random_subset(oracle.universe(), gen);
            CHECK(oracle.query(u) == (count_special_ds(h, 3, u) > 0));
        }
    }
}

TEST_CASE("k-sum reduction pins the tiny colorful counts") {
    CHECK(count_zero_tuples(ksum_to_colorful({0}, 3, 1)) == 1);
    CHECK(count_zero_tuples(ksum_to_colorful({1, -1}, 2, 1)) == 2);
    CHECK(count_zero_tuples(ksum_to_colorful({1, 2, 4}, 3, 4)) == 0);
}

TEST_CASE("k-sum reduction validates and guards its arithmetic") {
    CHECK_THROWS_AS(ksum_to_colorful({0}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ksum_to_colorful({5}, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(ksum_to_colorful({0}, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(ksum_to_colorful({1, -1}, 40, 9000000000000000000LL),
                    std::overflow_error);
}

TEST_CASE("colorful zero tuples equal ordered zero tuples of the plain list") {
    RngStream gen(66);
    for (int t = 0; t < 20; ++t) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(gen.next_below(6)); // 3..8
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(gen.next_below(2)); // 2..3
        const auto values = random_ksum_values(n, k, 6, 1, gen);
        const KSumInstance inst = ksum_to_colorful(values, k, 6);
        CHECK(count_zero_tuples(inst) == count_ordered_zero_ktuples(values, k));
    }
}

TEST_CASE("k-sum oracle finds the exhibited witness and rejects all-positive") {
    KSumInstance inst;
    inst.classes = {{1, 2}, {-1, 5}, {0}};
    inst.bound = 5;
    const KSumOracle oracle(inst);
    CHECK(oracle.query(SubVertexSet::full_of(oracle.universe())));

    KSumInstance pos;
    pos.classes = {{1, 2}, {3, 4}, {5}};
    pos.bound = 5;
    const KSumOracle positive(pos);
    CHECK(!positive.query(SubVertexSet::full_of(positive.universe())));
}

TEST_CASE("k-sum oracle agrees with the exhaustive tuple scan") {
    RngStream gen(12);
    for (int t = 0; t < 3; ++t) {
        const auto values = random_ksum_values(8, 4, 4, 2, gen);
        const KSumInstance inst = ksum_to_colorful(values, 4, 4);
        const KSumOracle oracle(inst);
        for (int q = 0; q < 100; ++q) {
            const SubVertexSet u = hytest::random_subset(oracle.universe(), gen);
            CHECK(oracle.query(u) == (count_zero_tuples(inst, u) > 0));
        }
    }
}

TEST_CASE("duplication blow-up arithmetic") {
    const PartitionedUniverse uni({8, 8, 8});
    const SubVertexSet full = SubVertexSet::full_of(uni);
    const DuplicateBlowup id = duplicate_blowup(full, uni);
    CHECK(id.factor == 1);
    CHECK(id.copies == std::vector<std::uint64_t>{1, 1, 1});

    SubVertexSet two(3);
    for (std::uint32_t c = 0; c < 3; ++c) {
        two.push_back(c, 1);
        two.push_back(c, 5);
    }
    const DuplicateBlowup quad = duplicate_blowup(two, uni);
    CHECK(quad.factor == 64);
    CHECK(quad.copies == std::vector<std::uint64_t>{4, 4, 4});

    SubVertexSet holed = full;
    holed.clear_class(1);
    CHECK_THROWS_AS(duplicate_blowup(holed, uni), std::invalid_argument);

    const PartitionedUniverse vast({4000000000u, 4000000000u, 4000000000u});
    SubVertexSet one(3);
    for (std::uint32_t c = 0; c < 3; ++c) one.push_back(c, 0);
    CHECK_THROWS_AS(duplicate_blowup(one, vast), std::overflow_error);
}

TEST_CASE("blown-up graph multiplies the clique count by the factor") {
    const SimpleGraph k4 = complete_graph(4);
    const KPartiteGraph g = clique_to_kpartite(k4, 3);
    SubVertexSet u(3);
    for (std::uint32_t c = 0; c < 3; ++c) {
        for (std::uint32_t o = 0; o < 3; ++o) u.push_back(c, o);
    }
    const DuplicateBlowup b = duplicate_blowup(u, g.universe());
    CHECK(b.factor == 8);

    const KPartiteGraph blown = blow_up_graph(g, u, b.copies);
    CHECK(blown.class_size(0) == 6);
    CHECK(count_colorful_cliques(blown) == b.factor * count_colorful_cliques(g, u));
}

TEST_CASE("graph generator is deterministic, symmetric, honest about density") {
    RngStream a(7), b(7);
    const SimpleGraph g1 = random_graph(10, 0.5, a);
    const SimpleGraph g2 = random_graph(10, 0.5, b);
    CHECK(g1.edges() == g2.edges());
    for (const auto& [u, v] : g1.edges()) {
        CHECK(u < v);
        CHECK(g1.adjacent(v, u));
    }
    RngStream c(9);
    CHECK(random_graph(10, 0.0, c).edge_count() == 0);
    CHECK(random_graph(10, 1.0, c).edge_count() == 45);
}

TEST_CASE("planted cliques survive into the exhaustive count") {
    RngStream gen(101);
    SimpleGraph g(12);
    plant_cliques(g, 3, 2, gen);
    CHECK(count_cliques(g, 3) >= 2);
    CHECK(g.edge_count() >= 3);

    RngStream r1(5), r2(5);
    SimpleGraph d1(9), d2(9);
    plant_cliques(d1, 4, 3, r1);
    plant_cliques(d2, 4, 3, r2);
    CHECK(d1.edges() == d2.edges());
}

TEST_CASE("hyperedge generator covers its three sampling regimes") {
    // Dense regime: more than half the tuple space.
    RngStream g1(3);
    const auto dense = random_hyperedges({4, 4, 4}, 40, g1);
    CHECK(dense.size() == 40);

    // Sparse rejection regime.
    RngStream g2(4);
    const auto sparse = random_hyperedges({1000, 1000, 1000}, 50, g2);
    CHECK(sparse.size() == 50);

    // Tuple space beyond 64 bits: 40 classes of size 4 is 2^80 tuples.
    const std::vector<std::uint32_t> wide(40, 4);
    RngStream g3(5);
    const auto huge = random_hyperedges(wide, 20, g3);
    CHECK(huge.size() == 20);

    for (const auto* edges : {&dense, &sparse, &huge}) {
        CHECK(std::is_sorted(edges->begin(), edges->end()));
        CHECK(std::adjacent_find(edges->begin(), edges->end()) == edges->end());
    }
    for (const auto& e : dense) {
        REQUIRE(e.size() == 3);
        for (const auto o : e) CHECK(o < 4);
    }

    // Exact full space, determinism, and the impossible request.
    RngStream g4(6), g5(6);
    const auto all1 = random_hyperedges({2, 2}, 4, g4);
    const auto all2 = random_hyperedges({2, 2}, 4, g5);
    CHECK(all1 == all2);
    CHECK(all1.size() == 4);
    RngStream g6(7);
    CHECK_THROWS_AS(random_hyperedges({2, 2}, 5, g6), std::invalid_argument);
}

TEST_CASE("k-sum value generator plants at least one surviving zero tuple") {
    RngStream gen(14);
    const auto values = random_ksum_values(20, 3, 100, 5, gen);
    CHECK(values.size() == 20);
    for (long long v : values) {
        CHECK(v >= -100);
        CHECK(v <= 100);
    }
    // The last planted tuple is never overwritten; its 3 distinct positions
    // contribute at least 3! ordered zero tuples.
    CHECK(count_ordered_zero_ktuples(values, 3) >= 6);

    RngStream r1(2), r2(2);
    CHECK(random_ksum_values(10, 2, 50, 1, r1) == random_ksum_values(10, 2, 50, 1, r2));
}

TEST_CASE("reference counters agree with hand computations") {
    // Ordered zero 2-tuples of {1,-1,0}: (1,-1),(-1,1),(0,0).
    CHECK(count_ordered_zero_ktuples({1, -1, 0}, 2) == 3);
    // Triangle count of K4 and K5.
    CHECK(count_cliques(complete_graph(4), 3) == 4);
    CHECK(count_cliques(complete_graph(5), 3) == 10);
    // Path on 3: dominating pairs = any pair containing the middle, plus {0,2}.
    CHECK(count_dominating_sets(path_graph(3), 2) == 3);
    // Colorful cliques inside a restricted subset.
    const KPartiteGraph g = clique_to_kpartite(complete_graph(3), 3);
    SubVertexSet u(3);
    u.push_back(0, 0);
    u.push_back(1, 1);
    u.push_back(2, 2);
    CHECK(count_colorful_cliques(g, u) == 1);
}
