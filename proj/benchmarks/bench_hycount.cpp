// Microbenchmarks for the estimator's hot paths.
//
// Instances are fixed and seeded so numbers are comparable across runs; the
// end-to-end case is deliberately small (the framework's cost is dominated by
// oracle queries, which the other benchmarks isolate).

#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "hycount/counting.hpp"
#include "hycount/enumerate.hpp"
#include "hycount/heavy.hpp"
#include "hycount/oracle.hpp"
#include "hycount/problems/clique.hpp"
#include "hycount/problems/gen.hpp"
#include "hycount/problems/graph.hpp"
#include "hycount/problems/reference.hpp"
#include "hycount/profile.hpp"
#include "hycount/rng.hpp"

namespace {

using namespace hycount;

// Fixed mid-size hypergraph instance shared by the oracle-level benchmarks.
struct HyperFixture {
    PartitionedUniverse uni{std::vector<std::uint32_t>{60, 60, 60}};
    std::vector<std::vector<std::uint32_t>> edges;
    std::unique_ptr<BruteForceOracle> oracle;

    HyperFixture() {
        RngStream gen(11);
        edges = random_hyperedges({60, 60, 60}, 500, gen);
        oracle = std::make_unique<BruteForceOracle>(uni, edges);
    }
};

const HyperFixture& hyper() {
    static const HyperFixture f;
    return f;
}

void bm_brute_oracle_query(benchmark::State& state) {
    const HyperFixture& f = hyper();
    RngStream gen(21);
    // Pre-draw query sets so the loop times the oracle alone.
    std::vector<SubVertexSet> queries;
    for (int i = 0; i < 64; ++i) {
        SubVertexSet u(3);
        for (std::uint32_t c = 0; c < 3; ++c) {
            for (std::uint32_t v = 0; v < 60; ++v) {
                if (gen.next_coin()) u.push_back(c, v);
            }
        }
        queries.push_back(std::move(u));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.oracle->query(queries[i++ & 63]));
    }
}
BENCHMARK(bm_brute_oracle_query);

void bm_clique_oracle_query(benchmark::State& state) {
    static const auto setup = [] {
        RngStream gen(31);
        SimpleGraph h = random_graph(40, 0.25, gen);
        plant_cliques(h, 3, 8, gen);
        return std::make_unique<CliqueOracle>(clique_to_kpartite(h, 3));
    }();
    RngStream gen(32);
    std::vector<SubVertexSet> queries;
    for (int i = 0; i < 64; ++i) {
        SubVertexSet u(3);
        for (std::uint32_t c = 0; c < 3; ++c) {
            for (std::uint32_t v = 0; v < 40; ++v) {
                if (gen.next_coin()) u.push_back(c, v);
            }
        }
        queries.push_back(std::move(u));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(setup->query(queries[i++ & 63]));
    }
}
BENCHMARK(bm_clique_oracle_query);

void bm_find_non_isolated(benchmark::State& state) {
    const HyperFixture& f = hyper();
    const SubVertexSet V = SubVertexSet::full_of(f.uni);
    const std::uint64_t sigma = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_non_isolated(*f.oracle, V, sigma));
    }
}
BENCHMARK(bm_find_non_isolated)->Arg(8)->Arg(64)->Arg(512);

void bm_sample_by_vector(benchmark::State& state) {
    const HyperFixture& f = hyper();
    const SubVertexSet V = SubVertexSet::full_of(f.uni);
    const SamplingVector P{{1, 2, 3}};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_by_vector(V, P, RngStream(++seed)));
    }
}
BENCHMARK(bm_sample_by_vector);

void bm_median_of(benchmark::State& state) {
    RngStream gen(41);
    std::vector<Rat> values;
    for (int i = 0; i < 57; ++i) {
        values.emplace_back(static_cast<std::int64_t>(gen.next_below(1000)),
                            1 + static_cast<std::int64_t>(gen.next_below(8)));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(median_of(values));
    }
}
BENCHMARK(bm_median_of);

void bm_hyperedge_approx_small(benchmark::State& state) {
    static const auto setup = [] {
        PartitionedUniverse uni({10, 10, 10});
        RngStream gen(51);
        auto edges = random_hyperedges({10, 10, 10}, 40, gen);
        return std::make_unique<BruteForceOracle>(uni, edges);
    }();
    const ParamProfile prof =
        ParamProfile::make(ProfileMode::practical, 3, 30, Rat(1, 4), {});
    const SubVertexSet V = SubVertexSet::full_of(setup->universe());
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperedge_approx(*setup, V, prof, RngStream(++seed)));
    }
}
BENCHMARK(bm_hyperedge_approx_small);

} // namespace

BENCHMARK_MAIN();
