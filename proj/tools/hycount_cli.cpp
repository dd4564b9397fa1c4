// hycount command-line front end.
//
//   hycount gen    -- write a seeded random instance file
//   hycount brute  -- exact colorful solution count by exhaustive enumeration
//   hycount run    -- estimate the solution count through the detection-oracle
//                     framework and emit a machine-readable report
//
// Exit codes: 0 ok, 2 usage error, 3 instance/parameter error, 4 guard refusal.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hycount/counting.hpp"
#include "hycount/instance_io.hpp"
#include "hycount/oracle.hpp"
#include "hycount/problems/clique.hpp"
#include "hycount/problems/domset.hpp"
#include "hycount/problems/gen.hpp"
#include "hycount/problems/graph.hpp"
#include "hycount/problems/ksum.hpp"
#include "hycount/problems/reference.hpp"
#include "hycount/profile.hpp"
#include "hycount/rng.hpp"

namespace {

using hycount::Rat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInstance = 3;
constexpr int kExitGuard = 4;

// Exhaustive counting is refused above this many candidate tuples.
constexpr unsigned __int128 kBruteGuard = 1000000000;

struct GuardRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HYCOUNT_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        throw std::invalid_argument("HYCOUNT_SEED is not an unsigned integer");
    }
    return 1;
}

unsigned __int128 tuple_space(const std::vector<std::uint32_t>& sizes) {
    unsigned __int128 s = 1;
    for (const std::uint32_t n : sizes) {
        s *= n;
        if (s > kBruteGuard) return s; // already refused; magnitude is enough
    }
    return s;
}

void refuse_if_large(const std::vector<std::uint32_t>& sizes) {
    if (tuple_space(sizes) > kBruteGuard) {
        throw GuardRefused("refusing exhaustive count: tuple space exceeds 10^9");
    }
}

hycount::ProfileFactors parse_factors(const std::vector<std::string>& kvs) {
    hycount::ProfileFactors f;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--profile-factor expects NAME=VALUE, got '" + kv + "'");
        }
        const std::string name = kv.substr(0, eq);
        char* end = nullptr;
        const double v = std::strtod(kv.c_str() + eq + 1, &end);
        if (end == kv.c_str() + eq + 1 || *end != '\0' || !(v > 0)) {
            throw std::invalid_argument("--profile-factor value must be a positive number: " + kv);
        }
        const Rat rv = Rat::from_double(v);
        if (name == "g") f.c_g = rv;
        else if (name == "zeta") f.c_zeta = rv;
        else if (name == "psi") f.c_psi = rv;
        else if (name == "r") f.c_r = rv;
        else if (name == "Q") f.c_Q = rv;
        else if (name == "d") f.c_d = rv;
        else throw std::invalid_argument("unknown profile factor '" + name +
                                         "' (known: g, zeta, psi, r, Q, d)");
    }
    return f;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
    std::string problem;
    std::string out;
    std::optional<std::uint64_t> seed;
    // graph
    std::uint32_t n = 30;
    double density = 0.3;
    std::uint32_t plant_k = 0;
    std::uint32_t plant_count = 0;
    // hypergraph
    std::vector<std::uint32_t> parts;
    std::uint64_t edges = 0;
    // ksum
    std::uint32_t k = 0;
    long long bound = 1000;
    std::uint32_t planted = 0;
};

int cmd_gen(const GenArgs& a) {
    const std::uint64_t seed = resolve_seed(a.seed);
    hycount::RngStream rng = hycount::RngStream(seed).child(hycount::rnglabel::kGenerator);

    hycount::Instance inst;
    if (a.problem == "graph") {
        inst.type = hycount::Instance::Type::kGraph;
        inst.graph = hycount::random_graph(a.n, a.density, rng);
        if (a.plant_count > 0) {
            if (a.plant_k < 2) {
                throw std::invalid_argument("--plant-count needs --plant-k >= 2");
            }
            hycount::plant_cliques(inst.graph, a.plant_k, a.plant_count, rng);
        }
    } else if (a.problem == "hypergraph") {
        if (a.parts.empty()) throw std::invalid_argument("hypergraph generation needs --parts");
        if (a.k != 0 && a.k != a.parts.size()) {
            throw std::invalid_argument("--k disagrees with the number of --parts entries");
        }
        inst.type = hycount::Instance::Type::kHypergraph;
        inst.k = static_cast<std::uint32_t>(a.parts.size());
        inst.parts = a.parts;
        inst.edges = hycount::random_hyperedges(a.parts, a.edges, rng);
    } else if (a.problem == "ksum") {
        if (a.k < 2) throw std::invalid_argument("ksum generation needs --k >= 2");
        inst.type = hycount::Instance::Type::kKSum;
        inst.k = a.k;
        inst.bound = a.bound;
        inst.values = hycount::random_ksum_values(a.n, a.k, a.bound, a.planted, rng);
    } else {
        throw std::invalid_argument("unknown gen problem: " + a.problem);
    }

    hycount::save_instance(inst, a.out);
    std::cout << "wrote " << a.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// problem -> oracle plumbing shared by brute and run

enum class Problem { kHypergraph, kClique, kDs, kKsum };

Problem parse_problem(const std::string& s) {
    if (s == "hypergraph") return Problem::kHypergraph;
    if (s == "clique") return Problem::kClique;
    if (s == "ds") return Problem::kDs;
    if (s == "ksum") return Problem::kKsum;
    throw std::invalid_argument("unknown problem: " + s);
}

struct OracleBundle {
    std::unique_ptr<hycount::BruteForceOracle> brute;
    std::unique_ptr<hycount::CliqueOracle> clique;
    std::unique_ptr<hycount::DsOracle> ds;
    std::unique_ptr<hycount::KSumOracle> ksum;
    const hycount::DetectionOracle* oracle = nullptr;
    std::optional<std::uint64_t> exact; // ground truth when cheap enough
};

std::uint32_t effective_k(Problem p, const hycount::Instance& inst,
                          const std::optional<std::uint32_t>& k_flag) {
    switch (p) {
        case Problem::kClique:
        case Problem::kDs:
            if (!k_flag) throw std::invalid_argument("this problem needs --k");
            return *k_flag;
        case Problem::kHypergraph:
        case Problem::kKsum:
            if (k_flag && *k_flag != inst.k) {
                throw hycount::InstanceError("--k disagrees with the instance's k");
            }
            return inst.k;
    }
    throw std::logic_error("unreachable");
}

// Builds the detection oracle for (instance, problem) and, when the tuple
// space is within the exhaustive-count guard, the exact ground truth.
OracleBundle build_oracle(Problem p, const hycount::Instance& inst, std::uint32_t k,
                          bool want_exact) {
    OracleBundle b;
    switch (p) {
        case Problem::kHypergraph: {
            if (inst.type != hycount::Instance::Type::kHypergraph) {
                throw hycount::InstanceError("--problem hypergraph needs a hypergraph instance");
            }
            b.brute = std::make_unique<hycount::BruteForceOracle>(
                hycount::PartitionedUniverse(inst.parts), inst.edges);
            b.oracle = b.brute.get();
            if (want_exact) b.exact = b.brute->edge_count(); // explicit list: always known
            break;
        }
        case Problem::kClique: {
            if (inst.type != hycount::Instance::Type::kGraph) {
                throw hycount::InstanceError("--problem clique needs a graph instance");
            }
            if (k < 2) throw std::invalid_argument("clique problem needs --k >= 2");
            b.clique = std::make_unique<hycount::CliqueOracle>(
                hycount::clique_to_kpartite(inst.graph, k));
            b.oracle = b.clique.get();
            const std::vector<std::uint32_t> sizes(k, inst.graph.n());
            if (want_exact && tuple_space(sizes) <= kBruteGuard) {
                b.exact = hycount::count_colorful_cliques(b.clique->graph());
            }
            break;
        }
        case Problem::kDs: {
            if (inst.type != hycount::Instance::Type::kGraph) {
                throw hycount::InstanceError("--problem ds needs a graph instance");
            }
            if (k < 1) throw std::invalid_argument("ds problem needs --k >= 1");
            b.ds = std::make_unique<hycount::DsOracle>(inst.graph, k);
            b.oracle = b.ds.get();
            const std::vector<std::uint32_t> sizes(k, inst.graph.n());
            if (want_exact && tuple_space(sizes) <= kBruteGuard) {
                b.exact = hycount::count_special_ds(inst.graph, k);
            }
            break;
        }
        case Problem::kKsum: {
            if (inst.type != hycount::Instance::Type::kKSum) {
                throw hycount::InstanceError("--problem ksum needs a ksum instance");
            }
            hycount::KSumInstance ci = hycount::ksum_to_colorful(inst.values, k, inst.bound);
            const std::vector<std::uint32_t> sizes(
                k, static_cast<std::uint32_t>(inst.values.size()));
            b.ksum = std::make_unique<hycount::KSumOracle>(std::move(ci));
            b.oracle = b.ksum.get();
            if (want_exact && tuple_space(sizes) <= kBruteGuard) {
                b.exact = hycount::count_zero_tuples(b.ksum->instance());
            }
            break;
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// brute

int cmd_brute(const std::string& input, const std::string& problem,
              const std::optional<std::uint32_t>& k_flag) {
    const hycount::Instance inst = hycount::load_instance(input);
    const Problem p = parse_problem(problem);
    const std::uint32_t k = effective_k(p, inst, k_flag);

    // Same counters the run command uses for ground truth, but refusal is an
    // error here rather than a silent omission.
    if (p != Problem::kHypergraph) {
        std::uint32_t n = 0;
        if (p == Problem::kKsum) n = static_cast<std::uint32_t>(inst.values.size());
        else n = inst.graph.n();
        refuse_if_large(std::vector<std::uint32_t>(k, n));
    }
    const OracleBundle b = build_oracle(p, inst, k, /*want_exact=*/true);
    if (!b.exact) throw GuardRefused("refusing exhaustive count: tuple space exceeds 10^9");
    std::cout << *b.exact << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// run

struct RunArgs {
    std::string input;
    std::string problem;
    std::optional<std::uint32_t> k;
    double eps = 0.25;
    std::optional<std::uint64_t> seed;
    std::string profile = "practical";
    std::vector<std::string> factor_kvs;
    std::string report_path;
    bool trace = false;
    unsigned threads = 1;
};

ordered_json profile_json(const hycount::ParamProfile& prof) {
    ordered_json pj;
    pj["name"] = prof.mode_name();
    pj["k"] = prof.k;
    pj["n_total"] = prof.n_total;
    pj["log2n"] = prof.log2n;
    pj["eps"] = prof.eps.to_decimal_string();
    pj["eps_prime"] = prof.eps_prime.to_decimal_string();
    pj["Q"] = prof.Q.to_decimal_string();
    pj["g"] = prof.g.to_decimal_string();
    pj["zeta"] = prof.zeta.to_decimal_string();
    pj["psi"] = prof.psi.to_decimal_string();
    pj["r_median"] = prof.r_median;
    pj["r_discovery"] = prof.r_discovery;
    pj["q_disc"] = prof.q_disc;
    pj["budget_C"] = prof.budget_C;
    pj["factors"] = ordered_json{{"g", prof.factors.c_g.to_decimal_string()},
                                 {"zeta", prof.factors.c_zeta.to_decimal_string()},
                                 {"psi", prof.factors.c_psi.to_decimal_string()},
                                 {"r", prof.factors.c_r.to_decimal_string()},
                                 {"Q", prof.factors.c_Q.to_decimal_string()},
                                 {"d", prof.factors.c_d.to_decimal_string()}};
    return pj;
}

const char* branch_name(hycount::TraceEntry::Branch b) {
    switch (b) {
        case hycount::TraceEntry::Branch::kBot: return "bot";
        case hycount::TraceEntry::Branch::kBaseExact: return "base_exact";
        case hycount::TraceEntry::Branch::kBaseOverflow: return "base_overflow";
        case hycount::TraceEntry::Branch::kRecurse: return "recurse";
    }
    return "?";
}

int cmd_run(const RunArgs& a) {
    const hycount::Instance inst = hycount::load_instance(a.input);
    const Problem p = parse_problem(a.problem);
    const std::uint32_t k = effective_k(p, inst, a.k);
    const std::uint64_t seed = resolve_seed(a.seed);

    if (!(a.eps > 0)) throw std::invalid_argument("--eps must be positive");
    const hycount::ProfileMode mode = [&] {
        if (a.profile == "faithful") return hycount::ProfileMode::faithful;
        if (a.profile == "practical") return hycount::ProfileMode::practical;
        throw std::invalid_argument("unknown profile: " + a.profile);
    }();

    const OracleBundle bundle = build_oracle(p, inst, k, /*want_exact=*/true);
    const hycount::PartitionedUniverse& uni = bundle.oracle->universe();
    const hycount::SubVertexSet V = hycount::SubVertexSet::full_of(uni);

    hycount::ParamProfile prof;
    try {
        prof = hycount::ParamProfile::make(mode, uni.k(), uni.total(), Rat::from_double(a.eps),
                                           parse_factors(a.factor_kvs));
    } catch (const hycount::ParamOverflow&) {
        throw hycount::InstanceError(
            "profile parameters are not representable at this instance size "
            "(the exact-guarantee magnitudes overflow 128-bit arithmetic); "
            "use --profile practical or a larger instance");
    }

    auto stats = std::make_shared<hycount::QueryStats>();
    hycount::InstrumentedOracle instr(*bundle.oracle, stats);
    hycount::Diagnostics diag;
    hycount::TraceSink sink;
    hycount::EstimatorOptions opts;
    opts.threads = a.trace ? 1 : std::max(1u, a.threads); // traces need one thread
    opts.diag = &diag;
    opts.trace = a.trace ? &sink : nullptr;

    const auto t0 = std::chrono::steady_clock::now();
    hycount::ApproxResult res;
    try {
        res = hycount::hyperedge_approx(instr, V, prof, hycount::RngStream(seed), opts);
    } catch (const hycount::ParamOverflow&) {
        throw hycount::InstanceError(
            "profile parameters overflowed during the run; use --profile practical");
    }
    // Degenerate convention: even a measure-zero instance answers one query.
    if (stats->total_queries.load() == 0) instr.query(V);
    const auto t1 = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    // Declared per-query measure bound for the level the search stopped at:
    // (mu(V) / terminal_L) * slack = 2^terminal_index * slack.
    std::optional<Rat> bound;
    try {
        bound = Rat::pow2(static_cast<int>(res.terminal_index)) * prof.measure_slack();
    } catch (const hycount::ParamOverflow&) {
        bound.reset(); // unrepresentably large; the check below passes vacuously
    }
    bool checked = true;
    if (bound) {
        if (stats->measure_overflowed_u64.load()) {
            // The recorded maximum saturated; fall back to the absolute cap
            // mu(V), which no query can exceed.
            const unsigned __int128 mu = V.measure();
            constexpr unsigned __int128 kMaxI128 = ~(unsigned __int128)0 >> 1;
            checked = mu <= kMaxI128 &&
                      !(*bound < Rat::from_int128(static_cast<__int128>(mu)));
        } else {
            checked = !(*bound < Rat(stats->max_measure.load()));
        }
    }

    ordered_json report;
    report["estimate"] = res.estimate.to_decimal_string();
    if (bundle.exact) {
        const double exact = static_cast<double>(*bundle.exact);
        const double est = res.estimate.to_double();
        report["exact"] = *bundle.exact;
        report["relative_error"] = std::abs(est - exact) / std::max(exact, 1.0);
    }
    report["total_queries"] = stats->total_queries.load();
    report["max_measure"] = stats->max_measure.load();
    report["max_measure_overflowed_u64"] = stats->measure_overflowed_u64.load();
    report["measure_bound_checked"] = checked;
    report["declared_measure_bound"] =
        bound ? ordered_json(bound->to_decimal_string()) : ordered_json(nullptr);
    report["terminal_index"] = res.terminal_index;
    report["degenerate_zero"] = res.degenerate_zero;
    report["runtime_ms"] = ms;
    report["seed"] = seed;
    report["threads"] = opts.threads;
    report["profile"] = profile_json(prof);
    report["diagnostics"] = ordered_json{{"deg_bot_zeroed", diag.deg_bot_zeroed.load()},
                                         {"heavy_bots", diag.heavy_bots.load()},
                                         {"base_overflows", diag.base_overflows.load()},
                                         {"median_bots", diag.median_bots.load()}};
    if (a.trace) {
        auto tj = ordered_json::array();
        for (const hycount::TraceEntry& e : sink.snapshot()) {
            tj.push_back(ordered_json{{"level", e.level},
                                      {"lambda", e.lambda.to_decimal_string()},
                                      {"class_sizes", e.class_sizes},
                                      {"heavy_found", e.heavy_found},
                                      {"heavy_estimate", e.heavy_estimate.to_decimal_string()},
                                      {"branch", branch_name(e.branch)}});
        }
        report["trace_truncated"] = sink.truncated();
        report["trace"] = std::move(tj);
    }

    const std::string text = report.dump(2) + "\n";
    if (!a.report_path.empty()) {
        std::ofstream out(a.report_path, std::ios::binary);
        if (!out) throw hycount::InstanceError("cannot write report file: " + a.report_path);
        out << text;
        if (!out) throw hycount::InstanceError("report write failed: " + a.report_path);
        std::cout << "estimate " << res.estimate.to_decimal_string() << " (report: "
                  << a.report_path << ")\n";
    } else {
        std::cout << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperedge-count estimation via detection oracles"};
    app.require_subcommand(1);

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("--problem", ga.problem, "graph | hypergraph | ksum")->required();
    gen->add_option("--out", ga.out, "output instance path")->required();
    auto* gen_seed = gen->add_option("--seed", "master seed (fallback: HYCOUNT_SEED, then 1)");
    gen->add_option("--n", ga.n, "graph/ksum: number of vertices/values");
    gen->add_option("--density", ga.density, "graph: edge probability")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--plant-k", ga.plant_k, "graph: clique size to plant");
    gen->add_option("--plant-count", ga.plant_count, "graph: number of planted cliques");
    gen->add_option("--parts", ga.parts, "hypergraph: class sizes, comma separated")
        ->delimiter(',');
    gen->add_option("--edges", ga.edges, "hypergraph: exact number of distinct edges");
    gen->add_option("--k", ga.k, "hypergraph (optional check) / ksum: tuple arity");
    gen->add_option("--bound", ga.bound, "ksum: value magnitude bound")
        ->check(CLI::PositiveNumber);
    gen->add_option("--planted", ga.planted, "ksum: number of planted zero-sum tuples");

    std::string brute_input, brute_problem;
    CLI::App* brute = app.add_subcommand("brute", "exact count by exhaustive enumeration");
    brute->add_option("--input", brute_input, "instance file")->required();
    brute->add_option("--problem", brute_problem, "hypergraph | clique | ds | ksum")->required();
    auto* brute_k = brute->add_option("--k", "tuple arity (clique/ds; optional check otherwise)");

    RunArgs ra;
    CLI::App* run = app.add_subcommand("run", "estimate the count and write a report");
    run->add_option("--input", ra.input, "instance file")->required();
    run->add_option("--problem", ra.problem, "hypergraph | clique | ds | ksum")->required();
    auto* run_k = run->add_option("--k", "tuple arity (clique/ds; optional check otherwise)");
    run->add_option("--eps", ra.eps, "accuracy target (clamped to <= 1/4)")
        ->check(CLI::PositiveNumber);
    auto* run_seed = run->add_option("--seed", "master seed (fallback: HYCOUNT_SEED, then 1)");
    run->add_option("--profile", ra.profile, "faithful | practical")
        ->check(CLI::IsMember({"faithful", "practical"}));
    run->add_option("--profile-factor", ra.factor_kvs,
                    "override a practical-profile factor, NAME=VALUE "
                    "(names: g, zeta, psi, r, Q, d); repeatable");
    run->add_option("--report", ra.report_path, "write the JSON report here");
    run->add_flag("--trace", ra.trace, "record per-level recursion trace (single-threaded)");
    run->add_option("--threads", ra.threads, "worker cap for median repetitions")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (gen_seed->count() > 0) ga.seed = gen_seed->as<std::uint64_t>();
            return cmd_gen(ga);
        }
        if (brute->parsed()) {
            std::optional<std::uint32_t> k;
            if (brute_k->count() > 0) k = brute_k->as<std::uint32_t>();
            return cmd_brute(brute_input, brute_problem, k);
        }
        if (run->parsed()) {
            if (run_seed->count() > 0) ra.seed = run_seed->as<std::uint64_t>();
            if (run_k->count() > 0) ra.k = run_k->as<std::uint32_t>();
            return cmd_run(ra);
        }
    } catch (const GuardRefused& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hycount::InstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInstance;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInstance;
    }
    return kExitUsage;
}
