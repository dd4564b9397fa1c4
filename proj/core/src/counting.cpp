#include "hycount/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "hycount/enumerate.hpp"
#include "hycount/heavy.hpp"
#include "hycount/parallel.hpp"

namespace hycount {

void Diagnostics::reset() {
    deg_bot_zeroed.store(0, std::memory_order_relaxed);
    heavy_bots.store(0, std::memory_order_relaxed);
    base_overflows.store(0, std::memory_order_relaxed);
    median_bots.store(0, std::memory_order_relaxed);
}

void TraceSink::record(TraceEntry entry) {
    std::lock_guard<std::mutex> lk(mu_);
    if (entries_.size() >= cap_) {
        truncated_ = true;
        return;
    }
    entries_.push_back(std::move(entry));
}

std::vector<TraceEntry> TraceSink::snapshot() const {
    std::lock_guard<std::mutex> lk(mu_);
    return entries_;
}

bool TraceSink::truncated() const {
    std::lock_guard<std::mutex> lk(mu_);
    return truncated_;
}

Rat median_of(std::vector<Rat> values) {
    if (values.empty()) throw std::invalid_argument("median_of: empty list");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

namespace {

Rat measure_to_rat(unsigned __int128 m) {
    constexpr unsigned __int128 kMaxSigned =
        (~static_cast<unsigned __int128>(0)) >> 1;
    if (m > kMaxSigned) throw ParamOverflow();
    return Rat::from_int128(static_cast<__int128>(m));
}

void trace_level(const EstimatorOptions& opts, std::uint32_t level, const Rat& lambda,
                 const SubVertexSet& V, std::uint64_t heavy_found, Rat heavy_estimate,
                 TraceEntry::Branch branch) {
    if (opts.trace == nullptr) return;
    TraceEntry e;
    e.level = level;
    e.lambda = lambda;
    e.class_sizes.reserve(V.k());
    for (std::uint32_t c = 0; c < V.k(); ++c) {
        e.class_sizes.push_back(static_cast<std::uint32_t>(V.ords(c).size()));
    }
    e.heavy_found = heavy_found;
    e.heavy_estimate = std::move(heavy_estimate);
    e.branch = branch;
    opts.trace->record(std::move(e));
}

Estimate recurse_impl(const DetectionOracle& oracle, const SubVertexSet& V,
                      const Rat& lambda, const ParamProfile& prof, RngStream rng,
                      const EstimatorOptions& opts, std::uint32_t level) {
    HeavyResult hv;
    if (opts.budgeted) {
        hv = find_heavy_bounded(oracle, V, lambda, prof, rng.child(rnglabel::kRecurseFindHeavy));
    } else {
        hv.bot = false;
        hv.vertices = find_heavy(oracle, V, lambda, prof, rng.child(rnglabel::kRecurseFindHeavy));
    }
    if (hv.bot) {
        if (opts.diag != nullptr) opts.diag->heavy_bots.fetch_add(1, std::memory_order_relaxed);
        trace_level(opts, level, lambda, V, 0, Rat(0), TraceEntry::Branch::kBot);
        return Estimate::make_bot();
    }

    if (!(Rat(1) < lambda)) {
        // Base case: exact bounded enumeration over the discovered set (only
        // its members can still carry edges at this threshold).
        const std::uint64_t cap =
            opts.budgeted ? prof.base_case_cap_u64() : ~static_cast<std::uint64_t>(0);
        BaseCaseResult bc = base_case_count(oracle, hv.vertices, cap);
        if (bc.overflow) {
            if (opts.diag != nullptr)
                opts.diag->base_overflows.fetch_add(1, std::memory_order_relaxed);
            trace_level(opts, level, lambda, V, hv.vertices.total_size(), Rat(0),
                        TraceEntry::Branch::kBaseOverflow);
            return Estimate::make_bot();
        }
        trace_level(opts, level, lambda, V, hv.vertices.total_size(), Rat(bc.count),
                    TraceEntry::Branch::kBaseExact);
        return Estimate::of(Rat(bc.count));
    }

    Rat mhat_heavy = count_heavy(oracle, V, hv.vertices, prof.lambda_low(lambda), prof,
                                 rng.child(rnglabel::kRecurseCount), opts);
    trace_level(opts, level, lambda, V, hv.vertices.total_size(), mhat_heavy,
                TraceEntry::Branch::kRecurse);

    SubVertexSet rest = subtract_sets(V, hv.vertices);
    SubVertexSet half = sample_half(rest, rng.child(rnglabel::kRecurseHalf));
    Estimate sub = recurse_impl(oracle, half, lambda.times_pow2(-static_cast<int>(prof.k)),
                                prof, rng.child(rnglabel::kRecurseNext), opts, level + 1);
    if (sub.bot) return sub;
    return Estimate::of(mhat_heavy + sub.value.times_pow2(static_cast<int>(prof.k)));
}

} // namespace

Rat deg_approx(const DetectionOracle& oracle, VertexId v, const Rat& lambda_prime,
               const SubVertexSet& U, const ParamProfile& prof, RngStream rng,
               const EstimatorOptions& opts) {
    if (oracle.dimension() != U.k() || prof.k != U.k()) {
        throw std::invalid_argument("deg_approx: dimension mismatch");
    }
    if (U.k() == 1) {
        SubVertexSet single(1);
        single.push_back(0, v.ord);
        return oracle.query(single) ? Rat(1) : Rat(0);
    }

    PinnedOracle pinned(oracle, v);
    SubVertexSet reduced(U.k() - 1);
    for (std::uint32_t c = 0; c < U.k(); ++c) {
        if (c == v.cls) continue;
        const auto& src = U.ords(c);
        reduced.assign_class(c < v.cls ? c : c - 1, src.data(), src.data() + src.size());
    }
    ParamProfile sub = prof.reduce_k();

    // The reduced-dimension run is its own recursion chain: letting it write
    // into the caller's sink would interleave levels that break the
    // per-level lambda schedule the trace documents.  Diagnostics counters
    // still flow through.
    EstimatorOptions sub_opts = opts;
    sub_opts.trace = nullptr;

    GuessOutcome g = guess_apx(pinned, reduced, lambda_prime, sub,
                               rng.child(rnglabel::kDegGuess), sub_opts);
    if (!g.too_large) return g.value;

    Estimate med = median_apx(pinned, reduced, lambda_prime, sub,
                              rng.child(rnglabel::kDegMedian), sub_opts);
    if (med.bot) {
        if (opts.diag != nullptr)
            opts.diag->deg_bot_zeroed.fetch_add(1, std::memory_order_relaxed);
        return Rat(0);
    }
    return med.value;
}

Rat count_heavy(const DetectionOracle& oracle, const SubVertexSet& V,
                const SubVertexSet& heavy, const Rat& lambda_low, const ParamProfile& prof,
                RngStream rng, const EstimatorOptions& opts) {
    const Rat lambda_prime = lambda_low / Rat(prof.k);
    SubVertexSet current = V;
    Rat total(0);
    const std::vector<VertexId> order = flatten(heavy); // ascending (class, ordinal)
    for (std::size_t vi = 0; vi < order.size(); ++vi) {
        total = total + deg_approx(oracle, order[vi], lambda_prime, current, prof,
                                   rng.child(rnglabel::kCountVertex, vi), opts);
        current.remove(order[vi]); // already-counted vertex must not contribute again
    }
    return total;
}

Estimate recursive_apx(const DetectionOracle& oracle, const SubVertexSet& V,
                       const Rat& lambda, const ParamProfile& prof, RngStream rng,
                       const EstimatorOptions& opts) {
    if (lambda.sign() <= 0) throw std::invalid_argument("recursive_apx: lambda must be positive");
    return recurse_impl(oracle, V, lambda, prof, rng, opts, 0);
}

Estimate median_apx(const DetectionOracle& oracle, const SubVertexSet& V, const Rat& L,
                    const ParamProfile& prof, RngStream rng, const EstimatorOptions& opts) {
    if (L.sign() <= 0) throw std::invalid_argument("median_apx: L must be positive");
    const Rat lambda = L * prof.eps_prime * prof.eps_prime / prof.Q;
    const std::uint64_t r = prof.r_median;

    std::vector<Estimate> results(r);
    EstimatorOptions rep_opts = opts;
    rep_opts.threads = 1; // everything below one repetition is sequential
    parallel_for(r, opts.threads, [&](std::size_t t) {
        results[t] = recursive_apx(oracle, V, lambda, prof,
                                   rng.child(rnglabel::kMedianRep, t), rep_opts);
    });

    std::uint64_t bots = 0;
    std::vector<Rat> values;
    values.reserve(r);
    for (const Estimate& e : results) {
        if (e.bot) {
            ++bots;
        } else {
            values.push_back(e.value);
        }
    }
    if (10 * bots >= r) {
        if (opts.diag != nullptr) opts.diag->median_bots.fetch_add(1, std::memory_order_relaxed);
        return Estimate::make_bot();
    }
    return Estimate::of(median_of(std::move(values)));
}

GuessOutcome guess_apx(const DetectionOracle& oracle, const SubVertexSet& V, const Rat& L,
                       const ParamProfile& prof, RngStream rng, const EstimatorOptions& opts) {
    if (L.sign() <= 0) throw std::invalid_argument("guess_apx: L must be positive");
    const std::uint32_t rounds = prof.guess_rounds();
    Rat level = L;
    for (std::uint32_t i = 0; i <= rounds; ++i) {
        Estimate m = median_apx(oracle, V, level, prof,
                                rng.child(rnglabel::kGuessMedian, i), opts);
        if (!m.bot) {
            if (!(m.value < level)) return GuessOutcome{false, m.value};
            return GuessOutcome{true, Rat(0)}; // confident the guess overshot
        }
        level = level.times_pow2(1); // Bot: threshold too fine, double and retry
    }
    return GuessOutcome{true, Rat(0)};
}

ApproxResult hyperedge_approx(const DetectionOracle& oracle, const SubVertexSet& V,
                              const ParamProfile& prof, RngStream rng,
                              const EstimatorOptions& opts) {
    if (oracle.dimension() != V.k() || prof.k != V.k()) {
        throw std::invalid_argument("hyperedge_approx: dimension mismatch");
    }

    ApproxResult res;
    if (V.measure() == 0) {
        res.estimate = Rat(0);
        res.terminal_L = Rat(0);
        res.degenerate_zero = true;
        return res;
    }
    if (prof.n_total <= 1) {
        // One-vertex universe: a single exact query settles the count.
        res.estimate = oracle.query(V) ? Rat(1) : Rat(0);
        res.terminal_L = Rat(1);
        return res;
    }

    const Rat mu = measure_to_rat(V.measure());
    const std::uint32_t rounds = prof.guess_rounds();
    Rat level = mu;
    for (std::uint32_t i = 0; i <= rounds; ++i) {
        GuessOutcome g = guess_apx(oracle, V, level, prof,
                                   rng.child(rnglabel::kHyperedgeGuess, i), opts);
        if (!g.too_large) {
            res.estimate = g.value;
            res.terminal_index = i;
            res.terminal_L = level;
            return res;
        }
        level = level.times_pow2(-1);
    }
    res.estimate = Rat(0);
    res.terminal_index = rounds;
    res.terminal_L = mu.times_pow2(-static_cast<int>(rounds));
    res.degenerate_zero = true;
    return res;
}

std::optional<Rat> declared_measure_bound(const ParamProfile& prof, const ApproxResult& res) {
    try {
        const Rat from_level = res.terminal_L * prof.measure_slack();
        const Rat zeta_pow = Rat::pow(prof.zeta, prof.k);
        return std::max(zeta_pow, from_level);
    } catch (const ParamOverflow&) {
        return std::nullopt; // bound beyond representable range: vacuously satisfied
    }
}

} // namespace hycount
