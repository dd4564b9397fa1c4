#pragma once

// Detection-oracle layer.
//
// A DetectionOracle answers "does U contain at least one hyperedge?" for
// sub-vertex-sets U of a k-partite universe.  Oracles are pure: no caching of
// answers anywhere (it would distort query accounting), no mutation through
// query().  Derived views compose:
//
//   InstrumentedOracle  -- counts queries and tracks the measure of each query
//   BudgetedOracle      -- aborts the enclosing computation when a query
//                          budget is spent (internal control flow for the
//                          budgeted heavy-vertex discovery)
//   PinnedOracle        -- fixes one vertex, exposing the induced (k-1)-class
//                          oracle O'(U') = O(U' + {v})
//
// BruteForceOracle is the reference implementation over an explicit hyperedge
// list; it also exposes exact counts and degrees for tests and ground truth.

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "hycount/universe.hpp"

namespace hycount {

class DetectionOracle {
public:
    virtual ~DetectionOracle() = default;

    virtual std::uint32_t dimension() const = 0;
    virtual const PartitionedUniverse& universe() const = 0;

    // True iff the sub-instance induced by U contains a hyperedge.  U must
    // have exactly dimension() classes; mu(U) = 0 must answer false.
    virtual bool query(const SubVertexSet& U) const = 0;
};

// ---------------------------------------------------------------------------

struct QueryStats {
    std::atomic<std::uint64_t> total_queries{0};
    std::atomic<std::uint64_t> max_measure{0};
    std::atomic<bool> measure_overflowed_u64{false};

    // Optional per-query measure log, capped; disabled by default because the
    // estimator can issue ~1e9 queries.
    bool log_enabled = false;
    std::size_t log_cap = 1000000;
    mutable std::mutex log_mu;
    std::vector<std::uint64_t> measure_log;

    // Hot path: one relaxed increment plus a usually-false max check.
    void record(unsigned __int128 measure) {
        total_queries.fetch_add(1, std::memory_order_relaxed);
        const unsigned __int128 umax = ~static_cast<std::uint64_t>(0);
        std::uint64_t m;
        if (measure > umax) {
            measure_overflowed_u64.store(true, std::memory_order_relaxed);
            m = ~static_cast<std::uint64_t>(0);
        } else {
            m = static_cast<std::uint64_t>(measure);
        }
        std::uint64_t cur = max_measure.load(std::memory_order_relaxed);
        while (m > cur &&
               !max_measure.compare_exchange_weak(cur, m, std::memory_order_relaxed)) {
        }
        if (log_enabled) record_log(m);
    }
    void reset();

private:
    void record_log(std::uint64_t m);
};

class InstrumentedOracle final : public DetectionOracle {
public:
    InstrumentedOracle(const DetectionOracle& inner, std::shared_ptr<QueryStats> stats)
        : inner_(&inner), stats_(std::move(stats)) {}

    std::uint32_t dimension() const override { return inner_->dimension(); }
    const PartitionedUniverse& universe() const override { return inner_->universe(); }

    bool query(const SubVertexSet& U) const override {
        stats_->record(U.measure());
        return inner_->query(U);
    }

    const std::shared_ptr<QueryStats>& stats() const { return stats_; }

private:
    const DetectionOracle* inner_;
    std::shared_ptr<QueryStats> stats_;
};

// ---------------------------------------------------------------------------

// Thrown by BudgetedOracle when the query budget is exhausted; caught by the
// bounded discovery wrapper, never escapes the library.
struct BudgetExhausted {};

// Not safe for concurrent use: every bounded discovery call constructs its
// own instance and runs sequentially, so the counter stays a plain integer.
class BudgetedOracle final : public DetectionOracle {
public:
    BudgetedOracle(const DetectionOracle& inner, std::uint64_t budget)
        : inner_(&inner), budget_(budget) {}

    std::uint32_t dimension() const override { return inner_->dimension(); }
    const PartitionedUniverse& universe() const override { return inner_->universe(); }

    bool query(const SubVertexSet& U) const override {
        if (used_++ >= budget_) throw BudgetExhausted{};
        return inner_->query(U);
    }

    std::uint64_t used() const { return used_; }

private:
    const DetectionOracle* inner_;
    std::uint64_t budget_;
    mutable std::uint64_t used_ = 0;
};

// ---------------------------------------------------------------------------

class PinnedOracle final : public DetectionOracle {
public:
    // Pins vertex `v` of `inner`; queries take (k-1)-class sets over the
    // universe with v's class removed (higher classes shift down by one).
    PinnedOracle(const DetectionOracle& inner, VertexId v);

    std::uint32_t dimension() const override { return reduced_.k(); }
    const PartitionedUniverse& universe() const override { return reduced_; }
    bool query(const SubVertexSet& U) const override;

    VertexId pinned_vertex() const { return pin_; }

private:
    const DetectionOracle* inner_;
    VertexId pin_;
    PartitionedUniverse reduced_;
};

// ---------------------------------------------------------------------------

class BruteForceOracle final : public DetectionOracle {
public:
    // `edges`: each edge lists one ordinal per class, in class order.
    // Duplicate edges are collapsed; ordinals are validated.
    BruteForceOracle(PartitionedUniverse universe,
                     std::vector<std::vector<std::uint32_t>> edges);

    std::uint32_t dimension() const override { return uni_.k(); }
    const PartitionedUniverse& universe() const override { return uni_; }
    bool query(const SubVertexSet& U) const override;

    std::uint64_t edge_count() const { return m_; }
    std::vector<std::uint32_t> edge(std::uint64_t i) const;

    // Exact number of edges fully inside U.
    std::uint64_t exact_count(const SubVertexSet& U) const;
    // Exact number of edges through v whose other endpoints lie in U.
    std::uint64_t exact_degree(VertexId v, const SubVertexSet& U) const;

private:
    bool edge_in(std::uint64_t eid, const std::uint64_t* const* masks) const;

    PartitionedUniverse uni_;
    std::uint32_t k_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint32_t> flat_;       // m_ * k_ ordinals
    std::vector<std::uint32_t> words_;      // mask words per class
    // Per class c and ordinal v: partner tuples of all edges through (c, v),
    // stride (k-1), partner classes in ascending order skipping c.  Contiguous
    // per vertex so the detection scan is a linear walk.
    std::vector<std::vector<std::uint32_t>> partner_flat_;  // [c] -> ordinals
    std::vector<std::vector<std::uint64_t>> partner_start_; // [c][v] -> offset/(k-1)
};

} // namespace hycount
