#pragma once

// k-partite vertex universe and sub-vertex-sets.
//
// A PartitionedUniverse fixes the class structure V = V_1 u ... u V_k; vertices
// are (class, ordinal) pairs.  A SubVertexSet holds one sorted duplicate-free
// ordinal list per class.  The measure of a set is the product of its class
// sizes -- the number of k-tuples it spans, and the quantity every sampling
// guard is expressed in.
//
// Sets carry a lazily built per-class bitmask cache so oracle scans can test
// membership in O(1); any mutation invalidates the affected class's mask.
// Instances are not safe for concurrent use; parallel code works on copies.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hycount {

struct VertexId {
    std::uint32_t cls;
    std::uint32_t ord;

    friend bool operator==(VertexId a, VertexId b) { return a.cls == b.cls && a.ord == b.ord; }
    friend bool operator!=(VertexId a, VertexId b) { return !(a == b); }
    friend bool operator<(VertexId a, VertexId b) {
        return a.cls != b.cls ? a.cls < b.cls : a.ord < b.ord;
    }
};

class PartitionedUniverse {
public:
    PartitionedUniverse() = default;
    explicit PartitionedUniverse(std::vector<std::uint32_t> class_sizes)
        : sizes_(std::move(class_sizes)) {
        if (sizes_.empty()) throw std::invalid_argument("universe needs k >= 1 classes");
    }

    std::uint32_t k() const { return static_cast<std::uint32_t>(sizes_.size()); }
    std::uint32_t class_size(std::uint32_t c) const { return sizes_.at(c); }
    const std::vector<std::uint32_t>& class_sizes() const { return sizes_; }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto s : sizes_) t += s;
        return t;
    }

    // Universe with class `c` removed (classes above shift down by one).
    PartitionedUniverse without_class(std::uint32_t c) const;

    friend bool operator==(const PartitionedUniverse& a, const PartitionedUniverse& b) {
        return a.sizes_ == b.sizes_;
    }

private:
    std::vector<std::uint32_t> sizes_;
};

// ceil(log2 n) for n >= 1 via bit length; by convention >= 1 so that the
// parameter formulas never see a zero logarithm (n <= 1 universes short-circuit
// to exact counting before any formula is evaluated).
inline std::uint32_t ceil_log2(std::uint64_t n) {
    if (n <= 2) return 1;
    std::uint32_t b = 0;
    std::uint64_t v = n - 1;
    while (v != 0) {
        v >>= 1;
        ++b;
    }
    return b;
}

class SubVertexSet {
public:
    SubVertexSet() = default;
    explicit SubVertexSet(std::uint32_t k) : cls_(k) {}

    static SubVertexSet full_of(const PartitionedUniverse& u);

    std::uint32_t k() const { return static_cast<std::uint32_t>(cls_.size()); }

    const std::vector<std::uint32_t>& ords(std::uint32_t c) const { return cls_[c].ords; }

    std::uint32_t class_count(std::uint32_t c) const {
        return static_cast<std::uint32_t>(cls_[c].ords.size());
    }

    bool contains(std::uint32_t c, std::uint32_t v) const;
    bool contains(VertexId id) const { return contains(id.cls, id.ord); }

    std::size_t total_size() const {
        std::size_t t = 0;
        for (const auto& c : cls_) t += c.ords.size();
        return t;
    }

    bool any_class_empty() const {
        for (const auto& c : cls_) {
            if (c.ords.empty()) return true;
        }
        return false;
    }

    // Product of class sizes, saturating at the 128-bit maximum.
    unsigned __int128 measure() const;

    // Saturating 64-bit view of the measure (query statistics).
    std::uint64_t measure_saturated() const;

    // --- mutation (each call invalidates the class's cached mask) ---

    // Replace a class list; `v` must be sorted ascending and duplicate-free.
    void set_class(std::uint32_t c, std::vector<std::uint32_t> v) {
        cls_[c].ords = std::move(v);
        cls_[c].mask_valid = false;
    }
    void assign_class(std::uint32_t c, const std::uint32_t* first, const std::uint32_t* last) {
        cls_[c].ords.assign(first, last);
        cls_[c].mask_valid = false;
    }
    void set_single(std::uint32_t c, std::uint32_t v) {
        cls_[c].ords.assign(1, v);
        cls_[c].mask_valid = false;
    }
    void clear_class(std::uint32_t c) {
        cls_[c].ords.clear();
        cls_[c].mask_valid = false;
    }
    // Append in ascending order (caller keeps the invariant).
    void push_back(std::uint32_t c, std::uint32_t v) {
        cls_[c].ords.push_back(v);
        cls_[c].mask_valid = false;
    }
    // Capacity hint for a run of push_back calls.
    void reserve_class(std::uint32_t c, std::size_t n) { cls_[c].ords.reserve(n); }
    // Remove one vertex if present; returns whether it was.
    bool remove(VertexId id);

    // Bitmask over ordinals of class c, at least `words` 64-bit words long.
    // Built on first use after a mutation, then cached; the hot paths are the
    // cached read and the one-word rebuild, so only the general rebuild lives
    // out of line.
    const std::uint64_t* mask(std::uint32_t c, std::uint32_t words) const {
        const ClassSet& cs = cls_[c];
        if (cs.mask_valid && cs.mask.size() >= words) return cs.mask.data();
        if (words == 1 && !cs.mask.empty()) {
            std::uint64_t w = 0;
            for (const std::uint32_t v : cs.ords) w |= std::uint64_t{1} << (v & 63u);
            cs.mask[0] = w;
            for (std::size_t i = 1; i < cs.mask.size(); ++i) cs.mask[i] = 0;
            cs.mask_valid = true;
            return cs.mask.data();
        }
        return build_mask(c, words);
    }

    friend bool operator==(const SubVertexSet& a, const SubVertexSet& b) {
        if (a.k() != b.k()) return false;
        for (std::uint32_t c = 0; c < a.k(); ++c) {
            if (a.cls_[c].ords != b.cls_[c].ords) return false;
        }
        return true;
    }
    friend bool operator!=(const SubVertexSet& a, const SubVertexSet& b) { return !(a == b); }

private:
    struct ClassSet {
        std::vector<std::uint32_t> ords;               // sorted, unique
        mutable std::vector<std::uint64_t> mask;       // lazy bit mask
        mutable bool mask_valid = false;
    };
    std::vector<ClassSet> cls_;

    const std::uint64_t* build_mask(std::uint32_t c, std::uint32_t words) const;
};

// Classwise sorted-set operations.
SubVertexSet intersect_sets(const SubVertexSet& a, const SubVertexSet& b);
SubVertexSet subtract_sets(const SubVertexSet& a, const SubVertexSet& b);
SubVertexSet union_sets(const SubVertexSet& a, const SubVertexSet& b);

// Flatten to (class, ordinal) pairs in ascending order.
std::vector<VertexId> flatten(const SubVertexSet& s);

} // namespace hycount
