#include "hycount/universe.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace hycount {

PartitionedUniverse PartitionedUniverse::without_class(std::uint32_t c) const {
    if (c >= k()) throw std::out_of_range("without_class: bad class index");
    if (k() == 1) throw std::invalid_argument("without_class: cannot drop the last class");
    std::vector<std::uint32_t> s;
    s.reserve(k() - 1);
    for (std::uint32_t i = 0; i < k(); ++i) {
        if (i != c) s.push_back(sizes_[i]);
    }
    return PartitionedUniverse(std::move(s));
}

SubVertexSet SubVertexSet::full_of(const PartitionedUniverse& u) {
    SubVertexSet s(u.k());
    for (std::uint32_t c = 0; c < u.k(); ++c) {
        auto& v = s.cls_[c].ords;
        v.resize(u.class_size(c));
        std::iota(v.begin(), v.end(), 0u);
    }
    return s;
}

bool SubVertexSet::contains(std::uint32_t c, std::uint32_t v) const {
    const auto& o = cls_[c].ords;
    return std::binary_search(o.begin(), o.end(), v);
}

unsigned __int128 SubVertexSet::measure() const {
    unsigned __int128 m = 1;
    for (const auto& c : cls_) {
        const unsigned __int128 s = c.ords.size();
        if (s == 0) return 0;
        unsigned __int128 next;
        if (__builtin_mul_overflow(m, s, &next)) return ~static_cast<unsigned __int128>(0);
        m = next;
    }
    return m;
}

std::uint64_t SubVertexSet::measure_saturated() const {
    unsigned __int128 m = measure();
    const unsigned __int128 umax = ~static_cast<std::uint64_t>(0);
    return m > umax ? ~static_cast<std::uint64_t>(0) : static_cast<std::uint64_t>(m);
}

bool SubVertexSet::remove(VertexId id) {
    auto& o = cls_[id.cls].ords;
    auto it = std::lower_bound(o.begin(), o.end(), id.ord);
    if (it == o.end() || *it != id.ord) return false;
    o.erase(it);
    cls_[id.cls].mask_valid = false;
    return true;
}

const std::uint64_t* SubVertexSet::build_mask(std::uint32_t c, std::uint32_t words) const {
    auto& cs = cls_[c];
    if (cs.mask.size() < words) cs.mask.resize(words);
    std::memset(cs.mask.data(), 0, cs.mask.size() * sizeof(std::uint64_t));
    for (std::uint32_t v : cs.ords) {
        cs.mask[v >> 6] |= (static_cast<std::uint64_t>(1) << (v & 63u));
    }
    cs.mask_valid = true;
    return cs.mask.data();
}

namespace {

template <typename Op>
SubVertexSet classwise(const SubVertexSet& a, const SubVertexSet& b, Op op) {
    if (a.k() != b.k()) throw std::invalid_argument("set operation: k mismatch");
    SubVertexSet out(a.k());
    std::vector<std::uint32_t> tmp;
    for (std::uint32_t c = 0; c < a.k(); ++c) {
        tmp.clear();
        op(a.ords(c), b.ords(c), tmp);
        out.set_class(c, tmp);
    }
    return out;
}

} // namespace

SubVertexSet intersect_sets(const SubVertexSet& a, const SubVertexSet& b) {
    return classwise(a, b,
                     [](const auto& x, const auto& y, auto& out) {
                         std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                               std::back_inserter(out));
                     });
}

SubVertexSet subtract_sets(const SubVertexSet& a, const SubVertexSet& b) {
    return classwise(a, b,
                     [](const auto& x, const auto& y, auto& out) {
                         std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                                             std::back_inserter(out));
                     });
}

SubVertexSet union_sets(const SubVertexSet& a, const SubVertexSet& b) {
    return classwise(a, b,
                     [](const auto& x, const auto& y, auto& out) {
                         std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                                        std::back_inserter(out));
                     });
}

std::vector<VertexId> flatten(const SubVertexSet& s) {
    std::vector<VertexId> out;
    out.reserve(s.total_size());
    for (std::uint32_t c = 0; c < s.k(); ++c) {
        for (std::uint32_t v : s.ords(c)) out.push_back(VertexId{c, v});
    }
    return out;
}

} // namespace hycount
