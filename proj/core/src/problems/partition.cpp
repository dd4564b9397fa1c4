#include "hycount/problems/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hycount {

namespace {

Rat weight_of(const std::vector<std::uint32_t>& part, const std::vector<Rat>& log_sizes) {
    Rat w(0);
    for (std::uint32_t idx : part) w = w + log_sizes[idx];
    return w;
}

} // namespace

std::array<std::vector<std::uint32_t>, 3> partition_three(const std::vector<Rat>& log_sizes) {
    const std::uint32_t k = static_cast<std::uint32_t>(log_sizes.size());
    if (k < 3) throw std::invalid_argument("partition_three: need k >= 3");
    for (const Rat& w : log_sizes) {
        if (w.sign() < 0) throw std::invalid_argument("partition_three: negative weight");
    }

    std::array<std::vector<std::uint32_t>, 3> parts;
    for (std::uint32_t idx = 0; idx < k; ++idx) parts[2].push_back(idx);

    const Rat one(1);
    for (std::uint32_t step = 0; step < k * k + 16; ++step) {
        std::array<Rat, 3> w = {weight_of(parts[0], log_sizes), weight_of(parts[1], log_sizes),
                                weight_of(parts[2], log_sizes)};
        std::size_t lo = 0, hi = 0;
        for (std::size_t p = 1; p < 3; ++p) {
            if (w[p] < w[lo]) lo = p;
            if (w[hi] < w[p]) hi = p;
        }
        if (!(w[lo] + one < w[hi])) break;
        // Heaviest element of the heavy part, ties to the smallest index.
        std::size_t pick = 0;
        for (std::size_t t = 1; t < parts[hi].size(); ++t) {
            if (log_sizes[parts[hi][pick]] < log_sizes[parts[hi][t]]) pick = t;
        }
        parts[lo].push_back(parts[hi][pick]);
        parts[hi].erase(parts[hi].begin() + static_cast<std::ptrdiff_t>(pick));
    }

    // Give every part at least one class: once balanced, each part weighs at
    // most one unit, so moving the lightest element of the fullest part into
    // an empty one keeps the spread within a unit.
    for (;;) {
        std::size_t empty = 3;
        for (std::size_t p = 0; p < 3; ++p) {
            if (parts[p].empty()) {
                empty = p;
                break;
            }
        }
        if (empty == 3) break;
        std::size_t donor = 3;
        for (std::size_t p = 0; p < 3; ++p) {
            if (parts[p].size() < 2) continue;
            if (donor == 3 || parts[p].size() > parts[donor].size() ||
                (parts[p].size() == parts[donor].size() &&
                 weight_of(parts[donor], log_sizes) < weight_of(parts[p], log_sizes))) {
                donor = p;
            }
        }
        if (donor == 3) break; // fewer than 3 classes total; caller's k >= 3 prevents this
        std::size_t pick = 0;
        for (std::size_t t = 1; t < parts[donor].size(); ++t) {
            if (log_sizes[parts[donor][t]] < log_sizes[parts[donor][pick]]) pick = t;
        }
        parts[empty].push_back(parts[donor][pick]);
        parts[donor].erase(parts[donor].begin() + static_cast<std::ptrdiff_t>(pick));
    }

    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end(),
              [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
                  const Rat wa = weight_of(a, log_sizes), wb = weight_of(b, log_sizes);
                  if (wa < wb) return true;
                  if (wb < wa) return false;
                  return a < b;
              });
    return parts;
}

std::array<std::vector<std::uint32_t>, 2> partition_two(const std::vector<std::uint64_t>& sizes) {
    const std::uint32_t k = static_cast<std::uint32_t>(sizes.size());
    if (k < 1) throw std::invalid_argument("partition_two: need k >= 1");

    std::vector<std::uint32_t> order(k);
    for (std::uint32_t idx = 0; idx < k; ++idx) order[idx] = idx;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
        return a < b;
    });

    std::array<std::vector<std::uint32_t>, 2> parts;
    double lw[2] = {0.0, 0.0};
    for (std::uint32_t idx : order) {
        std::size_t tgt;
        if (parts[0].empty()) {
            tgt = 0;
        } else if (parts[1].empty()) {
            tgt = 1;
        } else {
            tgt = lw[0] <= lw[1] ? 0 : 1;
        }
        parts[tgt].push_back(idx);
        lw[tgt] += std::log2(static_cast<double>(std::max<std::uint64_t>(1, sizes[idx])));
    }
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return parts;
}

} // namespace hycount
