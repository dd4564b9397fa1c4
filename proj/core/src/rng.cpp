#include "hycount/rng.hpp"

namespace hycount {

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = bound * (~static_cast<std::uint64_t>(0) / bound);
    for (;;) {
        std::uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

} // namespace hycount
