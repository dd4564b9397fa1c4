#pragma once

// Deterministic splittable randomness.
//
// Every randomized routine receives an RngStream and derives child streams for
// its sub-tasks from stable structural labels (module tag + indices such as
// repetition number, recursion level, sampling-vector index).  Two runs with
// the same master seed therefore use identical randomness in every sub-task,
// independent of evaluation order or threading, and adding or removing
// diagnostics never perturbs results.

#include <cstdint>

namespace hycount {

namespace rnglabel {
// Stable stream labels.  Values are arbitrary but frozen: changing them would
// change every seeded result.
inline constexpr std::uint64_t kHyperedgeGuess   = 0x01;
inline constexpr std::uint64_t kGuessMedian      = 0x02;
inline constexpr std::uint64_t kMedianRep        = 0x03;
inline constexpr std::uint64_t kRecurseFindHeavy = 0x04;
inline constexpr std::uint64_t kRecurseCount     = 0x05;
inline constexpr std::uint64_t kRecurseHalf      = 0x06;
inline constexpr std::uint64_t kRecurseNext      = 0x07;
inline constexpr std::uint64_t kHeavyVector      = 0x08;
inline constexpr std::uint64_t kDiscoveryRep     = 0x09;
inline constexpr std::uint64_t kDegGuess         = 0x0a;
inline constexpr std::uint64_t kDegMedian        = 0x0b;
inline constexpr std::uint64_t kCountVertex      = 0x0c;
inline constexpr std::uint64_t kGenerator        = 0x0d;
} // namespace rnglabel

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ kInit)) {}

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix(state_);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits (generators only; the
    // estimator itself uses exact dyadic coin flips).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_coin() { return (next_u64() & 1u) != 0; }

    // Child stream for a labelled sub-task.  Derivation reads the current
    // state without advancing it, so sibling children must use distinct
    // (label, a, b) triples.
    RngStream child(std::uint64_t label, std::uint64_t a = 0, std::uint64_t b = 0) const {
        std::uint64_t h = state_;
        h = mix(h ^ (label * kGamma + 0x1b873593u));
        h = mix(h ^ (a + kGamma));
        h = mix(h ^ (b + 0x632be59bd9b4e019ull));
        return RngStream(h, raw{});
    }

private:
    struct raw {};
    RngStream(std::uint64_t s, raw) : state_(s) {}

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kInit  = 0x8f46290735fca983ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace hycount
