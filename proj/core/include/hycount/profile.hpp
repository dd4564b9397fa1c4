#pragma once

// Parameter profiles for the estimator.
//
// The `faithful` profile instantiates every constant exactly as the guarantees
// require.  Those magnitudes are astronomically conservative (the heavy-set
// size bound zeta is ~1e26 already at k = 3, n ~ 200), so the `practical`
// profile keeps the same structure but replaces each polylog constant by a
// small tunable factor times the leading term.  The structure of the
// algorithms is identical in both modes; only magnitudes change.
//
// Everything k- or eps-dependent lives here so call sites never re-derive
// formulas.  log2(n) is computed once from the top-level universe's total
// vertex count and frozen; dimension-reduced sub-problems (pinned oracles)
// recompute the k-dependent constants with reduce_k() but keep the frozen
// logarithm and accuracy target.

#include <cstdint>
#include <string>

#include "hycount/rat.hpp"

namespace hycount {

enum class ProfileMode { faithful, practical };

struct ProfileFactors {
    Rat c_g{4};     // heavy-split divisor g(k)
    Rat c_zeta{8};  // heavy-set size cap
    Rat c_psi{8};   // discovery budget polylog
    Rat c_r{8};     // median repetitions
    Rat c_Q{8};     // guess-to-threshold amplification
    Rat c_d{8};     // discovery repetitions
};

struct ParamProfile {
    ProfileMode mode = ProfileMode::practical;
    std::uint32_t k = 0;
    std::uint64_t n_total = 0;   // frozen top-level vertex count
    std::uint32_t log2n = 1;     // ceil(log2 n_total), >= 1, frozen
    Rat eps;                     // clamped into (0, 1/4]
    Rat eps_prime;               // eps / (4 * log2n)
    ProfileFactors factors;

    Rat Q;                // threshold amplification
    Rat g;                // heavy-split divisor
    Rat zeta;             // heavy-set size cap
    Rat psi;              // discovery query-budget polylog
    Rat rho;              // Q / eps_prime^2
    std::uint64_t r_median = 0;
    std::uint64_t r_discovery = 0;
    double q_disc = 0.0;  // (1 - 1/e)^k
    std::uint64_t budget_C = 8; // oracle-budget multiplier for bounded discovery

    // eps may exceed 1/4 (it is clamped); eps <= 0 throws.
    static ParamProfile make(ProfileMode mode, std::uint32_t k, std::uint64_t n_total,
                             const Rat& eps, const ProfileFactors& f = {});

    // Same frozen log2n / eps / mode / factors, dimension k-1.  Used when a
    // pinned oracle reduces the problem dimension.
    ParamProfile reduce_k() const;

    Rat lambda_mid(const Rat& lambda) const { return lambda / g; }
    Rat lambda_low(const Rat& lambda) const {
        return lambda / (g * Rat::pow2(static_cast<int>(2 * k)));
    }
    // xi = lambda / lambda_low = 4^k * g; part of the declared measure slack.
    Rat xi() const { return g * Rat::pow2(static_cast<int>(2 * k)); }

    // Measure slack (6 * log2n)^k * xi: every query the estimator issues at
    // terminal guess level L satisfies measure <= (mu(V)/L) * slack.
    Rat measure_slack() const {
        return Rat::pow(Rat(6) * Rat(static_cast<long long>(log2n)), k) * xi();
    }

    // Recursion depth for threshold lambda: smallest d >= 0 with 2^(k d) >= lambda.
    std::uint32_t depth(const Rat& lambda) const;

    // Loop bound k * ceil(log2 n) shared by the guess and top-level wrappers.
    std::uint32_t guess_rounds() const { return k * log2n; }

    // Saturating integer views used for caps and budgets.
    std::uint64_t zeta_cap_u64() const { return zeta.floor_saturated_u64(); }
    std::uint64_t discovery_budget_u64() const;
    std::uint64_t base_case_cap_u64() const; // k * zeta

    std::string mode_name() const {
        return mode == ProfileMode::faithful ? "faithful" : "practical";
    }
};

} // namespace hycount
