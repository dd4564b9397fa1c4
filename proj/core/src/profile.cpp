#include "hycount/profile.hpp"

#include <cmath>
#include <stdexcept>

#include "hycount/universe.hpp"

namespace hycount {

namespace {

Rat saturating_mul_u64(const Rat& a, const Rat& b) {
    // Budgets and caps saturate instead of throwing: an over-wide budget is
    // simply "unbounded" for any instance we can touch.
    try {
        return a * b;
    } catch (const ParamOverflow&) {
        return Rat::from_int128((static_cast<__int128>(1) << 126));
    }
}

} // namespace

ParamProfile ParamProfile::make(ProfileMode mode, std::uint32_t k, std::uint64_t n_total,
                                const Rat& eps_in, const ProfileFactors& f) {
    if (k == 0) throw std::invalid_argument("profile: k must be >= 1");
    if (eps_in.sign() <= 0) throw std::invalid_argument("profile: eps must be positive");

    ParamProfile p;
    p.mode = mode;
    p.k = k;
    p.n_total = n_total;
    p.log2n = ceil_log2(n_total < 2 ? 2 : n_total);
    p.factors = f;

    const Rat quarter(1, 4);
    p.eps = eps_in > quarter ? quarter : eps_in;
    const Rat lg(static_cast<long long>(p.log2n));
    p.eps_prime = p.eps / (Rat(4) * lg);

    const Rat kk(static_cast<long long>(k));
    const Rat eps2 = p.eps_prime * p.eps_prime;

    if (mode == ProfileMode::faithful) {
        // Q = 5k 2^k lg^3, g = (k lg(4n))^(k^2), zeta = k g (Q/eps'^2) lg^4,
        // psi = 4^k k^2 lg(k) lg^(k+2), rho = Q/eps'^2.
        p.Q = Rat(5) * kk * Rat::pow2(static_cast<int>(k)) * Rat::pow(lg, 3);
        const Rat lg4n(static_cast<long long>(ceil_log2(4 * (n_total < 2 ? 2 : n_total))));
        p.g = Rat::pow(kk * lg4n, k * k);
        p.rho = p.Q / eps2;
        p.zeta = kk * p.g * p.rho * Rat::pow(lg, 4);
        const Rat lgk(static_cast<long long>(k <= 1 ? 1 : ceil_log2(k)));
        p.psi = Rat::pow2(static_cast<int>(2 * k)) * kk * kk * lgk * Rat::pow(lg, k + 2);
        p.r_median = 400 * static_cast<std::uint64_t>(p.log2n);
        p.q_disc = std::pow(1.0 - 1.0 / std::exp(1.0), static_cast<double>(k));
        p.r_discovery = static_cast<std::uint64_t>(
            std::ceil(600.0 * static_cast<double>(p.log2n) / p.q_disc));
    } else {
        p.Q = f.c_Q * kk * lg;
        p.g = f.c_g;
        p.rho = p.Q / eps2;
        p.zeta = f.c_zeta * kk * lg * lg / eps2;
        p.psi = f.c_psi * lg;
        p.r_median = (f.c_r * lg).floor_saturated_u64();
        p.q_disc = std::pow(1.0 - 1.0 / std::exp(1.0), static_cast<double>(k));
        p.r_discovery = (f.c_d * lg).floor_saturated_u64();
    }
    if (p.r_median == 0) p.r_median = 1;
    if (p.r_discovery == 0) p.r_discovery = 1;
    return p;
}

ParamProfile ParamProfile::reduce_k() const {
    if (k <= 1) throw std::logic_error("profile: cannot reduce below k = 1");
    ParamProfile q = make(mode, k - 1, n_total, eps, factors);
    // Keep the frozen logarithm (it is derived from n_total, which does not
    // change) and the frozen accuracy targets.
    q.log2n = log2n;
    q.eps_prime = eps_prime;
    q.budget_C = budget_C;
    return q;
}

std::uint32_t ParamProfile::depth(const Rat& lambda) const {
    std::uint32_t d = 0;
    Rat cur(1);
    const Rat step = Rat::pow2(static_cast<int>(k));
    while (cur < lambda) {
        cur *= step;
        ++d;
        if (d > 4096) throw std::logic_error("depth: threshold out of range");
    }
    return d;
}

std::uint64_t ParamProfile::discovery_budget_u64() const {
    return saturating_mul_u64(Rat(static_cast<long long>(budget_C)) * psi, zeta)
        .floor_saturated_u64();
}

std::uint64_t ParamProfile::base_case_cap_u64() const {
    Rat cap = saturating_mul_u64(Rat(static_cast<long long>(k)), zeta);
    std::uint64_t v = cap.floor_saturated_u64();
    return v == 0 ? 1 : v;
}

} // namespace hycount
