#include "hycount/rat.hpp"

#include <cmath>
#include <cstring>

namespace hycount {

namespace detail {

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = uabs128(v);
    char buf[48];
    int pos = 48;
    while (u != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + pos, buf + 48);
    return s;
}

} // namespace detail

void Rat::normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    unsigned __int128 g = detail::gcd128(detail::uabs128(num_), detail::uabs128(den_));
    if (g > 1) {
        num_ /= static_cast<__int128>(g);
        den_ /= static_cast<__int128>(g);
    }
}

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rat: non-finite double");
    if (x == 0.0) return Rat();
    int exp = 0;
    double frac = std::frexp(x, &exp); // x = frac * 2^exp, |frac| in [0.5, 1)
    // 53 doublings always make the mantissa integral.
    __int128 mant = static_cast<__int128>(std::ldexp(frac, 53));
    exp -= 53;
    return Rat(mant, 1).times_pow2(exp);
}

Rat Rat::times_pow2(int e) const {
    if (num_ == 0) return Rat();
    __int128 n = num_, d = den_;
    for (; e > 0; --e) {
        if ((d & 1) == 0) d >>= 1;
        else n = detail::checked_mul(n, 2);
    }
    for (; e < 0; ++e) {
        if ((n & 1) == 0) n >>= 1;
        else d = detail::checked_mul(d, 2);
    }
    return Rat(n, d);
}

Rat Rat::pow2(int e) {
    if (e < 0) return Rat(1, 1).times_pow2(e);
    if (e > 125) throw ParamOverflow();
    return Rat(static_cast<__int128>(1) << e, 1);
}

Rat Rat::pow(const Rat& base, unsigned exp) {
    Rat r(1);
    Rat b = base;
    while (exp != 0) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return r;
}

std::uint64_t Rat::floor_saturated_u64() const {
    if (num_ <= 0) return 0;
    __int128 q = num_ / den_;
    const __int128 umax = static_cast<__int128>(~static_cast<std::uint64_t>(0));
    return q > umax ? ~static_cast<std::uint64_t>(0) : static_cast<std::uint64_t>(q);
}

std::string Rat::to_decimal_string(int max_frac) const {
    std::string out;
    __int128 n = num_;
    if (n < 0) {
        out.push_back('-');
        n = -n;
    }
    out += detail::int128_to_string(n / den_);
    __int128 rem = n % den_;
    if (rem == 0) return out;
    std::string frac;
    bool truncated = true;
    constexpr __int128 kMax = ~(unsigned __int128)0 >> 1;
    for (int i = 0; i < max_frac; ++i) {
        if (rem > kMax / 10) break; // next digit would overflow; mark truncated
        rem *= 10;
        frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
        rem %= den_;
        if (rem == 0) {
            truncated = false;
            break;
        }
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) {
        out.push_back('.');
        out += frac;
    }
    if (truncated) out.insert(out.begin(), '~');
    return out;
}

std::string Rat::to_fraction_string() const {
    std::string s = detail::int128_to_string(num_);
    if (den_ != 1) {
        s.push_back('/');
        s += detail::int128_to_string(den_);
    }
    return s;
}

} // namespace hycount
