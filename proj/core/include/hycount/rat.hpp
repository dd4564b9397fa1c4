#pragma once

// Exact rational arithmetic on 128-bit machine integers.
//
// Thresholds, degree bounds and estimates are kept exact so that comparisons
// like "lambda <= 1" or "median >= L * 2^i" never depend on floating-point
// rounding.  All operations are overflow-checked: parameter formulas in the
// faithful profile produce values around 1e26 at toy sizes, which fit in
// __int128 with room to spare, but a genuine overflow throws ParamOverflow
// instead of wrapping silently.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hycount {

class ParamOverflow : public std::runtime_error {
public:
    ParamOverflow() : std::runtime_error(
        "rational arithmetic overflow: parameter magnitudes exceed the representable range") {}
};

namespace detail {

inline unsigned __int128 uabs128(__int128 v) {
    return v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
}

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline __int128 checked_mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ParamOverflow();
    return r;
}

inline __int128 checked_add(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw ParamOverflow();
    return r;
}

std::string int128_to_string(__int128 v);

} // namespace detail

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {} // NOLINT: implicit on purpose
    Rat(unsigned long long n) : num_(static_cast<__int128>(n)), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}          // NOLINT
    Rat(unsigned long n) : num_(static_cast<__int128>(n)), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}           // NOLINT
    Rat(unsigned n) : num_(static_cast<__int128>(n)), den_(1) {}
    Rat(__int128 n, __int128 d) : num_(n), den_(d) { normalize(); }

    static Rat from_int128(__int128 n) { return Rat(n, 1); }

    // Doubles are dyadic rationals, so finite inputs convert exactly.
    static Rat from_double(double x);

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rat operator-() const { return Rat(-num_, den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        using namespace detail;
        __int128 n = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
        __int128 d = checked_mul(a.den_, b.den_);
        return Rat(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        // Cross-reduce before multiplying to keep magnitudes small.
        using namespace detail;
        unsigned __int128 g1 = gcd128(uabs128(a.num_), uabs128(b.den_));
        unsigned __int128 g2 = gcd128(uabs128(b.num_), uabs128(a.den_));
        __int128 an = g1 > 1 ? a.num_ / static_cast<__int128>(g1) : a.num_;
        __int128 bd = g1 > 1 ? b.den_ / static_cast<__int128>(g1) : b.den_;
        __int128 bn = g2 > 1 ? b.num_ / static_cast<__int128>(g2) : b.num_;
        __int128 ad = g2 > 1 ? a.den_ / static_cast<__int128>(g2) : a.den_;
        return Rat(checked_mul(an, bn), checked_mul(ad, bd), already_normal{});
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        Rat inv = b.num_ > 0 ? Rat(b.den_, b.num_, already_normal{})
                             : Rat(-b.den_, -b.num_, already_normal{});
        return a * inv;
    }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        using namespace detail;
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Multiply by 2^e (e may be negative); exact.
    Rat times_pow2(int e) const;

    // 2^e as a rational, e >= 0 (throws on overflow past ~126 bits).
    static Rat pow2(int e);

    // Integer power with overflow checking.
    static Rat pow(const Rat& base, unsigned exp);

    // floor(*this) for non-negative values.
    __int128 floor_nonneg() const {
        if (num_ < 0) throw std::domain_error("Rat: floor_nonneg on negative value");
        return num_ / den_;
    }

    // Saturating conversion to uint64 (floor), for caps and budgets.
    std::uint64_t floor_saturated_u64() const;

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Exact decimal rendering: integer values print with no point; otherwise up
    // to `max_frac` fractional digits are emitted, trailing zeros trimmed, with
    // a '~' prefix when the expansion was truncated (non-terminating).
    std::string to_decimal_string(int max_frac = 12) const;

    // "num/den" rendering, always exact.
    std::string to_fraction_string() const;

private:
    struct already_normal {};
    Rat(__int128 n, __int128 d, already_normal) : num_(n), den_(d) {}

    void normalize();

    __int128 num_;
    __int128 den_; // > 0
};

} // namespace hycount
