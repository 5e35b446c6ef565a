#pragma once
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace ro2ss {

/// Sentinel valuation of zero.
inline constexpr std::int64_t kValInfinity = std::numeric_limits<std::int64_t>::max();

/// An element of Z localized at 2: numerator over an odd positive denominator,
/// kept in reduced form.  Every odd integer is a unit.
class Local2 {
  public:
    Local2() = default;
    Local2(std::int64_t n) : num_(n) {}
    Local2(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    /// Odd numerator and odd denominator.
    bool is_unit() const { return num_ != 0 && (num_ & 1); }
    /// 2-locally integral: valuation >= 0.
    bool is_integral() const { return true; } // den_ is always odd

    /// 2-adic valuation; kValInfinity for zero.
    std::int64_t valuation() const {
        if (num_ == 0) return kValInfinity;
        std::int64_t v = 0, x = num_;
        while ((x & 1) == 0) { x >>= 1; ++v; }
        return v;
    }

    friend Local2 operator+(Local2 a, Local2 b) {
        return Local2(checked(wide(a.num_) * b.den_ + wide(b.num_) * a.den_),
                      checked(wide(a.den_) * b.den_), already_reduced_tag{});
    }
    friend Local2 operator-(Local2 a, Local2 b) { return a + Local2(-b.num_, b.den_); }
    friend Local2 operator-(Local2 a) { return Local2(-a.num_, a.den_); }
    friend Local2 operator*(Local2 a, Local2 b) {
        return Local2(checked(wide(a.num_) * b.num_), checked(wide(a.den_) * b.den_),
                      already_reduced_tag{});
    }
    /// Division; the divisor's odd part inverts, powers of 2 move to the denominator
    /// only if the quotient stays 2-locally integral — otherwise this asserts.
    friend Local2 operator/(Local2 a, Local2 b) {
        assert(!b.is_zero());
        Local2 r(checked(wide(a.num_) * b.den_), checked(wide(a.den_) * b.num_),
                 already_reduced_tag{});
        return r;
    }
    Local2& operator+=(Local2 b) { return *this = *this + b; }
    Local2& operator-=(Local2 b) { return *this = *this - b; }
    Local2& operator*=(Local2 b) { return *this = *this * b; }

    friend bool operator==(Local2 a, Local2 b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(Local2 a, Local2 b) { return !(a == b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    struct already_reduced_tag {};
    Local2(std::int64_t n, std::int64_t d, already_reduced_tag) : num_(n), den_(d) { reduce(); }

    static __int128 wide(std::int64_t x) { return static_cast<__int128>(x); }
    static std::int64_t checked(__int128 x) {
        assert(x <= std::numeric_limits<std::int64_t>::max() &&
               x >= std::numeric_limits<std::int64_t>::min());
        return static_cast<std::int64_t>(x);
    }

    void reduce() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        assert(den_ != 0);
        if (num_ == 0) { den_ = 1; return; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
        // 2-locality: the denominator must be odd.  Division by an even number
        // is only legal when the numerator carried the factor, which the gcd
        // removal above guarantees whenever the value is 2-locally integral.
        assert(den_ & 1);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// 2^k as a Local2, k may be negative only if used transiently (asserts otherwise).
inline Local2 pow2(std::int64_t k) {
    assert(k >= 0 && k < 62);
    return Local2(std::int64_t(1) << k);
}

} // namespace ro2ss
