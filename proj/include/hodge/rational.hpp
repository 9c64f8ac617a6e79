#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

using i64 = std::int64_t;
using i128 = __int128;

namespace detail {

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 narrow128(i128 v, const char* ctx)
{
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + ctx);
    return static_cast<i64>(v);
}

} // namespace detail

/// Exact rational number over int64 with 128-bit intermediates.
/// Always stored reduced with positive denominator; arithmetic throws
/// std::overflow_error rather than wrapping.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(i64 n) : num_(n), den_(1) {}
    Rat(i64 n, i64 d)
    {
        if (d == 0)
            throw std::domain_error("Rat: zero denominator");
        normalize(n, d);
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    /// Value lies in (1/2)Z.
    bool is_half_integral() const { return den_ == 1 || den_ == 2; }

    Rat operator-() const
    {
        Rat r;
        r.num_ = detail::narrow128(-i128(num_), "Rat negate");
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b)
    {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b)
    {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b)
    {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b)
    {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string to_string() const
    {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r)
    {
        return os << r.to_string();
    }

private:
    static Rat make(i128 n, i128 d)
    {
        Rat r;
        i128 g = detail::gcd128(n, d);
        if (g == 0) {
            r.num_ = 0;
            r.den_ = 1;
            return r;
        }
        n /= g;
        d /= g;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        r.num_ = detail::narrow128(n, "Rat");
        r.den_ = detail::narrow128(d, "Rat");
        return r;
    }

    void normalize(i64 n, i64 d)
    {
        Rat r = make(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    i64 num_;
    i64 den_;
};

using RatVec = std::vector<Rat>;

inline Rat dot(const RatVec& a, const std::vector<i64>& b)
{
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * Rat(b[i]);
    return s;
}

} // namespace hodge
