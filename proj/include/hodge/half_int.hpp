#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hodge/rational.hpp"

namespace hodge {

/// Element of (1/2)Z stored as its doubled value, so parity arguments and
/// comparisons stay exact.
struct HalfInt {
    i64 twice = 0;

    HalfInt() = default;
    explicit HalfInt(i64 t) : twice(t) {}

    static HalfInt whole(i64 v) { return HalfInt(2 * v); }

    static HalfInt from_rat(const Rat& r)
    {
        if (!r.is_half_integral())
            throw std::logic_error("value " + r.to_string() + " is not a half-integer");
        return HalfInt(r.den() == 1 ? 2 * r.num() : r.num());
    }

    Rat to_rat() const { return Rat(twice, 2); }

    bool is_integer() const { return twice % 2 == 0; }
    /// Only valid for integral values.
    bool is_even_integer() const { return twice % 4 == 0; }

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    HalfInt operator-() const { return HalfInt(-twice); }

    std::string to_string() const
    {
        if (twice % 2 == 0)
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, HalfInt h)
    {
        return os << h.to_string();
    }
};

} // namespace hodge
