#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "spinrep/rational.hpp"

namespace spinrep {

// Half-integer stored as twice its value, so 59/2 is twice == 59.
// All arithmetic and comparisons are exact.
struct HalfInt {
    long long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long long t) : twice(t) {}

    static constexpr HalfInt from_twice(long long t) { return HalfInt(t); }
    static constexpr HalfInt whole(long long n) { return HalfInt(2 * n); }

    bool is_integer() const { return twice % 2 == 0; }
    double value() const { return static_cast<double>(twice) / 2.0; }
    Rational rat() const { return Rational(twice, 2); }

    // Valid only for integral values.
    long long as_integer() const {
        if (!is_integer()) throw std::logic_error("HalfInt: not an integer: " + str());
        return twice / 2;
    }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    HalfInt operator-() const { return HalfInt(-twice); }
    friend HalfInt operator*(long long k, HalfInt a) { return HalfInt(k * a.twice); }

    friend auto operator<=>(HalfInt a, HalfInt b) = default;

    HalfInt abs() const { return twice < 0 ? HalfInt(-twice) : *this; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline Rational operator*(HalfInt a, HalfInt b) { return a.rat() * b.rat(); }

constexpr HalfInt half(long long numerator_of_halves) { return HalfInt(numerator_of_halves); }

}  // namespace spinrep
