#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

namespace ctilde {

/// Exact element a + b*sqrt(2) of Z[sqrt 2].
///
/// Reflection matrices of Coxeter graphs with edge labels in {2,3,4} have
/// entries in this ring, since 2cos(pi/m) is 2, 1, sqrt 2 or 0.
struct QuadInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr QuadInt() = default;
    constexpr QuadInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

    static constexpr QuadInt sqrt2() { return {0, 1}; }

    constexpr bool is_zero() const { return a == 0 && b == 0; }

    /// Sign of a + b*sqrt 2, decided without floating point.
    constexpr int sign() const {
        if (a >= 0 && b >= 0) return (a != 0 || b != 0) ? 1 : 0;
        if (a <= 0 && b <= 0) return -1;
        // mixed signs: compare a^2 with 2 b^2 (never equal, sqrt 2 is irrational)
        const __int128 a2 = static_cast<__int128>(a) * a;
        const __int128 b2 = static_cast<__int128>(b) * b * 2;
        if (a > 0) return a2 > b2 ? 1 : -1;
        return b2 > a2 ? 1 : -1;
    }

    constexpr QuadInt operator-() const { return {-a, -b}; }
    constexpr QuadInt& operator+=(const QuadInt& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    constexpr QuadInt& operator-=(const QuadInt& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    friend constexpr QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend constexpr QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend constexpr QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend constexpr bool operator==(const QuadInt&, const QuadInt&) = default;

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
        if (x.b == 0) return os << x.a;
        return os << x.a << (x.b < 0 ? "-" : "+") << (x.b < 0 ? -x.b : x.b) << "r2";
    }
};

}  // namespace ctilde

template <>
struct std::hash<ctilde::QuadInt> {
    std::size_t operator()(const ctilde::QuadInt& x) const noexcept {
        return std::hash<std::int64_t>{}(x.a) * 1000003u ^ std::hash<std::int64_t>{}(x.b);
    }
};
