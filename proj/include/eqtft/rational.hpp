#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers in lowest terms.
 *
 * Numerator and denominator are 64-bit; intermediate products are formed in
 * 128 bits and a result that does not fit throws ArithmeticOverflow instead
 * of wrapping.
 */

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace eqtft {

class Rational {
public:
    using Int = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(Int n) : num_(n) {}  // NOLINT: implicit from integers is intended
    Rational(Int n, Int d) { assign(static_cast<__int128>(n), static_cast<__int128>(d)); }

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.assign(-static_cast<__int128>(num_), den_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        if (a.den_ == b.den_) {
            r.assign(static_cast<__int128>(a.num_) + b.num_, a.den_);
        } else {
            r.assign(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
        }
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_ == 0 || b.num_ == 0) return Rational{};
        // cross-cancel first so the 128-bit products stay small
        const Int g1 = std::gcd(a.num_, b.den_);
        const Int g2 = std::gcd(b.num_, a.den_);
        Rational r;
        r.assign(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                 static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (num_ == 0) throw Error("division by zero rational");
        Rational r;
        r.assign(den_, num_);
        return r;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    /// Integer floor of the value.
    Int floor() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Representative of the value modulo 1, in [0, 1).
    Rational mod_one() const { return *this - Rational(floor()); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q", or "p" for integers.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        auto to_int = [&](std::string_view s) -> Int {
            if (s.empty()) throw InvalidInput("rational syntax", "'" + std::string(text) + "'");
            std::size_t pos = 0;
            Int v = 0;
            try {
                v = std::stoll(std::string(s), &pos);
            } catch (const std::exception&) {
                throw InvalidInput("rational syntax", "'" + std::string(text) + "'");
            }
            if (pos != s.size()) throw InvalidInput("rational syntax", "'" + std::string(text) + "'");
            return v;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(to_int(text));
        const Int d = to_int(text.substr(slash + 1));
        if (d == 0) throw InvalidInput("rational denominator nonzero", "'" + std::string(text) + "'");
        return Rational(to_int(text.substr(0, slash)), d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw Error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        constexpr __int128 lo = INT64_MIN + 1;
        constexpr __int128 hi = INT64_MAX;
        if (d == 1 && n >= lo && n <= hi) {
            num_ = static_cast<Int>(n);
            den_ = 1;
            return;
        }
        // 64-bit gcd is much cheaper than 128-bit division when both fit
        const __int128 g = (n >= lo && n <= hi && d <= hi)
                               ? static_cast<__int128>(std::gcd(static_cast<Int>(n), static_cast<Int>(d)))
                               : gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n < lo || n > hi || d > hi) throw ArithmeticOverflow("rational result exceeds 64-bit range");
        num_ = static_cast<Int>(n);
        den_ = static_cast<Int>(n == 0 ? 1 : d);
    }

    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace eqtft
