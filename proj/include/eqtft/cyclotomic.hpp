#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Roots of unity as rational rotations, and exact cyclotomic numbers.
 *
 * A Cyclotomic of order N is a polynomial in ζ_N with rational coefficients,
 * stored reduced modulo the N-th cyclotomic polynomial Φ_N. Within one order
 * the reduced coefficient vector is canonical, so equality of values is
 * equality of coefficient vectors. Operands of different orders are first
 * embedded into the lcm order via ζ_M = ζ_N^(N/M).
 */

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace eqtft {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline IntPoly exact_divide(IntPoly num, const IntPoly& den) {
    // den is monic
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw Error("polynomial division degree mismatch");
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw Error("cyclotomic division left a remainder");
    return quot;
}

}  // namespace detail

/// Φ_N, computed by dividing x^N - 1 by Φ_d for every proper divisor d of N.
inline const IntPoly& cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw InvalidInput("cyclotomic order positive", "N = 0");
    static std::mutex mutex;
    static std::map<std::uint32_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) p = detail::exact_divide(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

/// exp(2πi q) for a rational q, stored as q mod 1.
class RationalRotation {
public:
    RationalRotation() = default;
    explicit RationalRotation(const Rational& q) : q_(q.mod_one()) {}
    RationalRotation(std::int64_t k, std::int64_t n) : q_(Rational(k, n).mod_one()) {}

    const Rational& turns() const noexcept { return q_; }
    /// Smallest N with this rotation an N-th root of unity.
    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(q_.den()); }
    bool is_identity() const noexcept { return q_.is_zero(); }

    friend RationalRotation operator*(const RationalRotation& a, const RationalRotation& b) {
        return RationalRotation(a.q_ + b.q_);
    }
    friend RationalRotation operator/(const RationalRotation& a, const RationalRotation& b) {
        return RationalRotation(a.q_ - b.q_);
    }
    RationalRotation inverse() const { return RationalRotation(-q_); }
    RationalRotation pow(std::int64_t k) const { return RationalRotation(q_ * Rational(k)); }

    friend bool operator==(const RationalRotation&, const RationalRotation&) = default;

    std::string to_string() const { return q_.to_string(); }
    static RationalRotation parse(std::string_view text) { return RationalRotation(Rational::parse(text)); }

private:
    Rational q_;
};

class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(std::int64_t n) : coeffs_{Rational(n)} {}  // NOLINT: implicit from integers is intended
    Cyclotomic(const Rational& r) : coeffs_{r} {}         // NOLINT

    /// Value of sum_k coeffs[k] ζ_N^k for coefficient vectors of any length.
    static Cyclotomic from_powers(std::uint32_t order, const std::vector<Rational>& coeffs) {
        Cyclotomic c;
        c.order_ = order;
        c.coeffs_ = reduce(order, coeffs);
        return c;
    }

    /// Reduced representation given directly; length must be φ(N).
    static Cyclotomic from_reduced(std::uint32_t order, std::vector<Rational> coeffs) {
        if (coeffs.size() != degree(order))
            throw InvalidInput("cyclotomic coefficient count equals phi(N)",
                               "N = " + std::to_string(order) + ", got " + std::to_string(coeffs.size()));
        Cyclotomic c;
        c.order_ = order;
        c.coeffs_ = std::move(coeffs);
        return c;
    }

    static Cyclotomic root_of_unity(std::uint32_t order, std::int64_t k) {
        const std::int64_t kk = ((k % order) + order) % order;
        std::vector<Rational> p(static_cast<std::size_t>(kk) + 1, Rational(0));
        p[static_cast<std::size_t>(kk)] = Rational(1);
        return from_powers(order, p);
    }

    static Cyclotomic from_rotation(const RationalRotation& r) {
        return root_of_unity(r.order(), r.turns().num());
    }

    std::uint32_t order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    static std::size_t degree(std::uint32_t order) { return cyclotomic_polynomial(order).size() - 1; }

    /// Same value written in order m, which must be a multiple of order().
    Cyclotomic embed(std::uint32_t m) const {
        if (m == order_) return *this;
        if (m % order_ != 0) throw Error("cyclotomic embedding into a non-multiple order");
        const std::uint32_t step = m / order_;
        std::vector<Rational> p(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * step + 1, Rational(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
        return from_powers(m, p);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::optional<Rational> as_rational() const {
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) return std::nullopt;
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_) {
            const auto m = std::lcm(a.order_, b.order_);
            return a.embed(m) + b.embed(m);
        }
        Cyclotomic r = a;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    /// Product of two values of the same order, reduced modulo Φ_N.
    static Cyclotomic mul_same_order(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_)
            throw Error("cyclotomic_mul: orders " + std::to_string(a.order_) + " and " +
                        std::to_string(b.order_) + " differ; embed into the lcm first");
        if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
            const bool a_scalar = a.coeffs_.size() == 1;
            Cyclotomic r = a_scalar ? b : a;
            const Rational c = a_scalar ? a.coeffs_[0] : b.coeffs_[0];
            for (auto& x : r.coeffs_) x *= c;
            return r;
        }
        std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_powers(a.order_, p);
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_) {
            // a rational factor needs no embedding
            if (a.order_ == 1) return scaled(b, a.coeffs_[0]);
            if (b.order_ == 1) return scaled(a, b.coeffs_[0]);
            const auto m = std::lcm(a.order_, b.order_);
            return mul_same_order(a.embed(m), b.embed(m));
        }
        return mul_same_order(a, b);
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw Error("division by zero cyclotomic");
        if (order_ == 1 || coeffs_.size() == 1) {
            Cyclotomic r = *this;
            r.coeffs_[0] = coeffs_[0].inverse();
            return r;
        }
        // solve (multiplication by *this) y = 1 in the power basis
        const std::size_t d = coeffs_.size();
        Matrix<Rational> m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const auto col = mul_same_order(*this, root_of_unity(order_, static_cast<std::int64_t>(k)));
            for (std::size_t i = 0; i < d; ++i) m(i, k) = col.coeffs_[i];
        }
        Vec<Rational> e(d, Rational(0));
        e[0] = Rational(1);
        const auto y = eqtft::solve(m, e);
        if (!y) throw Error("cyclotomic inverse does not exist");
        return from_reduced(order_, *y);
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic pow(std::uint64_t k) const {
        Cyclotomic r(1), base = *this;
        while (k) {
            if (k & 1U) r = r * base;
            base = base * base;
            k >>= 1U;
        }
        return r;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        const auto m = std::lcm(a.order_, b.order_);
        return a.embed(m).coeffs_ == b.embed(m).coeffs_;
    }

    /// Floating rendering for display only.
    std::complex<double> approx() const {
        std::complex<double> z{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
            z += coeffs_[k].to_double() * std::polar(1.0, angle);
        }
        return z;
    }

    std::string to_string() const {
        if (auto r = as_rational()) return r->to_string();
        std::string out;
        const std::string z = "z" + std::to_string(order_);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            const bool unit = coeffs_[k] == Rational(1);
            if (k == 0 || !unit) out += coeffs_[k].num() < 0 && k > 0 ? "(" + coeffs_[k].to_string() + ")" : coeffs_[k].to_string();
            if (k > 0) {
                if (!unit) out += "*";
                out += z;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    static Cyclotomic scaled(Cyclotomic v, const Rational& c) {
        for (auto& x : v.coeffs_) x *= c;
        return v;
    }

    static std::vector<Rational> reduce(std::uint32_t order, std::vector<Rational> p) {
        const IntPoly& phi = cyclotomic_polynomial(order);
        const std::size_t d = phi.size() - 1;
        for (std::size_t i = p.size(); i-- > d;) {
            const Rational c = p[i];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j <= d; ++j)
                if (phi[j] != 0) p[i - d + j] -= c * Rational(phi[j]);
        }
        p.resize(d, Rational(0));
        return p;
    }

    std::uint32_t order_ = 1;
    std::vector<Rational> coeffs_{Rational(0)};
};

}  // namespace eqtft
