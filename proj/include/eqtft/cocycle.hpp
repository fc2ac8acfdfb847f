#pragma once

/**
 * @file cocycle.hpp
 * @brief Normalized U(1)-valued 2-cocycles with rational rotation values.
 */

#include <numeric>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace eqtft {

class Cocycle2 {
public:
    Cocycle2(FiniteGroup g, std::vector<RationalRotation> values) : group_(std::move(g)), values_(std::move(values)) {
        const std::size_t n = group_.size();
        if (values_.size() != n * n) throw InvalidInput("cocycle table is |G| x |G|", "size mismatch");
        const Elem e = group_.identity();
        for (Elem a = 0; a < n; ++a)
            if (!(*this)(e, a).is_identity() || !(*this)(a, e).is_identity())
                throw InvalidInput("normalized cocycle", "theta(1, g) or theta(g, 1) != 1 at g = " + std::to_string(a));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (!((*this)(a, b) * (*this)(group_.mul(a, b), c) == (*this)(b, c) * (*this)(a, group_.mul(b, c))))
                        throw InvalidInput("cocycle identity", "(a, b, c) = (" + std::to_string(a) + ", " +
                                                                   std::to_string(b) + ", " + std::to_string(c) + ")");
    }

    static Cocycle2 trivial(const FiniteGroup& g) {
        return Cocycle2(g, std::vector<RationalRotation>(g.size() * g.size()));
    }

    /// delta beta (a, b) = beta(a) beta(b) / beta(ab); beta(1) must be 1.
    static Cocycle2 coboundary(const FiniteGroup& g, const std::vector<RationalRotation>& beta) {
        const std::size_t n = g.size();
        if (beta.size() != n) throw InvalidInput("one cochain value per element", "size mismatch");
        std::vector<RationalRotation> v(n * n);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) v[a * n + b] = beta[a] * beta[b] / beta[g.mul(a, b)];
        return Cocycle2(g, std::move(v));
    }

    const FiniteGroup& group() const noexcept { return group_; }
    const RationalRotation& operator()(Elem a, Elem b) const { return values_[a * group_.size() + b]; }
    const std::vector<RationalRotation>& values() const noexcept { return values_; }

    /// Least common multiple of the value orders.
    std::uint32_t order() const {
        std::uint32_t n = 1;
        for (const auto& v : values_) n = std::lcm(n, v.order());
        return n;
    }

    Cyclotomic value(Elem a, Elem b) const { return Cyclotomic::from_rotation((*this)(a, b)).embed(order()); }

    friend Cocycle2 operator*(const Cocycle2& x, const Cocycle2& y) {
        if (!(x.group_ == y.group_)) throw InvalidInput("cocycles over one group", "group mismatch");
        std::vector<RationalRotation> v(x.values_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.values_[i] * y.values_[i];
        return Cocycle2(x.group_, std::move(v));
    }

    friend bool operator==(const Cocycle2& x, const Cocycle2& y) {
        return x.group_ == y.group_ && x.values_ == y.values_;
    }

private:
    FiniteGroup group_;
    std::vector<RationalRotation> values_;
};

/// All normalized cocycles with values in the N-th roots of unity, by
/// exhaustive search over the non-normalized entries. Intended for tiny groups.
inline std::vector<Cocycle2> enumerate_cocycles(const FiniteGroup& g, std::uint32_t n_roots,
                                                std::size_t limit = 1'000'000) {
    const std::size_t n = g.size();
    std::vector<std::pair<Elem, Elem>> free;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (a != g.identity() && b != g.identity()) free.emplace_back(a, b);
    long double total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= n_roots;
    if (total > static_cast<long double>(limit)) throw BudgetExceeded("cocycle search space too large");
    std::vector<Cocycle2> out;
    std::vector<std::uint32_t> k(free.size(), 0);
    while (true) {
        std::vector<RationalRotation> v(n * n);
        for (std::size_t i = 0; i < free.size(); ++i)
            v[free[i].first * n + free[i].second] = RationalRotation(k[i], n_roots);
        try {
            out.emplace_back(g, std::move(v));
        } catch (const InvalidInput&) {
        }
        std::size_t pos = 0;
        while (pos < k.size() && ++k[pos] == n_roots) k[pos++] = 0;
        if (pos == k.size()) break;
    }
    return out;
}

}  // namespace eqtft
