#pragma once

/**
 * @file integration.hpp
 * @brief Groupoid cardinality and integrals of invariant functions.
 */

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "pullback.hpp"

namespace eqtft {

/// Sum over isomorphism classes of 1/|Aut(x)|.
inline Rational cardinality(const FiniteGroupoid& g) {
    Rational total(0);
    for (ObjId x : g.representatives()) total += Rational(1, static_cast<Rational::Int>(g.automorphisms(x).size()));
    return total;
}

/// A vector-valued function on objects that is constant on isomorphism classes.
template <ExactField S>
class InvariantFunction {
public:
    InvariantFunction(GroupoidPtr domain, std::vector<Vec<S>> values) : domain_(std::move(domain)), values_(std::move(values)) {
        if (values_.size() != domain_->num_objects()) throw InvalidInput("one value per object", "size mismatch");
        for (const auto& v : values_)
            if (v.size() != width())
                throw InvalidInput("values share a target space", "value widths differ");
        for (MorId f = 0; f < domain_->num_morphisms(); ++f)
            if (!(values_[domain_->source(f)] == values_[domain_->target(f)]))
                throw InvalidInput("function invariant under isomorphisms", "morphism " + std::to_string(f) + " from " +
                                                                                std::to_string(domain_->source(f)));
    }

    /// Scalar-valued constant function.
    static InvariantFunction constant(const GroupoidPtr& domain, const S& value) {
        return InvariantFunction(domain, std::vector<Vec<S>>(domain->num_objects(), Vec<S>{value}));
    }

    const GroupoidPtr& domain() const noexcept { return domain_; }
    const Vec<S>& operator()(ObjId x) const { return values_[x]; }
    const std::vector<Vec<S>>& values() const noexcept { return values_; }
    std::size_t width() const noexcept { return values_.empty() ? width_hint_ : values_.front().size(); }

    /// Marks the target dimension for functions on empty groupoids.
    InvariantFunction& with_width(std::size_t w) {
        width_hint_ = w;
        return *this;
    }

private:
    GroupoidPtr domain_;
    std::vector<Vec<S>> values_;
    std::size_t width_hint_ = 1;
};

/// Sum over classes [x] of f(x)/|Aut(x)|.
template <ExactField S>
Vec<S> integrate(const InvariantFunction<S>& f) {
    const auto& g = *f.domain();
    Vec<S> total = zero_vector<S>(f.width());
    for (ObjId x : g.representatives()) {
        const S w(Rational(1, static_cast<Rational::Int>(g.automorphisms(x).size())));
        for (std::size_t i = 0; i < total.size(); ++i) total[i] = total[i] + w * f(x)[i];
    }
    return total;
}

/// Phi*f = f∘Phi.
template <ExactField S>
InvariantFunction<S> pullback_function(const GroupoidFunctor& phi, const InvariantFunction<S>& f) {
    if (!same_groupoid(phi.codomain(), f.domain())) throw InvalidInput("function lives on the codomain", "base mismatch");
    std::vector<Vec<S>> v(phi.domain()->num_objects());
    for (ObjId x = 0; x < v.size(); ++x) v[x] = f(phi(x));
    return std::move(InvariantFunction<S>(phi.domain(), std::move(v)).with_width(f.width()));
}

/// (integral of Q*f, n times integral of f) for an n-fold covering Q.
template <ExactField S>
std::pair<Vec<S>, Vec<S>> covering_integral_check(const GroupoidFunctor& q, const InvariantFunction<S>& f) {
    const auto n = is_covering(q);
    if (!n) throw InvalidInput("functor is a covering", "unique path lifting or equal sheet counts fail");
    return {integrate(pullback_function(q, f)), scale(S(static_cast<std::int64_t>(*n)), integrate(f))};
}

/// The inner integral y -> integral over Phi^-1[y] of q_y* f, on every object of the codomain.
template <ExactField S>
InvariantFunction<S> fiber_integrals(const GroupoidFunctor& phi, const InvariantFunction<S>& f) {
    std::vector<Vec<S>> v(phi.codomain()->num_objects());
    for (ObjId y = 0; y < v.size(); ++y) {
        const auto fib = homotopy_fiber(phi, y);
        v[y] = integrate(pullback_function(fib.q, f));
    }
    return std::move(InvariantFunction<S>(phi.codomain(), std::move(v)).with_width(f.width()));
}

/// (integral over Gamma of f, iterated integral over the base of the fiber integrals).
template <ExactField S>
std::pair<Vec<S>, Vec<S>> cavalieri_check(const GroupoidFunctor& phi, const InvariantFunction<S>& f) {
    if (!same_groupoid(phi.domain(), f.domain())) throw InvalidInput("function lives on the domain", "base mismatch");
    return {integrate(f), integrate(fiber_integrals(phi, f))};
}

/// A bijection of isomorphism classes matching automorphism groups up to
/// isomorphism, as pairs of class representatives.
inline std::optional<std::vector<std::pair<ObjId, ObjId>>> equivalence_witness(const FiniteGroupoid& a,
                                                                                const FiniteGroupoid& b) {
    const auto ra = a.representatives();
    const auto rb = b.representatives();
    if (ra.size() != rb.size()) return std::nullopt;
    std::vector<FiniteGroup> ga, gb;
    for (ObjId x : ra) ga.push_back(a.aut_group(x));
    for (ObjId y : rb) gb.push_back(b.aut_group(y));
    std::vector<int> used(rb.size(), 0);
    std::vector<std::pair<ObjId, ObjId>> match;
    // isomorphism is an equivalence relation, so greedy matching is complete
    for (std::size_t i = 0; i < ra.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < rb.size() && !found; ++j) {
            if (used[j] || ga[i].size() != gb[j].size()) continue;
            if (find_isomorphism(ga[i], gb[j])) {
                used[j] = 1;
                match.emplace_back(ra[i], rb[j]);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return match;
}

}  // namespace eqtft
