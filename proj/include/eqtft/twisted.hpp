#pragma once

/**
 * @file twisted.hpp
 * @brief Cocycle-twisted torus invariants and neutral-sector embeddings.
 */

#include <array>
#include <utility>
#include <vector>

#include "invariants.hpp"
#include "orbifold.hpp"

namespace eqtft {

/// A 2-chain on the classifying space: signed 2-simplices [x | y].
struct SimplicialTwoChain {
    std::vector<std::pair<int, std::array<Elem, 2>>> terms;
};

/// Fundamental cycle of the torus under the classifying map of a commuting
/// pair (a, b). The square is cut along its diagonal into [a | b] and
/// [b | a]; both triangles share the diagonal edge ab = ba and enter with
/// opposite orientation.
inline SimplicialTwoChain torus_fundamental_cycle(Elem a, Elem b) { return {{{+1, {a, b}}, {-1, {b, a}}}}; }

/// Pairing of a 2-cocycle with a 2-chain.
inline Cyclotomic evaluate(const Cocycle2& theta, const SimplicialTwoChain& chain) {
    Cyclotomic v(1);
    for (const auto& [sign, s] : chain.terms) {
        const auto t = theta.value(s[0], s[1]);
        v = v * (sign > 0 ? t : t.inverse());
    }
    return v;
}

/// Integral over the torus model of the evaluation of theta on the fundamental class.
inline Cyclotomic twisted_torus_invariant(const Cocycle2& theta, const RunConfig& config = {}) {
    const auto& g = theta.group();
    const MappingModel torus(g, SurfaceSpec::closed(1), config);
    std::vector<Cyclotomic> value(torus.size());
    for (std::size_t i = 0; i < torus.size(); ++i) {
        const auto t = torus.tuple(i);
        value[i] = evaluate(theta, torus_fundamental_cycle(t[0], t[1]));
    }
    Cyclotomic total(0);
    for (std::size_t o = 0; o < torus.num_orbits(); ++o) {
        const std::size_t rep = torus.orbit_representatives()[o];
        total = total + value[rep] * Cyclotomic(Rational(static_cast<Rational::Int>(torus.orbit_size(o)),
                                                         static_cast<Rational::Int>(g.size())));
    }
    for (std::size_t i = 0; i < torus.size(); ++i)
        if (!(value[i] == value[torus.orbit_representatives()[torus.orbit_of(i)]]))
            throw Error("torus evaluation not conjugation invariant at tuple " + std::to_string(i));
    return total;
}

/// A placed in the neutral sector: A_1 = A, A_g = 0 otherwise, trivial action,
/// pairing scaled by |G| so that orbifoldization returns A exactly.
/// Satisfies the basic axioms; the trace property fails unless G is trivial.
template <ExactField S>
CrossedFrobeniusAlgebra<S> neutral_sector(const CommutativeFrobeniusAlgebra<S>& a, const FiniteGroup& g) {
    const std::size_t n = g.size();
    const Elem e = g.identity();
    std::vector<std::size_t> dims(n, 0);
    dims[e] = a.dim;
    std::vector<Matrix<S>> mul(n * n), act(n * n), pair(n);
    for (Elem x = 0; x < n; ++x) {
        pair[x] = Matrix<S>(dims[x], dims[g.inv(x)]);
        for (Elem y = 0; y < n; ++y) {
            mul[x * n + y] = Matrix<S>(dims[g.mul(x, y)], dims[x] * dims[y]);
            act[x * n + y] = Matrix<S>::identity(dims[y]);
        }
    }
    mul[e * n + e] = a.mul;
    pair[e] = S(static_cast<std::int64_t>(n)) * a.pairing;
    return CrossedFrobeniusAlgebra<S>(g, std::move(dims), std::move(mul), a.unit, std::move(pair), std::move(act));
}

/// A_1 = Map(G, A) with pointwise product, translation action (h.f)(k) = f(h^-1 k)
/// and pairing sum_k kappa(f(k), f'(k)); other sectors zero. Satisfies every
/// axiom including the trace property, and orbifoldizes back to A.
template <ExactField S>
CrossedFrobeniusAlgebra<S> induced_neutral_sector(const CommutativeFrobeniusAlgebra<S>& a, const FiniteGroup& g) {
    const std::size_t n = g.size();
    const std::size_t d = a.dim;
    const Elem e = g.identity();
    std::vector<std::size_t> dims(n, 0);
    dims[e] = n * d;
    std::vector<Matrix<S>> mul(n * n), act(n * n), pair(n);
    for (Elem x = 0; x < n; ++x) {
        pair[x] = Matrix<S>(dims[x], dims[g.inv(x)]);
        for (Elem y = 0; y < n; ++y) mul[x * n + y] = Matrix<S>(dims[g.mul(x, y)], dims[x] * dims[y]);
    }
    Matrix<S> m(n * d, n * d * n * d), p(n * d, n * d);
    Vec<S> unit(n * d, S(0));
    for (Elem k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            unit[k * d + i] = a.unit[i];
            for (std::size_t j = 0; j < d; ++j) {
                p(k * d + i, k * d + j) = a.pairing(i, j);
                for (std::size_t r = 0; r < d; ++r) m(k * d + r, (k * d + i) * (n * d) + k * d + j) = a.mul(r, i * d + j);
            }
        }
    }
    mul[e * n + e] = std::move(m);
    pair[e] = std::move(p);
    for (Elem h = 0; h < n; ++h)
        for (Elem x = 0; x < n; ++x) {
            if (x != e) {
                act[h * n + x] = Matrix<S>(0, 0);
                continue;
            }
            Matrix<S> t(n * d, n * d);
            for (Elem k = 0; k < n; ++k)
                for (std::size_t i = 0; i < d; ++i) t(g.mul(h, k) * d + i, k * d + i) = S(1);
            act[h * n + x] = std::move(t);
        }
    return CrossedFrobeniusAlgebra<S>(g, std::move(dims), std::move(mul), std::move(unit), std::move(pair),
                                      std::move(act));
}

template <ExactField S>
struct RoundTrip {
    CrossedFrobeniusAlgebra<S> crossed;
    CommutativeFrobeniusAlgebra<S> orbifold;
    bool equal = false;
};

/// Embed A as a crossed algebra over G, orbifoldize, and compare structure tensors.
template <ExactField S>
RoundTrip<S> essential_surjectivity_demo(const CommutativeFrobeniusAlgebra<S>& a, const FiniteGroup& g,
                                         bool induced = false) {
    const auto rep = check_frobenius(a);
    if (!rep.ok()) throw InvalidInput("commutative Frobenius algebra (" + rep.violations.front().axiom + ")",
                                      rep.violations.front().witness);
    auto crossed = induced ? induced_neutral_sector(a, g) : neutral_sector(a, g);
    auto orb = orbifold_algebra(crossed);
    const bool eq = orb == a;
    return {std::move(crossed), std::move(orb), eq};
}

}  // namespace eqtft
