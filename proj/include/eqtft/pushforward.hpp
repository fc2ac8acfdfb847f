#pragma once

/**
 * @file pushforward.hpp
 * @brief Pushforward of parallel sections along functors.
 */

#include <string>

#include "bundle.hpp"

namespace eqtft {

/// Which isomorphism Phi(x) -> y the class-sum formula uses.
enum class IsoChoice { kFirst, kLast };

/// Sum over classes [x, g] of the homotopy fiber over y of rho(g)s(x)/|Aut(x, g)|.
template <ExactField S>
Section<S> pushforward_definition(const GroupoidFunctor& phi, const VectorBundle<S>& rho, const Section<S>& s) {
    if (!same_groupoid(phi.codomain(), rho.base())) throw InvalidInput("bundle lives on the codomain", "base mismatch");
    check_parallel(pullback_bundle(phi, rho), s);
    Section<S> out = zero_section(rho);
    for (ObjId y = 0; y < out.size(); ++y) {
        const auto fib = homotopy_fiber(phi, y);
        for (ObjId o : fib.groupoid->representatives()) {
            const S w(Rational(1, static_cast<Rational::Int>(fib.groupoid->automorphisms(o).size())));
            out[y] = out[y] + scale(w, rho.transport(fib.g[o]) * s[fib.x[o]]);
        }
    }
    check_parallel(rho, out);
    return out;
}

/// Same sum, weighting by the kernel Aut0(x) of Aut(x) -> Aut(Phi x) instead
/// of the automorphism group of (x, g) in the fiber.
template <ExactField S>
Section<S> pushforward_aut0(const GroupoidFunctor& phi, const VectorBundle<S>& rho, const Section<S>& s) {
    check_parallel(pullback_bundle(phi, rho), s);
    const auto& d = *phi.domain();
    const auto& c = *phi.codomain();
    Section<S> out = zero_section(rho);
    for (ObjId y = 0; y < out.size(); ++y) {
        const auto fib = homotopy_fiber(phi, y);
        for (ObjId o : fib.groupoid->representatives()) {
            const ObjId x = fib.x[o];
            std::size_t kernel = 0;
            for (MorId a : d.automorphisms(x))
                if (phi.map_morphism(a) == c.identity(phi(x))) ++kernel;
            const S w(Rational(1, static_cast<Rational::Int>(kernel)));
            out[y] = out[y] + scale(w, rho.transport(fib.g[o]) * s[fib.x[o]]);
        }
    }
    return out;
}

/// Sum over classes [x] of the domain with Phi(x) isomorphic to y, and over
/// g in Aut(y), of rho(g)rho(h)s(x)/|Aut(x)| for one chosen h : Phi(x) -> y.
template <ExactField S>
Section<S> pushforward_corollary(const GroupoidFunctor& phi, const VectorBundle<S>& rho, const Section<S>& s,
                                 IsoChoice choice = IsoChoice::kFirst) {
    check_parallel(pullback_bundle(phi, rho), s);
    const auto& d = *phi.domain();
    const auto& c = *phi.codomain();
    const auto reps = d.representatives();
    Section<S> out = zero_section(rho);
    for (ObjId y = 0; y < out.size(); ++y) {
        const auto auts = c.automorphisms(y);
        for (ObjId x : reps) {
            const auto hs = c.hom(phi(x), y);
            if (hs.empty()) continue;
            const MorId h = choice == IsoChoice::kFirst ? hs.front() : hs.back();
            const S w(Rational(1, static_cast<Rational::Int>(d.automorphisms(x).size())));
            const Vec<S> moved = rho.transport(h) * s[x];
            for (MorId g : auts) out[y] = out[y] + scale(w, rho.transport(g) * moved);
        }
    }
    return out;
}

/// Phi_* : Par(Phi*rho) -> Par(rho).
template <ExactField S>
Section<S> pushforward(const GroupoidFunctor& phi, const VectorBundle<S>& rho, const Section<S>& s) {
    return pushforward_definition(phi, rho, s);
}

struct LawReport {
    bool ok = true;
    std::string failure;

    void fail(std::string what) {
        if (ok) failure = std::move(what);
        ok = false;
    }
};

/// Checks (Psi∘Phi)_* = Psi_*∘Phi_* and lambda_*∘Phi_* = Phi_*∘(Phi*lambda)_*
/// on a basis of sections. Phi : Gamma -> Omega, Psi : Omega -> Xi, rho over
/// Xi, lambda : xi -> xi' a bundle morphism over Omega.
template <ExactField S>
LawReport pushforward_laws_check(const GroupoidFunctor& phi, const GroupoidFunctor& psi, const VectorBundle<S>& rho,
                                 const BundleMorphism<S>& lambda) {
    LawReport report;
    const auto psi_rho = pullback_bundle(psi, rho);
    const auto both = compose(psi, phi);
    const auto top = pullback_bundle(both, rho);
    const auto basis = parallel_sections_basis(top);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto lhs = pushforward(both, rho, basis[i]);
        const auto rhs = pushforward(psi, rho, pushforward(phi, psi_rho, basis[i]));
        if (lhs != rhs) report.fail("composition law on basis section " + std::to_string(i));
    }
    const auto& xi = *lambda.source();
    const auto& xi2 = *lambda.target();
    const auto pulled = pullback_bundle(phi, xi);
    const auto pulled_lambda = pullback_morphism(phi, lambda);
    const auto nbasis = parallel_sections_basis(pulled);
    for (std::size_t i = 0; i < nbasis.size(); ++i) {
        const auto lhs = lambda.apply(pushforward(phi, xi, nbasis[i]));
        const auto rhs = pushforward(phi, xi2, pulled_lambda.apply(nbasis[i]));
        if (lhs != rhs) report.fail("naturality square on basis section " + std::to_string(i));
    }
    return report;
}

}  // namespace eqtft
