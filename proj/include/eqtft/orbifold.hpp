#pragma once

/**
 * @file orbifold.hpp
 * @brief The orbifold Frobenius algebra of a crossed Frobenius G-algebra.
 *
 * The underlying space is the space of parallel sections of the bundle
 * g -> A_g over G//G. Three computations are provided: the closed formulas,
 * the groupoid-integral formulas, and evaluation of the pair-of-pants and
 * cap spans under the parallel section functor.
 */

#include <string>
#include <vector>

#include "frobenius.hpp"
#include "mapping.hpp"
#include "repgrpd.hpp"

namespace eqtft {

/// The bundle g -> A_g over G//G with transport act(h, g) along (h, g).
template <ExactField S>
VectorBundle<S> sector_bundle(const CrossedFrobeniusAlgebra<S>& a, const GroupoidPtr& conj) {
    const auto& g = a.group();
    const std::size_t n = g.size();
    std::vector<Matrix<S>> tr(conj->num_morphisms());
    for (MorId f = 0; f < tr.size(); ++f) tr[f] = a.act(static_cast<Elem>(f % n), static_cast<Elem>(f / n));
    return VectorBundle<S>(conj, a.dims(), std::move(tr));
}

template <ExactField S>
VectorBundle<S> sector_bundle(const CrossedFrobeniusAlgebra<S>& a) {
    return sector_bundle(a, groupoids::conjugation(a.group()));
}

namespace detail {

template <ExactField S>
AxiomReport require_basic(const CrossedFrobeniusAlgebra<S>& a) {
    auto rep = check_crossed_axioms(a, AxiomLevel::kBasic);
    if (!rep.ok()) throw InvalidInput("crossed algebra axioms (" + rep.violations.front().axiom + ")",
                                      rep.violations.front().witness);
    return rep;
}

/// (s s')(g) = sum_{ab = g} s(a) s'(b).
template <ExactField S>
Section<S> convolve(const CrossedFrobeniusAlgebra<S>& a, const Section<S>& s, const Section<S>& t) {
    const auto& g = a.group();
    Section<S> out(g.size());
    for (Elem x = 0; x < g.size(); ++x) out[x] = zero_vector<S>(a.dim(x));
    for (Elem x = 0; x < g.size(); ++x)
        for (Elem y = 0; y < g.size(); ++y) {
            const Elem xy = g.mul(x, y);
            Vec<S> st;
            for (const auto& p : s[x])
                for (const auto& q : t[y]) st.push_back(p * q);
            out[xy] = out[xy] + a.mul(x, y) * st;
        }
    return out;
}

template <ExactField S>
S bilinear(const Matrix<S>& p, const Vec<S>& u, const Vec<S>& v) {
    const auto pv = p * v;
    S r(0);
    for (std::size_t i = 0; i < u.size(); ++i) r = r + u[i] * pv[i];
    return r;
}

}  // namespace detail

/// Orbifold algebra in the canonical basis of parallel sections.
template <ExactField S>
CommutativeFrobeniusAlgebra<S> orbifold_algebra(const CrossedFrobeniusAlgebra<S>& a) {
    detail::require_basic(a);
    const auto& g = a.group();
    const std::size_t n = g.size();
    const auto bundle = sector_bundle(a);
    const SectionSpace<S> space(bundle);
    const std::size_t d = space.dim();
    CommutativeFrobeniusAlgebra<S> r{d, Matrix<S>(d, d * d), Vec<S>(d, S(0)), Matrix<S>(d, d)};
    const S inv_order(Rational(1, static_cast<Rational::Int>(n)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto c = space.coordinates(detail::convolve(a, space[i], space[j]));
            for (std::size_t k = 0; k < d; ++k) r.mul(k, i * d + j) = c[k];
            S p(0);
            for (Elem x = 0; x < n; ++x) p = p + detail::bilinear(a.pairing(x), space[i][x], space[j][g.inv(x)]);
            r.pairing(i, j) = inv_order * p;
        }
    Section<S> one = zero_section(bundle);
    one[g.identity()] = a.unit();
    r.unit = space.coordinates(one);
    return r;
}

/// Orbifold algebra computed by integrating over groupoids: the product at g
/// integrates f(a, b) = sum_{h in Aut(g)} h.(s(a) s'(b)) over the action
/// groupoid of Aut(g) on {(a, b) : ab = g}, and the pairing integrates
/// g -> kappa(s(g), s'(g^-1)) over G//G.
template <ExactField S>
CommutativeFrobeniusAlgebra<S> orbifold_algebra_oracle(const CrossedFrobeniusAlgebra<S>& a) {
    detail::require_basic(a);
    const auto& g = a.group();
    const std::size_t n = g.size();
    const auto conj = groupoids::conjugation(g);
    const auto bundle = sector_bundle(a, conj);
    const SectionSpace<S> space(bundle);
    const std::size_t d = space.dim();

    struct Sector {
        GroupoidPtr gamma;
        std::vector<std::pair<Elem, Elem>> pairs;
        std::vector<Elem> aut;  // Aut(g) in G//G as group elements
    };
    std::vector<Sector> sectors(n);
    for (Elem x = 0; x < n; ++x) {
        auto& sec = sectors[x];
        const auto aut_group = conj->aut_group(x);
        for (MorId m : conj->automorphisms(x)) sec.aut.push_back(static_cast<Elem>(m % n));
        for (Elem p = 0; p < n; ++p) sec.pairs.emplace_back(p, g.mul(g.inv(p), x));
        std::vector<std::size_t> index_of_first(n);
        for (std::size_t i = 0; i < sec.pairs.size(); ++i) index_of_first[sec.pairs[i].first] = i;
        sec.gamma = groupoids::action(aut_group, sec.pairs.size(), [&](Elem k, std::size_t i) {
            return index_of_first[g.conj(sec.aut[k], sec.pairs[i].first)];
        });
    }

    CommutativeFrobeniusAlgebra<S> r{d, Matrix<S>(d, d * d), Vec<S>(d, S(0)), Matrix<S>(d, d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Section<S> prod(n);
            for (Elem x = 0; x < n; ++x) {
                const auto& sec = sectors[x];
                std::vector<Vec<S>> vals(sec.pairs.size());
                for (std::size_t p = 0; p < sec.pairs.size(); ++p) {
                    const auto [u, v] = sec.pairs[p];
                    Vec<S> st;
                    for (const auto& c1 : space[i][u])
                        for (const auto& c2 : space[j][v]) st.push_back(c1 * c2);
                    const auto uv = a.mul(u, v) * st;
                    Vec<S> f = zero_vector<S>(a.dim(x));
                    for (Elem h : sec.aut) f = f + a.act(h, x) * uv;
                    vals[p] = std::move(f);
                }
                prod[x] = integrate(std::move(InvariantFunction<S>(sec.gamma, std::move(vals)).with_width(a.dim(x))));
            }
            const auto c = space.coordinates(prod);
            for (std::size_t k = 0; k < d; ++k) r.mul(k, i * d + j) = c[k];
            std::vector<Vec<S>> kv(n);
            for (Elem x = 0; x < n; ++x) kv[x] = {detail::bilinear(a.pairing(x), space[i][x], space[j][g.inv(x)])};
            r.pairing(i, j) = integrate(InvariantFunction<S>(conj, std::move(kv)))[0];
        }
    Section<S> one = zero_section(bundle);
    one[g.identity()] = a.unit();
    r.unit = space.coordinates(one);
    return r;
}

/// Product and pairing of the orbifold algebra as images of the pair-of-pants
/// span and of the cap span composed with it, under the parallel section functor.
template <ExactField S>
struct SpanEvaluation {
    Matrix<S> mul;      // d x d^2
    Matrix<S> pairing;  // 1 x d^2, column i*d + j
};

template <ExactField S>
SpanEvaluation<S> orbifold_via_spans(const CrossedFrobeniusAlgebra<S>& a) {
    detail::require_basic(a);
    const auto& g = a.group();
    const auto circle = groupoids::conjugation(g);
    const RepObject<S> sectors(circle, share(sector_bundle(a, circle)));
    const auto two = tensor_objects(sectors, sectors);

    const MappingModel pants(g, SurfaceSpec::pants());
    const auto in = boundary_restriction(pants, "in");
    const auto out = boundary_restriction(pants, "out");
    std::vector<Matrix<S>> mult(pants.size());
    for (std::size_t i = 0; i < pants.size(); ++i) mult[i] = a.mul(pants.tuple(i)[0], pants.tuple(i)[1]);
    const SpanMorphism<S> pants_span(two, RepObject<S>(out.circle_model, sectors.bundle), in.functor, out.functor,
                                     std::move(mult));

    const MappingModel disk(g, SurfaceSpec::disk());
    const auto rim = boundary_restriction(disk, "boundary");
    const auto unit_obj = monoidal_unit<S>();
    const auto to_point = functors::to_terminal(disk.groupoid(), unit_obj.groupoid);
    const auto pu = a.pairing(g.identity()) * a.unit();
    const SpanMorphism<S> cap(RepObject<S>(rim.circle_model, sectors.bundle), unit_obj, rim.functor, to_point,
                              {Matrix<S>(1, pu.size(), pu)});

    const auto t = tensor_identification(sectors, sectors);
    return {par_morphism(pants_span) * t, par_morphism(compose_spans(pants_span, cap)) * t};
}

/// Sum over conjugacy classes [g] of dim A_g^{C(g)}.
template <ExactField S>
std::size_t invariant_sector_dimension(const CrossedFrobeniusAlgebra<S>& a) {
    return invariant_dimension_count(sector_bundle(a));
}

/// A finite-dimensional representation of G.
template <ExactField S>
struct GRepresentation {
    FiniteGroup group;
    std::vector<Matrix<S>> matrices;

    GRepresentation(FiniteGroup g, std::vector<Matrix<S>> m) : group(std::move(g)), matrices(std::move(m)) {
        if (matrices.size() != group.size()) throw InvalidInput("one matrix per element", "size mismatch");
        const std::size_t d = matrices[0].rows();
        for (Elem x = 0; x < group.size(); ++x)
            if (matrices[x].rows() != d || matrices[x].cols() != d)
                throw InvalidInput("square matrices of one size", "element " + std::to_string(x));
        if (!(matrices[group.identity()] == Matrix<S>::identity(d))) throw InvalidInput("identity maps to identity", "");
        for (Elem x = 0; x < group.size(); ++x)
            for (Elem y = 0; y < group.size(); ++y)
                if (!(matrices[group.mul(x, y)] == matrices[x] * matrices[y]))
                    throw InvalidInput("multiplicative", "(" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }

    std::size_t dim() const { return matrices[0].rows(); }

    /// The bundle over the one-object groupoid of G.
    VectorBundle<S> as_bundle() const {
        auto pt = groupoids::one_object(group);
        return VectorBundle<S>(pt, {dim()}, matrices);
    }

    static GRepresentation regular(const FiniteGroup& g) {
        const std::size_t n = g.size();
        std::vector<Matrix<S>> m(n, Matrix<S>(n, n));
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) m[x](g.mul(x, y), y) = S(1);
        return GRepresentation(g, std::move(m));
    }
};

/// Dimension of the invariant subspace.
template <ExactField S>
std::size_t orbifold_1d(const GRepresentation<S>& rho) {
    return SectionSpace<S>(rho.as_bundle()).dim();
}

}  // namespace eqtft
