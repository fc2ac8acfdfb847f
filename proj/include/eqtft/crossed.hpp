#pragma once

/**
 * @file crossed.hpp
 * @brief Crossed Frobenius G-algebras and their axiom checker.
 *
 * Tensors are dense. For grades g, h:
 *   mul(g, h)     d_gh x (d_g d_h), column i*d_h + j holds e_i e_j
 *   pairing(g)    d_g x d_{g^-1}, kappa(u, v) = u^T P v
 *   action(h, g)  d_{hgh^-1} x d_g
 */

#include <optional>
#include <string>
#include <vector>

#include "cocycle.hpp"
#include "matrix.hpp"

namespace eqtft {

struct Violation {
    std::string axiom;
    std::string witness;
};

struct AxiomReport {
    std::vector<Violation> violations;
    /// Observations that are not failures, such as the second reading of the trace property.
    std::vector<std::string> notes;

    bool ok() const noexcept { return violations.empty(); }
    bool violates(const std::string& axiom) const {
        for (const auto& v : violations)
            if (v.axiom == axiom) return true;
        return false;
    }
    void add(std::string axiom, std::string witness) {
        violations.push_back({std::move(axiom), std::move(witness)});
    }
};

enum class AxiomLevel { kBasic, kF1F2 };

template <ExactField S>
class CrossedFrobeniusAlgebra {
public:
    CrossedFrobeniusAlgebra(FiniteGroup g, std::vector<std::size_t> dims, std::vector<Matrix<S>> mul, Vec<S> unit,
                            std::vector<Matrix<S>> pairing, std::vector<Matrix<S>> action)
        : group_(std::move(g)),
          dims_(std::move(dims)),
          mul_(std::move(mul)),
          unit_(std::move(unit)),
          pairing_(std::move(pairing)),
          action_(std::move(action)) {
        const std::size_t n = group_.size();
        if (dims_.size() != n) throw InvalidInput("one graded component per element", "dimension table size");
        if (mul_.size() != n * n || action_.size() != n * n || pairing_.size() != n)
            throw InvalidInput("structure tensor tables sized by the group", "table size");
        if (unit_.size() != dims_[group_.identity()]) throw InvalidInput("unit lies in the neutral component", "length");
        for (Elem g = 0; g < n; ++g) {
            if (pairing_[g].rows() != dims_[g] || pairing_[g].cols() != dims_[group_.inv(g)])
                throw InvalidInput("pairing shape", "grade " + std::to_string(g));
            for (Elem h = 0; h < n; ++h) {
                const auto& m = mul_[g * n + h];
                if (m.rows() != dims_[group_.mul(g, h)] || m.cols() != dims_[g] * dims_[h])
                    throw InvalidInput("multiplication shape", "grades (" + std::to_string(g) + ", " + std::to_string(h) + ")");
                const auto& a = action_[h * n + g];
                if (a.rows() != dims_[group_.conj(h, g)] || a.cols() != dims_[g])
                    throw InvalidInput("action shape", "h = " + std::to_string(h) + ", grade " + std::to_string(g));
            }
        }
    }

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t dim(Elem g) const { return dims_[g]; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const Matrix<S>& mul(Elem g, Elem h) const { return mul_[g * group_.size() + h]; }
    const Vec<S>& unit() const noexcept { return unit_; }
    const Matrix<S>& pairing(Elem g) const { return pairing_[g]; }
    const Matrix<S>& act(Elem h, Elem g) const { return action_[h * group_.size() + g]; }

    std::vector<Matrix<S>>& mutable_pairings() { return pairing_; }
    std::vector<Matrix<S>>& mutable_actions() { return action_; }
    std::vector<Matrix<S>>& mutable_products() { return mul_; }

private:
    FiniteGroup group_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix<S>> mul_;
    Vec<S> unit_;
    std::vector<Matrix<S>> pairing_;
    std::vector<Matrix<S>> action_;
};

namespace detail {

template <ExactField S>
Matrix<S> column(const Vec<S>& v) {
    return Matrix<S>(v.size(), 1, v);
}

inline std::string grades(std::initializer_list<Elem> gs) {
    std::string s = "(";
    bool first = true;
    for (Elem g : gs) {
        if (!first) s += ", ";
        s += std::to_string(g);
        first = false;
    }
    return s + ")";
}

/// Linear map A_h -> A_{gh}, w -> v w, for the t-th basis vector v of A_g.
template <ExactField S>
Matrix<S> left_mult(const CrossedFrobeniusAlgebra<S>& a, Elem g, std::size_t t, Elem h) {
    const auto& m = a.mul(g, h);
    const std::size_t dh = a.dim(h);
    Matrix<S> l(m.rows(), dh);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < dh; ++j) l(r, j) = m(r, t * dh + j);
    return l;
}

}  // namespace detail

/// Exhaustive check of the crossed Frobenius axioms. kF1F2 adds self-invariance
/// of twisted sectors and the trace property
///   tr_{A_g}(L_v ∘ act_h) = tr_{A_h}(act_{g^-1} ∘ L_v),  v in A_{ghg^-1h^-1}.
/// The other operator order is evaluated where it is well-typed and any
/// disagreement is recorded as a note.
template <ExactField S>
AxiomReport check_crossed_axioms(const CrossedFrobeniusAlgebra<S>& a, AxiomLevel level = AxiomLevel::kBasic) {
    using detail::grades;
    AxiomReport rep;
    const auto& G = a.group();
    const std::size_t n = G.size();
    const Elem e = G.identity();
    const auto u = detail::column(a.unit());

    for (Elem g = 0; g < n; ++g) {
        const auto id = Matrix<S>::identity(a.dim(g));
        if (!(a.mul(e, g) * kron(u, id) == id) || !(a.mul(g, e) * kron(id, u) == id))
            rep.add("unit", "grade " + std::to_string(g));
    }
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h) {
            const Elem gh = G.mul(g, h);
            for (Elem k = 0; k < n; ++k) {
                const auto lhs = a.mul(gh, k) * kron(a.mul(g, h), Matrix<S>::identity(a.dim(k)));
                const auto rhs = a.mul(g, G.mul(h, k)) * kron(Matrix<S>::identity(a.dim(g)), a.mul(h, k));
                if (!(lhs == rhs)) rep.add("associativity", "grades " + grades({g, h, k}));
            }
        }
    for (Elem g = 0; g < n; ++g)
        if (!(a.act(e, g) == Matrix<S>::identity(a.dim(g)))) rep.add("identity acts trivially", "grade " + std::to_string(g));
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem h2 = 0; h2 < n; ++h2)
            for (Elem g = 0; g < n; ++g)
                if (!(a.act(G.mul(h1, h2), g) == a.act(h1, G.conj(h2, g)) * a.act(h2, g)))
                    rep.add("action is a group action", "(h1, h2, grade) = " + grades({h1, h2, g}));
    for (Elem h = 0; h < n; ++h) {
        if (!(a.act(h, e) * u == u)) rep.add("action fixes the unit", "h = " + std::to_string(h));
        for (Elem g = 0; g < n; ++g)
            for (Elem k = 0; k < n; ++k) {
                const auto lhs = a.act(h, G.mul(g, k)) * a.mul(g, k);
                const auto rhs = a.mul(G.conj(h, g), G.conj(h, k)) * kron(a.act(h, g), a.act(h, k));
                if (!(lhs == rhs)) rep.add("action by algebra maps", "(h, g, k) = " + grades({h, g, k}));
            }
    }
    for (Elem g = 0; g < n; ++g) {
        const auto& p = a.pairing(g);
        if (p.rows() != p.cols() || !try_inverse(p)) rep.add("pairing nondegenerate", "grade " + std::to_string(g));
        for (Elem h = 0; h < n; ++h) {
            const auto moved = a.act(h, g).transpose() * a.pairing(G.conj(h, g)) * a.act(h, G.inv(g));
            if (!(moved == p)) rep.add("pairing invariant", "(h, grade) = " + grades({h, g}));
        }
    }
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h) {
            const Elem gh = G.mul(g, h);
            const Elem k = G.inv(gh);
            const auto lhs = a.mul(g, h).transpose() * a.pairing(gh);        // [(i,j), l]
            const auto rhs = a.pairing(g) * a.mul(h, k);                      // [i, (j,l)]
            const std::size_t dg = a.dim(g), dh = a.dim(h), dk = a.dim(k);
            bool same = true;
            for (std::size_t i = 0; i < dg && same; ++i)
                for (std::size_t j = 0; j < dh && same; ++j)
                    for (std::size_t l = 0; l < dk && same; ++l)
                        same = lhs(i * dh + j, l) == rhs(i, j * dk + l);
            if (!same) rep.add("Frobenius condition", "grades " + grades({g, h, k}));
        }
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h) {
            // v w = (g.w)(g.v) for v in A_g, w in A_h
            const auto rhs = a.mul(G.conj(g, h), g) * kron(a.act(g, h), a.act(g, g));
            const auto& lhs = a.mul(g, h);
            const std::size_t dg = a.dim(g), dh = a.dim(h);
            bool same = true;
            for (std::size_t r = 0; r < lhs.rows() && same; ++r)
                for (std::size_t i = 0; i < dg && same; ++i)
                    for (std::size_t j = 0; j < dh && same; ++j) same = lhs(r, i * dh + j) == rhs(r, j * dg + i);
            if (!same) rep.add("crossed commutativity", "grades " + grades({g, h}));
        }
    if (level == AxiomLevel::kBasic) return rep;

    for (Elem g = 0; g < n; ++g)
        if (!(a.act(g, g) == Matrix<S>::identity(a.dim(g)))) rep.add("F1 self-invariance", "grade " + std::to_string(g));
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h) {
            const Elem c = G.commutator(g, h);
            const Elem hgh = G.conj(h, g);
            const Elem ghg = G.conj(g, h);
            for (std::size_t t = 0; t < a.dim(c); ++t) {
                const S lhs = (detail::left_mult(a, c, t, hgh) * a.act(h, g)).trace();
                const S rhs = (a.act(G.inv(g), ghg) * detail::left_mult(a, c, t, h)).trace();
                if (!(lhs == rhs))
                    rep.add("F2 trace property", "(g, h) = " + grades({g, h}) + ", basis vector " + std::to_string(t));
                // second reading: act_h ∘ L_v on A_g and L_v ∘ act_{g^-1} on A_h
                const Elem cg = G.mul(c, g);
                const Elem gih = G.conj(G.inv(g), h);
                if (G.conj(h, cg) == g && G.mul(c, gih) == h) {
                    const S alt_l = (a.act(h, cg) * detail::left_mult(a, c, t, g)).trace();
                    const S alt_r = (detail::left_mult(a, c, t, gih) * a.act(G.inv(g), h)).trace();
                    if (!(alt_l == alt_r))
                        rep.notes.push_back("F2 second operator order differs at (g, h) = " + grades({g, h}));
                }
            }
        }
    return rep;
}

/// A_g = K for every g with all structure constants 1.
template <ExactField S>
CrossedFrobeniusAlgebra<S> trivial_crossed_algebra(const FiniteGroup& g) {
    const std::size_t n = g.size();
    const Matrix<S> one = Matrix<S>::identity(1);
    return CrossedFrobeniusAlgebra<S>(g, std::vector<std::size_t>(n, 1), std::vector<Matrix<S>>(n * n, one), Vec<S>{S(1)},
                                      std::vector<Matrix<S>>(n, one), std::vector<Matrix<S>>(n * n, one));
}

/// Twisted group algebra: l_g l_h = theta(g, h) l_gh, kappa(l_g, l_{g^-1}) = theta(g, g^-1).
///
/// The action h.l_g = eps_h(g) l_{hgh^-1} is the unique solution of crossed
/// commutativity applied to (l_h, l_g) together with h.l_h = l_h:
/// eps_h(g) = theta(h, g) / theta(hgh^-1, h). The result is then run through
/// the full checker.
inline CrossedFrobeniusAlgebra<Cyclotomic> twisted_group_algebra(const Cocycle2& theta) {
    const auto& g = theta.group();
    const std::size_t n = g.size();
    std::vector<Matrix<Cyclotomic>> mul(n * n), act(n * n), pair(n);
    auto scalar = [](const Cyclotomic& c) { return Matrix<Cyclotomic>(1, 1, {c}); };
    for (Elem a = 0; a < n; ++a) {
        pair[a] = scalar(theta.value(a, g.inv(a)));
        for (Elem b = 0; b < n; ++b) {
            mul[a * n + b] = scalar(theta.value(a, b));
            act[a * n + b] = scalar(theta.value(a, b) / theta.value(g.conj(a, b), a));
        }
    }
    CrossedFrobeniusAlgebra<Cyclotomic> alg(g, std::vector<std::size_t>(n, 1), std::move(mul), {Cyclotomic(1)},
                                            std::move(pair), std::move(act));
    const auto rep = check_crossed_axioms(alg, AxiomLevel::kF1F2);
    if (!rep.ok()) throw InvalidInput("consistent action phases (" + rep.violations.front().axiom + ")",
                                      rep.violations.front().witness);
    return alg;
}

/// Group-algebra model: basis l_g of A_g, conjugation action, untwisted.
inline CrossedFrobeniusAlgebra<Cyclotomic> group_algebra_model(const FiniteGroup& g) {
    return twisted_group_algebra(Cocycle2::trivial(g));
}

/// Change of scalars from rationals to cyclotomics.
inline CrossedFrobeniusAlgebra<Cyclotomic> to_cyclotomic(const CrossedFrobeniusAlgebra<Rational>& a) {
    auto conv = [](const Matrix<Rational>& m) {
        std::vector<Cyclotomic> d(m.data().begin(), m.data().end());
        return Matrix<Cyclotomic>(m.rows(), m.cols(), std::move(d));
    };
    const std::size_t n = a.group().size();
    std::vector<Matrix<Cyclotomic>> mul, act, pair;
    for (Elem g = 0; g < n; ++g) {
        pair.push_back(conv(a.pairing(g)));
        for (Elem h = 0; h < n; ++h) {
            mul.push_back(conv(a.mul(g, h)));
            act.push_back(conv(a.act(g, h)));
        }
    }
    return CrossedFrobeniusAlgebra<Cyclotomic>(a.group(), a.dims(), std::move(mul),
                                               Vec<Cyclotomic>(a.unit().begin(), a.unit().end()), std::move(pair),
                                               std::move(act));
}

}  // namespace eqtft
