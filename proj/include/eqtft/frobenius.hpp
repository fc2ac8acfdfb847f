#pragma once

/**
 * @file frobenius.hpp
 * @brief Commutative Frobenius algebras and their closed-surface values.
 *
 * mul is d x d^2 with column i*d + j holding e_i e_j; pairing is d x d.
 */

#include <string>
#include <vector>

#include "crossed.hpp"

namespace eqtft {

template <ExactField S>
struct CommutativeFrobeniusAlgebra {
    std::size_t dim = 0;
    Matrix<S> mul;
    Vec<S> unit;
    Matrix<S> pairing;

    Vec<S> product(const Vec<S>& u, const Vec<S>& v) const {
        Vec<S> uv(dim * dim, S(0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) uv[i * dim + j] = u[i] * v[j];
        return mul * uv;
    }

    S pair(const Vec<S>& u, const Vec<S>& v) const {
        const auto pv = pairing * v;
        S s(0);
        for (std::size_t i = 0; i < dim; ++i) s = s + u[i] * pv[i];
        return s;
    }

    Vec<S> basis_vector(std::size_t i) const {
        Vec<S> v(dim, S(0));
        v[i] = S(1);
        return v;
    }

    /// Counit epsilon(v) = kappa(v, 1).
    S counit(const Vec<S>& v) const { return pair(v, unit); }

    friend bool operator==(const CommutativeFrobeniusAlgebra& a, const CommutativeFrobeniusAlgebra& b) {
        return a.dim == b.dim && a.mul == b.mul && a.unit == b.unit && a.pairing == b.pairing;
    }
};

template <ExactField S>
AxiomReport check_frobenius(const CommutativeFrobeniusAlgebra<S>& a) {
    AxiomReport rep;
    const std::size_t d = a.dim;
    if (a.mul.rows() != d || a.mul.cols() != d * d || a.unit.size() != d || a.pairing.rows() != d ||
        a.pairing.cols() != d) {
        rep.add("structure tensor shapes", "dimension " + std::to_string(d));
        return rep;
    }
    for (std::size_t i = 0; i < d; ++i) {
        const auto ei = a.basis_vector(i);
        if (!(a.product(a.unit, ei) == ei)) rep.add("unit", "basis vector " + std::to_string(i));
        for (std::size_t j = 0; j < d; ++j) {
            const auto ej = a.basis_vector(j);
            const auto ij = a.product(ei, ej);
            if (!(ij == a.product(ej, ei))) rep.add("commutativity", "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
            if (!(a.pairing(i, j) == a.pairing(j, i))) rep.add("pairing symmetric", "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
            for (std::size_t k = 0; k < d; ++k) {
                const auto ek = a.basis_vector(k);
                if (!(a.product(ij, ek) == a.product(ei, a.product(ej, ek))))
                    rep.add("associativity", "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
                if (!(a.pair(ij, ek) == a.pair(ei, a.product(ej, ek))))
                    rep.add("Frobenius condition", "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
            }
        }
    }
    if (!try_inverse(a.pairing)) rep.add("pairing nondegenerate", "pairing matrix is singular");
    return rep;
}

/// Handle element sum_i e_i e^i, with e^i dual to e_i under the pairing.
template <ExactField S>
Vec<S> handle_element(const CommutativeFrobeniusAlgebra<S>& a) {
    const auto inv = try_inverse(a.pairing);
    if (!inv) throw InvalidInput("pairing nondegenerate", "pairing matrix is singular");
    Vec<S> h(a.dim, S(0));
    for (std::size_t i = 0; i < a.dim; ++i) {
        const auto dual = inv->column(i);
        h = h + a.product(a.basis_vector(i), dual);
    }
    return h;
}

/// epsilon(H^g) where H is the handle element; genus 0 gives epsilon(1).
template <ExactField S>
S closed_surface_value(const CommutativeFrobeniusAlgebra<S>& a, int genus) {
    if (genus < 0) throw InvalidInput("genus >= 0", "genus " + std::to_string(genus));
    const auto h = handle_element(a);
    Vec<S> p = a.unit;
    for (int i = 0; i < genus; ++i) p = a.product(p, h);
    return a.counit(p);
}

/// Same algebra in the basis f_j = sum_i B(i, j) e_i.
template <ExactField S>
CommutativeFrobeniusAlgebra<S> change_basis(const CommutativeFrobeniusAlgebra<S>& a, const Matrix<S>& b) {
    const auto binv = inverse(b);
    CommutativeFrobeniusAlgebra<S> r;
    r.dim = a.dim;
    r.mul = binv * a.mul * kron(b, b);
    r.unit = binv * a.unit;
    r.pairing = b.transpose() * a.pairing * b;
    return r;
}

/// The ground field with kappa(1, 1) = c.
template <ExactField S>
CommutativeFrobeniusAlgebra<S> ground_field(const S& c = S(1)) {
    return {1, Matrix<S>::identity(1), Vec<S>{S(1)}, Matrix<S>(1, 1, {c})};
}

/// K^n with orthogonal idempotents and kappa(e_i, e_i) = weights[i].
template <ExactField S>
CommutativeFrobeniusAlgebra<S> semisimple(const std::vector<S>& weights) {
    const std::size_t d = weights.size();
    CommutativeFrobeniusAlgebra<S> a{d, Matrix<S>(d, d * d), Vec<S>(d, S(1)), Matrix<S>(d, d)};
    for (std::size_t i = 0; i < d; ++i) {
        a.mul(i, i * d + i) = S(1);
        a.pairing(i, i) = weights[i];
    }
    return a;
}

/// K[x]/(x^d) in the monomial basis with counit coefficients eps[k] = epsilon(x^k);
/// nondegenerate exactly when eps[d-1] != 0.
template <ExactField S>
CommutativeFrobeniusAlgebra<S> truncated_polynomial(const std::vector<S>& eps) {
    const std::size_t d = eps.size();
    CommutativeFrobeniusAlgebra<S> a{d, Matrix<S>(d, d * d), Vec<S>(d, S(0)), Matrix<S>(d, d)};
    a.unit[0] = S(1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i + j < d) a.mul(i + j, i * d + j) = S(1);
            a.pairing(i, j) = i + j < d ? eps[i + j] : S(0);
        }
    return a;
}

/// Center of the group algebra in the class-sum basis, kappa(u, v) = c * (coefficient of 1 in uv).
template <ExactField S>
CommutativeFrobeniusAlgebra<S> group_algebra_center(const FiniteGroup& g, const S& c = S(1)) {
    const auto classes = g.conjugacy_classes();
    const std::size_t d = classes.size();
    std::vector<std::size_t> class_of(g.size());
    for (std::size_t k = 0; k < d; ++k)
        for (Elem x : classes[k]) class_of[x] = k;
    CommutativeFrobeniusAlgebra<S> a{d, Matrix<S>(d, d * d), Vec<S>(d, S(0)), Matrix<S>(d, d)};
    a.unit[class_of[g.identity()]] = S(1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            // C_i C_j = sum_k n_k C_k; n_k counts products landing on one fixed member of C_k
            std::vector<std::int64_t> hits(g.size(), 0);
            for (Elem x : classes[i])
                for (Elem y : classes[j]) ++hits[g.mul(x, y)];
            for (std::size_t k = 0; k < d; ++k) a.mul(k, i * d + j) = S(hits[classes[k].front()]);
            a.pairing(i, j) = c * S(hits[g.identity()]);
        }
    return a;
}

}  // namespace eqtft
