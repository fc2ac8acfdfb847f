#pragma once

/**
 * @file bundle.hpp
 * @brief Vector bundles over finite groupoids, parallel sections and pullbacks.
 *
 * A bundle assigns a fiber dimension to each object and an invertible
 * transport matrix to each morphism, functorially. Sections store a fiber
 * vector for every object.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "integration.hpp"
#include "matrix.hpp"

namespace eqtft {

template <ExactField S>
using Section = std::vector<Vec<S>>;

template <ExactField S>
class VectorBundle {
public:
    VectorBundle(GroupoidPtr base, std::vector<std::size_t> dims, std::vector<Matrix<S>> transport,
                 Validation validation = Validation::kFull)
        : base_(std::move(base)), dims_(std::move(dims)), transport_(std::move(transport)) {
        const auto& g = *base_;
        if (dims_.size() != g.num_objects()) throw InvalidInput("one fiber per object", "dimension table size");
        if (transport_.size() != g.num_morphisms()) throw InvalidInput("one transport per morphism", "matrix table size");
        for (MorId f = 0; f < g.num_morphisms(); ++f)
            if (transport_[f].rows() != dims_[g.target(f)] || transport_[f].cols() != dims_[g.source(f)])
                throw InvalidInput("transport shape matches fibers", "morphism " + std::to_string(f));
        if (validation == Validation::kFull) check_functorial();
    }

    /// The constant line bundle with identity transport.
    static VectorBundle trivial_line(const GroupoidPtr& base) { return constant(base, 1); }

    static VectorBundle constant(const GroupoidPtr& base, std::size_t dim) {
        return VectorBundle(base, std::vector<std::size_t>(base->num_objects(), dim),
                            std::vector<Matrix<S>>(base->num_morphisms(), Matrix<S>::identity(dim)), Validation::kTrusted);
    }

    const GroupoidPtr& base() const noexcept { return base_; }
    std::size_t dim(ObjId x) const { return dims_[x]; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const Matrix<S>& transport(MorId f) const { return transport_[f]; }
    const std::vector<Matrix<S>>& transports() const noexcept { return transport_; }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto d : dims_) t += d;
        return t;
    }

    friend bool operator==(const VectorBundle& a, const VectorBundle& b) {
        return same_groupoid(a.base_, b.base_) && a.dims_ == b.dims_ && a.transport_ == b.transport_;
    }

private:
    void check_functorial() const {
        const auto& g = *base_;
        for (ObjId x = 0; x < g.num_objects(); ++x)
            if (!(transport_[g.identity(x)] == Matrix<S>::identity(dims_[x])))
                throw InvalidInput("identity transports to the identity matrix", "object " + std::to_string(x));
        for (MorId f = 0; f < g.num_morphisms(); ++f)
            for (MorId h : g.out(g.target(f)))
                if (!(transport_[g.compose(h, f)] == transport_[h] * transport_[f]))
                    throw InvalidInput("transport respects composition",
                                       "pair (" + std::to_string(h) + ", " + std::to_string(f) + ")");
    }

    GroupoidPtr base_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix<S>> transport_;
};

template <ExactField S>
using BundlePtr = std::shared_ptr<const VectorBundle<S>>;

template <ExactField S>
BundlePtr<S> share(VectorBundle<S> b) {
    return std::make_shared<const VectorBundle<S>>(std::move(b));
}

/// First morphism along which s fails to be parallel.
template <ExactField S>
std::optional<MorId> parallel_violation(const VectorBundle<S>& rho, const Section<S>& s) {
    const auto& g = *rho.base();
    if (s.size() != g.num_objects()) return g.num_morphisms() > 0 ? std::optional<MorId>(0) : std::nullopt;
    for (ObjId x = 0; x < g.num_objects(); ++x)
        if (s[x].size() != rho.dim(x)) return g.identity(x);
    for (MorId f = 0; f < g.num_morphisms(); ++f)
        if (!(s[g.target(f)] == rho.transport(f) * s[g.source(f)])) return f;
    return std::nullopt;
}

template <ExactField S>
void check_parallel(const VectorBundle<S>& rho, const Section<S>& s) {
    if (s.size() != rho.base()->num_objects()) throw InvalidInput("section has a value per object", "size mismatch");
    if (auto f = parallel_violation(rho, s)) throw InvalidInput("section is parallel", "morphism " + std::to_string(*f));
}

template <ExactField S>
Section<S> zero_section(const VectorBundle<S>& rho) {
    Section<S> s(rho.base()->num_objects());
    for (ObjId x = 0; x < s.size(); ++x) s[x] = zero_vector<S>(rho.dim(x));
    return s;
}

template <ExactField S>
Section<S> add(Section<S> a, const Section<S>& b) {
    for (std::size_t x = 0; x < a.size(); ++x) a[x] = a[x] + b[x];
    return a;
}

template <ExactField S>
Section<S> scale(const S& c, Section<S> a) {
    for (auto& v : a) v = scale(c, std::move(v));
    return a;
}

/// Canonical basis of parallel sections.
///
/// Unknowns are all fiber coordinates, ordered by object then coordinate.
/// The basis is the reduced-row-echelon nullspace basis of the flatness
/// system, one vector per free coordinate; the coordinates of any parallel
/// section are its values at the free coordinates.
template <ExactField S>
class SectionSpace {
public:
    explicit SectionSpace(const VectorBundle<S>& rho) : dims_(rho.dims()) {
        const auto& g = *rho.base();
        offset_.resize(g.num_objects() + 1, 0);
        for (ObjId x = 0; x < g.num_objects(); ++x) offset_[x + 1] = offset_[x] + rho.dim(x);
        basis_.clear();
        std::vector<std::pair<std::size_t, Vec<S>>> flat;  // (free column, global vector)
        for (const auto& cls : g.pi0()) {
            // local unknowns: the component's fiber coordinates in global order
            std::vector<std::size_t> cols;
            for (ObjId x : cls)
                for (std::size_t i = 0; i < rho.dim(x); ++i) cols.push_back(offset_[x] + i);
            std::vector<std::size_t> local(offset_.back(), SIZE_MAX);
            for (std::size_t i = 0; i < cols.size(); ++i) local[cols[i]] = i;
            RowReducer<S> red(cols.size());
            // Generating equations: tree edges from the representative and
            // automorphisms of the representative. Same row space as the full
            // system, hence the same reduced form.
            const ObjId r = cls.front();
            auto add_equation = [&](MorId f) {
                const ObjId x = g.source(f), y = g.target(f);
                const auto& m = rho.transport(f);
                for (std::size_t i = 0; i < rho.dim(y); ++i) {
                    Vec<S> row = zero_vector<S>(cols.size());
                    row[local[offset_[y] + i]] = row[local[offset_[y] + i]] + S(1);
                    for (std::size_t j = 0; j < rho.dim(x); ++j)
                        row[local[offset_[x] + j]] = row[local[offset_[x] + j]] - m(i, j);
                    red.insert(std::move(row));
                }
            };
            for (ObjId x : cls)
                if (x != r) add_equation(*g.find_morphism(r, x));
            for (MorId a : g.automorphisms(r))
                if (a != g.identity(r)) add_equation(a);
            const auto free_local = red.free_columns();
            const auto null = red.nullspace();
            for (std::size_t k = 0; k < null.size(); ++k) {
                Vec<S> global = zero_vector<S>(offset_.back());
                for (std::size_t i = 0; i < cols.size(); ++i) global[cols[i]] = null[k][i];
                flat.emplace_back(cols[free_local[k]], std::move(global));
            }
        }
        std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [col, vec] : flat) {
            free_.push_back(col);
            basis_.push_back(unflatten(vec));
        }
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Section<S>>& basis() const noexcept { return basis_; }
    const Section<S>& operator[](std::size_t i) const { return basis_[i]; }

    /// Global coordinate index of each basis vector's free coordinate.
    const std::vector<std::size_t>& free_coordinates() const noexcept { return free_; }

    Vec<S> coordinates(const Section<S>& s) const {
        const auto flat = flatten(s);
        Vec<S> c(free_.size(), S(0));
        for (std::size_t i = 0; i < free_.size(); ++i) c[i] = flat[free_[i]];
        return c;
    }

    Section<S> from_coordinates(const Vec<S>& c) const {
        Vec<S> flat = zero_vector<S>(offset_.back());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (c[i].is_zero()) continue;
            const auto b = flatten(basis_[i]);
            for (std::size_t k = 0; k < flat.size(); ++k) flat[k] = flat[k] + c[i] * b[k];
        }
        return unflatten(flat);
    }

    Vec<S> flatten(const Section<S>& s) const {
        Vec<S> flat;
        flat.reserve(offset_.back());
        for (const auto& v : s) flat.insert(flat.end(), v.begin(), v.end());
        return flat;
    }

    Section<S> unflatten(const Vec<S>& flat) const {
        Section<S> s(dims_.size());
        for (ObjId x = 0; x < dims_.size(); ++x)
            s[x] = Vec<S>(flat.begin() + static_cast<std::ptrdiff_t>(offset_[x]),
                          flat.begin() + static_cast<std::ptrdiff_t>(offset_[x + 1]));
        return s;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offset_;
    std::vector<Section<S>> basis_;
    std::vector<std::size_t> free_;
};

template <ExactField S>
std::vector<Section<S>> parallel_sections_basis(const VectorBundle<S>& rho) {
    return SectionSpace<S>(rho).basis();
}

/// Sum over classes [x] of the dimension of the Aut(x)-invariants of rho(x).
template <ExactField S>
std::size_t invariant_dimension_count(const VectorBundle<S>& rho) {
    const auto& g = *rho.base();
    std::size_t total = 0;
    for (ObjId r : g.representatives()) {
        const std::size_t d = rho.dim(r);
        RowReducer<S> red(d);
        for (MorId a : g.automorphisms(r)) {
            const auto m = rho.transport(a) - Matrix<S>::identity(d);
            for (std::size_t i = 0; i < d; ++i) red.insert(m.row(i));
        }
        total += d - red.rank();
    }
    return total;
}

/// Phi*rho.
template <ExactField S>
VectorBundle<S> pullback_bundle(const GroupoidFunctor& phi, const VectorBundle<S>& rho) {
    if (!same_groupoid(phi.codomain(), rho.base())) throw InvalidInput("bundle lives on the codomain", "base mismatch");
    std::vector<std::size_t> dims(phi.domain()->num_objects());
    for (ObjId x = 0; x < dims.size(); ++x) dims[x] = rho.dim(phi(x));
    std::vector<Matrix<S>> tr(phi.domain()->num_morphisms());
    for (MorId f = 0; f < tr.size(); ++f) tr[f] = rho.transport(phi.map_morphism(f));
    return VectorBundle<S>(phi.domain(), std::move(dims), std::move(tr), Validation::kTrusted);
}

/// (Phi*s)(x) = s(Phi x).
template <ExactField S>
Section<S> pullback_section(const GroupoidFunctor& phi, const Section<S>& s) {
    Section<S> r(phi.domain()->num_objects());
    for (ObjId x = 0; x < r.size(); ++x) r[x] = s[phi(x)];
    return r;
}

/// A morphism of bundles over a common base: components intertwine transports.
template <ExactField S>
class BundleMorphism {
public:
    BundleMorphism(BundlePtr<S> source, BundlePtr<S> target, std::vector<Matrix<S>> components,
                   Validation validation = Validation::kFull)
        : source_(std::move(source)), target_(std::move(target)), comp_(std::move(components)) {
        if (!same_groupoid(source_->base(), target_->base()))
            throw InvalidInput("bundle morphism over one base", "bases differ");
        const auto& g = *source_->base();
        if (comp_.size() != g.num_objects()) throw InvalidInput("one component per object", "size mismatch");
        for (ObjId x = 0; x < g.num_objects(); ++x)
            if (comp_[x].rows() != target_->dim(x) || comp_[x].cols() != source_->dim(x))
                throw InvalidInput("component shape matches fibers", "object " + std::to_string(x));
        if (validation == Validation::kFull)
            for (MorId f = 0; f < g.num_morphisms(); ++f)
                if (!(comp_[g.target(f)] * source_->transport(f) == target_->transport(f) * comp_[g.source(f)]))
                    throw InvalidInput("components intertwine transports", "morphism " + std::to_string(f));
    }

    static BundleMorphism identity(const BundlePtr<S>& b) {
        std::vector<Matrix<S>> c;
        for (auto d : b->dims()) c.push_back(Matrix<S>::identity(d));
        return BundleMorphism(b, b, std::move(c), Validation::kTrusted);
    }

    const BundlePtr<S>& source() const noexcept { return source_; }
    const BundlePtr<S>& target() const noexcept { return target_; }
    const Matrix<S>& operator[](ObjId x) const { return comp_[x]; }
    const std::vector<Matrix<S>>& components() const noexcept { return comp_; }

    Section<S> apply(const Section<S>& s) const {
        Section<S> r(s.size());
        for (ObjId x = 0; x < s.size(); ++x) r[x] = comp_[x] * s[x];
        return r;
    }

private:
    BundlePtr<S> source_, target_;
    std::vector<Matrix<S>> comp_;
};

/// second ∘ first.
template <ExactField S>
BundleMorphism<S> compose(const BundleMorphism<S>& second, const BundleMorphism<S>& first) {
    if (!(*first.target() == *second.source())) throw InvalidInput("composable bundle morphisms", "middle bundle differs");
    std::vector<Matrix<S>> c(first.components().size());
    for (ObjId x = 0; x < c.size(); ++x) c[x] = second[x] * first[x];
    return BundleMorphism<S>(first.source(), second.target(), std::move(c), Validation::kTrusted);
}

/// Phi*lambda : Phi*rho -> Phi*xi.
template <ExactField S>
BundleMorphism<S> pullback_morphism(const GroupoidFunctor& phi, const BundleMorphism<S>& lambda) {
    auto src = share(pullback_bundle(phi, *lambda.source()));
    auto tgt = share(pullback_bundle(phi, *lambda.target()));
    std::vector<Matrix<S>> c(phi.domain()->num_objects());
    for (ObjId x = 0; x < c.size(); ++x) c[x] = lambda[phi(x)];
    return BundleMorphism<S>(src, tgt, std::move(c), Validation::kTrusted);
}

/// The isomorphism Phi*rho -> Phi'*rho with components rho(eta_x).
template <ExactField S>
BundleMorphism<S> bundle_iso_from_nat(const NaturalIso& eta, const BundlePtr<S>& rho) {
    auto src = share(pullback_bundle(eta.source(), *rho));
    auto tgt = share(pullback_bundle(eta.target(), *rho));
    std::vector<Matrix<S>> c(eta.components().size());
    for (ObjId x = 0; x < c.size(); ++x) c[x] = rho->transport(eta[x]);
    return BundleMorphism<S>(src, tgt, std::move(c));
}

/// Fibers are dual spaces with inverse-transpose transport.
template <ExactField S>
VectorBundle<S> dual_bundle(const VectorBundle<S>& rho) {
    const auto& g = *rho.base();
    std::vector<Matrix<S>> tr(g.num_morphisms());
    for (MorId f = 0; f < tr.size(); ++f) tr[f] = rho.transport(g.inverse(f)).transpose();
    return VectorBundle<S>(rho.base(), rho.dims(), std::move(tr), Validation::kTrusted);
}

/// Fiberwise tensor product of two bundles over one base.
template <ExactField S>
VectorBundle<S> tensor_bundle(const VectorBundle<S>& a, const VectorBundle<S>& b) {
    if (!same_groupoid(a.base(), b.base())) throw InvalidInput("tensor over one base", "bases differ");
    const auto& g = *a.base();
    std::vector<std::size_t> dims(g.num_objects());
    for (ObjId x = 0; x < dims.size(); ++x) dims[x] = a.dim(x) * b.dim(x);
    std::vector<Matrix<S>> tr(g.num_morphisms());
    for (MorId f = 0; f < tr.size(); ++f) tr[f] = kron(a.transport(f), b.transport(f));
    return VectorBundle<S>(a.base(), std::move(dims), std::move(tr), Validation::kTrusted);
}

/// External tensor product over the product groupoid.
template <ExactField S>
VectorBundle<S> external_tensor(const GroupoidPtr& product, const VectorBundle<S>& a, const VectorBundle<S>& b) {
    const auto& gb = *b.base();
    std::vector<std::size_t> dims(product->num_objects());
    for (ObjId x = 0; x < dims.size(); ++x) dims[x] = a.dim(x / gb.num_objects()) * b.dim(x % gb.num_objects());
    std::vector<Matrix<S>> tr(product->num_morphisms());
    for (MorId f = 0; f < tr.size(); ++f)
        tr[f] = kron(a.transport(f / gb.num_morphisms()), b.transport(f % gb.num_morphisms()));
    return VectorBundle<S>(product, std::move(dims), std::move(tr), Validation::kTrusted);
}

}  // namespace eqtft
