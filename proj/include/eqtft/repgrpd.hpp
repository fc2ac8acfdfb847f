#pragma once

/**
 * @file repgrpd.hpp
 * @brief Bundles over groupoids with span morphisms, and the parallel section functor.
 */

#include "pushforward.hpp"

namespace eqtft {

template <ExactField S>
struct RepObject {
    GroupoidPtr groupoid;
    BundlePtr<S> bundle;

    RepObject(GroupoidPtr g, BundlePtr<S> b) : groupoid(std::move(g)), bundle(std::move(b)) {
        if (!same_groupoid(groupoid, bundle->base())) throw InvalidInput("bundle base matches groupoid", "base mismatch");
    }
};

/// Span Gamma <- Lambda -> Omega with an intertwiner r0*rho -> r1*xi.
template <ExactField S>
class SpanMorphism {
public:
    SpanMorphism(RepObject<S> source, RepObject<S> target, GroupoidFunctor r0, GroupoidFunctor r1,
                 std::vector<Matrix<S>> intertwiner, Validation validation = Validation::kFull)
        : source_(std::move(source)),
          target_(std::move(target)),
          r0_(std::move(r0)),
          r1_(std::move(r1)),
          lambda_(make_intertwiner(std::move(intertwiner), validation)) {}

    static SpanMorphism identity(const RepObject<S>& o) {
        auto id = GroupoidFunctor::identity(o.groupoid);
        std::vector<Matrix<S>> c;
        for (auto d : o.bundle->dims()) c.push_back(Matrix<S>::identity(d));
        return SpanMorphism(o, o, id, id, std::move(c), Validation::kTrusted);
    }

    const RepObject<S>& source() const noexcept { return source_; }
    const RepObject<S>& target() const noexcept { return target_; }
    const GroupoidPtr& apex() const noexcept { return r0_.domain(); }
    const GroupoidFunctor& r0() const noexcept { return r0_; }
    const GroupoidFunctor& r1() const noexcept { return r1_; }
    const BundleMorphism<S>& intertwiner() const noexcept { return lambda_; }

private:
    BundleMorphism<S> make_intertwiner(std::vector<Matrix<S>> c, Validation validation) const {
        if (!same_groupoid(r0_.domain(), r1_.domain())) throw InvalidInput("span legs share an apex", "apex mismatch");
        if (!same_groupoid(r0_.codomain(), source_.groupoid) || !same_groupoid(r1_.codomain(), target_.groupoid))
            throw InvalidInput("span legs land in source and target", "leg codomain mismatch");
        return BundleMorphism<S>(share(pullback_bundle(r0_, *source_.bundle)),
                                 share(pullback_bundle(r1_, *target_.bundle)), std::move(c), validation);
    }

    RepObject<S> source_, target_;
    GroupoidFunctor r0_, r1_;
    BundleMorphism<S> lambda_;
};

/// g ∘ f for f : A -> B and g : B -> C. The apex is the weak pullback of
/// f.r1 and g.r0, and the intertwiner at (a, b, eta) is lambda'_b · xi(eta) · lambda_a.
template <ExactField S>
SpanMorphism<S> compose_spans(const SpanMorphism<S>& f, const SpanMorphism<S>& g) {
    if (!same_groupoid(f.target().groupoid, g.source().groupoid) || !(*f.target().bundle == *g.source().bundle))
        throw InvalidInput("composable spans", "middle object differs");
    const auto pb = weak_pullback(f.r1(), g.r0());
    const auto& xi = *f.target().bundle;
    std::vector<Matrix<S>> c(pb.objects.size());
    for (ObjId w = 0; w < c.size(); ++w) {
        const auto& o = pb.objects[w];
        c[w] = g.intertwiner()[o.right] * xi.transport(o.eta) * f.intertwiner()[o.left];
    }
    return SpanMorphism<S>(f.source(), g.target(), compose(f.r0(), pb.left), compose(g.r1(), pb.right), std::move(c));
}

template <ExactField S>
SectionSpace<S> par_object(const RepObject<S>& o) {
    return SectionSpace<S>(*o.bundle);
}

/// Matrix of (r1)_* lambda_* r0* in the canonical section bases.
template <ExactField S>
Matrix<S> par_morphism_general(const SpanMorphism<S>& f) {
    const auto src = par_object(f.source());
    const auto tgt = par_object(f.target());
    Matrix<S> m(tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        const auto t = f.intertwiner().apply(pullback_section(f.r0(), src[j]));
        const auto c = tgt.coordinates(pushforward(f.r1(), *f.target().bundle, t));
        for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    return m;
}

/// Strict formula for an isofibration r1: at x1, sum over classes of the apex
/// that meet the strict fiber r1^-1(x1), and over g in Aut(x1).
template <ExactField S>
Matrix<S> par_morphism_strict(const SpanMorphism<S>& f) {
    if (!is_isofibration(f.r1())) throw InvalidInput("outgoing leg is an isofibration", "lifting fails");
    const auto src = par_object(f.source());
    const auto tgt = par_object(f.target());
    const auto& lam = *f.apex();
    const auto& om = *f.target().groupoid;
    const auto& xi = *f.target().bundle;
    const auto classes = lam.pi0();
    Matrix<S> m(tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        const auto t = f.intertwiner().apply(pullback_section(f.r0(), src[j]));
        Section<S> out = zero_section(xi);
        for (const auto& cls : classes) {
            const S w(Rational(1, static_cast<Rational::Int>(lam.automorphisms(cls.front()).size())));
            for (ObjId x1 = 0; x1 < om.num_objects(); ++x1) {
                const auto it = std::find_if(cls.begin(), cls.end(), [&](ObjId y) { return f.r1()(y) == x1; });
                if (it == cls.end()) continue;
                for (MorId g : om.automorphisms(x1)) out[x1] = out[x1] + scale(w, xi.transport(g) * t[*it]);
            }
        }
        const auto c = tgt.coordinates(out);
        for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    return m;
}

/// Uses the strict formula when r1 is an isofibration and cross-checks it
/// against the general formula.
template <ExactField S>
Matrix<S> par_morphism(const SpanMorphism<S>& f) {
    auto general = par_morphism_general(f);
    if (is_isofibration(f.r1())) {
        if (!(par_morphism_strict(f) == general)) throw Error("strict and general parallel-section formulas disagree");
    }
    return general;
}

/// Monoidal unit: the trivial line over the point.
template <ExactField S>
RepObject<S> monoidal_unit() {
    auto pt = groupoids::terminal();
    return RepObject<S>(pt, share(VectorBundle<S>::trivial_line(pt)));
}

template <ExactField S>
RepObject<S> tensor_objects(const RepObject<S>& a, const RepObject<S>& b) {
    auto p = groupoids::product(*a.groupoid, *b.groupoid);
    return RepObject<S>(p, share(external_tensor(p, *a.bundle, *b.bundle)));
}

template <ExactField S>
SpanMorphism<S> tensor_spans(const SpanMorphism<S>& f, const SpanMorphism<S>& g) {
    const auto src = tensor_objects(f.source(), g.source());
    const auto tgt = tensor_objects(f.target(), g.target());
    const auto apex = groupoids::product(*f.apex(), *g.apex());
    auto r0 = functors::product(f.r0(), g.r0(), apex, src.groupoid);
    auto r1 = functors::product(f.r1(), g.r1(), apex, tgt.groupoid);
    const std::size_t n = g.apex()->num_objects();
    std::vector<Matrix<S>> c(apex->num_objects());
    for (ObjId w = 0; w < c.size(); ++w) c[w] = kron(f.intertwiner()[w / n], g.intertwiner()[w % n]);
    return SpanMorphism<S>(src, tgt, std::move(r0), std::move(r1), std::move(c));
}

/// Symmetry a ⊗ b -> b ⊗ a as a span with identity incoming leg.
template <ExactField S>
SpanMorphism<S> swap_span(const RepObject<S>& a, const RepObject<S>& b) {
    const auto ab = tensor_objects(a, b);
    const auto ba = tensor_objects(b, a);
    const std::size_t ao = a.groupoid->num_objects(), bo = b.groupoid->num_objects();
    const std::size_t am = a.groupoid->num_morphisms(), bm = b.groupoid->num_morphisms();
    std::vector<ObjId> o(ab.groupoid->num_objects());
    for (ObjId x = 0; x < o.size(); ++x) o[x] = (x % bo) * ao + x / bo;
    std::vector<MorId> m(ab.groupoid->num_morphisms());
    for (MorId f = 0; f < m.size(); ++f) m[f] = (f % bm) * am + f / bm;
    GroupoidFunctor sw(ab.groupoid, ba.groupoid, std::move(o), std::move(m));
    std::vector<Matrix<S>> c(ab.groupoid->num_objects());
    for (ObjId x = 0; x < c.size(); ++x) {
        const std::size_t da = a.bundle->dim(x / bo), db = b.bundle->dim(x % bo);
        Matrix<S> p(da * db, da * db);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) p(j * da + i, i * db + j) = S(1);
        c[x] = std::move(p);
    }
    return SpanMorphism<S>(ab, ba, GroupoidFunctor::identity(ab.groupoid), std::move(sw), std::move(c));
}

/// Matrix of Par(a) ⊗ Par(b) -> Par(a ⊗ b), s ⊗ t -> ((x, y) -> s(x) ⊗ t(y)),
/// in canonical bases; column index i*dim Par(b) + j.
template <ExactField S>
Matrix<S> tensor_identification(const RepObject<S>& a, const RepObject<S>& b) {
    const auto pa = par_object(a);
    const auto pb = par_object(b);
    const auto ab = tensor_objects(a, b);
    const auto pab = par_object(ab);
    const std::size_t bo = b.groupoid->num_objects();
    Matrix<S> m(pab.dim(), pa.dim() * pb.dim());
    for (std::size_t i = 0; i < pa.dim(); ++i)
        for (std::size_t j = 0; j < pb.dim(); ++j) {
            Section<S> s(ab.groupoid->num_objects());
            for (ObjId x = 0; x < s.size(); ++x) {
                const auto& u = pa[i][x / bo];
                const auto& v = pb[j][x % bo];
                Vec<S> w;
                for (const auto& p : u)
                    for (const auto& q : v) w.push_back(p * q);
                s[x] = std::move(w);
            }
            const auto c = pab.coordinates(s);
            for (std::size_t k = 0; k < c.size(); ++k) m(k, i * pb.dim() + j) = c[k];
        }
    return m;
}

}  // namespace eqtft
