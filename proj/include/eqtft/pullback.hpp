#pragma once

/**
 * @file pullback.hpp
 * @brief Weak pullbacks, homotopy fibers, coverings and isofibrations.
 */

#include <optional>
#include <vector>

#include "groupoid.hpp"

namespace eqtft {

/// Object (x, y, eta) of a weak pullback with eta : Phi(x) -> Psi(y).
struct PullbackObject {
    ObjId left;
    ObjId right;
    MorId eta;
};

struct WeakPullback {
    GroupoidPtr groupoid;
    std::vector<PullbackObject> objects;
    GroupoidFunctor left;   // (x, y, eta) -> x
    GroupoidFunctor right;  // (x, y, eta) -> y
    NaturalIso eta;         // Phi∘left => Psi∘right
};

/// Weak pullback of Phi : Gamma -> Omega and Psi : Lambda -> Omega.
///
/// Objects are enumerated by x, then eta in out(Phi x), then y in increasing
/// order. A morphism (f, k) : (x, y, eta) -> (x', y', eta') has
/// eta' = Psi(k)∘eta∘Phi(f)^-1; it is stored at the source object's base
/// offset plus pos(f)*|out(y)| + pos(k).
inline WeakPullback weak_pullback(const GroupoidFunctor& phi, const GroupoidFunctor& psi) {
    if (!same_groupoid(phi.codomain(), psi.codomain()))
        throw InvalidInput("weak pullback legs share a codomain", "codomains differ");
    const auto& gam = *phi.domain();
    const auto& lam = *psi.domain();
    const auto& om = *phi.codomain();

    std::vector<std::vector<ObjId>> over(om.num_objects());
    std::vector<std::size_t> pos_over(lam.num_objects());
    for (ObjId y = 0; y < lam.num_objects(); ++y) {
        pos_over[y] = over[psi(y)].size();
        over[psi(y)].push_back(y);
    }
    auto out_positions = [](const FiniteGroupoid& g) {
        std::vector<std::size_t> pos(g.num_morphisms());
        for (ObjId x = 0; x < g.num_objects(); ++x)
            for (std::size_t i = 0; i < g.out(x).size(); ++i) pos[g.out(x)[i]] = i;
        return pos;
    };
    const auto gpos = out_positions(gam);
    const auto lpos = out_positions(lam);
    const auto opos = out_positions(om);

    // base[x][pos(eta)] = index of (x, first y over target(eta), eta)
    std::vector<std::vector<std::size_t>> base(gam.num_objects());
    std::vector<PullbackObject> objs;
    for (ObjId x = 0; x < gam.num_objects(); ++x) {
        const auto& etas = om.out(phi(x));
        base[x].resize(etas.size());
        for (std::size_t e = 0; e < etas.size(); ++e) {
            base[x][e] = objs.size();
            for (ObjId y : over[om.target(etas[e])]) objs.push_back({x, y, etas[e]});
        }
    }
    auto index_of = [&](ObjId x, ObjId y, MorId eta) { return base[x][opos[eta]] + pos_over[y]; };

    std::vector<std::size_t> mbase(objs.size() + 1, 0);
    for (std::size_t o = 0; o < objs.size(); ++o)
        mbase[o + 1] = mbase[o] + gam.out(objs[o].left).size() * lam.out(objs[o].right).size();
    const std::size_t nm = mbase.back();
    std::vector<ObjId> src(nm), tgt(nm);
    std::vector<MorId> fmap(nm), kmap(nm);
    for (std::size_t o = 0; o < objs.size(); ++o) {
        const auto& [x, y, eta] = objs[o];
        const auto& fs = gam.out(x);
        const auto& ks = lam.out(y);
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < ks.size(); ++j) {
                const MorId m = mbase[o] + i * ks.size() + j;
                const MorId f = fs[i], k = ks[j];
                const MorId eta2 =
                    om.compose(psi.map_morphism(k), om.compose(eta, om.inverse(phi.map_morphism(f))));
                src[m] = o;
                tgt[m] = index_of(gam.target(f), lam.target(k), eta2);
                fmap[m] = f;
                kmap[m] = k;
            }
    }
    auto comp = [&](MorId second, MorId first) {
        const MorId f = gam.compose(fmap[second], fmap[first]);
        const MorId k = lam.compose(kmap[second], kmap[first]);
        const std::size_t o = src[first];
        return mbase[o] + gpos[f] * lam.out(objs[o].right).size() + lpos[k];
    };
    auto pb = groupoids::make(FiniteGroupoid::build(objs.size(), src, tgt, comp, Validation::kTrusted));

    std::vector<ObjId> lo(objs.size()), ro(objs.size());
    std::vector<MorId> comps(objs.size());
    for (std::size_t o = 0; o < objs.size(); ++o) {
        lo[o] = objs[o].left;
        ro[o] = objs[o].right;
        comps[o] = objs[o].eta;
    }
    GroupoidFunctor left(pb, phi.domain(), std::move(lo), fmap, Validation::kTrusted);
    GroupoidFunctor right(pb, psi.domain(), std::move(ro), kmap, Validation::kTrusted);
    NaturalIso eta(compose(phi, left), compose(psi, right), std::move(comps));
    return WeakPullback{pb, std::move(objs), std::move(left), std::move(right), std::move(eta)};
}

struct HomotopyFiber {
    GroupoidPtr groupoid;
    /// Object i is (x, g : Phi(x) -> y).
    std::vector<ObjId> x;
    std::vector<MorId> g;
    GroupoidFunctor q;  // projection to the domain of Phi
};

/// Phi^-1[y]: the weak pullback of Phi with the inclusion of y.
inline HomotopyFiber homotopy_fiber(const GroupoidFunctor& phi, ObjId y) {
    const auto& om = phi.codomain();
    if (y >= om->num_objects()) throw InvalidInput("object of the codomain", "object " + std::to_string(y));
    auto point = groupoids::terminal();
    auto pb = weak_pullback(phi, functors::point_at(point, om, y));
    HomotopyFiber fib{pb.groupoid, {}, {}, pb.left};
    for (const auto& o : pb.objects) {
        fib.x.push_back(o.left);
        fib.g.push_back(o.eta);
    }
    return fib;
}

/// The full subgroupoid Gamma_y of objects x with Phi(x) isomorphic to y,
/// together with the forgetful functor Phi^-1[y] -> Gamma_y.
struct FiberForgetful {
    HomotopyFiber fiber;
    FullSubgroupoid gamma_y;
    GroupoidFunctor forget;
};

inline FiberForgetful fiber_forgetful(const GroupoidFunctor& phi, ObjId y) {
    auto fib = homotopy_fiber(phi, y);
    const auto& om = *phi.codomain();
    auto sub = groupoids::full_subgroupoid(phi.domain(), [&](ObjId x) { return om.isomorphic(phi(x), y); });
    std::vector<ObjId> new_obj(phi.domain()->num_objects(), SIZE_MAX);
    for (ObjId i = 0; i < sub.inclusion.object_table().size(); ++i) new_obj[sub.inclusion(i)] = i;
    std::vector<MorId> new_mor(phi.domain()->num_morphisms(), SIZE_MAX);
    for (MorId i = 0; i < sub.inclusion.morphism_table().size(); ++i) new_mor[sub.inclusion.map_morphism(i)] = i;
    std::vector<ObjId> o(fib.groupoid->num_objects());
    for (ObjId i = 0; i < o.size(); ++i) o[i] = new_obj[fib.q(i)];
    std::vector<MorId> m(fib.groupoid->num_morphisms());
    for (MorId i = 0; i < m.size(); ++i) m[i] = new_mor[fib.q.map_morphism(i)];
    GroupoidFunctor forget(fib.groupoid, sub.groupoid, std::move(o), std::move(m), Validation::kTrusted);
    return {std::move(fib), std::move(sub), std::move(forget)};
}

/// Sheet count n if Q is surjective on objects, has unique path lifting, and
/// every object fiber has n elements.
inline std::optional<std::size_t> is_covering(const GroupoidFunctor& q) {
    const auto& d = *q.domain();
    const auto& c = *q.codomain();
    if (c.num_objects() == 0) return std::nullopt;
    std::vector<std::size_t> count(c.num_objects(), 0);
    for (ObjId x = 0; x < d.num_objects(); ++x) ++count[q(x)];
    for (std::size_t k : count)
        if (k != count[0] || k == 0) return std::nullopt;
    for (ObjId x = 0; x < d.num_objects(); ++x) {
        std::vector<int> lifts(c.num_morphisms(), 0);
        for (MorId f : d.out(x)) ++lifts[q.map_morphism(f)];
        for (MorId g : c.out(q(x)))
            if (lifts[g] != 1) return std::nullopt;
    }
    return count[0];
}

/// Every morphism Q(x) -> y' lifts to a morphism out of x.
inline bool is_isofibration(const GroupoidFunctor& q) {
    const auto& d = *q.domain();
    const auto& c = *q.codomain();
    for (ObjId x = 0; x < d.num_objects(); ++x) {
        std::vector<int> hit(c.num_morphisms(), 0);
        for (MorId f : d.out(x)) hit[q.map_morphism(f)] = 1;
        for (MorId g : c.out(q(x)))
            if (!hit[g]) return false;
    }
    return true;
}

}  // namespace eqtft
