#pragma once

/**
 * @file corpus.hpp
 * @brief Seeded generators for randomized property checks.
 *
 * Every finite connected groupoid is isomorphic to codiscrete(k) x BH, so
 * random groupoids are disjoint unions of such blocks with shuffled object
 * labels. Random functors choose a target block, a homomorphism of vertex
 * groups and a gauge twist per object, which reaches every functor up to
 * the block presentation.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "frobenius.hpp"
#include "repgrpd.hpp"

namespace eqtft::corpus {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n). Modulo reduction keeps results identical across standard libraries.
inline std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline const std::vector<FiniteGroup>& vertex_groups() {
    static const std::vector<FiniteGroup> gs = {FiniteGroup::trivial(), groups::cyclic(2), groups::cyclic(3),
                                                groups::cyclic(4), groups::by_name("Z2xZ2"), groups::symmetric(3)};
    return gs;
}

/// Morphisms between two vertex groups, cached.
inline const std::vector<GroupHom>& homs_between(const FiniteGroup& a, const FiniteGroup& b) {
    static std::vector<std::tuple<FiniteGroup, FiniteGroup, std::vector<GroupHom>>> cache;
    for (const auto& [x, y, h] : cache)
        if (x == a && y == b) return h;
    cache.emplace_back(a, b, enumerate_homs(a, b));
    return std::get<2>(cache.back());
}

struct Block {
    std::size_t k;
    FiniteGroup group;
    std::size_t obj_offset;
    std::size_t mor_offset;
};

/// A groupoid presented as blocks codiscrete(k) x BH with object relabeling.
struct BlockGroupoid {
    GroupoidPtr groupoid;
    std::vector<Block> blocks;
    std::vector<ObjId> label;  // block-local position -> object id
    std::vector<std::size_t> block_of;  // object id -> block
    std::vector<std::size_t> index_in_block;

    ObjId object(std::size_t b, std::size_t i) const { return label[blocks[b].obj_offset + i]; }
    MorId morphism(std::size_t b, std::size_t i, std::size_t j, Elem h) const {
        const auto& bl = blocks[b];
        return bl.mor_offset + (i * bl.k + j) * bl.group.size() + h;
    }
};

inline BlockGroupoid build_blocks(std::vector<std::pair<std::size_t, FiniteGroup>> layout, Rng* shuffle = nullptr) {
    BlockGroupoid r;
    std::size_t objs = 0, mors = 0;
    for (auto& [k, h] : layout) {
        r.blocks.push_back({k, h, objs, mors});
        objs += k;
        mors += k * k * h.size();
    }
    r.label.resize(objs);
    for (ObjId x = 0; x < objs; ++x) r.label[x] = x;
    if (shuffle)
        for (std::size_t i = objs; i > 1; --i) std::swap(r.label[i - 1], r.label[below(*shuffle, i)]);
    r.block_of.resize(objs);
    r.index_in_block.resize(objs);
    std::vector<ObjId> src(mors), tgt(mors);
    struct Loc {
        std::size_t b, i, j;
        Elem h;
    };
    std::vector<Loc> loc(mors);
    for (std::size_t b = 0; b < r.blocks.size(); ++b) {
        const auto& bl = r.blocks[b];
        for (std::size_t i = 0; i < bl.k; ++i) {
            r.block_of[r.object(b, i)] = b;
            r.index_in_block[r.object(b, i)] = i;
            for (std::size_t j = 0; j < bl.k; ++j)
                for (Elem h = 0; h < bl.group.size(); ++h) {
                    const MorId m = r.morphism(b, i, j, h);
                    src[m] = r.object(b, i);
                    tgt[m] = r.object(b, j);
                    loc[m] = {b, i, j, h};
                }
        }
    }
    const auto blocks = r.blocks;
    auto comp = [blocks, loc](MorId g, MorId f) {
        const auto& lf = loc[f];
        const auto& lg = loc[g];
        const auto& bl = blocks[lf.b];
        return bl.mor_offset + (lf.i * bl.k + lg.j) * bl.group.size() + bl.group.mul(lg.h, lf.h);
    };
    r.groupoid = groupoids::make(FiniteGroupoid::build(objs, std::move(src), std::move(tgt), comp));
    return r;
}

/// Random groupoid with at most max_morphisms morphisms.
inline BlockGroupoid random_groupoid(Rng& rng, std::size_t max_morphisms = 24) {
    const auto& gs = vertex_groups();
    std::vector<std::pair<std::size_t, FiniteGroup>> layout;
    std::size_t used = 0;
    const std::size_t want = 1 + below(rng, 3);
    for (std::size_t c = 0; c < want || layout.empty(); ++c) {
        std::size_t tries = 0;
        while (tries++ < 8) {
            const std::size_t k = 1 + below(rng, 3);
            const auto& h = gs[below(rng, gs.size())];
            if (used + k * k * h.size() <= max_morphisms) {
                layout.emplace_back(k, h);
                used += k * k * h.size();
                break;
            }
        }
        if (tries > 8 && layout.empty()) layout.emplace_back(1, FiniteGroup::trivial());
        if (c > 6) break;
    }
    return build_blocks(std::move(layout), &rng);
}

/// Random functor between block groupoids: per source block a target block,
/// a homomorphism of vertex groups, an object map and a gauge twist c_i, so
/// (i -> j, h) goes to (phi i -> phi j, c_j lambda(h) c_i^-1).
inline GroupoidFunctor random_functor(Rng& rng, const BlockGroupoid& dom, const BlockGroupoid& cod) {
    std::vector<ObjId> objs(dom.groupoid->num_objects());
    std::vector<MorId> mors(dom.groupoid->num_morphisms());
    for (std::size_t b = 0; b < dom.blocks.size(); ++b) {
        const auto& bl = dom.blocks[b];
        const std::size_t tb = below(rng, cod.blocks.size());
        const auto& tl = cod.blocks[tb];
        const auto& homs = homs_between(bl.group, tl.group);
        const auto& lambda = homs[below(rng, homs.size())];
        std::vector<std::size_t> pos(bl.k);
        std::vector<Elem> twist(bl.k);
        for (std::size_t i = 0; i < bl.k; ++i) {
            pos[i] = below(rng, tl.k);
            twist[i] = static_cast<Elem>(below(rng, tl.group.size()));
            objs[dom.object(b, i)] = cod.object(tb, pos[i]);
        }
        const auto& h2 = tl.group;
        for (std::size_t i = 0; i < bl.k; ++i)
            for (std::size_t j = 0; j < bl.k; ++j)
                for (Elem h = 0; h < bl.group.size(); ++h)
                    mors[dom.morphism(b, i, j, h)] =
                        cod.morphism(tb, pos[i], pos[j], h2.mul(h2.mul(twist[j], lambda(h)), h2.inv(twist[i])));
    }
    return GroupoidFunctor(dom.groupoid, cod.groupoid, std::move(objs), std::move(mors));
}

/// An n-fold covering Q : Gamma -> Omega built blockwise from H-sets of size n.
struct Covering {
    GroupoidPtr total;
    GroupoidFunctor q;
    std::size_t sheets;
};

inline Covering random_covering(Rng& rng, const BlockGroupoid& base, std::size_t max_sheets = 4) {
    const std::size_t n = 1 + below(rng, max_sheets);
    // H-set per block: union of coset spaces H/K with |H/K| <= remaining points
    struct HSet {
        std::size_t points;
        std::vector<std::size_t> act;  // act[h * points + x]
    };
    std::vector<HSet> sets;
    for (const auto& bl : base.blocks) {
        const auto& h = bl.group;
        HSet s{n, std::vector<std::size_t>(h.size() * n)};
        std::size_t filled = 0;
        while (filled < n) {
            const Elem gen = static_cast<Elem>(below(rng, h.size()));
            auto k = h.generated_subgroup({gen});
            if (below(rng, 3) == 0) k = h.generated_subgroup({});
            if (below(rng, 3) == 0) k = h.generated_subgroup(h.generators());
            std::size_t index = h.size() / k.size();
            if (filled + index > n) {
                k = h.generated_subgroup(h.generators());
                index = 1;
            }
            // cosets aK listed by least representative
            std::vector<std::size_t> coset(h.size(), SIZE_MAX);
            std::vector<Elem> rep;
            for (Elem a = 0; a < h.size(); ++a) {
                if (coset[a] != SIZE_MAX) continue;
                for (Elem kk : k) coset[h.mul(a, kk)] = rep.size();
                rep.push_back(a);
            }
            for (Elem g = 0; g < h.size(); ++g)
                for (std::size_t c = 0; c < rep.size(); ++c)
                    s.act[g * n + filled + c] = filled + coset[h.mul(g, rep[c])];
            filled += index;
        }
        sets.push_back(std::move(s));
    }
    // total groupoid: block b becomes codiscrete(k) x (X_b // H_b)
    std::vector<ObjId> src, tgt;
    std::vector<ObjId> q_obj;
    std::vector<MorId> q_mor;
    struct Loc {
        std::size_t b, i, j, x;
        Elem h;
    };
    std::vector<Loc> loc;
    std::vector<std::size_t> obj_off, mor_off;
    std::size_t objs = 0;
    for (std::size_t b = 0; b < base.blocks.size(); ++b) {
        const auto& bl = base.blocks[b];
        const auto& s = sets[b];
        obj_off.push_back(objs);
        mor_off.push_back(src.size());
        for (std::size_t i = 0; i < bl.k; ++i)
            for (std::size_t x = 0; x < n; ++x) q_obj.push_back(base.object(b, i));
        for (std::size_t i = 0; i < bl.k; ++i)
            for (std::size_t j = 0; j < bl.k; ++j)
                for (std::size_t x = 0; x < n; ++x)
                    for (Elem h = 0; h < bl.group.size(); ++h) {
                        src.push_back(objs + i * n + x);
                        tgt.push_back(objs + j * n + s.act[h * n + x]);
                        q_mor.push_back(base.morphism(b, i, j, h));
                        loc.push_back({b, i, j, x, h});
                    }
        objs += bl.k * n;
    }
    auto index = [base, n, mor_off](std::size_t b, std::size_t i, std::size_t j, std::size_t x, Elem h) {
        const auto& bl = base.blocks[b];
        return mor_off[b] + ((i * bl.k + j) * n + x) * bl.group.size() + h;
    };
    auto comp = [loc, base, index](MorId g, MorId f) {
        const auto& lf = loc[f];
        const auto& lg = loc[g];
        return index(lf.b, lf.i, lg.j, lf.x, base.blocks[lf.b].group.mul(lg.h, lf.h));
    };
    auto total = groupoids::make(FiniteGroupoid::build(objs, std::move(src), std::move(tgt), comp));
    GroupoidFunctor q(total, base.groupoid, std::move(q_obj), std::move(q_mor));
    return {total, std::move(q), n};
}

/// Small random integer scalar in [-r, r].
template <ExactField S>
S small(Rng& rng, int r = 3) {
    return S(static_cast<std::int64_t>(below(rng, 2 * r + 1)) - r);
}

/// Random unimodular integer matrix: unit lower triangular times upper
/// triangular with diagonal +-1, entries in {-1, 0, 1}. Keeps inverses integral
/// so repeated conjugation does not blow up denominators.
template <ExactField S>
Matrix<S> random_invertible(Rng& rng, std::size_t d) {
    Matrix<S> lower = Matrix<S>::identity(d), upper(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        upper(i, i) = below(rng, 2) == 0 ? S(1) : S(-1);
        for (std::size_t j = 0; j < i; ++j) lower(i, j) = small<S>(rng, 1);
        for (std::size_t j = i + 1; j < d; ++j) upper(i, j) = small<S>(rng, 1);
    }
    return lower * upper;
}

/// Random representation of H of dimension at most max_dim: a direct sum of
/// sign characters and coset permutation representations, conjugated.
template <ExactField S>
std::vector<Matrix<S>> random_representation(Rng& rng, const FiniteGroup& h, std::size_t max_dim) {
    const std::size_t target = 1 + below(rng, max_dim);
    const auto& signs = homs_between(h, groups::cyclic(2));
    std::vector<std::vector<Matrix<S>>> pieces;
    std::size_t d = 0;
    while (d < target) {
        const auto k = h.generated_subgroup({static_cast<Elem>(below(rng, h.size()))});
        const std::size_t index = h.size() / k.size();
        if (index > 1 && d + index <= target && below(rng, 2) == 0) {
            std::vector<std::size_t> coset(h.size(), SIZE_MAX);
            std::vector<Elem> rep;
            for (Elem a = 0; a < h.size(); ++a) {
                if (coset[a] != SIZE_MAX) continue;
                for (Elem kk : k) coset[h.mul(a, kk)] = rep.size();
                rep.push_back(a);
            }
            std::vector<Matrix<S>> p(h.size(), Matrix<S>(index, index));
            for (Elem g = 0; g < h.size(); ++g)
                for (std::size_t c = 0; c < index; ++c) p[g](coset[h.mul(g, rep[c])], c) = S(1);
            pieces.push_back(std::move(p));
            d += index;
        } else {
            const auto& chi = signs[below(rng, signs.size())];
            std::vector<Matrix<S>> p(h.size(), Matrix<S>(1, 1));
            for (Elem g = 0; g < h.size(); ++g) p[g](0, 0) = chi(g) == 0 ? S(1) : S(-1);
            pieces.push_back(std::move(p));
            d += 1;
        }
    }
    std::vector<Matrix<S>> rho(h.size(), Matrix<S>(d, d));
    std::size_t off = 0;
    for (const auto& p : pieces) {
        const std::size_t pd = p[0].rows();
        for (Elem g = 0; g < h.size(); ++g)
            for (std::size_t i = 0; i < pd; ++i)
                for (std::size_t j = 0; j < pd; ++j) rho[g](off + i, off + j) = p[g](i, j);
        off += pd;
    }
    const auto c = random_invertible<S>(rng, d);
    const auto ci = inverse(c);
    for (auto& m : rho) m = c * m * ci;
    return rho;
}

/// Random bundle: per block a representation of its vertex group and a
/// gauge matrix per object; (i -> j, h) acts by T_j rho(h) T_i^-1.
template <ExactField S>
VectorBundle<S> random_bundle(Rng& rng, const BlockGroupoid& g, std::size_t max_dim = 4) {
    std::vector<std::size_t> dims(g.groupoid->num_objects());
    std::vector<Matrix<S>> tr(g.groupoid->num_morphisms());
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        const auto& bl = g.blocks[b];
        const auto rho = random_representation<S>(rng, bl.group, max_dim);
        const std::size_t d = rho[0].rows();
        std::vector<Matrix<S>> gauge(bl.k), gauge_inv(bl.k);
        for (std::size_t i = 0; i < bl.k; ++i) {
            gauge[i] = random_invertible<S>(rng, d);
            gauge_inv[i] = inverse(gauge[i]);
            dims[g.object(b, i)] = d;
        }
        for (std::size_t i = 0; i < bl.k; ++i)
            for (std::size_t j = 0; j < bl.k; ++j)
                for (Elem h = 0; h < bl.group.size(); ++h)
                    tr[g.morphism(b, i, j, h)] = gauge[j] * rho[h] * gauge_inv[i];
    }
    return VectorBundle<S>(g.groupoid, std::move(dims), std::move(tr));
}

/// Random parallel section.
template <ExactField S>
Section<S> random_section(Rng& rng, const SectionSpace<S>& space) {
    Vec<S> c(space.dim());
    for (auto& x : c) x = small<S>(rng);
    return space.from_coordinates(c);
}

/// Random bundle morphism a -> b over one base, drawn from the parallel
/// sections of the bundle Hom(a, b) = a* ⊗ b.
template <ExactField S>
std::vector<Matrix<S>> random_intertwiner(Rng& rng, const VectorBundle<S>& a, const VectorBundle<S>& b) {
    const auto hom = tensor_bundle(dual_bundle(a), b);
    const SectionSpace<S> space(hom);
    const auto s = random_section(rng, space);
    std::vector<Matrix<S>> c(a.dims().size());
    for (ObjId x = 0; x < c.size(); ++x) {
        const std::size_t da = a.dim(x), db = b.dim(x);
        c[x] = Matrix<S>(db, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) c[x](j, i) = s[x][i * db + j];
    }
    return c;
}

template <ExactField S>
struct RandomRep {
    BlockGroupoid base;
    RepObject<S> object;
};

template <ExactField S>
RandomRep<S> random_rep_object(Rng& rng, std::size_t max_morphisms = 12, std::size_t max_dim = 3) {
    auto g = random_groupoid(rng, max_morphisms);
    auto b = share(random_bundle<S>(rng, g, max_dim));
    auto obj = RepObject<S>(g.groupoid, std::move(b));
    return {std::move(g), std::move(obj)};
}

/// Random span a -> b with a random apex and random legs.
template <ExactField S>
SpanMorphism<S> random_span(Rng& rng, const RandomRep<S>& a, const RandomRep<S>& b, std::size_t max_morphisms = 12) {
    const auto apex = random_groupoid(rng, max_morphisms);
    auto r0 = random_functor(rng, apex, a.base);
    auto r1 = random_functor(rng, apex, b.base);
    const auto in = pullback_bundle(r0, *a.object.bundle);
    const auto out = pullback_bundle(r1, *b.object.bundle);
    auto c = random_intertwiner(rng, in, out);
    return SpanMorphism<S>(a.object, b.object, std::move(r0), std::move(r1), std::move(c));
}

/// Random commutative Frobenius algebra of dimension <= max_dim in a random basis.
template <ExactField S>
CommutativeFrobeniusAlgebra<S> random_frobenius(Rng& rng, std::size_t max_dim = 4) {
    const std::size_t d = 1 + below(rng, max_dim);
    auto nonzero = [&rng] {
        while (true) {
            const S s = small<S>(rng, 4);
            if (!s.is_zero()) return s;
        }
    };
    CommutativeFrobeniusAlgebra<S> base;
    switch (below(rng, 3)) {
        case 0: {
            std::vector<S> w(d);
            for (auto& x : w) x = nonzero();
            base = semisimple(w);
            break;
        }
        case 1: {
            std::vector<S> eps(d);
            for (auto& x : eps) x = small<S>(rng);
            eps.back() = nonzero();
            base = truncated_polynomial(eps);
            break;
        }
        default: {
            // K[x]/(x^a) x K^b keeps the total dimension at d
            const std::size_t a = 1 + below(rng, d);
            std::vector<S> eps(a);
            for (auto& x : eps) x = small<S>(rng);
            eps.back() = nonzero();
            const auto p = truncated_polynomial(eps);
            std::vector<S> w(d - a);
            for (auto& x : w) x = nonzero();
            const auto q = semisimple(w);
            base = CommutativeFrobeniusAlgebra<S>{d, Matrix<S>(d, d * d), Vec<S>(d, S(0)), Matrix<S>(d, d)};
            for (std::size_t i = 0; i < a; ++i) {
                base.unit[i] = p.unit[i];
                for (std::size_t j = 0; j < a; ++j) {
                    base.pairing(i, j) = p.pairing(i, j);
                    for (std::size_t k = 0; k < a; ++k) base.mul(k, i * d + j) = p.mul(k, i * a + j);
                }
            }
            for (std::size_t i = 0; i < d - a; ++i) {
                base.unit[a + i] = S(1);
                base.pairing(a + i, a + i) = q.pairing(i, i);
                base.mul(a + i, (a + i) * d + a + i) = S(1);
            }
        }
    }
    return change_basis(base, random_invertible<S>(rng, d));
}

}  // namespace eqtft::corpus
