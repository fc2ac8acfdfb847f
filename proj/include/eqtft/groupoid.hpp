#pragma once

/**
 * @file groupoid.hpp
 * @brief Finite groupoids stored as explicit morphism tables.
 *
 * A morphism f : x -> y is an index with source/target tables. Composition
 * g∘f is stored per morphism f, indexed by the position of g in the list of
 * morphisms leaving tgt(f). Identities and inverses are tables as well.
 */

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace eqtft {

using ObjId = std::size_t;
using MorId = std::size_t;

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

enum class Validation { kFull, kTrusted };

class FiniteGroupoid {
public:
    /// Builds a groupoid from object count, source/target tables and a
    /// composition callback compose(g, f) = g∘f, called for every composable
    /// pair. Identities and inverses are derived from the composition.
    /// kFull additionally checks the category axioms on every composable triple.
    static FiniteGroupoid build(std::size_t num_objects, std::vector<ObjId> source, std::vector<ObjId> target,
                                const std::function<MorId(MorId, MorId)>& compose,
                                Validation validation = Validation::kFull) {
        FiniteGroupoid gd;
        gd.num_objects_ = num_objects;
        if (source.size() != target.size()) throw InvalidInput("morphism tables", "source/target length mismatch");
        gd.source_ = std::move(source);
        gd.target_ = std::move(target);
        const std::size_t m = gd.source_.size();
        gd.out_.assign(num_objects, {});
        gd.out_pos_.assign(m, 0);
        for (MorId f = 0; f < m; ++f) {
            if (gd.source_[f] >= num_objects || gd.target_[f] >= num_objects)
                throw InvalidInput("morphism endpoints are objects", "morphism " + std::to_string(f));
            gd.out_pos_[f] = gd.out_[gd.source_[f]].size();
            gd.out_[gd.source_[f]].push_back(f);
        }
        gd.comp_.assign(m, {});
        for (MorId f = 0; f < m; ++f) {
            const auto& nexts = gd.out_[gd.target_[f]];
            gd.comp_[f].resize(nexts.size());
            for (std::size_t k = 0; k < nexts.size(); ++k) {
                const MorId g = nexts[k];
                const MorId gf = compose(g, f);
                if (gf >= m) throw InvalidInput("composition closed", "compose(" + std::to_string(g) + ", " +
                                                                          std::to_string(f) + ") out of range");
                if (validation == Validation::kFull &&
                    (gd.source_[gf] != gd.source_[f] || gd.target_[gf] != gd.target_[g]))
                    throw InvalidInput("composite has source of f and target of g",
                                       "compose(" + std::to_string(g) + ", " + std::to_string(f) + ")");
                gd.comp_[f][k] = gf;
            }
        }
        gd.derive_identities_and_inverses();
        if (validation == Validation::kFull) gd.check_axioms();
        return gd;
    }

    /// Action groupoid X//G with morphism (g, x) at x*|G| + g. Composition is
    /// computed from the group table, so no composition table is stored.
    static FiniteGroupoid build_action(const FiniteGroup& g, std::size_t num_points, std::vector<std::size_t> act_table) {
        FiniteGroupoid gd;
        const std::size_t n = g.size();
        gd.num_objects_ = num_points;
        gd.source_.resize(n * num_points);
        gd.target_.resize(n * num_points);
        gd.out_.assign(num_points, {});
        gd.out_pos_.resize(n * num_points);
        gd.identity_.resize(num_points);
        gd.inverse_.resize(n * num_points);
        for (std::size_t x = 0; x < num_points; ++x) {
            gd.out_[x].resize(n);
            for (Elem a = 0; a < n; ++a) {
                const MorId f = x * n + a;
                gd.source_[f] = x;
                gd.target_[f] = act_table[a * num_points + x];
                gd.out_[x][a] = f;
                gd.out_pos_[f] = a;
            }
            gd.identity_[x] = x * n + g.identity();
        }
        for (MorId f = 0; f < n * num_points; ++f) gd.inverse_[f] = gd.target_[f] * n + g.inv(static_cast<Elem>(f % n));
        gd.action_group_ = std::make_shared<const FiniteGroup>(g);
        return gd;
    }

    /// The acting group when this groupoid was built as an action groupoid.
    const FiniteGroup* acting_group() const noexcept { return action_group_.get(); }

    std::size_t num_objects() const noexcept { return num_objects_; }
    std::size_t num_morphisms() const noexcept { return source_.size(); }
    ObjId source(MorId f) const { return source_[f]; }
    ObjId target(MorId f) const { return target_[f]; }
    MorId identity(ObjId x) const { return identity_[x]; }
    MorId inverse(MorId f) const { return inverse_[f]; }
    const std::vector<MorId>& out(ObjId x) const { return out_[x]; }
    bool is_identity(MorId f) const { return identity_[source_[f]] == f; }

    /// g∘f; requires source(g) == target(f).
    MorId compose(MorId g, MorId f) const {
        if (source_[g] != target_[f])
            throw Error("composing non-composable morphisms " + std::to_string(g) + " and " + std::to_string(f));
        if (action_group_) {
            const std::size_t n = action_group_->size();
            return (f / n) * n + action_group_->mul(static_cast<Elem>(g % n), static_cast<Elem>(f % n));
        }
        return comp_[f][out_pos_[g]];
    }

    std::vector<MorId> hom(ObjId x, ObjId y) const {
        std::vector<MorId> h;
        for (MorId f : out_[x])
            if (target_[f] == y) h.push_back(f);
        return h;
    }

    std::vector<MorId> automorphisms(ObjId x) const { return hom(x, x); }

    /// First morphism x -> y in table order, if any.
    std::optional<MorId> find_morphism(ObjId x, ObjId y) const {
        for (MorId f : out_[x])
            if (target_[f] == y) return f;
        return std::nullopt;
    }

    /// Component label per object; labels are the minimal object index of the component.
    std::vector<ObjId> component_labels() const {
        std::vector<ObjId> parent(num_objects_);
        std::iota(parent.begin(), parent.end(), ObjId{0});
        std::function<ObjId(ObjId)> find = [&](ObjId x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (MorId f = 0; f < source_.size(); ++f) {
            const ObjId a = find(source_[f]), b = find(target_[f]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
        std::vector<ObjId> label(num_objects_);
        for (ObjId x = 0; x < num_objects_; ++x) label[x] = find(x);
        return label;
    }

    /// pi_0: isomorphism classes, each sorted, ordered by their minimal object.
    std::vector<std::vector<ObjId>> pi0() const {
        const auto label = component_labels();
        std::vector<std::vector<ObjId>> classes;
        std::vector<std::size_t> slot(num_objects_, SIZE_MAX);
        for (ObjId x = 0; x < num_objects_; ++x) {
            if (slot[label[x]] == SIZE_MAX) {
                slot[label[x]] = classes.size();
                classes.emplace_back();
            }
            classes[slot[label[x]]].push_back(x);
        }
        return classes;
    }

    /// Minimal object of every isomorphism class.
    std::vector<ObjId> representatives() const {
        std::vector<ObjId> reps;
        for (const auto& c : pi0()) reps.push_back(c.front());
        return reps;
    }

    bool isomorphic(ObjId x, ObjId y) const { return find_morphism(x, y).has_value(); }

    /// Aut(x) as a group; element i is automorphisms(x)[i].
    FiniteGroup aut_group(ObjId x) const {
        if (x >= num_objects_) throw InvalidInput("object exists", "object " + std::to_string(x));
        const auto autos = automorphisms(x);
        std::vector<std::vector<Elem>> table(autos.size(), std::vector<Elem>(autos.size()));
        for (std::size_t a = 0; a < autos.size(); ++a)
            for (std::size_t b = 0; b < autos.size(); ++b) {
                const MorId ab = compose(autos[a], autos[b]);
                table[a][b] = static_cast<Elem>(std::find(autos.begin(), autos.end(), ab) - autos.begin());
            }
        return FiniteGroup::from_table(table, "Aut(" + std::to_string(x) + ")");
    }

    friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
        if (a.num_objects_ != b.num_objects_ || a.source_ != b.source_ || a.target_ != b.target_) return false;
        if (a.action_group_ && b.action_group_) return *a.action_group_ == *b.action_group_;
        for (MorId f = 0; f < a.source_.size(); ++f)
            for (MorId g : a.out_[a.target_[f]])
                if (a.compose(g, f) != b.compose(g, f)) return false;
        return true;
    }

private:
    void derive_identities_and_inverses() {
        identity_.assign(num_objects_, SIZE_MAX);
        for (ObjId x = 0; x < num_objects_; ++x) {
            for (MorId f : out_[x])
                if (target_[f] == x && compose(f, f) == f) {
                    identity_[x] = f;
                    break;
                }
            if (identity_[x] == SIZE_MAX) throw InvalidInput("identity morphism", "object " + std::to_string(x));
        }
        inverse_.assign(source_.size(), SIZE_MAX);
        for (MorId f = 0; f < source_.size(); ++f) {
            for (MorId g : out_[target_[f]])
                if (target_[g] == source_[f] && compose(g, f) == identity_[source_[f]] &&
                    compose(f, g) == identity_[target_[f]]) {
                    inverse_[f] = g;
                    break;
                }
            if (inverse_[f] == SIZE_MAX) throw InvalidInput("every morphism invertible", "morphism " + std::to_string(f));
        }
    }

    void check_axioms() const {
        for (MorId f = 0; f < source_.size(); ++f) {
            if (compose(identity_[target_[f]], f) != f || compose(f, identity_[source_[f]]) != f)
                throw InvalidInput("identity law", "morphism " + std::to_string(f));
            for (MorId g : out_[target_[f]]) {
                const MorId gf = compose(g, f);
                for (MorId h : out_[target_[g]])
                    if (compose(h, gf) != compose(compose(h, g), f))
                        throw InvalidInput("associativity", "(" + std::to_string(h) + "," + std::to_string(g) + "," +
                                                                std::to_string(f) + ")");
            }
        }
    }

    std::size_t num_objects_ = 0;
    std::vector<ObjId> source_, target_;
    std::vector<std::vector<MorId>> out_;
    std::vector<std::size_t> out_pos_;
    std::vector<std::vector<MorId>> comp_;
    std::vector<MorId> identity_;
    std::vector<MorId> inverse_;
    std::shared_ptr<const FiniteGroup> action_group_;
};

/// A functor between finite groupoids given by object and morphism tables.
class GroupoidFunctor {
public:
    GroupoidFunctor(GroupoidPtr domain, GroupoidPtr codomain, std::vector<ObjId> objects, std::vector<MorId> morphisms,
                    Validation validation = Validation::kFull)
        : domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          obj_(std::move(objects)),
          mor_(std::move(morphisms)) {
        if (obj_.size() != domain_->num_objects() || mor_.size() != domain_->num_morphisms())
            throw InvalidInput("functor tables cover the domain", "size mismatch");
        for (ObjId o : obj_)
            if (o >= codomain_->num_objects()) throw InvalidInput("functor object image exists", std::to_string(o));
        for (MorId m : mor_)
            if (m >= codomain_->num_morphisms()) throw InvalidInput("functor morphism image exists", std::to_string(m));
        if (validation == Validation::kFull) check();
    }

    static GroupoidFunctor identity(const GroupoidPtr& g) {
        std::vector<ObjId> o(g->num_objects());
        std::iota(o.begin(), o.end(), ObjId{0});
        std::vector<MorId> m(g->num_morphisms());
        std::iota(m.begin(), m.end(), MorId{0});
        return GroupoidFunctor(g, g, std::move(o), std::move(m), Validation::kTrusted);
    }

    const GroupoidPtr& domain() const noexcept { return domain_; }
    const GroupoidPtr& codomain() const noexcept { return codomain_; }
    ObjId operator()(ObjId x) const { return obj_[x]; }
    MorId map_morphism(MorId f) const { return mor_[f]; }
    const std::vector<ObjId>& object_table() const noexcept { return obj_; }
    const std::vector<MorId>& morphism_table() const noexcept { return mor_; }

    bool same_tables(const GroupoidFunctor& o) const { return obj_ == o.obj_ && mor_ == o.mor_; }

private:
    void check() const {
        const auto& d = *domain_;
        const auto& c = *codomain_;
        for (MorId f = 0; f < d.num_morphisms(); ++f) {
            if (c.source(mor_[f]) != obj_[d.source(f)] || c.target(mor_[f]) != obj_[d.target(f)])
                throw InvalidInput("functor preserves source and target", "morphism " + std::to_string(f));
            for (MorId g : d.out(d.target(f)))
                if (mor_[d.compose(g, f)] != c.compose(mor_[g], mor_[f]))
                    throw InvalidInput("functor preserves composition",
                                       "pair (" + std::to_string(g) + ", " + std::to_string(f) + ")");
        }
        for (ObjId x = 0; x < d.num_objects(); ++x)
            if (mor_[d.identity(x)] != c.identity(obj_[x]))
                throw InvalidInput("functor preserves identities", "object " + std::to_string(x));
    }

    GroupoidPtr domain_, codomain_;
    std::vector<ObjId> obj_;
    std::vector<MorId> mor_;
};

inline bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) { return a == b || *a == *b; }

/// second ∘ first.
inline GroupoidFunctor compose(const GroupoidFunctor& second, const GroupoidFunctor& first) {
    if (!same_groupoid(first.codomain(), second.domain()))
        throw InvalidInput("composable functors", "codomain of first differs from domain of second");
    std::vector<ObjId> o(first.domain()->num_objects());
    for (ObjId x = 0; x < o.size(); ++x) o[x] = second(first(x));
    std::vector<MorId> m(first.domain()->num_morphisms());
    for (MorId f = 0; f < m.size(); ++f) m[f] = second.map_morphism(first.map_morphism(f));
    return GroupoidFunctor(first.domain(), second.codomain(), std::move(o), std::move(m), Validation::kTrusted);
}

/// Natural isomorphism source => target with components source(x) -> target(x).
class NaturalIso {
public:
    NaturalIso(GroupoidFunctor source, GroupoidFunctor target, std::vector<MorId> components)
        : source_(std::move(source)), target_(std::move(target)), comp_(std::move(components)) {
        if (!same_groupoid(source_.domain(), target_.domain()) ||
            !same_groupoid(source_.codomain(), target_.codomain()))
            throw InvalidInput("natural iso between parallel functors", "domains or codomains differ");
        const auto& d = *source_.domain();
        const auto& c = *source_.codomain();
        if (comp_.size() != d.num_objects()) throw InvalidInput("one component per object", "size mismatch");
        for (ObjId x = 0; x < d.num_objects(); ++x)
            if (c.source(comp_[x]) != source_(x) || c.target(comp_[x]) != target_(x))
                throw InvalidInput("component maps F(x) to F'(x)", "object " + std::to_string(x));
        for (MorId f = 0; f < d.num_morphisms(); ++f) {
            const ObjId x = d.source(f), y = d.target(f);
            if (c.compose(comp_[y], source_.map_morphism(f)) != c.compose(target_.map_morphism(f), comp_[x]))
                throw InvalidInput("naturality square commutes", "morphism " + std::to_string(f));
        }
    }

    static NaturalIso identity(const GroupoidFunctor& f) {
        std::vector<MorId> c(f.domain()->num_objects());
        for (ObjId x = 0; x < c.size(); ++x) c[x] = f.codomain()->identity(f(x));
        return NaturalIso(f, f, std::move(c));
    }

    const GroupoidFunctor& source() const noexcept { return source_; }
    const GroupoidFunctor& target() const noexcept { return target_; }
    MorId operator[](ObjId x) const { return comp_[x]; }
    const std::vector<MorId>& components() const noexcept { return comp_; }

private:
    GroupoidFunctor source_, target_;
    std::vector<MorId> comp_;
};

/// Vertical composite second ∘ first : F => F''.
inline NaturalIso vertical_compose(const NaturalIso& second, const NaturalIso& first) {
    if (!first.target().same_tables(second.source())) throw InvalidInput("vertically composable", "middle functor differs");
    const auto& c = *first.source().codomain();
    std::vector<MorId> comp(first.components().size());
    for (ObjId x = 0; x < comp.size(); ++x) comp[x] = c.compose(second[x], first[x]);
    return NaturalIso(first.source(), second.target(), std::move(comp));
}

/// Subgroupoid induced on the objects accepted by keep, with its inclusion.
struct FullSubgroupoid {
    GroupoidPtr groupoid;
    GroupoidFunctor inclusion;
};

namespace groupoids {

inline GroupoidPtr make(FiniteGroupoid g) { return std::make_shared<const FiniteGroupoid>(std::move(g)); }

/// n objects, identities only.
inline GroupoidPtr discrete(std::size_t n) {
    std::vector<ObjId> s(n), t(n);
    std::iota(s.begin(), s.end(), ObjId{0});
    std::iota(t.begin(), t.end(), ObjId{0});
    return make(FiniteGroupoid::build(n, s, t, [](MorId g, MorId) { return g; }, Validation::kTrusted));
}

/// The point: one object, trivial automorphisms.
inline GroupoidPtr terminal() { return discrete(1); }

/// n objects with exactly one morphism between any two; morphism (i, j) at i*n + j.
inline GroupoidPtr codiscrete(std::size_t n) {
    std::vector<ObjId> s, t;
    for (ObjId i = 0; i < n; ++i)
        for (ObjId j = 0; j < n; ++j) {
            s.push_back(i);
            t.push_back(j);
        }
    return make(FiniteGroupoid::build(
        n, s, t, [n](MorId g, MorId f) { return (f / n) * n + g % n; }, Validation::kTrusted));
}

/// Action groupoid X//G for act(g, x); morphism (g, x) : x -> g.x at index x*|G| + g.
/// The action axioms are verified.
inline GroupoidPtr action(const FiniteGroup& g, std::size_t num_points,
                          const std::function<std::size_t(Elem, std::size_t)>& act) {
    const std::size_t n = g.size();
    std::vector<std::size_t> table(n * num_points);
    for (Elem a = 0; a < n; ++a)
        for (std::size_t x = 0; x < num_points; ++x) {
            const std::size_t y = act(a, x);
            if (y >= num_points)
                throw InvalidInput("action closed on the set", "g=" + std::to_string(a) + ", x=" + std::to_string(x));
            table[a * num_points + x] = y;
        }
    for (std::size_t x = 0; x < num_points; ++x)
        if (table[g.identity() * num_points + x] != x)
            throw InvalidInput("identity acts trivially", "point " + std::to_string(x));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (std::size_t x = 0; x < num_points; ++x)
                if (table[g.mul(a, b) * num_points + x] != table[a * num_points + table[b * num_points + x]])
                    throw InvalidInput("action compatible with multiplication",
                                       "g=" + std::to_string(a) + ", h=" + std::to_string(b) +
                                           ", x=" + std::to_string(x));
    return make(FiniteGroupoid::build_action(g, num_points, std::move(table)));
}

/// Morphism index of (g, x) in an action groupoid built by action().
inline MorId action_morphism(const FiniteGroup& g, std::size_t x, Elem a) { return x * g.size() + a; }

/// •//G.
inline GroupoidPtr one_object(const FiniteGroup& g) {
    return action(g, 1, [](Elem, std::size_t) { return std::size_t{0}; });
}

/// G//G under conjugation.
inline GroupoidPtr conjugation(const FiniteGroup& g) {
    return action(g, g.size(), [&g](Elem h, std::size_t x) { return std::size_t{g.conj(h, static_cast<Elem>(x))}; });
}

/// Product groupoid; object (x, y) at x*|B| + y, morphism (f, g) at f*|Mor B| + g.
inline GroupoidPtr product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    const std::size_t no = b.num_objects(), nm = b.num_morphisms();
    std::vector<ObjId> s, t;
    for (MorId f = 0; f < a.num_morphisms(); ++f)
        for (MorId g = 0; g < nm; ++g) {
            s.push_back(a.source(f) * no + b.source(g));
            t.push_back(a.target(f) * no + b.target(g));
        }
    return make(FiniteGroupoid::build(
        a.num_objects() * no, std::move(s), std::move(t),
        [&a, &b, nm](MorId second, MorId first) {
            return a.compose(second / nm, first / nm) * nm + b.compose(second % nm, first % nm);
        },
        Validation::kTrusted));
}

/// Disjoint union; objects and morphisms of b are shifted after those of a.
inline GroupoidPtr disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    const std::size_t ao = a.num_objects(), am = a.num_morphisms();
    std::vector<ObjId> s, t;
    for (MorId f = 0; f < am; ++f) {
        s.push_back(a.source(f));
        t.push_back(a.target(f));
    }
    for (MorId f = 0; f < b.num_morphisms(); ++f) {
        s.push_back(ao + b.source(f));
        t.push_back(ao + b.target(f));
    }
    return make(FiniteGroupoid::build(
        ao + b.num_objects(), std::move(s), std::move(t),
        [&a, &b, am](MorId g, MorId f) { return f < am ? a.compose(g, f) : am + b.compose(g - am, f - am); },
        Validation::kTrusted));
}

inline FullSubgroupoid full_subgroupoid(const GroupoidPtr& g, const std::function<bool(ObjId)>& keep) {
    std::vector<ObjId> objs;
    std::vector<ObjId> new_obj(g->num_objects(), SIZE_MAX);
    for (ObjId x = 0; x < g->num_objects(); ++x)
        if (keep(x)) {
            new_obj[x] = objs.size();
            objs.push_back(x);
        }
    std::vector<MorId> mors;
    std::vector<MorId> new_mor(g->num_morphisms(), SIZE_MAX);
    std::vector<ObjId> s, t;
    for (MorId f = 0; f < g->num_morphisms(); ++f)
        if (new_obj[g->source(f)] != SIZE_MAX && new_obj[g->target(f)] != SIZE_MAX) {
            new_mor[f] = mors.size();
            mors.push_back(f);
            s.push_back(new_obj[g->source(f)]);
            t.push_back(new_obj[g->target(f)]);
        }
    auto sub = make(FiniteGroupoid::build(
        objs.size(), std::move(s), std::move(t),
        [&](MorId second, MorId first) { return new_mor[g->compose(mors[second], mors[first])]; },
        Validation::kTrusted));
    GroupoidFunctor incl(sub, g, objs, mors, Validation::kTrusted);
    return {sub, std::move(incl)};
}

}  // namespace groupoids

namespace functors {

/// Constant functor to the single object of the terminal groupoid.
inline GroupoidFunctor to_terminal(const GroupoidPtr& g, const GroupoidPtr& point) {
    return GroupoidFunctor(g, point, std::vector<ObjId>(g->num_objects(), 0),
                           std::vector<MorId>(g->num_morphisms(), point->identity(0)), Validation::kTrusted);
}

/// Inclusion of the object y: • -> Ω.
inline GroupoidFunctor point_at(const GroupoidPtr& point, const GroupoidPtr& omega, ObjId y) {
    if (y >= omega->num_objects()) throw InvalidInput("object exists", "object " + std::to_string(y));
    return GroupoidFunctor(point, omega, {y}, {omega->identity(y)}, Validation::kTrusted);
}

/// Functor X//G -> Y//H of action groupoids induced by an equivariant map and a hom.
inline GroupoidFunctor between_actions(const GroupoidPtr& dom, const FiniteGroup& g, const GroupoidPtr& cod,
                                       const GroupHom& lambda, const std::vector<std::size_t>& point_map,
                                       Validation validation = Validation::kFull) {
    const std::size_t n = g.size();
    std::vector<MorId> mors(dom->num_morphisms());
    for (MorId f = 0; f < mors.size(); ++f)
        mors[f] = groupoids::action_morphism(lambda.codomain(), point_map[dom->source(f)], lambda(static_cast<Elem>(f % n)));
    return GroupoidFunctor(dom, cod, point_map, std::move(mors), validation);
}

/// Product of functors a × b between product groupoids.
inline GroupoidFunctor product(const GroupoidFunctor& a, const GroupoidFunctor& b, const GroupoidPtr& dom,
                               const GroupoidPtr& cod) {
    const std::size_t bo = b.domain()->num_objects(), bm = b.domain()->num_morphisms();
    const std::size_t co = b.codomain()->num_objects(), cm = b.codomain()->num_morphisms();
    std::vector<ObjId> o(dom->num_objects());
    for (ObjId x = 0; x < o.size(); ++x) o[x] = a(x / bo) * co + b(x % bo);
    std::vector<MorId> m(dom->num_morphisms());
    for (MorId f = 0; f < m.size(); ++f) m[f] = a.map_morphism(f / bm) * cm + b.map_morphism(f % bm);
    return GroupoidFunctor(dom, cod, std::move(o), std::move(m), Validation::kTrusted);
}

/// Projection of a product groupoid a × b onto its first factor.
inline GroupoidFunctor first_projection(const GroupoidPtr& prod, const GroupoidPtr& a, const FiniteGroupoid& b) {
    std::vector<ObjId> o(prod->num_objects());
    for (ObjId x = 0; x < o.size(); ++x) o[x] = x / b.num_objects();
    std::vector<MorId> m(prod->num_morphisms());
    for (MorId f = 0; f < m.size(); ++f) m[f] = f / b.num_morphisms();
    return GroupoidFunctor(prod, a, std::move(o), std::move(m), Validation::kTrusted);
}

}  // namespace functors

/// Essentially surjective and fully faithful.
inline bool is_equivalence(const GroupoidFunctor& f) {
    const auto& d = *f.domain();
    const auto& c = *f.codomain();
    std::vector<int> hit(c.num_objects(), 0);
    for (ObjId x = 0; x < d.num_objects(); ++x)
        for (MorId m : c.out(f(x))) hit[c.target(m)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
    for (ObjId x = 0; x < d.num_objects(); ++x)
        for (ObjId y = 0; y < d.num_objects(); ++y) {
            const auto src = d.hom(x, y);
            const auto dst = c.hom(f(x), f(y));
            if (src.size() != dst.size()) return false;
            std::vector<MorId> img;
            for (MorId m : src) img.push_back(f.map_morphism(m));
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
        }
    return true;
}

}  // namespace eqtft
