#pragma once

/**
 * @file suite.hpp
 * @brief Seeded property suites, one per acceptance criterion.
 *
 * Each suite returns a pass flag, the number of instances checked and, on
 * failure, a description of the first counterexample.
 */

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "invariants.hpp"
#include "twisted.hpp"

namespace eqtft {

struct SuiteResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::size_t instances = 0;
    std::string detail;
    double seconds = 0;

    SuiteResult() = default;
    SuiteResult(int i, std::string n) : id(i), name(std::move(n)) {}

    void fail(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
};

namespace suites {

using corpus::Rng;

inline Rational card(const GroupoidPtr& g) { return cardinality(*g); }

/// Normalization, equivalence invariance, additivity, covering law and
/// product law on random groupoids and on action groupoids of built-in groups.
inline SuiteResult cardinality_axioms(const RunConfig& cfg, std::size_t count = 200) {
    SuiteResult r{1, "groupoid cardinality axioms"};
    Rng rng(cfg.seed);
    if (card(groupoids::terminal()) != Rational(1)) r.fail("(N) point does not have cardinality 1");
    for (std::size_t t = 0; t < count; ++t) {
        const auto a = corpus::random_groupoid(rng);
        const auto b = corpus::random_groupoid(rng);
        const auto ca = card(a.groupoid), cb = card(b.groupoid);
        const std::string at = "instance " + std::to_string(t) + ": ";
        // (E): skeleton and product with a codiscrete groupoid are equivalent to a
        const auto reps = a.groupoid->representatives();
        std::vector<char> keep(a.groupoid->num_objects(), 0);
        for (ObjId x : reps) keep[x] = 1;
        const auto skel = groupoids::full_subgroupoid(a.groupoid, [&](ObjId x) { return keep[x] != 0; });
        if (!is_equivalence(skel.inclusion) || card(skel.groupoid) != ca) r.fail(at + "(E) skeleton");
        const auto thick = groupoids::product(*a.groupoid, *groupoids::codiscrete(1 + corpus::below(rng, 3)));
        if (card(thick) != ca) r.fail(at + "(E) codiscrete thickening");
        if (card(groupoids::disjoint_union(*a.groupoid, *b.groupoid)) != ca + cb) r.fail(at + "(U) additivity");
        const auto cov = corpus::random_covering(rng, a);
        const auto sheets = is_covering(cov.q);
        if (!sheets || *sheets != cov.sheets ||
            card(cov.total) != Rational(static_cast<Rational::Int>(cov.sheets)) * ca)
            r.fail(at + "(C) covering law");
        if (card(groupoids::product(*a.groupoid, *b.groupoid)) != ca * cb) r.fail(at + "product law");
        ++r.instances;
    }
    for (const auto& g : groups::builtins()) {
        const Rational n(static_cast<Rational::Int>(g.size()));
        if (card(groupoids::one_object(g)) != Rational(1) / n) r.fail(g.name() + ": point//G");
        if (card(groupoids::conjugation(g)) != Rational(1)) r.fail(g.name() + ": G//G");
        const auto left = groupoids::action(g, g.size(), [&g](Elem h, std::size_t x) {
            return std::size_t{g.mul(h, static_cast<Elem>(x))};
        });
        if (card(left) != Rational(1)) r.fail(g.name() + ": G//G under translation");
        r.instances += 3;
    }
    return r;
}

template <ExactField S>
InvariantFunction<S> random_invariant_function(Rng& rng, const GroupoidPtr& g, std::size_t width) {
    const auto labels = g->component_labels();
    std::vector<Vec<S>> per_class(g->num_objects());
    std::vector<Vec<S>> v(g->num_objects());
    for (ObjId x = 0; x < v.size(); ++x) {
        auto& c = per_class[labels[x]];
        if (c.empty()) {
            c.resize(width);
            for (auto& s : c) s = corpus::small<S>(rng, 5);
        }
        v[x] = c;
    }
    return InvariantFunction<S>(g, std::move(v));
}

/// Transformation formula, covering integral, Cavalieri and generalized Cavalieri.
inline SuiteResult integration_laws(const RunConfig& cfg, std::size_t count = 100) {
    SuiteResult r{2, "integration laws"};
    Rng rng(cfg.seed + 2);
    for (std::size_t t = 0; t < count; ++t) {
        const std::string at = "instance " + std::to_string(t) + ": ";
        const auto gamma = corpus::random_groupoid(rng);
        const auto omega = corpus::random_groupoid(rng);
        const auto phi = corpus::random_functor(rng, gamma, omega);
        const std::size_t w = 1 + corpus::below(rng, 2);
        const auto f_omega = random_invariant_function<Rational>(rng, omega.groupoid, w);
        const auto f_gamma = random_invariant_function<Rational>(rng, gamma.groupoid, w);

        // transformation formula along the equivalence omega x codiscrete(k) -> omega
        const auto k = groupoids::codiscrete(1 + corpus::below(rng, 3));
        const auto thick = groupoids::product(*omega.groupoid, *k);
        const auto proj = functors::first_projection(thick, omega.groupoid, *k);
        if (!is_equivalence(proj) || integrate(pullback_function(proj, f_omega)) != integrate(f_omega))
            r.fail(at + "transformation formula");

        const auto cov = corpus::random_covering(rng, omega);
        const auto [lhs, rhs] = covering_integral_check(cov.q, f_omega);
        if (lhs != rhs) r.fail(at + "covering integral");

        const auto one = InvariantFunction<Rational>::constant(gamma.groupoid, Rational(1));
        const auto [c1, c2] = cavalieri_check(phi, one);
        if (c1 != c2) r.fail(at + "Cavalieri");
        const auto [g1, g2] = cavalieri_check(phi, f_gamma);
        if (g1 != g2) r.fail(at + "generalized Cavalieri");
        ++r.instances;
    }
    return r;
}

/// Definition and corollary formulas, identity law, composition law, naturality square.
inline SuiteResult pushforward_laws(const RunConfig& cfg, std::size_t count = 100) {
    SuiteResult r{3, "pushforward laws"};
    Rng rng(cfg.seed + 3);
    for (std::size_t t = 0; t < count; ++t) {
        const std::string at = "instance " + std::to_string(t) + ": ";
        const auto gamma = corpus::random_groupoid(rng);
        const auto omega = corpus::random_groupoid(rng);
        const auto xi_base = corpus::random_groupoid(rng);
        const auto phi = corpus::random_functor(rng, gamma, omega);
        const auto psi = corpus::random_functor(rng, omega, xi_base);
        const auto rho = corpus::random_bundle<Rational>(rng, xi_base, 4);
        const auto on_omega = share(corpus::random_bundle<Rational>(rng, omega, 4));
        const auto on_omega2 = share(corpus::random_bundle<Rational>(rng, omega, 4));
        const BundleMorphism<Rational> lambda(on_omega, on_omega2,
                                              corpus::random_intertwiner(rng, *on_omega, *on_omega2));

        const auto pulled = pullback_bundle(psi, rho);
        const SectionSpace<Rational> sections(pullback_bundle(phi, pulled));
        for (std::size_t i = 0; i < sections.dim(); ++i) {
            const auto def = pushforward_definition(phi, pulled, sections[i]);
            if (def != pushforward_corollary(phi, pulled, sections[i], IsoChoice::kFirst) ||
                def != pushforward_corollary(phi, pulled, sections[i], IsoChoice::kLast))
                r.fail(at + "definition and corollary formulas differ");
            if (def != pushforward_aut0(phi, pulled, sections[i])) r.fail(at + "Aut0 weighting differs");
        }
        const SectionSpace<Rational> own(pulled);
        const auto id = GroupoidFunctor::identity(omega.groupoid);
        for (std::size_t i = 0; i < own.dim(); ++i)
            if (pushforward(id, pulled, own[i]) != own[i]) r.fail(at + "identity law");
        const auto laws = pushforward_laws_check(phi, psi, rho, lambda);
        if (!laws.ok) r.fail(at + laws.failure);
        ++r.instances;
    }
    return r;
}

/// par(g∘f) = par(g) par(f) and compatibility with the tensor product.
inline SuiteResult par_functoriality(const RunConfig& cfg, std::size_t count = 50) {
    SuiteResult r{4, "Par functoriality and monoidality"};
    Rng rng(cfg.seed + 4);
    std::size_t nonzero = 0;
    for (std::size_t t = 0; t < count; ++t) {
        const std::string at = "instance " + std::to_string(t) + ": ";
        const auto a = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto b = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto c = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto f = corpus::random_span(rng, a, b, 8);
        const auto g = corpus::random_span(rng, b, c, 8);
        const auto pf = par_morphism(f);
        const auto pg = par_morphism(g);
        const auto pgf = par_morphism(compose_spans(f, g));
        if (!(pgf == pg * pf)) r.fail(at + "par(g∘f) != par(g) par(f)");
        if (!is_zero_vector(pgf.data())) ++nonzero;
        const auto fg = tensor_spans(f, g);
        const auto lhs = par_morphism(fg) * tensor_identification(a.object, b.object);
        const auto rhs = tensor_identification(b.object, c.object) * kron(pf, pg);
        if (!(lhs == rhs)) r.fail(at + "par(f ⊗ g) != par(f) ⊗ par(g)");
        const auto id = SpanMorphism<Rational>::identity(a.object);
        if (!(par_morphism(id) == Matrix<Rational>::identity(par_object(a.object).dim()))) r.fail(at + "identity span");
        ++r.instances;
    }
    r.detail = r.pass ? std::to_string(nonzero) + " composites with nonzero image" : r.detail;
    return r;
}

/// Number of commuting pairs divided by |G|, by direct double loop.
inline Rational commuting_pairs_over_order(const FiniteGroup& g) {
    Rational::Int pairs = 0;
    for (Elem a = 0; a < g.size(); ++a)
        for (Elem b = 0; b < g.size(); ++b)
            if (g.mul(a, b) == g.mul(b, a)) ++pairs;
    return Rational(pairs, static_cast<Rational::Int>(g.size()));
}

inline SuiteResult dw_values(const RunConfig& cfg) {
    SuiteResult r{5, "Dijkgraaf-Witten values"};
    for (const auto& g : groups::builtins()) {
        const auto torus = dw_invariant(g, 1, cfg);
        const Rational classes(static_cast<Rational::Int>(g.conjugacy_classes().size()));
        if (torus != classes || torus != commuting_pairs_over_order(g))
            r.fail(g.name() + ": torus gives " + torus.to_string() + ", expected " + classes.to_string());
        if (dw_invariant(g, 0, cfg) != Rational(1, static_cast<Rational::Int>(g.size())))
            r.fail(g.name() + ": sphere value is not 1/|G|");
        r.instances += 2;
    }
    return r;
}

/// Cocycles exercised by the twisted-algebra suites.
inline std::vector<Cocycle2> sample_cocycles(const FiniteGroup& g, Rng& rng) {
    std::vector<Cocycle2> out{Cocycle2::trivial(g)};
    std::vector<RationalRotation> beta(g.size());
    for (Elem x = 0; x < g.size(); ++x)
        if (x != g.identity()) beta[x] = RationalRotation(static_cast<std::int64_t>(corpus::below(rng, 4)), 4);
    out.push_back(Cocycle2::coboundary(g, beta));
    if (g == groups::by_name("Z2xZ2")) {
        // Z2 x Z2 with x = (x/2, x%2): theta(a, b) = (-1)^{a1 b2}, not a coboundary
        std::vector<RationalRotation> v(16);
        for (Elem a = 0; a < 4; ++a)
            for (Elem b = 0; b < 4; ++b)
                if ((a / 2) * (b % 2) == 1) v[a * 4 + b] = RationalRotation(1, 2);
        out.emplace_back(g, std::move(v));
        out.push_back(out.back() * out[1]);
    }
    return out;
}

inline bool same_algebra(const CommutativeFrobeniusAlgebra<Cyclotomic>& a, const SpanEvaluation<Cyclotomic>& s) {
    if (!(a.mul == s.mul)) return false;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (!(a.pairing(i, j) == s.pairing(0, i * a.dim + j))) return false;
    return true;
}

inline SuiteResult orbifold_oracle(const RunConfig& cfg) {
    SuiteResult r{6, "orbifold algebra oracle equivalence"};
    Rng rng(cfg.seed + 6);
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3"}) {
        const auto g = groups::by_name(name);
        std::vector<std::pair<std::string, CrossedFrobeniusAlgebra<Cyclotomic>>> algebras;
        algebras.emplace_back("trivial", to_cyclotomic(trivial_crossed_algebra<Rational>(g)));
        algebras.emplace_back("group algebra", group_algebra_model(g));
        const auto cocycles = sample_cocycles(g, rng);
        for (std::size_t i = 1; i < cocycles.size(); ++i)
            algebras.emplace_back("twisted #" + std::to_string(i), twisted_group_algebra(cocycles[i]));
        for (const auto& [label, alg] : algebras) {
            const auto closed = orbifold_algebra(alg);
            if (!(closed == orbifold_algebra_oracle(alg))) r.fail(std::string(name) + " " + label + ": integral route");
            if (!same_algebra(closed, orbifold_via_spans(alg))) r.fail(std::string(name) + " " + label + ": span route");
            if (!check_frobenius(closed).ok()) r.fail(std::string(name) + " " + label + ": result not Frobenius");
            if (closed.dim != invariant_sector_dimension(alg)) r.fail(std::string(name) + " " + label + ": dimension");
            ++r.instances;
        }
    }
    return r;
}

inline SuiteResult pipeline(const RunConfig& cfg) {
    SuiteResult r{7, "orbifold of the trivial theory reproduces DW"};
    for (const auto& g : groups::builtins()) {
        const auto orb = orbifold_algebra(trivial_crossed_algebra<Rational>(g));
        for (int genus = 0; genus <= 2; ++genus) {
            const auto lhs = closed_surface_value(orb, genus);
            const auto rhs = dw_invariant(g, genus, cfg);
            if (lhs != rhs)
                r.fail(g.name() + " genus " + std::to_string(genus) + ": " + lhs.to_string() + " != " + rhs.to_string());
            ++r.instances;
        }
    }
    return r;
}

/// The two extensions 0 -> Z2 -> Z4 -> Z2 -> 0 and 0 -> Z3 -> S3 -> Z2 -> 0.
inline std::vector<ShortExactSequence> example_extensions() {
    std::vector<ShortExactSequence> out;
    const auto z2 = groups::cyclic(2), z3 = groups::cyclic(3), z4 = groups::cyclic(4), s3 = groups::symmetric(3);
    out.emplace_back(GroupHom(z2, z4, {0, 2}), GroupHom(z4, z2, {0, 1, 0, 1}));
    std::vector<Elem> sign(6), rot;
    for (Elem x = 0; x < 6; ++x) {
        // even permutations are the elements of order dividing 3
        sign[x] = s3.element_order(x) == 2 ? 1 : 0;
        if (s3.element_order(x) != 2) rot.push_back(x);
    }
    const Elem r1 = rot[1];
    out.emplace_back(GroupHom(z3, s3, {s3.identity(), r1, s3.mul(r1, r1)}), GroupHom(s3, z2, sign));
    return out;
}

inline SuiteResult equivariant_example(const RunConfig& cfg) {
    SuiteResult r{8, "equivariant DW orbifold"};
    ModelCache cache(cfg);
    for (const auto& ses : example_extensions()) {
        for (int genus = 1; genus <= 2; ++genus) {
            const auto z = equivariant_dw(ses.lambda, genus, cache);
            const auto lhs = orbifold_invariant(z);
            const auto rhs = dw_invariant(ses.lambda.domain(), genus, cfg);
            if (lhs != rhs)
                r.fail(ses.lambda.domain().name() + " genus " + std::to_string(genus) + ": " + lhs.to_string() +
                       " != " + rhs.to_string());
            ++r.instances;
        }
    }
    return r;
}

/// A conjugation-invariant test theory: product over tuple entries of the element orders.
inline TheoryInvariant element_order_theory(const FiniteGroup& g) {
    return {g, [g](int, std::span<const Elem> t) {
                Rational v(1);
                for (Elem x : t) v *= Rational(static_cast<Rational::Int>(g.element_order(x)));
                return v;
            }};
}

/// Every chain G -> H -> J of built-in groups with |J| <= max_j and every
/// genus up to max_genus, for the trivial theory and the element-order theory.
/// Tabulations and first-stage pushforwards are shared between chains with
/// the same lambda.
inline SuiteResult composition_law(const RunConfig& cfg, int max_genus = 2, std::size_t max_j = 6) {
    SuiteResult r{9, "composition law"};
    ModelCache cache(cfg);
    const auto gs = groups::builtins();
    std::vector<std::vector<std::vector<GroupHom>>> homs(gs.size(), std::vector<std::vector<GroupHom>>(gs.size()));
    for (std::size_t a = 0; a < gs.size(); ++a)
        for (std::size_t b = 0; b < gs.size(); ++b) homs[a][b] = enumerate_homs(gs[a], gs[b]);
    std::size_t chains = 0;
    for (int genus = 0; genus <= max_genus; ++genus) {
        const auto surface = SurfaceSpec::closed(genus);
        for (std::size_t a = 0; a < gs.size(); ++a) {
            const auto mg = cache.get(gs[a], surface);
            const std::vector<InvariantTable> zs = {tabulate(TheoryInvariant::trivial(gs[a]), mg),
                                                    tabulate(element_order_theory(gs[a]), mg)};
            for (std::size_t b = 0; b < gs.size(); ++b) {
                const auto mh = cache.get(gs[b], surface);
                for (const auto& lambda : homs[a][b]) {
                    std::vector<InvariantTable> pushed;
                    for (const auto& z : zs) pushed.push_back(pushforward_table(z, lambda, mh));
                    for (std::size_t c = 0; c < gs.size(); ++c) {
                        if (gs[c].size() > max_j) continue;
                        const auto mj = cache.get(gs[c], surface);
                        for (const auto& mu : homs[b][c]) {
                            if (genus == 0) ++chains;
                            for (std::size_t t = 0; t < zs.size(); ++t) {
                                const auto rep = composition_law_check(zs[t], pushed[t], lambda, mu, mj);
                                if (!rep.ok)
                                    r.fail(gs[a].name() + " -> " + gs[b].name() + " -> " + gs[c].name() + " genus " +
                                           std::to_string(genus) + " at object " + std::to_string(*rep.witness));
                                ++r.instances;
                            }
                        }
                    }
                }
            }
        }
    }
    if (r.pass) r.detail = std::to_string(chains) + " chains";
    return r;
}

/// Scales one structure constant by 2 so the mutation can never land on another valid algebra.
template <ExactField S>
CrossedFrobeniusAlgebra<S> mutate_pairing(CrossedFrobeniusAlgebra<S> a, Rng& rng) {
    const auto& g = a.group();
    Elem x = g.identity();
    while (x == g.identity()) x = static_cast<Elem>(corpus::below(rng, g.size()));
    auto& p = a.mutable_pairings()[x];
    p = S(2) * p;
    return a;
}

template <ExactField S>
CrossedFrobeniusAlgebra<S> mutate_action(CrossedFrobeniusAlgebra<S> a, Rng& rng) {
    const auto& g = a.group();
    const std::size_t n = g.size();
    const std::size_t idx = corpus::below(rng, n * n);
    auto& m = a.mutable_actions()[idx];
    m = S(2) * m;
    return a;
}

inline SuiteResult checker(const RunConfig& cfg) {
    SuiteResult r{10, "crossed-axiom checker"};
    Rng rng(cfg.seed + 10);
    for (const auto& g : groups::builtins()) {
        const auto triv = trivial_crossed_algebra<Rational>(g);
        const auto ga = group_algebra_model(g);
        if (!check_crossed_axioms(triv, AxiomLevel::kF1F2).ok()) r.fail(g.name() + ": trivial model rejected");
        if (!check_crossed_axioms(ga, AxiomLevel::kF1F2).ok()) r.fail(g.name() + ": group-algebra model rejected");
        r.instances += 2;
        if (g.size() == 1 || g.size() > 8) continue;
        for (int round = 0; round < 3; ++round) {
            for (const auto& bad : {mutate_pairing(triv, rng), mutate_action(triv, rng)}) {
                const auto rep = check_crossed_axioms(bad, AxiomLevel::kF1F2);
                if (rep.ok() || rep.violations.front().witness.empty())
                    r.fail(g.name() + ": mutation not detected with a witness");
                ++r.instances;
            }
            for (const auto& bad : {mutate_pairing(ga, rng), mutate_action(ga, rng)}) {
                const auto rep = check_crossed_axioms(bad, AxiomLevel::kF1F2);
                if (rep.ok() || rep.violations.front().witness.empty())
                    r.fail(g.name() + ": mutation of the group algebra not detected with a witness");
                ++r.instances;
            }
        }
    }
    return r;
}

inline SuiteResult twisted(const RunConfig& cfg) {
    SuiteResult r{11, "twisted torus invariants"};
    Rng rng(cfg.seed + 11);
    auto check_family = [&](const std::vector<Cocycle2>& family, const std::string& label) {
        std::optional<Cyclotomic> first;
        for (const auto& theta : family) {
            const auto v = twisted_torus_invariant(theta, cfg);
            const auto dim = orbifold_algebra(twisted_group_algebra(theta)).dim;
            if (!(v == Cyclotomic(Rational(static_cast<Rational::Int>(dim)))))
                r.fail(label + ": torus value " + v.to_string() + " differs from orbifold dimension " + std::to_string(dim));
            if (first && !(*first == v)) r.fail(label + ": value not constant on the class");
            first = v;
            ++r.instances;
        }
    };
    // every Z2 cocycle with values in the 4th roots of unity; all are coboundaries
    const auto z2 = groups::cyclic(2);
    check_family(enumerate_cocycles(z2, 4), "Z2");
    const auto k = groups::by_name("Z2xZ2");
    const auto reps = sample_cocycles(k, rng);
    std::vector<Cocycle2> trivial_class{reps[0], reps[1]};
    std::vector<Cocycle2> nontrivial_class{reps[2], reps[3]};
    for (int i = 0; i < 3; ++i) {
        std::vector<RationalRotation> beta(4);
        for (Elem x = 1; x < 4; ++x) beta[x] = RationalRotation(static_cast<std::int64_t>(corpus::below(rng, 6)), 6);
        const auto b = Cocycle2::coboundary(k, beta);
        trivial_class.push_back(b);
        nontrivial_class.push_back(reps[2] * b);
    }
    check_family(trivial_class, "Z2xZ2 trivial class");
    check_family(nontrivial_class, "Z2xZ2 nontrivial class");
    if (!(twisted_torus_invariant(reps[2], cfg) == Cyclotomic(Rational(1)))) r.fail("Z2xZ2 nondegenerate class is not 1");
    return r;
}

inline SuiteResult essential_surjectivity(const RunConfig& cfg, std::size_t count = 12) {
    SuiteResult r{12, "essential surjectivity roundtrip"};
    Rng rng(cfg.seed + 12);
    for (const char* name : {"Z2", "S3"}) {
        const auto g = groups::by_name(name);
        for (std::size_t t = 0; t < count; ++t) {
            const auto a = corpus::random_frobenius<Rational>(rng, 4);
            const std::string at = std::string(name) + " algebra " + std::to_string(t) + ": ";
            for (bool induced : {false, true}) {
                const auto rt = essential_surjectivity_demo(a, g, induced);
                if (!rt.equal) r.fail(at + (induced ? "induced" : "neutral") + " roundtrip differs");
                if (induced && !check_crossed_axioms(rt.crossed, AxiomLevel::kF1F2).ok())
                    r.fail(at + "induced algebra violates an axiom");
                for (int genus = 0; genus <= 2; ++genus)
                    if (closed_surface_value(rt.orbifold, genus) != closed_surface_value(a, genus))
                        r.fail(at + "closed surface value changed");
            }
            ++r.instances;
        }
    }
    return r;
}

using SuiteFn = std::function<SuiteResult(const RunConfig&)>;

inline std::vector<SuiteFn> all_suites() {
    return {[](const RunConfig& c) { return cardinality_axioms(c); },
            [](const RunConfig& c) { return integration_laws(c); },
            [](const RunConfig& c) { return pushforward_laws(c); },
            [](const RunConfig& c) { return par_functoriality(c); },
            dw_values,
            orbifold_oracle,
            pipeline,
            equivariant_example,
            [](const RunConfig& c) { return composition_law(c); },
            checker,
            twisted,
            [](const RunConfig& c) { return essential_surjectivity(c); }};
}

/// Runs one suite, turning exceptions into failures and recording wall time.
inline SuiteResult run_timed(const SuiteFn& fn, const RunConfig& cfg, int id) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
        r = fn(cfg);
    } catch (const std::exception& e) {
        r.id = id;
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace suites

/// Runs every suite in order.
inline std::vector<SuiteResult> run_property_suite(const RunConfig& cfg) {
    std::vector<SuiteResult> out;
    const auto fns = suites::all_suites();
    for (std::size_t i = 0; i < fns.size(); ++i) out.push_back(suites::run_timed(fns[i], cfg, static_cast<int>(i + 1)));
    return out;
}

}  // namespace eqtft
