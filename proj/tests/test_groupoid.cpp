#include <gtest/gtest.h>

#include "eqtft/corpus.hpp"
#include "eqtft/integration.hpp"
#include "eqtft/pullback.hpp"
#include "oracles.hpp"

using namespace eqtft;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

InvariantFunction<Rational> component_function(const GroupoidPtr& g, corpus::Rng& rng) {
    const auto label = g->component_labels();
    std::vector<Rational> per(g->num_objects());
    for (auto& v : per) v = corpus::small<Rational>(rng, 5);
    std::vector<Vec<Rational>> values(g->num_objects());
    for (ObjId x = 0; x < values.size(); ++x) values[x] = {per[label[x]]};
    return InvariantFunction<Rational>(g, std::move(values));
}

}  // namespace

TEST(Groups, BuiltinOrdersAndClassCounts) {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"1", 1}, {"Z2", 2}, {"Z3", 3}, {"Z4", 4}, {"Z5", 5}, {"Z6", 6}, {"Z2xZ2", 4}, {"S3", 6}, {"D4", 8}, {"Q8", 8},
        {"Z2xZ2xZ2", 8}, {"S4", 24}};
    const auto all = groups::builtins();
    ASSERT_EQ(all.size(), expected.size());
    for (const auto& [name, order] : expected) {
        const auto g = groups::by_name(name);
        EXPECT_EQ(g.size(), order) << name;
        EXPECT_EQ(g.conjugacy_classes().size(), oracle::class_count(g)) << name;
    }
    EXPECT_EQ(groups::by_name("S3").conjugacy_classes().size(), 3u);
    EXPECT_EQ(groups::by_name("D4").conjugacy_classes().size(), 5u);
    EXPECT_EQ(groups::by_name("Q8").conjugacy_classes().size(), 5u);
    EXPECT_EQ(groups::by_name("S4").conjugacy_classes().size(), 5u);
    EXPECT_THROW(groups::by_name("Q9"), InvalidInput);
    EXPECT_THROW(groups::by_name("Z0"), InvalidInput);
}

TEST(Groups, TablesAreValidated) {
    EXPECT_NO_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
    EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInput);         // not a Latin square
    EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), InvalidInput);
    EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), InvalidInput);
    // a Latin square that is not associative
    EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}}),
                 InvalidInput);
}

TEST(Groups, IsomorphismDetection) {
    const auto klein = FiniteGroup::from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    EXPECT_TRUE(find_isomorphism(klein, groups::by_name("Z2xZ2")).has_value());
    EXPECT_FALSE(find_isomorphism(klein, groups::by_name("Z4")).has_value());
    EXPECT_FALSE(find_isomorphism(groups::by_name("D4"), groups::by_name("Q8")).has_value());
    EXPECT_TRUE(find_isomorphism(groups::by_name("Z6"), groups::by_name("Z2xZ3")).has_value());
}

TEST(Groups, HomEnumerationMatchesBruteForce) {
    const std::vector<std::string> names = {"1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6"};
    for (const auto& a : names)
        for (const auto& b : names) {
            const auto g = groups::by_name(a), h = groups::by_name(b);
            EXPECT_EQ(enumerate_homs(g, h).size(), oracle::hom_count(g, h)) << a << " -> " << b;
        }
    EXPECT_EQ(enumerate_homs(groups::by_name("S3"), groups::by_name("S3")).size(), 10u);
    EXPECT_EQ(enumerate_homs(groups::by_name("Z2xZ2"), groups::by_name("S3")).size(), 10u);
}

TEST(Groups, HomomorphismsAreValidated) {
    const auto z4 = groups::by_name("Z4"), z2 = groups::by_name("Z2");
    EXPECT_NO_THROW(GroupHom(z4, z2, {0, 1, 0, 1}));
    EXPECT_THROW(GroupHom(z4, z2, {0, 1, 1, 0}), InvalidInput);
    EXPECT_THROW(GroupHom(z4, z2, {0, 1}), InvalidInput);
    const GroupHom iota(z2, z4, {0, 2});
    EXPECT_TRUE(iota.is_injective());
    EXPECT_FALSE(iota.is_surjective());
    EXPECT_EQ(compose(GroupHom(z4, z2, {0, 1, 0, 1}), iota).images(), (std::vector<Elem>{0, 0}));
}

TEST(Groupoid, CompositionTableIsValidated) {
    // two objects joined by an iso: 0 = id0, 1 = id1, 2 : 0 -> 1, 3 : 1 -> 0
    const std::vector<ObjId> src = {0, 1, 0, 1}, tgt = {0, 1, 1, 0};
    auto good = [](MorId g, MorId f) -> MorId {
        static const MorId t[4][4] = {{0, 0, 0, 3}, {0, 1, 2, 0}, {2, 0, 0, 1}, {0, 3, 0, 0}};
        return t[g][f];
    };
    const auto g = FiniteGroupoid::build(2, src, tgt, good);
    EXPECT_EQ(cardinality(g), q(1));
    EXPECT_EQ(g.inverse(2), 3u);
    auto bad = [&](MorId a, MorId b) -> MorId { return (a == 2 && b == 3) ? 0 : good(a, b); };
    EXPECT_THROW(FiniteGroupoid::build(2, src, tgt, bad), InvalidInput);
}

TEST(Groupoid, ActionGroupoidCardinality) {
    // Z3 rotating three points and fixing a fourth: 3/3 + 1/3
    const auto z3 = groups::by_name("Z3");
    const auto g = groupoids::action(z3, 4, [&](Elem a, std::size_t x) { return x == 3 ? x : (x + a) % 3; });
    EXPECT_EQ(cardinality(*g), q(4, 3));
    EXPECT_EQ(g->pi0().size(), 2u);
    for (const auto& grp : groups::builtins()) {
        EXPECT_EQ(cardinality(*groupoids::one_object(grp)), q(1, static_cast<std::int64_t>(grp.size())));
        EXPECT_EQ(cardinality(*groupoids::conjugation(grp)), q(1));  // |G| points over |G|
        EXPECT_EQ(cardinality(*groupoids::conjugation(grp)), oracle::cardinality_by_out(*groupoids::conjugation(grp)));
    }
}

TEST(Groupoid, CardinalityMatchesPerObjectOracle) {
    corpus::Rng rng(101);
    for (int t = 0; t < 150; ++t) {
        const auto g = corpus::random_groupoid(rng);
        EXPECT_EQ(cardinality(*g.groupoid), oracle::cardinality_by_out(*g.groupoid)) << "instance " << t;
    }
}

TEST(Groupoid, ProductAndDisjointUnion) {
    corpus::Rng rng(102);
    for (int t = 0; t < 60; ++t) {
        const auto a = corpus::random_groupoid(rng, 12);
        const auto b = corpus::random_groupoid(rng, 12);
        const auto ca = cardinality(*a.groupoid), cb = cardinality(*b.groupoid);
        EXPECT_EQ(cardinality(*groupoids::product(*a.groupoid, *b.groupoid)), ca * cb);
        EXPECT_EQ(cardinality(*groupoids::disjoint_union(*a.groupoid, *b.groupoid)), ca + cb);
    }
    EXPECT_EQ(cardinality(*groupoids::discrete(5)), q(5));
    EXPECT_EQ(cardinality(*groupoids::codiscrete(5)), q(1));
    EXPECT_EQ(cardinality(*groupoids::discrete(0)), q(0));
}

TEST(Groupoid, EquivalentGroupoidsHaveEqualCardinality) {
    corpus::Rng rng(103);
    for (int t = 0; t < 40; ++t) {
        const auto a = corpus::random_groupoid(rng);
        // same blocks with every object count thickened
        std::vector<std::pair<std::size_t, FiniteGroup>> layout;
        for (const auto& b : a.blocks) layout.emplace_back(b.k + 1, b.group);
        const auto thick = corpus::build_blocks(layout, &rng);
        EXPECT_TRUE(equivalence_witness(*a.groupoid, *thick.groupoid).has_value());
        EXPECT_EQ(cardinality(*a.groupoid), cardinality(*thick.groupoid));
    }
}

TEST(Pullback, HomotopyFibersOfClassifyingMaps) {
    const auto s3 = groups::by_name("S3");
    const auto bg = groupoids::one_object(s3);
    const auto point = groupoids::terminal();
    // point -> BG has fiber G (discrete), BG -> point has fiber BG
    const auto in = functors::point_at(point, bg, 0);
    EXPECT_EQ(cardinality(*homotopy_fiber(in, 0).groupoid), q(6));
    const auto out = functors::to_terminal(bg, point);
    EXPECT_EQ(cardinality(*homotopy_fiber(out, 0).groupoid), q(1, 6));
    EXPECT_THROW(homotopy_fiber(out, 1), InvalidInput);
}

TEST(Pullback, WeakPullbackCardinalityOfTwoPoints) {
    // point x_BG point is G discrete, point x_{X//G} point is the stabilizer set
    const auto z4 = groups::by_name("Z4");
    const auto bg = groupoids::one_object(z4);
    const auto point = groupoids::terminal();
    const auto p = functors::point_at(point, bg, 0);
    const auto pb = weak_pullback(p, p);
    EXPECT_EQ(pb.groupoid->num_objects(), 4u);
    EXPECT_EQ(cardinality(*pb.groupoid), q(4));
}

TEST(Integration, CavalieriAndCoveringOnRandomFunctors) {
    corpus::Rng rng(104);
    for (int t = 0; t < 60; ++t) {
        const auto a = corpus::random_groupoid(rng);
        const auto b = corpus::random_groupoid(rng);
        const auto phi = corpus::random_functor(rng, a, b);
        const auto f = component_function(a.groupoid, rng);
        const auto [lhs, rhs] = cavalieri_check(phi, f);
        EXPECT_EQ(lhs, rhs) << "instance " << t;

        const auto cov = corpus::random_covering(rng, b);
        ASSERT_EQ(is_covering(cov.q), cov.sheets);
        const auto g = component_function(b.groupoid, rng);
        const auto [pulled, scaled] = covering_integral_check(cov.q, g);
        EXPECT_EQ(pulled, scaled) << "instance " << t;
    }
}

TEST(Integration, NonCoveringIsRejected) {
    const auto z2 = groups::by_name("Z2");
    const auto bg = groupoids::one_object(z2);
    const auto point = groupoids::terminal();
    const auto in = functors::point_at(point, bg, 0);
    EXPECT_FALSE(is_covering(in).has_value());  // the nontrivial loop does not lift
    EXPECT_THROW(covering_integral_check(in, InvariantFunction<Rational>::constant(bg, q(1))), InvalidInput);
}

TEST(Integration, InvariantFunctionsMustBeConstantOnComponents) {
    const auto g = groupoids::codiscrete(2);
    EXPECT_THROW(InvariantFunction<Rational>(g, {{q(1)}, {q(2)}}), InvalidInput);
    EXPECT_EQ(integrate(InvariantFunction<Rational>(g, {{q(3)}, {q(3)}})), Vec<Rational>{q(3)});
}
