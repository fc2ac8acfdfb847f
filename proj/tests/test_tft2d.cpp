#include <gtest/gtest.h>

#include "eqtft/corpus.hpp"
#include "eqtft/orbifold.hpp"
#include "eqtft/twisted.hpp"
#include "oracles.hpp"

using namespace eqtft;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Rational inverse_order(const FiniteGroup& g) { return q(1, static_cast<std::int64_t>(g.size())); }

/// theta(a, b) = (-1)^{a1 b2} on Z2 x Z2 with x = (x/2, x%2).
Cocycle2 klein_nondegenerate() {
    const auto g = groups::by_name("Z2xZ2");
    std::vector<RationalRotation> v(16);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) v[a * 4 + b] = RationalRotation((a / 2) * (b % 2), 2);
    return Cocycle2(g, std::move(v));
}

std::vector<RationalRotation> random_beta(const FiniteGroup& g, corpus::Rng& rng, std::int64_t turns) {
    std::vector<RationalRotation> beta(g.size());
    for (Elem x = 0; x < g.size(); ++x)
        if (x != g.identity()) beta[x] = RationalRotation(static_cast<std::int64_t>(corpus::below(rng, turns)), turns);
    return beta;
}

}  // namespace

TEST(Frobenius, SemisimpleClosedSurfaceValues) {
    const auto a = semisimple<Rational>({q(2), q(3)});
    EXPECT_TRUE(check_frobenius(a).ok());
    EXPECT_EQ(closed_surface_value(a, 0), q(5));
    EXPECT_EQ(closed_surface_value(a, 1), q(2));
    EXPECT_EQ(closed_surface_value(a, 2), q(5, 6));
    EXPECT_EQ(closed_surface_value(ground_field(q(1, 4)), 3), q(16));
    EXPECT_THROW(closed_surface_value(a, -1), InvalidInput);
}

TEST(Frobenius, TruncatedPolynomial) {
    const auto a = truncated_polynomial<Rational>({q(0), q(0), q(1)});  // K[x]/x^3, epsilon(x^2) = 1
    EXPECT_TRUE(check_frobenius(a).ok());
    EXPECT_EQ(closed_surface_value(a, 1), q(3));  // the torus value is the dimension
    EXPECT_EQ(closed_surface_value(a, 0), q(0));
    const auto degenerate = truncated_polynomial<Rational>({q(1), q(1), q(0)});
    EXPECT_TRUE(check_frobenius(degenerate).violates("pairing nondegenerate"));
}

TEST(Frobenius, ChangeOfBasisPreservesInvariants) {
    corpus::Rng rng(401);
    for (int t = 0; t < 30; ++t) {
        const auto a = corpus::random_frobenius<Rational>(rng, 4);
        ASSERT_TRUE(check_frobenius(a).ok());
        const auto b = change_basis(a, corpus::random_invertible<Rational>(rng, a.dim));
        EXPECT_TRUE(check_frobenius(b).ok());
        for (int genus = 0; genus <= 3; ++genus) EXPECT_EQ(closed_surface_value(a, genus), closed_surface_value(b, genus));
        EXPECT_EQ(closed_surface_value(a, 1), q(static_cast<std::int64_t>(a.dim)));
    }
}

TEST(Frobenius, GroupAlgebraCenterGivesDW) {
    for (const auto& g : groups::builtins()) {
        const auto z = group_algebra_center<Rational>(g, inverse_order(g));
        ASSERT_TRUE(check_frobenius(z).ok()) << g.name();
        for (int genus = 0; genus <= 2; ++genus) {
            if (g.size() > 8 && genus == 2) continue;
            EXPECT_EQ(closed_surface_value(z, genus), oracle::mapping_cardinality(g, genus)) << g.name() << " " << genus;
        }
    }
}

TEST(Crossed, ModelsPassAllAxioms) {
    for (const auto& g : groups::builtins()) {
        const auto triv = check_crossed_axioms(trivial_crossed_algebra<Rational>(g), AxiomLevel::kF1F2);
        EXPECT_TRUE(triv.ok()) << g.name();
        const auto ga = check_crossed_axioms(group_algebra_model(g), AxiomLevel::kF1F2);
        EXPECT_TRUE(ga.ok()) << g.name();
    }
    EXPECT_NO_THROW(twisted_group_algebra(klein_nondegenerate()));
}

TEST(Crossed, MutationsAreCaughtWithWitness) {
    const auto g = groups::by_name("S3");
    auto broken_pairing = group_algebra_model(g);
    broken_pairing.mutable_pairings()[1] = Cyclotomic(2) * broken_pairing.pairing(1);
    const auto r1 = check_crossed_axioms(broken_pairing, AxiomLevel::kF1F2);
    ASSERT_FALSE(r1.ok());
    EXPECT_FALSE(r1.violations.front().witness.empty());

    auto broken_action = group_algebra_model(g);
    broken_action.mutable_actions()[1 * g.size() + 2] = Cyclotomic(-1) * broken_action.act(1, 2);
    const auto r2 = check_crossed_axioms(broken_action, AxiomLevel::kBasic);
    ASSERT_FALSE(r2.ok());
    EXPECT_FALSE(r2.violations.front().witness.empty());
}

TEST(Crossed, ShapesAreValidated) {
    const auto g = groups::by_name("Z2");
    const Matrix<Rational> one = Matrix<Rational>::identity(1);
    EXPECT_THROW(CrossedFrobeniusAlgebra<Rational>(g, {1}, {one}, {Rational(1)}, {one}, {one}), InvalidInput);
    EXPECT_THROW(CrossedFrobeniusAlgebra<Rational>(g, {1, 1}, std::vector<Matrix<Rational>>(4, one), {Rational(1), Rational(0)},
                                                   std::vector<Matrix<Rational>>(2, one), std::vector<Matrix<Rational>>(4, one)),
                 InvalidInput);
}

TEST(Orbifold, ThreeRoutesAgree) {
    corpus::Rng rng(402);
    for (const auto name : {"Z2", "Z3", "Z2xZ2", "S3", "D4"}) {
        const auto g = groups::by_name(name);
        std::vector<CrossedFrobeniusAlgebra<Cyclotomic>> algs = {to_cyclotomic(trivial_crossed_algebra<Rational>(g)),
                                                                 group_algebra_model(g)};
        algs.push_back(twisted_group_algebra(Cocycle2::coboundary(g, random_beta(g, rng, 4))));
        for (const auto& a : algs) {
            const auto closed = orbifold_algebra(a);
            EXPECT_TRUE(check_frobenius(closed).ok()) << name;
            EXPECT_EQ(closed, orbifold_algebra_oracle(a)) << name;
            const auto spans = orbifold_via_spans(a);
            EXPECT_EQ(spans.mul, closed.mul) << name;
            ASSERT_EQ(spans.pairing.cols(), closed.dim * closed.dim);
            for (std::size_t i = 0; i < closed.dim; ++i)
                for (std::size_t j = 0; j < closed.dim; ++j)
                    EXPECT_EQ(spans.pairing(0, i * closed.dim + j), closed.pairing(i, j)) << name;
            EXPECT_EQ(closed.dim, invariant_sector_dimension(a));
        }
    }
}

TEST(Orbifold, TrivialTheoryReproducesDW) {
    for (const auto& g : groups::builtins()) {
        const auto orb = orbifold_algebra(trivial_crossed_algebra<Rational>(g));
        EXPECT_EQ(orb.dim, oracle::class_count(g)) << g.name();
        for (int genus = 0; genus <= 2; ++genus) {
            if (g.size() > 8 && genus == 2) continue;
            EXPECT_EQ(closed_surface_value(orb, genus), oracle::mapping_cardinality(g, genus)) << g.name();
        }
    }
}

TEST(Orbifold, RequiresBasicAxioms) {
    auto a = group_algebra_model(groups::by_name("Z2"));
    a.mutable_actions()[3] = Cyclotomic(-1) * a.act(1, 1);
    EXPECT_THROW(orbifold_algebra(a), InvalidInput);
}

TEST(Orbifold, RepresentationInvariants) {
    for (const auto& g : groups::builtins()) {
        if (g.size() > 8) continue;
        EXPECT_EQ(orbifold_1d(GRepresentation<Rational>::regular(g)), 1u) << g.name();
    }
    const auto z2 = groups::by_name("Z2");
    using M = Matrix<Rational>;
    const GRepresentation<Rational> sign(z2, {M::identity(1), M(1, 1, {Rational(-1)})});
    EXPECT_EQ(orbifold_1d(sign), 0u);
    EXPECT_THROW(GRepresentation<Rational>(z2, {M::identity(1), M(1, 1, {Rational(2)})}), InvalidInput);
}

TEST(Twisted, CocycleValidation) {
    const auto z2 = groups::by_name("Z2");
    EXPECT_THROW(Cocycle2(z2, {RationalRotation(1, 2), {}, {}, {}}), InvalidInput);  // not normalized
    const auto z3 = groups::by_name("Z3");
    std::vector<RationalRotation> v(9);
    v[1 * 3 + 1] = RationalRotation(1, 3);
    EXPECT_THROW(Cocycle2(z3, v), InvalidInput);  // fails the cocycle identity
    EXPECT_EQ(enumerate_cocycles(z2, 4).size(), 4u);
}

TEST(Twisted, TorusInvariantOnZ2IsClassConstant) {
    const auto z2 = groups::by_name("Z2");
    for (const auto& theta : enumerate_cocycles(z2, 4)) {
        EXPECT_EQ(twisted_torus_invariant(theta), Cyclotomic(2));
        EXPECT_EQ(orbifold_algebra(twisted_group_algebra(theta)).dim, 2u);
    }
}

TEST(Twisted, KleinClassesAndCoboundaryInvariance) {
    const auto g = groups::by_name("Z2xZ2");
    corpus::Rng rng(403);
    const auto nondeg = klein_nondegenerate();
    EXPECT_EQ(twisted_torus_invariant(nondeg), Cyclotomic(1));
    EXPECT_EQ(orbifold_algebra(twisted_group_algebra(nondeg)).dim, 1u);
    for (int t = 0; t < 6; ++t) {
        const auto cob = Cocycle2::coboundary(g, random_beta(g, rng, 6));
        EXPECT_EQ(twisted_torus_invariant(cob), Cyclotomic(4));
        EXPECT_EQ(twisted_torus_invariant(nondeg * cob), Cyclotomic(1));
        EXPECT_EQ(orbifold_algebra(twisted_group_algebra(nondeg * cob)).dim, 1u);
    }
}

TEST(Twisted, FundamentalCycleEvaluation) {
    const auto nondeg = klein_nondegenerate();
    // theta(a, b) / theta(b, a) for a = (1, 0) = 2 and b = (0, 1) = 1
    EXPECT_EQ(evaluate(nondeg, torus_fundamental_cycle(2, 1)), Cyclotomic(-1));
    EXPECT_EQ(evaluate(nondeg, torus_fundamental_cycle(2, 2)), Cyclotomic(1));
}

TEST(NeutralSector, RoundTripAndTraceProperty) {
    corpus::Rng rng(404);
    for (const auto name : {"Z2", "S3"}) {
        const auto g = groups::by_name(name);
        for (int t = 0; t < 6; ++t) {
            const auto a = corpus::random_frobenius<Rational>(rng, 4);
            const auto plain = essential_surjectivity_demo(a, g);
            EXPECT_TRUE(plain.equal) << name;
            EXPECT_TRUE(check_crossed_axioms(plain.crossed, AxiomLevel::kBasic).ok());
            // the neutral sector alone violates the trace property once G is nontrivial
            EXPECT_TRUE(check_crossed_axioms(plain.crossed, AxiomLevel::kF1F2).violates("F2 trace property"));
            const auto induced = essential_surjectivity_demo(a, g, true);
            EXPECT_TRUE(induced.equal) << name;
            EXPECT_TRUE(check_crossed_axioms(induced.crossed, AxiomLevel::kF1F2).ok());
        }
    }
    const auto trivial = groups::by_name("1");
    const auto a = semisimple<Rational>({q(1), q(2)});
    EXPECT_TRUE(check_crossed_axioms(neutral_sector(a, trivial), AxiomLevel::kF1F2).ok());
}
