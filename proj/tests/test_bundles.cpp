#include <gtest/gtest.h>

#include "eqtft/corpus.hpp"
#include "eqtft/pushforward.hpp"
#include "oracles.hpp"

using namespace eqtft;

namespace {

using M = Matrix<Rational>;

M scalar(std::int64_t v) { return M::from_rows({{Rational(v)}}, 1); }

/// Z2 acting on the plane by swapping coordinates, over BZ2.
VectorBundle<Rational> swap_bundle() {
    const auto bg = groupoids::one_object(groups::by_name("Z2"));
    return VectorBundle<Rational>(bg, {2}, {M::identity(2), M::from_rows({{0, 1}, {1, 0}}, 2)});
}

}  // namespace

TEST(Bundle, TransportMustBeFunctorial) {
    const auto bg = groupoids::one_object(groups::by_name("Z2"));
    EXPECT_NO_THROW(VectorBundle<Rational>(bg, {1}, {scalar(1), scalar(-1)}));
    EXPECT_THROW(VectorBundle<Rational>(bg, {1}, {scalar(1), scalar(2)}), InvalidInput);
    EXPECT_THROW(VectorBundle<Rational>(bg, {1}, {scalar(2), scalar(-1)}), InvalidInput);
    EXPECT_THROW(VectorBundle<Rational>(bg, {2}, {scalar(1), scalar(1)}), InvalidInput);
}

TEST(Bundle, ParallelSectionsAreInvariants) {
    const auto bg = groupoids::one_object(groups::by_name("Z2"));
    const VectorBundle<Rational> sign(bg, {1}, {scalar(1), scalar(-1)});
    EXPECT_EQ(SectionSpace<Rational>(sign).dim(), 0u);
    const auto swap = swap_bundle();
    const SectionSpace<Rational> space(swap);
    ASSERT_EQ(space.dim(), 1u);
    EXPECT_EQ(space[0][0][0], space[0][0][1]);
    EXPECT_FALSE(parallel_violation(swap, space[0]).has_value());
    EXPECT_TRUE(parallel_violation(swap, Section<Rational>{{Rational(1), Rational(0)}}).has_value());
}

TEST(Bundle, SectionDimensionMatchesInvariantCount) {
    corpus::Rng rng(201);
    for (int t = 0; t < 80; ++t) {
        const auto g = corpus::random_groupoid(rng);
        const auto rho = corpus::random_bundle<Rational>(rng, g, 4);
        const SectionSpace<Rational> space(rho);
        EXPECT_EQ(space.dim(), invariant_dimension_count(rho)) << "instance " << t;
        for (std::size_t i = 0; i < space.dim(); ++i) {
            EXPECT_FALSE(parallel_violation(rho, space[i]).has_value());
            Vec<Rational> e(space.dim(), Rational(0));
            e[i] = Rational(1);
            EXPECT_EQ(space.coordinates(space[i]), e);
        }
    }
}

TEST(Bundle, DualAndTensorDimensions) {
    const auto swap = swap_bundle();
    const auto hom = tensor_bundle(dual_bundle(swap), swap);
    EXPECT_EQ(hom.dim(0), 4u);
    // End of the permutation representation of Z2 on the plane commutes with the swap: dimension 2
    EXPECT_EQ(SectionSpace<Rational>(hom).dim(), 2u);
}

TEST(Pushforward, ClassifyingMapsByHand) {
    const auto s3 = groups::by_name("S3");
    const auto bg = groupoids::one_object(s3);
    const auto point = groupoids::terminal();
    // BG -> point: a constant section c goes to c/|G|
    const auto out = functors::to_terminal(bg, point);
    const auto line = VectorBundle<Rational>::trivial_line(point);
    EXPECT_EQ(pushforward(out, line, Section<Rational>{{Rational(5)}}), (Section<Rational>{{Rational(5, 6)}}));
    // point -> BZ2 along the swap bundle: v goes to the sum over the group of g.v
    const auto swap = swap_bundle();
    const auto in = functors::point_at(point, swap.base(), 0);
    const Section<Rational> v{{Rational(3), Rational(1)}};
    EXPECT_EQ(pushforward(in, swap, v), (Section<Rational>{{Rational(4), Rational(4)}}));
}

TEST(Pushforward, FormulasAgreeWithFiberFreeOracle) {
    corpus::Rng rng(202);
    std::size_t nonzero = 0;
    for (int t = 0; t < 80; ++t) {
        const auto a = corpus::random_groupoid(rng);
        const auto b = corpus::random_groupoid(rng);
        const auto phi = corpus::random_functor(rng, a, b);
        const auto rho = corpus::random_bundle<Rational>(rng, b, 4);
        const SectionSpace<Rational> sections(pullback_bundle(phi, rho));
        for (std::size_t i = 0; i < sections.dim(); ++i) {
            const auto expected = oracle::pushforward(phi, rho, sections[i]);
            EXPECT_EQ(pushforward_definition(phi, rho, sections[i]), expected) << "instance " << t;
            EXPECT_EQ(pushforward_corollary(phi, rho, sections[i], IsoChoice::kFirst), expected);
            EXPECT_EQ(pushforward_corollary(phi, rho, sections[i], IsoChoice::kLast), expected);
            EXPECT_EQ(pushforward_aut0(phi, rho, sections[i]), expected);
            for (const auto& v : expected)
                if (!is_zero_vector(v)) ++nonzero;
        }
    }
    EXPECT_GT(nonzero, 0u);
}

TEST(Pushforward, CompositionAndNaturality) {
    corpus::Rng rng(203);
    for (int t = 0; t < 40; ++t) {
        const auto a = corpus::random_groupoid(rng);
        const auto b = corpus::random_groupoid(rng);
        const auto c = corpus::random_groupoid(rng);
        const auto phi = corpus::random_functor(rng, a, b);
        const auto psi = corpus::random_functor(rng, b, c);
        const auto rho = corpus::random_bundle<Rational>(rng, c, 3);
        const auto x1 = share(corpus::random_bundle<Rational>(rng, b, 3));
        const auto x2 = share(corpus::random_bundle<Rational>(rng, b, 3));
        const BundleMorphism<Rational> lambda(x1, x2, corpus::random_intertwiner(rng, *x1, *x2));
        const auto report = pushforward_laws_check(phi, psi, rho, lambda);
        EXPECT_TRUE(report.ok) << report.failure;
    }
}

TEST(Pushforward, RejectsNonParallelInput) {
    const auto swap = swap_bundle();
    const auto id = GroupoidFunctor::identity(swap.base());
    EXPECT_THROW(pushforward(id, swap, Section<Rational>{{Rational(1), Rational(0)}}), InvalidInput);
}
