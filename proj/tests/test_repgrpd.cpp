#include <gtest/gtest.h>

#include "eqtft/corpus.hpp"
#include "eqtft/repgrpd.hpp"
#include "oracles.hpp"

using namespace eqtft;

namespace {

using M = Matrix<Rational>;

RepObject<Rational> line_over(const GroupoidPtr& g) {
    return RepObject<Rational>(g, share(VectorBundle<Rational>::trivial_line(g)));
}

/// Swap-symmetric Par matrix: permutation of a Par(a) ⊗ Par(b) basis.
M swap_matrix(std::size_t da, std::size_t db) {
    M p(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) p(j * da + i, i * db + j) = Rational(1);
    return p;
}

}  // namespace

TEST(Par, OrbifoldSpanByHand) {
    // BG <- BG -> point with trivial lines: the constant section 1 goes to 1/|G|
    const auto bg = groupoids::one_object(groups::by_name("S3"));
    const auto point = groupoids::terminal();
    const SpanMorphism<Rational> f(line_over(bg), line_over(point), GroupoidFunctor::identity(bg),
                                   functors::to_terminal(bg, point), {M::identity(1)});
    EXPECT_EQ(par_morphism(f), M::from_rows({{Rational(1, 6)}}, 1));
    // and the reverse span point <- BG -> BG multiplies by one
    const SpanMorphism<Rational> g(line_over(point), line_over(bg), functors::to_terminal(bg, point),
                                   GroupoidFunctor::identity(bg), {M::identity(1)});
    EXPECT_EQ(par_morphism(g), M::identity(1));
    EXPECT_EQ(par_morphism(compose_spans(g, f)), M::from_rows({{Rational(1, 6)}}, 1));
}

TEST(Par, IntertwinerMustBeParallel) {
    const auto bg = groupoids::one_object(groups::by_name("Z2"));
    const RepObject<Rational> sign(bg, share(VectorBundle<Rational>(bg, {1}, {M::identity(1), M::from_rows({{-1}}, 1)})));
    const auto id = GroupoidFunctor::identity(bg);
    EXPECT_THROW(SpanMorphism<Rational>(sign, line_over(bg), id, id, {M::identity(1)}), InvalidInput);
    EXPECT_NO_THROW(SpanMorphism<Rational>(sign, line_over(bg), id, id, {M(1, 1)}));
}

TEST(Par, AgreesWithPushforwardOracle) {
    corpus::Rng rng(301);
    std::size_t nonzero = 0;
    for (int t = 0; t < 60; ++t) {
        const auto a = corpus::random_rep_object<Rational>(rng, 10, 3);
        const auto b = corpus::random_rep_object<Rational>(rng, 10, 3);
        const auto f = corpus::random_span(rng, a, b, 10);
        const auto m = par_morphism(f);
        EXPECT_EQ(m, oracle::par(f)) << "instance " << t;
        if (!m.is_zero()) ++nonzero;
        if (is_isofibration(f.r1())) {
            EXPECT_EQ(par_morphism_strict(f), m);
        }
    }
    EXPECT_GT(nonzero, 5u);
}

TEST(Par, FunctorialityOnRandomSpans) {
    corpus::Rng rng(302);
    for (int t = 0; t < 40; ++t) {
        const auto a = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto b = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto c = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto f = corpus::random_span(rng, a, b, 8);
        const auto g = corpus::random_span(rng, b, c, 8);
        EXPECT_EQ(par_morphism(compose_spans(f, g)), par_morphism(g) * par_morphism(f)) << "instance " << t;
        EXPECT_EQ(par_morphism(SpanMorphism<Rational>::identity(a.object)), M::identity(par_object(a.object).dim()));
        EXPECT_THROW(compose_spans(g, f), InvalidInput);
    }
}

TEST(Par, MonoidalStructure) {
    EXPECT_EQ(par_object(monoidal_unit<Rational>()).dim(), 1u);
    corpus::Rng rng(303);
    for (int t = 0; t < 25; ++t) {
        const auto a = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto b = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto c = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto d = corpus::random_rep_object<Rational>(rng, 8, 2);
        const auto f = corpus::random_span(rng, a, b, 8);
        const auto g = corpus::random_span(rng, c, d, 8);
        const auto lhs = par_morphism(tensor_spans(f, g)) * tensor_identification(a.object, c.object);
        const auto rhs = tensor_identification(b.object, d.object) * kron(par_morphism(f), par_morphism(g));
        EXPECT_EQ(lhs, rhs) << "instance " << t;

        // Par(a ⊗ b) has dimension dim Par(a) * dim Par(b) and the swap squares to the identity
        const auto pa = par_object(a.object).dim(), pc = par_object(c.object).dim();
        EXPECT_EQ(par_object(tensor_objects(a.object, c.object)).dim(), pa * pc);
        const auto sw = par_morphism(swap_span(a.object, c.object));
        const auto back = par_morphism(swap_span(c.object, a.object));
        EXPECT_EQ(back * sw, M::identity(pa * pc));
        EXPECT_EQ(sw * tensor_identification(a.object, c.object),
                  tensor_identification(c.object, a.object) * swap_matrix(pa, pc));
    }
}
