#include <gtest/gtest.h>

#include <random>

#include "eqtft/cyclotomic.hpp"
#include "eqtft/matrix.hpp"
#include "eqtft/rational.hpp"

using namespace eqtft;

TEST(Rational, NormalizesSignAndCommonFactors) {
    const Rational a(6, -4);
    EXPECT_EQ(a.num(), -3);
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(a.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, -7), Rational(0));
    EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, FieldOperations) {
    const Rational a(1, 3), b(-5, 6);
    EXPECT_EQ(a + b, Rational(-1, 2));
    EXPECT_EQ(a - b, Rational(7, 6));
    EXPECT_EQ(a * b, Rational(-5, 18));
    EXPECT_EQ(a / b, Rational(-2, 5));
    EXPECT_EQ(b.inverse(), Rational(-6, 5));
    EXPECT_THROW(Rational(0).inverse(), Error);
    EXPECT_LT(b, a);
}

TEST(Rational, FloorAndFractionalPart) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).mod_one(), Rational(1, 2));
    EXPECT_EQ(Rational(4).mod_one(), Rational(0));
}

TEST(Rational, ParseRoundTrip) {
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    EXPECT_EQ(Rational::parse(Rational(22, 7).to_string()), Rational(22, 7));
    EXPECT_THROW(Rational::parse("1/0"), InvalidInput);
    EXPECT_THROW(Rational::parse("x"), InvalidInput);
    EXPECT_THROW(Rational::parse("3/"), InvalidInput);
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::int64_t{1} << 62);
    EXPECT_THROW(big * big, ArithmeticOverflow);
    // intermediates wider than 64 bits are fine when the reduced result fits
    EXPECT_EQ(Rational(std::int64_t{1} << 40, 3) * Rational(3, std::int64_t{1} << 40), Rational(1));
}

TEST(Rational, RandomFieldIdentities) {
    std::mt19937_64 rng(11);
    auto pick = [&] {
        const auto n = static_cast<std::int64_t>(rng() % 41) - 20;
        const auto d = static_cast<std::int64_t>(rng() % 19) + 1;
        return Rational(n, d);
    };
    for (int i = 0; i < 500; ++i) {
        const auto a = pick(), b = pick(), c = pick();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
    }
}

TEST(Cyclotomic, RootsOfUnity) {
    const auto i = Cyclotomic::root_of_unity(4, 1);
    EXPECT_EQ(i * i, Cyclotomic(-1));
    const auto w = Cyclotomic::root_of_unity(3, 1);
    EXPECT_EQ(w + w * w, Cyclotomic(-1));
    EXPECT_EQ(w.pow(3), Cyclotomic(1));
    EXPECT_EQ(Cyclotomic::root_of_unity(6, 3), Cyclotomic(-1));
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
    for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
        Cyclotomic s(0);
        for (std::uint32_t k = 0; k < n; ++k) s = s + Cyclotomic::root_of_unity(n, k);
        EXPECT_TRUE(s.is_zero()) << "order " << n;
    }
}

TEST(Cyclotomic, MixedOrdersAndRationalDetection) {
    const auto i = Cyclotomic::root_of_unity(4, 1);
    const auto w = Cyclotomic::root_of_unity(3, 1);
    const auto z12 = Cyclotomic::root_of_unity(12, 7);  // e^{2 pi i 7/12} = i * w
    EXPECT_EQ(i * w, z12);
    EXPECT_EQ((w + w.pow(2)).as_rational(), Rational(-1));
    EXPECT_FALSE(i.as_rational().has_value());
    EXPECT_EQ(w.embed(6), w);
    EXPECT_THROW(w.embed(4), Error);
}

TEST(Cyclotomic, InverseAndApproximation) {
    const auto x = Cyclotomic(2) + Cyclotomic::root_of_unity(5, 2);
    EXPECT_EQ(x * x.inverse(), Cyclotomic(1));
    const auto z = Cyclotomic::root_of_unity(8, 1).approx();
    EXPECT_NEAR(z.real(), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(z.imag(), std::sqrt(0.5), 1e-12);
    EXPECT_THROW(Cyclotomic(0).inverse(), Error);
}

TEST(Cyclotomic, RotationsCompose) {
    const RationalRotation a(Rational(1, 4)), b(Rational(3, 4));
    EXPECT_TRUE((a * b).is_identity());
    EXPECT_EQ(a.pow(2), RationalRotation(Rational(1, 2)));
    EXPECT_EQ(Cyclotomic::from_rotation(a * a), Cyclotomic(-1));
    EXPECT_EQ(RationalRotation(Rational(5, 4)), a);
}

TEST(Matrix, InverseRankNullspace) {
    const auto m = Matrix<Rational>::from_rows({{1, 2}, {3, 4}}, 2);
    const auto inv = inverse(m);
    EXPECT_EQ(m * inv, Matrix<Rational>::identity(2));
    EXPECT_EQ(inv(0, 0), Rational(-2));
    EXPECT_EQ(inv(1, 0), Rational(3, 2));

    const auto s = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
    EXPECT_EQ(rank(s), 1u);
    const auto ns = nullspace(s);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_TRUE(is_zero_vector(s * v));
    EXPECT_FALSE(try_inverse(Matrix<Rational>::from_rows({{1, 2}, {2, 4}}, 2)).has_value());
}

TEST(Matrix, SolveAndKronecker) {
    const auto m = Matrix<Rational>::from_rows({{2, 0}, {1, 1}}, 2);
    const auto x = solve(m, Vec<Rational>{4, 5});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (Vec<Rational>{2, 3}));
    EXPECT_FALSE(solve(Matrix<Rational>::from_rows({{1, 1}, {1, 1}}, 2), Vec<Rational>{1, 2}).has_value());

    const auto a = Matrix<Rational>::from_rows({{1, 2}}, 2);
    const auto b = Matrix<Rational>::from_rows({{0}, {1}}, 1);
    const auto k = kron(a, b);
    EXPECT_EQ(k.rows(), 2u);
    EXPECT_EQ(k.cols(), 2u);
    EXPECT_EQ(k, Matrix<Rational>::from_rows({{0, 0}, {1, 2}}, 2));
}

TEST(Matrix, CyclotomicEntries) {
    const auto i = Cyclotomic::root_of_unity(4, 1);
    const auto rot = Matrix<Cyclotomic>::from_rows({{i, Cyclotomic(0)}, {Cyclotomic(0), i}}, 2);
    EXPECT_EQ(rot * rot * rot * rot, Matrix<Cyclotomic>::identity(2));
    EXPECT_EQ(inverse(rot), Matrix<Cyclotomic>(Cyclotomic(-1) * rot));
}

TEST(Matrix, RandomInverseProperty) {
    std::mt19937_64 rng(5);
    int invertible = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 4;
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<std::int64_t>(rng() % 7) - 3);
        const auto inv = try_inverse(m);
        EXPECT_EQ(inv.has_value(), rank(m) == n);
        if (inv) {
            ++invertible;
            EXPECT_EQ(m * *inv, Matrix<Rational>::identity(n));
            EXPECT_EQ(*inv * m, Matrix<Rational>::identity(n));
        }
        EXPECT_EQ(rank(m) + nullspace(m).size(), n);
    }
    EXPECT_GT(invertible, 50);
}
