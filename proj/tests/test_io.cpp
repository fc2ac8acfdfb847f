#include <gtest/gtest.h>

#include "eqtft/io.hpp"
#include "eqtft/orbifold.hpp"
#include "eqtft/twisted.hpp"

using namespace eqtft;
using io::Json;

namespace {

std::string sample(const std::string& name) { return std::string(EQTFT_SAMPLES_DIR) + "/" + name; }

Json load(const std::string& name) { return io::read_json_file(sample(name)); }

}  // namespace

TEST(Samples, GroupsAndHoms) {
    const auto klein = io::parse_group(load("klein_table.json"));
    EXPECT_EQ(klein.size(), 4u);
    EXPECT_TRUE(find_isomorphism(klein, groups::by_name("Z2xZ2")).has_value());
    EXPECT_EQ(io::load_group("S3").size(), 6u);
    EXPECT_EQ(io::load_group(sample("klein_table.json")).size(), 4u);
    const auto lambda = io::parse_hom(load("z4_to_z2.json"));
    EXPECT_TRUE(lambda.is_surjective());
    const auto ses = io::parse_ses(load("z2_z4_z2.json"));
    EXPECT_EQ(ses.iota.domain().size(), 2u);
}

TEST(Samples, CocyclesAndTheories) {
    const auto cob = io::parse_cocycle(load("z2_cocycle_coboundary.json"));
    EXPECT_EQ(twisted_torus_invariant(cob), Cyclotomic(2));
    const auto klein = io::parse_cocycle(load("klein_cocycle.json"));
    EXPECT_EQ(twisted_torus_invariant(klein), Cyclotomic(1));
    const auto theory = io::parse_theory(load("z3_class_theory.json"));
    ModelCache cache;
    EXPECT_EQ(orbifold_invariant(tabulate(theory, cache.get(theory.group, SurfaceSpec::closed(1)))), Rational(25, 3));
    const auto chain = io::parse_chain(load("chain_z4_z2_1.json"));
    EXPECT_TRUE(composition_law_check(chain.lambda, chain.mu, chain.theory, 1, cache).ok);
}

TEST(Samples, CrossedAlgebras) {
    const auto ga = io::parse_crossed(load("z2_group_algebra.json"));
    EXPECT_TRUE(check_crossed_axioms(ga, AxiomLevel::kF1F2).ok());
    EXPECT_THROW(io::parse_crossed(load("z2_broken_action.json")), InvalidInput);
    const auto broken = io::parse_crossed(load("z2_broken_action.json"), false);
    EXPECT_TRUE(check_crossed_axioms(broken, AxiomLevel::kBasic).violates("crossed commutativity"));
    const auto twisted = io::parse_crossed(load("klein_twisted_preset.json"));
    EXPECT_EQ(orbifold_algebra(twisted).dim, 1u);
    const auto report = io::report_json(check_crossed_axioms(broken, AxiomLevel::kBasic));
    EXPECT_FALSE(report["ok"].get<bool>());
    EXPECT_FALSE(report["violations"].empty());
}

TEST(Samples, GroupoidsAndSpans) {
    EXPECT_EQ(cardinality(*io::parse_groupoid(load("triangle_action.json"))), Rational(4, 3));
    EXPECT_EQ(cardinality(*io::parse_groupoid(load("explicit_groupoid.json"))), Rational(1));
    const auto span = io::parse_span(load("pushforward_span.json"));
    EXPECT_EQ(par_morphism(span), Matrix<Rational>::from_rows({{Rational(1, 2)}}, 1));
}

TEST(Parsing, Scalars) {
    EXPECT_EQ(io::parse_rational(Json(3)), Rational(3));
    EXPECT_EQ(io::parse_rational(Json("-2/6")), Rational(-1, 3));
    EXPECT_THROW(io::parse_rational(Json(0.5)), InvalidInput);
    EXPECT_THROW(io::parse_rational(Json("1/0")), InvalidInput);
    EXPECT_EQ(io::parse_cyclotomic(Json::parse(R"({"order": 4, "coeffs": [0, 1]})")) * Cyclotomic::root_of_unity(4, 1),
              Cyclotomic(-1));
    EXPECT_THROW(io::parse_cyclotomic(Json::parse(R"({"order": 0, "coeffs": [1]})")), InvalidInput);
}

TEST(Parsing, AlternateFieldNames) {
    const auto z3 = io::parse_group(Json::parse(R"({"size": 3, "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "name": "C3"})"));
    EXPECT_TRUE(find_isomorphism(z3, groups::by_name("Z3")).has_value());
    EXPECT_THROW(io::parse_group(Json::parse(R"({"size": 2, "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})")), InvalidInput);
    const auto klein = io::parse_cocycle(Json::parse(
        R"({"group": "Z2xZ2", "order": 2, "table": [[0, 0, 0, 0], [0, 0, 0, 0], [0, "1/2", 0, "1/2"], [0, "1/2", 0, "1/2"]]})"));
    EXPECT_EQ(twisted_torus_invariant(klein), Cyclotomic(1));
    EXPECT_THROW(io::parse_cocycle(Json::parse(R"({"group": "Z2", "order": 2, "table": [[0, 0], [0, "1/4"]]})")),
                 InvalidInput);
}

TEST(Parsing, RejectsMalformedInput) {
    EXPECT_THROW(io::read_json_file(sample("does_not_exist.json")), InvalidInput);
    EXPECT_THROW(io::parse_group(Json("Q9")), InvalidInput);
    EXPECT_THROW(io::parse_group(Json::parse(R"({"table": [[0, 1], [1, 1]]})")), InvalidInput);
    EXPECT_THROW(io::parse_group(Json::parse(R"({"table": "nope"})")), InvalidInput);
    EXPECT_THROW(io::parse_hom(Json::parse(R"({"domain": "Z2", "codomain": "Z3", "images": [0, 1]})")), InvalidInput);
    EXPECT_THROW(io::parse_hom(Json::parse(R"({"domain": "Z2", "images": [0, 1]})")), InvalidInput);
    EXPECT_THROW(io::parse_cocycle(Json::parse(R"({"group": "Z2", "values": [["0", "0"]]})")), InvalidInput);
    EXPECT_THROW(io::parse_theory(Json::parse(R"({"group": "Z2", "kind": "weird"})")), InvalidInput);
    EXPECT_THROW(io::parse_theory(Json::parse(R"({"group": "Z2", "kind": "class_function", "values": [1]})")),
                 InvalidInput);
    // S3 values that differ within a conjugacy class
    EXPECT_THROW(io::parse_theory(Json::parse(R"({"group": "S3", "kind": "class_function", "values": [1, 2, 3, 4, 5, 6]})")),
                 InvalidInput);
    EXPECT_THROW(io::parse_crossed(Json::parse(R"({"group": "Z2", "preset": "mystery"})")), InvalidInput);
    EXPECT_THROW(io::parse_crossed(Json::parse(R"({"group": "Z2", "dims": [1]})")), InvalidInput);
    EXPECT_THROW(io::parse_groupoid(Json::parse(R"({"blocks": []})")), InvalidInput);
    EXPECT_THROW(io::parse_groupoid(Json::parse(R"({"action": {"group": "Z2", "points": 2, "table": [[0, 1]]}})")),
                 InvalidInput);
    EXPECT_THROW(io::parse_groupoid(Json::parse(R"({"objects": 1, "source": [0], "target": [1], "compose": [[0]]})")),
                 InvalidInput);
    EXPECT_THROW(io::parse_chain(Json::parse(R"({"lambda": {"domain": "Z4", "codomain": "Z2", "images": [0, 1, 0, 1]},
                                                 "mu": {"domain": "Z3", "codomain": "1", "images": [0, 0, 0]}})")),
                 InvalidInput);
}
