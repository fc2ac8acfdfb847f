#include <gtest/gtest.h>

#include "eqtft/integration.hpp"
#include "eqtft/mapping.hpp"
#include "oracles.hpp"

using namespace eqtft;

namespace {

/// Rebuilds a functor with full validation of the functor laws.
void expect_functor(const GroupoidFunctor& f) {
    EXPECT_NO_THROW(GroupoidFunctor(f.domain(), f.codomain(), f.object_table(), f.morphism_table()));
}

}  // namespace

TEST(Surface, ParseAndPrint) {
    for (const std::string s : {"circle", "pants", "cylinder", "disk", "genus:0", "genus:3"})
        EXPECT_EQ(SurfaceSpec::parse(s).to_string(), s);
    EXPECT_EQ(SurfaceSpec::parse("genus:2").tuple_length(), 4u);
    EXPECT_THROW(SurfaceSpec::parse("genus:-1"), InvalidInput);
    EXPECT_THROW(SurfaceSpec::parse("genus:x"), InvalidInput);
    EXPECT_THROW(SurfaceSpec::parse("genus:2a"), InvalidInput);
    EXPECT_THROW(SurfaceSpec::parse("torus"), InvalidInput);
}

TEST(MappingModel, ClosedSurfacesMatchTupleEnumeration) {
    for (const auto& g : groups::builtins()) {
        for (int genus = 0; genus <= 2; ++genus) {
            if (g.size() > 8 && genus == 2) continue;  // covered in the acceptance run
            const auto m = mapping_groupoid(SurfaceSpec::closed(genus), g);
            EXPECT_EQ(m->size(), oracle::surface_hom_count(g, genus)) << g.name() << " genus " << genus;
            EXPECT_EQ(m->cardinality(), oracle::mapping_cardinality(g, genus)) << g.name() << " genus " << genus;
            std::size_t total = 0;
            for (std::size_t o = 0; o < m->num_orbits(); ++o) total += m->orbit_size(o);
            EXPECT_EQ(total, m->size());
        }
    }
}

TEST(MappingModel, KnownValues) {
    const auto z2 = groups::by_name("Z2"), s3 = groups::by_name("S3");
    EXPECT_EQ(mapping_groupoid(SurfaceSpec::closed(1), z2)->cardinality(), Rational(2));
    EXPECT_EQ(mapping_groupoid(SurfaceSpec::closed(2), z2)->cardinality(), Rational(8));
    EXPECT_EQ(mapping_groupoid(SurfaceSpec::closed(1), s3)->cardinality(), Rational(3));
    // sum over irreducibles of (|G|/d)^(2g-2): 36 + 36 + 9
    EXPECT_EQ(mapping_groupoid(SurfaceSpec::closed(2), s3)->cardinality(), Rational(81));
    EXPECT_EQ(mapping_groupoid(SurfaceSpec::closed(0), s3)->cardinality(), Rational(1, 6));
}

TEST(MappingModel, MaterializedGroupoidAgrees) {
    for (const auto name : {"Z3", "S3", "Q8"}) {
        const auto g = groups::by_name(name);
        const auto m = mapping_groupoid(SurfaceSpec::closed(1), g);
        EXPECT_EQ(cardinality(*m->groupoid()), m->cardinality()) << name;
        EXPECT_EQ(oracle::cardinality_by_out(*m->groupoid()), m->cardinality()) << name;
        EXPECT_EQ(m->groupoid()->pi0().size(), m->num_orbits()) << name;
    }
}

TEST(MappingModel, OpenSurfaces) {
    const auto s3 = groups::by_name("S3");
    const auto circle = mapping_groupoid(SurfaceSpec::circle(), s3);
    EXPECT_EQ(circle->size(), 6u);
    EXPECT_EQ(circle->num_orbits(), 3u);
    EXPECT_EQ(circle->cardinality(), Rational(1));
    const auto pants = mapping_groupoid(SurfaceSpec::pants(), s3);
    EXPECT_EQ(pants->size(), 36u);
    EXPECT_EQ(pants->cardinality(), Rational(6));
    const auto disk = mapping_groupoid(SurfaceSpec::disk(), s3);
    EXPECT_EQ(disk->size(), 1u);
    EXPECT_EQ(disk->cardinality(), Rational(1, 6));
}

TEST(MappingModel, BoundaryLegs) {
    const auto s3 = groups::by_name("S3");
    const auto pants = mapping_groupoid(SurfaceSpec::pants(), s3);
    const auto out = boundary_restriction(*pants, "out");
    expect_functor(out.functor);
    for (std::size_t i = 0; i < pants->size(); ++i) {
        const auto t = pants->tuple(i);
        EXPECT_EQ(out.functor(i), s3.mul(t[0], t[1]));
    }
    const auto in = boundary_restriction(*pants, "in");
    expect_functor(in.functor);
    EXPECT_EQ(in.circle_model->num_objects(), 36u);
    // over (e, e) the fiber is the 36 conjugator pairs modulo the diagonal S3
    EXPECT_EQ(cardinality(*homotopy_fiber(in.functor, 0).groupoid), Rational(6));
    const auto disk = mapping_groupoid(SurfaceSpec::disk(), s3);
    EXPECT_EQ(boundary_restriction(*disk, "boundary").functor(0), s3.identity());
    EXPECT_THROW(boundary_restriction(*disk, "out"), InvalidInput);
    EXPECT_THROW(boundary_restriction(*mapping_groupoid(SurfaceSpec::closed(1), s3), "in"), InvalidInput);
}

TEST(MappingModel, ConjugationActsOnTuples) {
    const auto s3 = groups::by_name("S3");
    const auto m = mapping_groupoid(SurfaceSpec::closed(1), s3);
    for (std::size_t i = 0; i < m->size(); ++i)
        for (Elem h = 0; h < s3.size(); ++h) {
            const auto j = m->conjugate(h, i);
            const auto a = m->tuple(i), b = m->tuple(j);
            for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(b[k], s3.conj(h, a[k]));
            EXPECT_EQ(m->orbit_of(i), m->orbit_of(j));
        }
    for (Elem a = 0; a < s3.size(); ++a)
        for (Elem b = 0; b < s3.size(); ++b) {
            const std::vector<Elem> t = {a, b};
            EXPECT_EQ(m->find(t) != SIZE_MAX, s3.mul(a, b) == s3.mul(b, a));
        }
}

TEST(MappingModel, BudgetAndThreads) {
    const auto s4 = groups::by_name("S4");
    RunConfig tight;
    tight.budget = 1000;
    EXPECT_THROW(mapping_groupoid(SurfaceSpec::closed(2), s4, tight), BudgetExceeded);
    RunConfig wide;
    wide.width = 3;
    const auto d4 = groups::by_name("D4");
    const auto a = mapping_groupoid(SurfaceSpec::closed(2), d4);
    const auto b = mapping_groupoid(SurfaceSpec::closed(2), d4, wide);
    ASSERT_EQ(a->size(), b->size());
    for (std::size_t i = 0; i < a->size(); ++i) {
        const auto x = a->tuple(i), y = b->tuple(i);
        EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin()));
    }
    RunConfig zero;
    zero.width = 0;
    EXPECT_THROW(mapping_groupoid(SurfaceSpec::closed(1), d4, zero), InvalidInput);
}

TEST(MappingModel, InducedFunctorIsAFunctor) {
    const auto z4 = groups::by_name("Z4"), z2 = groups::by_name("Z2");
    const GroupHom lambda(z4, z2, {0, 1, 0, 1});
    ModelCache cache;
    const auto from = cache.get(z4, SurfaceSpec::closed(1));
    const auto to = cache.get(z2, SurfaceSpec::closed(1));
    EXPECT_EQ(cache.get(z4, SurfaceSpec::closed(1)), from);  // memoized
    const auto f = induced_functor(lambda, *from, *to);
    expect_functor(f);
    for (std::size_t i = 0; i < from->size(); ++i) {
        const auto t = from->tuple(i), u = to->tuple(f(i));
        for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(u[k], lambda(t[k]));
    }
    EXPECT_THROW(induced_functor(lambda, *to, *from), InvalidInput);
}
