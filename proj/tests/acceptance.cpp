// Acceptance run: one PASS/FAIL line per criterion. Library suites are
// paired with brute-force oracles where an independent value exists.
//
// Usage: acceptance [criterion ...]   (default: all twelve)

#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "eqtft/eqtft.hpp"
#include "oracles.hpp"

using namespace eqtft;

namespace {

/// Extra oracle checks layered on top of a suite result.
void cross_check(SuiteResult& r, const RunConfig& cfg) {
    switch (r.id) {
        case 1:
            // action groupoids of built-ins against the per-object oracle
            for (const auto& g : groups::builtins()) {
                if (cardinality(*groupoids::one_object(g)) != oracle::cardinality_by_out(*groupoids::one_object(g)) ||
                    cardinality(*groupoids::conjugation(g)) != oracle::cardinality_by_out(*groupoids::conjugation(g)))
                    r.fail(g.name() + ": cardinality disagrees with the per-object oracle");
                ++r.instances;
            }
            if (r.seconds > 60) r.fail("runtime over one minute");
            break;
        case 5:
            for (const auto& g : groups::builtins()) {
                const auto torus = dw_invariant(g, 1, cfg);
                if (torus != Rational(static_cast<Rational::Int>(oracle::class_count(g))) ||
                    torus != oracle::frac(oracle::commuting_pairs(g), g.size()))
                    r.fail(g.name() + ": torus value disagrees with commuting-pair enumeration");
            }
            if (dw_invariant(groups::by_name("Z2"), 1, cfg) != Rational(2) ||
                dw_invariant(groups::by_name("S3"), 1, cfg) != Rational(3))
                r.fail("Z2 or S3 torus value");
            break;
        case 6:
            if (r.seconds > 60) r.fail("runtime over one minute");
            break;
        case 7:
            for (const auto& g : groups::builtins())
                for (int genus = 0; genus <= 2; ++genus) {
                    if (dw_invariant(g, genus, cfg) != oracle::mapping_cardinality(g, genus))
                        r.fail(g.name() + " genus " + std::to_string(genus) + ": disagrees with tuple enumeration");
                }
            break;
        case 8: {
            ModelCache cache(cfg);
            for (const auto& ses : suites::example_extensions()) {
                const auto& lambda = ses.lambda;
                for (int genus = 1; genus <= 2; ++genus) {
                    const auto z = equivariant_dw(lambda, genus, cache);
                    if (orbifold_invariant(z) != oracle::mapping_cardinality(lambda.domain(), genus))
                        r.fail(lambda.domain().name() + " genus " + std::to_string(genus) +
                               ": orbifold differs from |Pi(Sigma, BH)| by enumeration");
                    for (std::size_t o = 0; o < z.model->num_orbits(); ++o) {
                        const auto rep = z.model->orbit_representatives()[o];
                        const auto t = z.model->tuple(rep);
                        const std::vector<Elem> psi(t.begin(), t.end());
                        if (z.values[rep] != oracle::fiber_cardinality(lambda.images(), lambda.domain(),
                                                                       lambda.codomain(), genus, psi))
                            r.fail(lambda.domain().name() + ": fiber cardinality differs from pair enumeration");
                    }
                }
            }
            break;
        }
        case 9: {
            // pointwise values of one pushforward per chain shape against pair enumeration
            ModelCache cache(cfg);
            const auto z4 = groups::by_name("Z4"), z2 = groups::by_name("Z2"), s3 = groups::by_name("S3");
            for (const auto& lambda : {enumerate_homs(z4, z2).back(), enumerate_homs(s3, z2).back()}) {
                const auto model = cache.get(lambda.codomain(), SurfaceSpec::closed(2));
                const auto one = tabulate(TheoryInvariant::trivial(lambda.domain()),
                                          cache.get(lambda.domain(), SurfaceSpec::closed(2)));
                const auto pushed = pushforward_table(one, lambda, model);
                for (std::size_t psi = 0; psi < model->size(); ++psi) {
                    const auto t = model->tuple(psi);
                    if (pushed.values[psi] != oracle::fiber_cardinality(lambda.images(), lambda.domain(),
                                                                        lambda.codomain(), 2, {t.begin(), t.end()}))
                        r.fail(lambda.domain().name() + " -> Z2: pushforward differs from pair enumeration");
                }
            }
            break;
        }
        default:
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    RunConfig cfg;
    const auto fns = suites::all_suites();
    int failures = 0;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!wanted.empty() && !wanted.count(id)) continue;
        auto r = suites::run_timed(fns[i], cfg, id);
        try {
            cross_check(r, cfg);
        } catch (const std::exception& e) {
            r.fail(std::string("oracle cross-check threw: ") + e.what());
        }
        if (!r.pass) ++failures;
        std::printf("criterion %2d: %s  %s  (%zu instances, %.2fs)%s%s\n", id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.instances, r.seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
