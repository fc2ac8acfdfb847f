#pragma once

/**
 * @file invariants.hpp
 * @brief Closed-surface invariants: Dijkgraaf-Witten counts, pushforward
 * along group homomorphisms, orbifoldization and the composition law.
 */

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "integration.hpp"
#include "mapping.hpp"

namespace eqtft {

/// A rule assigning a number to each (genus, homomorphism tuple) over G.
struct TheoryInvariant {
    FiniteGroup group;
    std::function<Rational(int, std::span<const Elem>)> rule;

    static TheoryInvariant trivial(const FiniteGroup& g) {
        return {g, [](int, std::span<const Elem>) { return Rational(1); }};
    }
};

/// Values of an invariant on every object of one closed-surface model.
struct InvariantTable {
    ModelPtr model;
    std::vector<Rational> values;

    Rational at(std::span<const Elem> t) const {
        const auto i = model->find(t);
        if (i == SIZE_MAX) throw InvalidInput("object of the model", "tuple not a homomorphism");
        return values[i];
    }

    /// Checks conjugation invariance on the model; returns a witness tuple index.
    std::optional<std::size_t> invariance_violation() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] != values[model->orbit_representatives()[model->orbit_of(i)]]) return i;
        return std::nullopt;
    }
};

inline InvariantTable tabulate(const TheoryInvariant& z, const ModelPtr& model) {
    if (!(z.group == model->group())) throw InvalidInput("invariant over the model's group", "group mismatch");
    InvariantTable t{model, std::vector<Rational>(model->size())};
    for (std::size_t i = 0; i < t.values.size(); ++i) t.values[i] = z.rule(model->surface().genus, model->tuple(i));
    if (auto w = t.invariance_violation())
        throw InvalidInput("invariant under conjugation", "tuple index " + std::to_string(*w));
    return t;
}

/// The invariant as an InvariantFunction on the materialized model.
inline InvariantFunction<Rational> as_function(const InvariantTable& t) {
    std::vector<Vec<Rational>> v(t.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {t.values[i]};
    return InvariantFunction<Rational>(t.model->groupoid(), std::move(v));
}

/// TheoryInvariant reading values from a table (for the table's genus only).
inline TheoryInvariant from_table(const InvariantTable& t) {
    auto shared = std::make_shared<InvariantTable>(t);
    const int genus = t.model->surface().genus;
    return {t.model->group(), [shared, genus](int g, std::span<const Elem> tuple) {
                if (g != genus) throw InvalidInput("tabulated genus", "genus " + std::to_string(g));
                return shared->at(tuple);
            }};
}

/// Cardinality of the genus-g model.
inline Rational dw_invariant(const FiniteGroup& g, int genus, const RunConfig& config = {}) {
    return mapping_groupoid(SurfaceSpec::closed(genus), g, config)->cardinality();
}

/// Pushforward of a tabulated invariant along lambda : G -> H.
///
/// At psi the value is the integral of Z over the homotopy fiber of lambda_*
/// over psi. That fiber is the action groupoid of G on pairs (phi, h) with
/// h lambda(phi) h^-1 = psi, so the integral is (1/|G|) sum_phi Z(phi) c(phi)
/// with c(phi) the number of such h. Summation runs over G-orbits since both
/// Z and c are conjugation invariant.
inline InvariantTable pushforward_table(const InvariantTable& z, const GroupHom& lambda, const ModelPtr& target) {
    const auto& from = *z.model;
    if (!(from.group() == lambda.domain()) || !(target->group() == lambda.codomain()) ||
        !(from.surface() == target->surface()))
        throw InvalidInput("hom matches the models", "group or surface mismatch");
    const auto& h = lambda.codomain();
    // conjugating base by every x in H covers its orbit O evenly, |H|/|O| times,
    // so contributions are accumulated per target orbit and spread at the end
    std::vector<Rational> per_orbit(target->num_orbits(), Rational(0));
    std::vector<Elem> img(from.tuple_length());
    for (std::size_t o = 0; o < from.num_orbits(); ++o) {
        const std::size_t rep = from.orbit_representatives()[o];
        if (z.values[rep].is_zero()) continue;
        const auto t = from.tuple(rep);
        for (std::size_t k = 0; k < img.size(); ++k) img[k] = lambda(t[k]);
        const std::size_t base = target->find(img);
        if (base == SIZE_MAX) throw Error("image tuple missing from target model");
        per_orbit[target->orbit_of(base)] +=
            z.values[rep] * Rational(static_cast<Rational::Int>(from.orbit_size(o)),
                                     static_cast<Rational::Int>(from.group().size()));
    }
    InvariantTable out{target, std::vector<Rational>(target->size(), Rational(0))};
    for (std::size_t psi = 0; psi < out.values.size(); ++psi) {
        const std::size_t o = target->orbit_of(psi);
        if (!per_orbit[o].is_zero())
            out.values[psi] = per_orbit[o] * Rational(static_cast<Rational::Int>(h.size()),
                                                      static_cast<Rational::Int>(target->orbit_size(o)));
    }
    return out;
}

/// Same value at psi computed on the materialized homotopy fiber.
inline Rational pushforward_invariant_generic(const InvariantTable& z, const GroupHom& lambda, const ModelPtr& target,
                                              std::size_t psi) {
    const auto f = induced_functor(lambda, *z.model, *target);
    const auto fib = homotopy_fiber(f, psi);
    return integrate(pullback_function(fib.q, as_function(z)))[0];
}

/// Pushforward along G -> 1 evaluated at the unique object.
inline Rational orbifold_invariant(const InvariantTable& z) {
    Rational total(0);
    const auto& m = *z.model;
    for (std::size_t o = 0; o < m.num_orbits(); ++o)
        total += z.values[m.orbit_representatives()[o]] *
                 Rational(static_cast<Rational::Int>(m.orbit_size(o)), static_cast<Rational::Int>(m.group().size()));
    return total;
}

/// psi -> cardinality of the homotopy fiber of lambda_* over psi, on the genus-g model over J.
inline InvariantTable equivariant_dw(const GroupHom& lambda, int genus, ModelCache& cache) {
    if (!lambda.is_surjective()) throw InvalidInput("lambda surjective", "image has " +
                                                     std::to_string(lambda.image().size()) + " of " +
                                                     std::to_string(lambda.codomain().size()) + " elements");
    const auto surface = SurfaceSpec::closed(genus);
    const auto from = cache.get(lambda.domain(), surface);
    const auto one = tabulate(TheoryInvariant::trivial(lambda.domain()), from);
    return pushforward_table(one, lambda, cache.get(lambda.codomain(), surface));
}

/// A short exact sequence 1 -> G -> H -> J -> 1 given by iota and lambda.
struct ShortExactSequence {
    GroupHom iota;
    GroupHom lambda;

    ShortExactSequence(GroupHom i, GroupHom l) : iota(std::move(i)), lambda(std::move(l)) {
        if (!(iota.codomain() == lambda.domain())) throw InvalidInput("composable maps", "middle groups differ");
        if (!iota.is_injective()) throw InvalidInput("first map injective", "kernel of iota is nontrivial");
        if (!lambda.is_surjective()) throw InvalidInput("second map surjective", "lambda misses an element");
        auto im = iota.image();
        auto ker = lambda.kernel();
        std::sort(im.begin(), im.end());
        std::sort(ker.begin(), ker.end());
        if (im != ker) throw InvalidInput("image equals kernel", "image size " + std::to_string(im.size()) +
                                                                     ", kernel size " + std::to_string(ker.size()));
    }
};

struct CompositionReport {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<std::size_t> witness;  // psi where the two sides differ
};

/// (mu∘lambda)_* Z versus mu_*(lambda_* Z) at every psi of the model over J,
/// given Z tabulated over G and its pushforward along lambda.
inline CompositionReport composition_law_check(const InvariantTable& z, const InvariantTable& lambda_z,
                                               const GroupHom& lambda, const GroupHom& mu, const ModelPtr& target) {
    const auto direct = pushforward_table(z, compose(mu, lambda), target);
    const auto staged = pushforward_table(lambda_z, mu, target);
    CompositionReport r;
    for (std::size_t psi = 0; psi < target->size(); ++psi) {
        ++r.checked;
        if (direct.values[psi] != staged.values[psi]) {
            r.ok = false;
            r.witness = psi;
            break;
        }
    }
    return r;
}

inline CompositionReport composition_law_check(const GroupHom& lambda, const GroupHom& mu, const TheoryInvariant& z,
                                               int genus, ModelCache& cache) {
    const auto surface = SurfaceSpec::closed(genus);
    const auto zt = tabulate(z, cache.get(lambda.domain(), surface));
    const auto pushed = pushforward_table(zt, lambda, cache.get(mu.domain(), surface));
    return composition_law_check(zt, pushed, lambda, mu, cache.get(mu.codomain(), surface));
}

}  // namespace eqtft
