#pragma once

/**
 * @file io.hpp
 * @brief JSON ingestion and rendering.
 *
 * Every loader runs the invariant checks of the type it builds, so a bad
 * file fails here with the violated axiom and a witness. Exact scalars are
 * written as strings.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossed.hpp"
#include "frobenius.hpp"
#include "invariants.hpp"
#include "repgrpd.hpp"

namespace eqtft::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("input file readable", "'" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidInput("well-formed JSON", path + ": " + e.what());
    }
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput("field '" + std::string(key) + "' present", where);
    return j.at(key);
}

template <class T>
T get(const Json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const Json::exception& e) {
        throw InvalidInput("field has the expected type", where + ": " + e.what());
    }
}

}  // namespace detail

// ---- scalars ---------------------------------------------------------------

inline Rational parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InvalidInput("exact rational as integer or \"p/q\" string", j.dump());
}

/// Rational scalar, or {"order": m, "coeffs": [...]} for sum_k coeffs[k] z_m^k.
inline Cyclotomic parse_cyclotomic(const Json& j) {
    if (j.is_object()) {
        const auto order = detail::get<std::uint32_t>(detail::field(j, "order", "cyclotomic scalar"), "order");
        if (order == 0) throw InvalidInput("root-of-unity order >= 1", j.dump());
        std::vector<Rational> c;
        for (const auto& x : detail::field(j, "coeffs", "cyclotomic scalar")) c.push_back(parse_rational(x));
        return Cyclotomic::from_powers(order, c);
    }
    return Cyclotomic(parse_rational(j));
}

template <ExactField S>
S parse_scalar(const Json& j) {
    if constexpr (std::is_same_v<S, Rational>)
        return parse_rational(j);
    else
        return parse_cyclotomic(j);
}

inline std::string render(const Rational& r) { return r.to_string(); }
inline std::string render(const Cyclotomic& c) { return c.to_string(); }

inline std::string render_approx(const Rational& r) {
    std::ostringstream os;
    os.precision(12);
    os << r.to_double();
    return os.str();
}

inline std::string render_approx(const Cyclotomic& c) {
    const auto z = c.approx();
    std::ostringstream os;
    os.precision(12);
    const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
    os << re;
    if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    return os.str();
}

/// Matrix given as a list of rows; an empty list stands for any matrix with a zero dimension.
template <ExactField S>
Matrix<S> parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) throw InvalidInput("matrix as a list of rows", where);
    if (rows * cols == 0) {
        if (!j.empty() && !(j.size() == rows && std::all_of(j.begin(), j.end(), [](const Json& r) { return r.empty(); })))
            throw InvalidInput("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols), where);
        return Matrix<S>(rows, cols);
    }
    if (j.size() != rows) throw InvalidInput("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols), where);
    Matrix<S> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InvalidInput("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols),
                               where + ", row " + std::to_string(i));
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_scalar<S>(j[i][k]);
    }
    return m;
}

template <ExactField S>
Vec<S> parse_vector(const Json& j, std::size_t size, const std::string& where) {
    if (!j.is_array() || j.size() != size) throw InvalidInput("vector of length " + std::to_string(size), where);
    Vec<S> v;
    for (const auto& x : j) v.push_back(parse_scalar<S>(x));
    return v;
}

template <ExactField S>
OrderedJson matrix_json(const Matrix<S>& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        OrderedJson r = OrderedJson::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(render(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

template <ExactField S>
OrderedJson vector_json(const Vec<S>& v) {
    OrderedJson a = OrderedJson::array();
    for (const auto& x : v) a.push_back(render(x));
    return a;
}

// ---- groups and homomorphisms ---------------------------------------------

/// A built-in name, {"builtin": name}, or a multiplication table given as
/// {"table": [[...]]} or {"size": n, "mul": [[...]]}, with an optional "name".
inline FiniteGroup parse_group(const Json& j) {
    if (j.is_string()) return groups::by_name(j.get<std::string>());
    if (j.is_object() && j.contains("builtin")) return groups::by_name(detail::get<std::string>(j.at("builtin"), "builtin"));
    const char* key = j.is_object() && j.contains("mul") ? "mul" : "table";
    const auto table = detail::get<std::vector<std::vector<Elem>>>(detail::field(j, key, "group"), key);
    if (j.contains("size") && detail::get<std::size_t>(j.at("size"), "size") != table.size())
        throw InvalidInput("size matches the table", "size " + j.at("size").dump() + ", " + std::to_string(table.size()) + " rows");
    const std::string name = j.contains("name") ? detail::get<std::string>(j.at("name"), "name") : std::string{};
    return FiniteGroup::from_table(table, name);
}

/// A built-in name, or a path to a group file.
inline FiniteGroup load_group(const std::string& name_or_path) {
    try {
        return groups::by_name(name_or_path);
    } catch (const InvalidInput&) {
        std::ifstream probe(name_or_path);
        if (!probe) throw;
    }
    return parse_group(read_json_file(name_or_path));
}

inline GroupHom parse_hom(const Json& j) {
    return GroupHom(parse_group(detail::field(j, "domain", "hom")), parse_group(detail::field(j, "codomain", "hom")),
                    detail::get<std::vector<Elem>>(detail::field(j, "images", "hom"), "images"));
}

inline ShortExactSequence parse_ses(const Json& j) {
    return ShortExactSequence(parse_hom(detail::field(j, "iota", "short exact sequence")),
                              parse_hom(detail::field(j, "lambda", "short exact sequence")));
}

// ---- cocycles --------------------------------------------------------------

/// {"group": g, "values": n x n table of rotation strings "k/N"} or
/// {"group": g, "coboundary": [per-element rotation]}; omitted values mean
/// trivial. "table" is accepted for "values", and an optional "order" N
/// requires every rotation to be a multiple of 1/N.
inline Cocycle2 parse_cocycle(const Json& j) {
    const auto g = parse_group(detail::field(j, "group", "cocycle"));
    const std::size_t n = g.size();
    if (j.contains("coboundary")) {
        std::vector<RationalRotation> beta;
        for (const auto& x : j.at("coboundary")) beta.emplace_back(parse_rational(x));
        return Cocycle2::coboundary(g, beta);
    }
    const char* key = j.contains("values") ? "values" : "table";
    if (!j.contains(key)) return Cocycle2::trivial(g);
    const auto& v = j.at(key);
    const auto order = j.contains("order") ? detail::get<std::int64_t>(j.at("order"), "order") : std::int64_t{0};
    if (j.contains("order") && order < 1) throw InvalidInput("cocycle order >= 1", j.at("order").dump());
    if (!v.is_array() || v.size() != n) throw InvalidInput("cocycle table is |G| x |G|", "row count");
    std::vector<RationalRotation> values;
    for (std::size_t a = 0; a < n; ++a) {
        if (!v[a].is_array() || v[a].size() != n) throw InvalidInput("cocycle table is |G| x |G|", "row " + std::to_string(a));
        for (const auto& x : v[a]) {
            const auto r = parse_rational(x);
            if (order != 0 && (r * Rational(order)).den() != 1)
                throw InvalidInput("rotations are multiples of 1/order", r.to_string() + " with order " + std::to_string(order));
            values.emplace_back(r);
        }
    }
    return Cocycle2(g, std::move(values));
}

// ---- theories and chains ---------------------------------------------------

/// {"group": g, "kind": "trivial"} or {"group": g, "kind": "class_function",
/// "values": [...]}, the latter giving Z(a_1, ..., a_k) = prod f(a_i).
inline TheoryInvariant parse_theory(const Json& j) {
    const auto g = parse_group(detail::field(j, "group", "theory"));
    const auto kind = j.contains("kind") ? detail::get<std::string>(j.at("kind"), "kind") : std::string("trivial");
    if (kind == "trivial") return TheoryInvariant::trivial(g);
    if (kind != "class_function") throw InvalidInput("theory kind trivial or class_function", "'" + kind + "'");
    std::vector<Rational> f;
    for (const auto& x : detail::field(j, "values", "theory")) f.push_back(parse_rational(x));
    if (f.size() != g.size()) throw InvalidInput("one value per group element", "got " + std::to_string(f.size()));
    for (Elem h = 0; h < g.size(); ++h)
        for (Elem x = 0; x < g.size(); ++x)
            if (f[g.conj(h, x)] != f[x])
                throw InvalidInput("values form a class function",
                                   "f(" + std::to_string(x) + ") != f(" + std::to_string(g.conj(h, x)) + ")");
    return {g, [f](int, std::span<const Elem> t) {
                Rational v(1);
                for (Elem x : t) v *= f[x];
                return v;
            }};
}

struct ChainInput {
    GroupHom lambda;
    GroupHom mu;
    TheoryInvariant theory;
};

inline ChainInput parse_chain(const Json& j) {
    auto lambda = parse_hom(detail::field(j, "lambda", "chain"));
    auto mu = parse_hom(detail::field(j, "mu", "chain"));
    if (!(lambda.codomain() == mu.domain())) throw InvalidInput("composable homomorphisms", "lambda codomain != mu domain");
    auto theory = j.contains("theory") ? parse_theory(j.at("theory")) : TheoryInvariant::trivial(lambda.domain());
    if (!(theory.group == lambda.domain())) throw InvalidInput("theory over the domain of lambda", "group mismatch");
    return {std::move(lambda), std::move(mu), std::move(theory)};
}

// ---- crossed algebras ------------------------------------------------------

template <ExactField S>
CrossedFrobeniusAlgebra<S> parse_crossed_explicit(const Json& j, const FiniteGroup& g) {
    const std::size_t n = g.size();
    const auto dims = detail::get<std::vector<std::size_t>>(detail::field(j, "dims", "crossed algebra"), "dims");
    if (dims.size() != n) throw InvalidInput("one graded component per element", "dims has " + std::to_string(dims.size()));
    const auto& mj = detail::field(j, "mul", "crossed algebra");
    const auto& pj = detail::field(j, "pairing", "crossed algebra");
    const auto& aj = detail::field(j, "action", "crossed algebra");
    if (!mj.is_array() || mj.size() != n * n) throw InvalidInput("mul lists |G|^2 matrices", "mul");
    if (!pj.is_array() || pj.size() != n) throw InvalidInput("pairing lists |G| matrices", "pairing");
    if (!aj.is_array() || aj.size() != n * n) throw InvalidInput("action lists |G|^2 matrices", "action");
    std::vector<Matrix<S>> mul(n * n), pairing(n), action(n * n);
    for (Elem a = 0; a < n; ++a) {
        pairing[a] = parse_matrix<S>(pj[a], dims[a], dims[g.inv(a)], "pairing[" + std::to_string(a) + "]");
        for (Elem b = 0; b < n; ++b) {
            mul[a * n + b] = parse_matrix<S>(mj[a * n + b], dims[g.mul(a, b)], dims[a] * dims[b],
                                             "mul[" + std::to_string(a * n + b) + "]");
            action[a * n + b] = parse_matrix<S>(aj[a * n + b], dims[g.conj(a, b)], dims[b],
                                                "action[" + std::to_string(a * n + b) + "]");
        }
    }
    auto unit = parse_vector<S>(detail::field(j, "unit", "crossed algebra"), dims[g.identity()], "unit");
    return CrossedFrobeniusAlgebra<S>(g, dims, std::move(mul), std::move(unit), std::move(pairing), std::move(action));
}

/// {"preset": "trivial" | "group_algebra" | "twisted", "group": g, "cocycle": ...}
/// or explicit tensors {"group", "dims", "mul", "unit", "pairing", "action"};
/// scalars may be cyclotomic. With check_axioms the basic axioms are enforced.
inline CrossedFrobeniusAlgebra<Cyclotomic> parse_crossed(const Json& j, bool check_axioms = true) {
    const auto g = parse_group(detail::field(j, "group", "crossed algebra"));
    auto alg = [&] {
        if (j.contains("preset")) {
            const auto preset = detail::get<std::string>(j.at("preset"), "preset");
            if (preset == "trivial") return to_cyclotomic(trivial_crossed_algebra<Rational>(g));
            if (preset == "group_algebra") return group_algebra_model(g);
            if (preset == "twisted") {
                Json cj = detail::field(j, "cocycle", "twisted preset");
                cj["group"] = j.at("group");
                return twisted_group_algebra(parse_cocycle(cj));
            }
            throw InvalidInput("preset trivial, group_algebra or twisted", "'" + preset + "'");
        }
        return parse_crossed_explicit<Cyclotomic>(j, g);
    }();
    if (check_axioms) {
        const auto rep = check_crossed_axioms(alg, AxiomLevel::kBasic);
        if (!rep.ok()) throw InvalidInput(rep.violations.front().axiom, rep.violations.front().witness);
    }
    return alg;
}

template <ExactField S>
OrderedJson frobenius_json(const CommutativeFrobeniusAlgebra<S>& a) {
    OrderedJson o;
    o["dim"] = a.dim;
    o["mul"] = matrix_json(a.mul);
    o["unit"] = vector_json(a.unit);
    o["pairing"] = matrix_json(a.pairing);
    return o;
}

inline OrderedJson report_json(const AxiomReport& rep) {
    OrderedJson o;
    o["ok"] = rep.ok();
    OrderedJson v = OrderedJson::array();
    for (const auto& x : rep.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    o["violations"] = std::move(v);
    o["notes"] = rep.notes;
    return o;
}

// ---- groupoids, bundles and spans ----------------------------------------

/// {"objects": n, "source": [...], "target": [...], "compose": table with
/// compose[g][f] = g∘f or null}, {"action": {"group", "points", "table"}}
/// with table[g][x] = g.x, or {"blocks": [{"objects": k, "group": g}, ...]}
/// for disjoint unions of codiscrete(k) x BG.
inline GroupoidPtr parse_groupoid(const Json& j) {
    if (j.contains("action")) {
        const auto& a = j.at("action");
        const auto g = parse_group(detail::field(a, "group", "action groupoid"));
        const auto points = detail::get<std::size_t>(detail::field(a, "points", "action groupoid"), "points");
        const auto table = detail::get<std::vector<std::vector<std::size_t>>>(detail::field(a, "table", "action groupoid"), "table");
        if (table.size() != g.size()) throw InvalidInput("one action row per element", "table");
        for (const auto& row : table)
            if (row.size() != points) throw InvalidInput("action row covers all points", "table");
        return groupoids::action(g, points, [&](Elem h, std::size_t x) { return table[h][x]; });
    }
    if (j.contains("blocks")) {
        GroupoidPtr out;
        for (const auto& b : j.at("blocks")) {
            const auto k = detail::get<std::size_t>(detail::field(b, "objects", "block"), "objects");
            if (k == 0) throw InvalidInput("block has an object", "objects = 0");
            const auto g = b.contains("group") ? parse_group(b.at("group")) : FiniteGroup::trivial();
            auto block = groupoids::product(*groupoids::codiscrete(k), *groupoids::one_object(g));
            out = out ? groupoids::disjoint_union(*out, *block) : block;
        }
        if (!out) throw InvalidInput("at least one block", "blocks empty");
        return out;
    }
    const auto n = detail::get<std::size_t>(detail::field(j, "objects", "groupoid"), "objects");
    auto src = detail::get<std::vector<ObjId>>(detail::field(j, "source", "groupoid"), "source");
    auto tgt = detail::get<std::vector<ObjId>>(detail::field(j, "target", "groupoid"), "target");
    const auto& cj = detail::field(j, "compose", "groupoid");
    const std::size_t m = src.size();
    if (tgt.size() != m) throw InvalidInput("source and target lists agree in length", "groupoid");
    if (!cj.is_array() || cj.size() != m) throw InvalidInput("compose table is |Mor| x |Mor|", "groupoid");
    std::vector<MorId> table(m * m, SIZE_MAX);
    for (std::size_t g = 0; g < m; ++g) {
        if (!cj[g].is_array() || cj[g].size() != m) throw InvalidInput("compose table is |Mor| x |Mor|", "row " + std::to_string(g));
        for (std::size_t f = 0; f < m; ++f)
            if (!cj[g][f].is_null()) table[g * m + f] = detail::get<MorId>(cj[g][f], "compose entry");
    }
    for (std::size_t f = 0; f < m; ++f)
        if (src[f] >= n || tgt[f] >= n) throw InvalidInput("endpoints are objects", "morphism " + std::to_string(f));
    return groupoids::make(FiniteGroupoid::build(n, std::move(src), std::move(tgt), [table, m](MorId g, MorId f) {
        const MorId h = table[g * m + f];
        if (h == SIZE_MAX)
            throw InvalidInput("composite of composable morphisms given", "(" + std::to_string(g) + ", " + std::to_string(f) + ")");
        return h;
    }));
}

/// {"groupoid": ..., "dims": [...], "transport": [matrix per morphism]}; rational scalars.
inline RepObject<Rational> parse_rep(const Json& j) {
    auto g = parse_groupoid(detail::field(j, "groupoid", "bundle"));
    const auto dims = detail::get<std::vector<std::size_t>>(detail::field(j, "dims", "bundle"), "dims");
    if (dims.size() != g->num_objects()) throw InvalidInput("one fiber per object", "dims");
    const auto& tj = detail::field(j, "transport", "bundle");
    if (!tj.is_array() || tj.size() != g->num_morphisms()) throw InvalidInput("one transport per morphism", "transport");
    std::vector<Matrix<Rational>> tr;
    for (MorId f = 0; f < g->num_morphisms(); ++f)
        tr.push_back(parse_matrix<Rational>(tj[f], dims[g->target(f)], dims[g->source(f)], "transport[" + std::to_string(f) + "]"));
    auto b = share(VectorBundle<Rational>(g, dims, std::move(tr)));
    return RepObject<Rational>(std::move(g), std::move(b));
}

inline GroupoidFunctor parse_functor(const Json& j, const GroupoidPtr& dom, const GroupoidPtr& cod) {
    return GroupoidFunctor(dom, cod, detail::get<std::vector<ObjId>>(detail::field(j, "objects", "functor"), "objects"),
                           detail::get<std::vector<MorId>>(detail::field(j, "morphisms", "functor"), "morphisms"));
}

/// {"source": bundle, "target": bundle, "apex": groupoid, "r0": functor,
/// "r1": functor, "intertwiner": [matrix per apex object]}.
inline SpanMorphism<Rational> parse_span(const Json& j) {
    auto src = parse_rep(detail::field(j, "source", "span"));
    auto tgt = parse_rep(detail::field(j, "target", "span"));
    auto apex = parse_groupoid(detail::field(j, "apex", "span"));
    auto r0 = parse_functor(detail::field(j, "r0", "span"), apex, src.groupoid);
    auto r1 = parse_functor(detail::field(j, "r1", "span"), apex, tgt.groupoid);
    const auto& ij = detail::field(j, "intertwiner", "span");
    if (!ij.is_array() || ij.size() != apex->num_objects()) throw InvalidInput("one intertwiner component per apex object", "intertwiner");
    std::vector<Matrix<Rational>> c;
    for (ObjId x = 0; x < apex->num_objects(); ++x)
        c.push_back(parse_matrix<Rational>(ij[x], tgt.bundle->dim(r1(x)), src.bundle->dim(r0(x)),
                                           "intertwiner[" + std::to_string(x) + "]"));
    return SpanMorphism<Rational>(std::move(src), std::move(tgt), std::move(r0), std::move(r1), std::move(c));
}

}  // namespace eqtft::io
