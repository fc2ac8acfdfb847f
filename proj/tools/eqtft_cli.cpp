// Command-line front end: exact invariants of finite-group gauge theories,
// orbifold algebras and the property suite.
//
// Exit codes: 0 success, 1 computation error or failed check, 2 input error.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqtft/eqtft.hpp"
#include "eqtft/io.hpp"

namespace {

using eqtft::io::OrderedJson;

struct Options {
    bool table = false;
    bool approx = false;
    std::uint64_t budget = 100'000'000;
    unsigned width = 1;
    std::uint64_t seed = 20240601;

    eqtft::RunConfig config() const {
        eqtft::RunConfig c;
        c.budget = budget;
        c.width = width;
        c.seed = seed;
        c.format = table ? eqtft::OutputFormat::kTable : eqtft::OutputFormat::kJson;
        c.validate();
        return c;
    }
};

/// Aligned text table.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> w(header_.size(), 0);
        auto widen = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
        };
        widen(header_);
        for (const auto& r : rows_) widen(r);
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                s += r[i];
                if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
            }
            os << s << '\n';
        };
        line(header_);
        std::vector<std::string> rule;
        for (auto x : w) rule.emplace_back(x, '-');
        line(rule);
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct Output {
    OrderedJson json;
    std::vector<std::pair<std::string, Table>> tables;
    int code = 0;
};

void emit(const Output& out, const Options& opt) {
    if (opt.table) {
        bool first = true;
        for (const auto& [title, t] : out.tables) {
            if (!first) std::cout << '\n';
            first = false;
            if (!title.empty()) std::cout << title << '\n';
            t.print(std::cout);
        }
    } else {
        std::cout << out.json.dump(2) << '\n';
    }
}

template <class S>
OrderedJson scalar(const S& v, const Options& opt) {
    if (!opt.approx) return eqtft::io::render(v);
    return OrderedJson{{"exact", eqtft::io::render(v)}, {"approx", eqtft::io::render_approx(v)}};
}

template <class S>
std::string scalar_text(const S& v, const Options& opt) {
    auto s = eqtft::io::render(v);
    if (opt.approx) s += "  (~" + eqtft::io::render_approx(v) + ")";
    return s;
}

std::string tuple_text(std::span<const eqtft::Elem> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
    return s + ")";
}

OrderedJson group_json(const eqtft::FiniteGroup& g) { return {{"name", g.name()}, {"order", g.size()}}; }

/// One row per conjugation orbit of a table: representative, orbit size, value.
void orbit_rows(const eqtft::InvariantTable& t, const Options& opt, OrderedJson& json, Table& table) {
    OrderedJson rows = OrderedJson::array();
    const auto& m = *t.model;
    for (std::size_t o = 0; o < m.num_orbits(); ++o) {
        const std::size_t rep = m.orbit_representatives()[o];
        const auto tuple = m.tuple(rep);
        rows.push_back({{"representative", std::vector<eqtft::Elem>(tuple.begin(), tuple.end())},
                        {"orbit_size", m.orbit_size(o)},
                        {"value", scalar(t.values[rep], opt)}});
        table.add({tuple_text(tuple), std::to_string(m.orbit_size(o)), scalar_text(t.values[rep], opt)});
    }
    json["orbits"] = std::move(rows);
}

Output cmd_dw(const std::string& group, int genus, const Options& opt) {
    const auto g = eqtft::io::load_group(group);
    const auto v = eqtft::dw_invariant(g, genus, opt.config());
    Output out;
    out.json = {{"command", "dw"}, {"group", group_json(g)}, {"genus", genus}, {"value", scalar(v, opt)}};
    Table t({"group", "genus", "value"});
    t.add({g.name(), std::to_string(genus), scalar_text(v, opt)});
    out.tables.emplace_back("", std::move(t));
    return out;
}

Output cmd_push(const std::string& hom_file, int genus, const std::string& theory_file, const Options& opt) {
    const auto lambda = eqtft::io::parse_hom(eqtft::io::read_json_file(hom_file));
    const auto theory = theory_file.empty() ? eqtft::TheoryInvariant::trivial(lambda.domain())
                                            : eqtft::io::parse_theory(eqtft::io::read_json_file(theory_file));
    if (!(theory.group == lambda.domain())) throw eqtft::InvalidInput("theory over the domain of the hom", "group mismatch");
    eqtft::ModelCache cache(opt.config());
    const auto surface = eqtft::SurfaceSpec::closed(genus);
    const auto z = eqtft::tabulate(theory, cache.get(lambda.domain(), surface));
    const auto pushed = eqtft::pushforward_table(z, lambda, cache.get(lambda.codomain(), surface));
    Output out;
    out.json = {{"command", "push"},
                {"domain", group_json(lambda.domain())},
                {"codomain", group_json(lambda.codomain())},
                {"genus", genus}};
    Table t({"psi", "orbit size", "pushforward"});
    orbit_rows(pushed, opt, out.json, t);
    const auto total = eqtft::orbifold_invariant(pushed);
    out.json["integral"] = scalar(total, opt);
    out.tables.emplace_back("pushforward along " + lambda.domain().name() + " -> " + lambda.codomain().name() +
                                ", genus " + std::to_string(genus) + ", integral " + scalar_text(total, opt),
                            std::move(t));
    return out;
}

Output cmd_orbifold(const std::string& group, int genus, const std::string& theory_file, const Options& opt) {
    const auto g = eqtft::io::load_group(group);
    const auto theory = theory_file.empty() ? eqtft::TheoryInvariant::trivial(g)
                                            : eqtft::io::parse_theory(eqtft::io::read_json_file(theory_file));
    if (!(theory.group == g)) throw eqtft::InvalidInput("theory over the given group", "group mismatch");
    const auto model = eqtft::mapping_groupoid(eqtft::SurfaceSpec::closed(genus), g, opt.config());
    const auto v = eqtft::orbifold_invariant(eqtft::tabulate(theory, model));
    Output out;
    out.json = {{"command", "orbifold"}, {"group", group_json(g)}, {"genus", genus}, {"value", scalar(v, opt)}};
    Table t({"group", "genus", "orbifold value"});
    t.add({g.name(), std::to_string(genus), scalar_text(v, opt)});
    out.tables.emplace_back("", std::move(t));
    return out;
}

Output cmd_equivariant_dw(const std::string& ses_file, int genus, const Options& opt) {
    const auto ses = eqtft::io::parse_ses(eqtft::io::read_json_file(ses_file));
    eqtft::ModelCache cache(opt.config());
    const auto z = eqtft::equivariant_dw(ses.lambda, genus, cache);
    const auto orb = eqtft::orbifold_invariant(z);
    const auto dw_h = eqtft::dw_invariant(ses.lambda.domain(), genus, opt.config());
    Output out;
    out.json = {{"command", "equivariant-dw"},
                {"kernel", group_json(ses.iota.domain())},
                {"extension", group_json(ses.lambda.domain())},
                {"quotient", group_json(ses.lambda.codomain())},
                {"genus", genus}};
    Table t({"psi", "orbit size", "fiber cardinality"});
    orbit_rows(z, opt, out.json, t);
    out.json["orbifold"] = scalar(orb, opt);
    out.json["dw_extension"] = scalar(dw_h, opt);
    out.json["agree"] = orb == dw_h;
    out.code = orb == dw_h ? 0 : 1;
    out.tables.emplace_back("equivariant DW over " + ses.lambda.codomain().name() + ", genus " + std::to_string(genus) +
                                "; orbifold " + scalar_text(orb, opt) + ", DW of " + ses.lambda.domain().name() + " " +
                                scalar_text(dw_h, opt),
                            std::move(t));
    return out;
}

Output cmd_twisted_dw(const std::string& group, const std::string& cocycle_file, const Options& opt) {
    const auto g = eqtft::io::load_group(group);
    auto cj = eqtft::io::read_json_file(cocycle_file);
    if (!cj.contains("group")) cj["group"] = g.name();
    const auto theta = eqtft::io::parse_cocycle(cj);
    if (!(theta.group() == g)) throw eqtft::InvalidInput("cocycle over the given group", "group mismatch");
    const auto v = eqtft::twisted_torus_invariant(theta, opt.config());
    const auto dim = eqtft::orbifold_algebra(eqtft::twisted_group_algebra(theta)).dim;
    const auto untwisted = eqtft::dw_invariant(g, 1, opt.config());
    Output out;
    out.json = {{"command", "twisted-dw"},
                {"group", group_json(g)},
                {"genus", 1},
                {"value", scalar(v, opt)},
                {"untwisted", scalar(untwisted, opt)},
                {"twisted_orbifold_dimension", dim}};
    Table t({"group", "twisted torus", "untwisted", "orbifold dim"});
    t.add({g.name(), scalar_text(v, opt), scalar_text(untwisted, opt), std::to_string(dim)});
    out.tables.emplace_back("", std::move(t));
    return out;
}

Output cmd_frob_check(const std::string& file, const std::string& level, const Options&) {
    if (level != "basic" && level != "f1f2") throw eqtft::InvalidInput("level basic or f1f2", "'" + level + "'");
    const auto alg = eqtft::io::parse_crossed(eqtft::io::read_json_file(file), false);
    const auto rep = eqtft::check_crossed_axioms(alg, level == "f1f2" ? eqtft::AxiomLevel::kF1F2 : eqtft::AxiomLevel::kBasic);
    Output out;
    out.json = {{"command", "frob check"}, {"group", group_json(alg.group())}, {"level", level}};
    out.json["report"] = eqtft::io::report_json(rep);
    out.code = rep.ok() ? 0 : 1;
    Table t({"axiom", "witness"});
    for (const auto& v : rep.violations) t.add({v.axiom, v.witness});
    for (const auto& n : rep.notes) t.add({"note", n});
    out.tables.emplace_back(rep.ok() ? "all axioms hold at level " + level : "violations at level " + level, std::move(t));
    return out;
}

Output cmd_frob_orbifold(const std::string& file, const Options& opt) {
    const auto alg = eqtft::io::parse_crossed(eqtft::io::read_json_file(file));
    const auto orb = eqtft::orbifold_algebra(alg);
    Output out;
    out.json = {{"command", "frob orbifold"}, {"group", group_json(alg.group())}};
    out.json["algebra"] = eqtft::io::frobenius_json(orb);
    OrderedJson values = OrderedJson::array();
    Table t({"genus", "closed surface value"});
    for (int genus = 0; genus <= 2; ++genus) {
        const auto v = eqtft::closed_surface_value(orb, genus);
        values.push_back({{"genus", genus}, {"value", scalar(v, opt)}});
        t.add({std::to_string(genus), scalar_text(v, opt)});
    }
    out.json["closed_surface_values"] = std::move(values);
    out.tables.emplace_back("orbifold algebra of dimension " + std::to_string(orb.dim), std::move(t));
    return out;
}

Output cmd_compose_check(const std::string& chain_file, int genus, const Options& opt) {
    const auto chain = eqtft::io::parse_chain(eqtft::io::read_json_file(chain_file));
    eqtft::ModelCache cache(opt.config());
    const auto rep = eqtft::composition_law_check(chain.lambda, chain.mu, chain.theory, genus, cache);
    Output out;
    out.json = {{"command", "compose-check"},
                {"chain", {chain.lambda.domain().name(), chain.mu.domain().name(), chain.mu.codomain().name()}},
                {"genus", genus},
                {"ok", rep.ok},
                {"objects_checked", rep.checked}};
    if (rep.witness) {
        const auto m = cache.get(chain.mu.codomain(), eqtft::SurfaceSpec::closed(genus));
        const auto t = m->tuple(*rep.witness);
        out.json["witness"] = std::vector<eqtft::Elem>(t.begin(), t.end());
    }
    out.code = rep.ok ? 0 : 1;
    Table t({"chain", "genus", "objects", "result"});
    t.add({chain.lambda.domain().name() + " -> " + chain.mu.domain().name() + " -> " + chain.mu.codomain().name(),
           std::to_string(genus), std::to_string(rep.checked), rep.ok ? "ok" : "FAILED"});
    out.tables.emplace_back("", std::move(t));
    return out;
}

Output cmd_card(const std::string& file, const Options& opt) {
    const auto g = eqtft::io::parse_groupoid(eqtft::io::read_json_file(file));
    const auto v = eqtft::cardinality(*g);
    Output out;
    out.json = {{"command", "card"},
                {"objects", g->num_objects()},
                {"morphisms", g->num_morphisms()},
                {"cardinality", scalar(v, opt)}};
    OrderedJson comps = OrderedJson::array();
    Table t({"representative", "automorphisms"});
    for (auto x : g->representatives()) {
        comps.push_back({{"representative", x}, {"automorphisms", g->automorphisms(x).size()}});
        t.add({std::to_string(x), std::to_string(g->automorphisms(x).size())});
    }
    out.json["components"] = std::move(comps);
    out.tables.emplace_back("cardinality " + scalar_text(v, opt), std::move(t));
    return out;
}

Output cmd_par(const std::string& file, const Options&) {
    const auto span = eqtft::io::parse_span(eqtft::io::read_json_file(file));
    const auto m = eqtft::par_morphism(span);
    Output out;
    out.json = {{"command", "par"},
                {"source_dim", eqtft::par_object(span.source()).dim()},
                {"target_dim", eqtft::par_object(span.target()).dim()}};
    out.json["matrix"] = eqtft::io::matrix_json(m);
    Table t({"row", "entries"});
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string row;
        for (std::size_t k = 0; k < m.cols(); ++k) row += (k ? " " : "") + m(i, k).to_string();
        t.add({std::to_string(i), row});
    }
    out.tables.emplace_back("Par of the span: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()), std::move(t));
    return out;
}

Output cmd_suite(const Options& opt) {
    const auto results = eqtft::run_property_suite(opt.config());
    Output out;
    out.json = {{"command", "suite"}, {"seed", opt.seed}};
    OrderedJson rows = OrderedJson::array();
    Table t({"id", "suite", "instances", "result", "detail"});
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        // timings are left out so output is byte-identical for a fixed seed
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"instances", r.instances}, {"detail", r.detail}});
        t.add({std::to_string(r.id), r.name, std::to_string(r.instances), r.pass ? "pass" : "FAIL", r.detail});
    }
    out.json["suites"] = std::move(rows);
    out.json["pass"] = all;
    out.code = all ? 0 : 1;
    out.tables.emplace_back("", std::move(t));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of finite-group gauge theories and their orbifolds"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    app.add_flag("--table", opt.table, "Aligned text tables instead of JSON");
    app.add_flag("--approx", opt.approx, "Also show approximate decimals");
    app.add_option("--budget", opt.budget, "Maximum |G|^k tuples to enumerate")->check(CLI::PositiveNumber);
    app.add_option("--width", opt.width, "Enumeration threads")->check(CLI::PositiveNumber);

    std::string group, file, theory, level = "basic";
    int genus = 1;
    auto add_genus = [&](CLI::App* c) { c->add_option("--genus", genus, "Surface genus")->required()->check(CLI::NonNegativeNumber); };

    auto* dw = app.add_subcommand("dw", "Dijkgraaf-Witten invariant of a closed surface");
    dw->add_option("--group", group, "Built-in name or group file")->required();
    add_genus(dw);

    auto* push = app.add_subcommand("push", "Pushforward of a closed-surface invariant along a homomorphism");
    push->add_option("--hom", file, "Homomorphism file")->required();
    push->add_option("--theory", theory, "Theory file (default: trivial theory)");
    add_genus(push);

    auto* orb = app.add_subcommand("orbifold", "Orbifold invariant of a theory over G");
    orb->add_option("--group", group, "Built-in name or group file")->required();
    orb->add_option("--theory", theory, "Theory file (default: trivial theory)");
    add_genus(orb);

    auto* edw = app.add_subcommand("equivariant-dw", "Equivariant DW theory of an extension and its orbifold");
    edw->add_option("--ses", file, "Short exact sequence file")->required();
    add_genus(edw);

    auto* tdw = app.add_subcommand("twisted-dw", "Cocycle-twisted torus invariant");
    tdw->add_option("--group", group, "Built-in name or group file")->required();
    tdw->add_option("--cocycle", file, "Cocycle file")->required();

    auto* frob = app.add_subcommand("frob", "Crossed Frobenius algebras");
    frob->require_subcommand(1);
    frob->fallthrough();
    auto* fcheck = frob->add_subcommand("check", "Check the crossed-algebra axioms");
    fcheck->add_option("file", file, "Crossed algebra file")->required();
    fcheck->add_option("--level", level, "basic or f1f2")->check(CLI::IsMember({"basic", "f1f2"}));
    auto* forb = frob->add_subcommand("orbifold", "Orbifold Frobenius algebra");
    forb->add_option("file", file, "Crossed algebra file")->required();

    auto* cc = app.add_subcommand("compose-check", "Composition law for a chain G -> H -> J");
    cc->add_option("--chain", file, "Chain file")->required();
    add_genus(cc);

    auto* card = app.add_subcommand("card", "Groupoid cardinality");
    card->add_option("file", file, "Groupoid file")->required();

    auto* par = app.add_subcommand("par", "Parallel sections of a span");
    par->add_option("file", file, "Span file")->required();

    auto* suite = app.add_subcommand("suite", "Seeded property suite");
    suite->add_option("--seed", opt.seed, "Corpus seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out;
        if (dw->parsed()) out = cmd_dw(group, genus, opt);
        else if (push->parsed()) out = cmd_push(file, genus, theory, opt);
        else if (orb->parsed()) out = cmd_orbifold(group, genus, theory, opt);
        else if (edw->parsed()) out = cmd_equivariant_dw(file, genus, opt);
        else if (tdw->parsed()) out = cmd_twisted_dw(group, file, opt);
        else if (fcheck->parsed()) out = cmd_frob_check(file, level, opt);
        else if (forb->parsed()) out = cmd_frob_orbifold(file, opt);
        else if (cc->parsed()) out = cmd_compose_check(file, genus, opt);
        else if (card->parsed()) out = cmd_card(file, opt);
        else if (par->parsed()) out = cmd_par(file, opt);
        else if (suite->parsed()) out = cmd_suite(opt);
        emit(out, opt);
        return out.code;
    } catch (const eqtft::InvalidInput& e) {
        std::cerr << "input error: " << e.axiom() << " violated; witness: " << e.witness() << '\n';
        return 2;
    } catch (const eqtft::Error& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return 1;
    }
}
