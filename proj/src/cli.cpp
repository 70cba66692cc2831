#include "flowpoly/cli.hpp"

#include "flowpoly/errors.hpp"
#include "flowpoly/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace flowpoly {

namespace {

struct Options {
    std::string graph;
    std::string format = "text";
    std::string method = "covers";
    std::int64_t tmax = -1;
    std::uint64_t seed = default_seed;
    std::size_t samples = default_face_samples;
};

LabeledBipartiteGraph read_graph(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open graph file: " + path);
        ss << in.rdbuf();
    }
    return parse_labeled_bipartite(ss.str());
}

bool json_mode(const Options& o)
{
    return o.format == "json";
}

void emit(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

std::string matching_text(const Matching& m)
{
    std::string s = "{";
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? ", " : "") + to_string(m[k]);
    return s + "}";
}

void print_report(std::ostream& out, const VerifyReport& report)
{
    out << (report.instance.empty() ? std::string("graph") : report.instance) << ": "
        << (report.passed() ? "PASS" : "FAIL") << '\n';
    out << "  h* = " << report.hstar_ehrhart.to_string() << ", volume " << report.volume << '\n';
    for (const auto& c : report.checks) {
        out << "  " << c.name << ": " << (c.passed ? "pass" : "fail");
        if (!c.detail.empty()) out << " (" << c.detail << ')';
        out << '\n';
    }
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto g = read_graph(o.graph);
    const auto& h = g.graph;
    if (json_mode(o)) {
        emit(out, {{"valid", true}, {"graph", graph_json(g)}});
        return exit_ok;
    }
    out << "valid: n = " << h.left_size() << ", m = " << h.right_size() << ", |E| = " << h.edge_count() << '\n';
    if (g.relabeled) {
        for (std::size_t v = 0; v < g.original_labels.size(); ++v) {
            out << "  " << (v + 1) << " <- " << g.original_labels[v] << '\n';
        }
    }
    return exit_ok;
}

int cmd_extend(const Options& o, std::ostream& out)
{
    const ExtendedDag g = extend(read_graph(o.graph).graph);
    if (json_mode(o)) {
        emit(out, dag_json(g));
        return exit_ok;
    }
    out << "G(H): " << g.edge_count() << " edges, dimension " << dimension(g) << '\n';
    for (const auto& e : g.edges()) {
        auto name = [&](int v) { return v == g.source() ? std::string("s") : v == g.sink() ? std::string("t") : std::to_string(v); };
        out << e.token << ": " << name(e.tail) << " -> " << name(e.head) << '\n';
    }
    return exit_ok;
}

int cmd_whisker(const Options& o, std::ostream& out)
{
    const WhiskeredGraph w = whisker(read_graph(o.graph).graph);
    if (json_mode(o)) {
        emit(out, whisker_json(w));
        return exit_ok;
    }
    for (const auto& e : whisker_json(w)["edges"]) out << e.get<std::string>() << '\n';
    return exit_ok;
}

int cmd_routes(const Options& o, std::ostream& out)
{
    const ExtendedDag g = extend(read_graph(o.graph).graph);
    if (json_mode(o)) {
        const CoherenceGraph cg = coherence_graph(g);
        Json routes = Json::array();
        for (const auto& r : cg.routes) routes.push_back(route_token(r));
        emit(out, {{"count", cg.routes.size()},
                   {"conflicting_pairs", cg.conflicting_pair_count()},
                   {"routes", routes},
                   {"coherence_graph", coherence_json(cg)}});
        return exit_ok;
    }
    for (const auto& r : enumerate_routes(g)) out << route_token(r) << '\n';
    return exit_ok;
}

int cmd_cliques(const Options& o, std::ostream& out)
{
    const BipartiteGraph h = read_graph(o.graph).graph;
    Json all = Json::array();
    for_each_clique_vector(h, [&](const CliqueVector& a) {
        const Clique c = phi(h, a);
        if (json_mode(o)) {
            all.push_back({{"vector", clique_vector_json(h, a)}, {"clique", clique_json(h, c)}});
            return;
        }
        out << to_string(a);
        const auto toks = c.tokens(h);
        for (std::size_t k = 0; k < toks.size(); ++k) out << (k ? "; " : "  ") << toks[k];
        out << '\n';
    });
    if (json_mode(o)) emit(out, all);
    return exit_ok;
}

int cmd_matchings(const Options& o, std::ostream& out)
{
    const WhiskeredGraph w = whisker(read_graph(o.graph).graph);
    const Polynomial mu = matching_polynomial(w);
    if (json_mode(o)) {
        Json all = Json::array();
        for_each_matching(w, [&](const Matching& m) { all.push_back(matching_json(m)); });
        emit(out, {{"polynomial", polynomial_json(mu)}, {"matchings", all}});
        return exit_ok;
    }
    out << "mu(W(H);z) = " << mu.to_string() << '\n';
    for_each_matching(w, [&](const Matching& m) { out << matching_text(m) << '\n'; });
    return exit_ok;
}

int cmd_lattice(const Options& o, std::ostream& out)
{
    const BipartiteGraph h = read_graph(o.graph).graph;
    const LatticeReport lattice = build_lattice(h, o.seed, o.samples);
    const bool ok = lattice.acyclic && lattice.unique_minimum && lattice.unique_maximum && lattice.half_open.failures == 0;
    if (json_mode(o)) {
        emit(out, lattice_json(h, lattice));
    } else {
        out << "nodes: " << lattice.node_count() << '\n';
        out << "cover edges: " << lattice.cover_edge_count() << '\n';
        out << "cover histogram: " << Polynomial::from_counts(lattice.cover_histogram).to_string() << '\n';
        out << "acyclic: " << (lattice.acyclic ? "yes" : "no") << '\n';
        out << "unique minimum: " << (lattice.unique_minimum ? "yes" : "no") << '\n';
        out << "unique maximum: " << (lattice.unique_maximum ? "yes" : "no") << '\n';
        out << "sampled faces: " << lattice.half_open.faces << ", failures " << lattice.half_open.failures << '\n';
        if (!lattice.half_open.first_failure.empty()) out << "  " << lattice.half_open.first_failure << '\n';
    }
    return ok ? exit_ok : exit_verification_failed;
}

int cmd_hstar(const Options& o, std::ostream& out)
{
    const BipartiteGraph h = read_graph(o.graph).graph;
    const Polynomial p = o.method == "covers" ? hstar_via_covers(h) : hstar_via_ehrhart(extend(h));
    if (json_mode(o)) {
        emit(out, {{"method", o.method}, {"coeffs", polynomial_json(p)["coeffs"]}});
    } else {
        out << p.to_string() << '\n';
    }
    return exit_ok;
}

int cmd_ehrhart(const Options& o, std::ostream& out)
{
    const ExtendedDag g = extend(read_graph(o.graph).graph);
    const EhrhartData data = ehrhart_data(g);
    const std::int64_t tmax = o.tmax < 0 ? data.dimension + 1 : o.tmax;
    std::vector<BigInt> counts;
    for (std::int64_t t = 0; t <= tmax; ++t) counts.push_back(count_lattice_points(g, t));
    const bool ok = BigRational(data.next_count) == data.next_value;

    if (json_mode(o)) {
        Json j = ehrhart_json(data);
        Json listed = Json::array();
        for (const auto& c : counts) listed.push_back(big_json(c));
        j["counts"] = listed;
        emit(out, j);
    } else {
        out << "dimension: " << data.dimension << '\n';
        for (std::size_t t = 0; t < counts.size(); ++t) out << "i(" << t << ") = " << counts[t] << '\n';
        out << "i(t) = " << data.polynomial.to_string() << '\n';
        out << "h* = " << data.hstar.to_string() << '\n';
        out << "volume: " << data.volume << '\n';
        out << "out-of-sample i(" << data.dimension + 1 << "): counted " << data.next_count << ", interpolated "
            << data.next_value << '\n';
    }
    return ok ? exit_ok : exit_verification_failed;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const BipartiteGraph h = read_graph(o.graph).graph;
    const VerifyReport report = verify_all(h, o.graph, {o.seed, o.samples});
    if (json_mode(o)) {
        emit(out, report_json(report));
    } else {
        print_report(out, report);
    }
    return report.passed() ? exit_ok : exit_verification_failed;
}

int cmd_corpus(const Options& o, std::ostream& out)
{
    bool ok = true;
    Json all = Json::array();
    for (const auto& instance : builtin_corpus()) {
        const VerifyReport report = verify_all(instance.graph, instance.name, {o.seed, o.samples});
        ok = ok && report.passed();
        if (json_mode(o)) {
            all.push_back(report_json(report));
        } else {
            print_report(out, report);
        }
    }
    if (json_mode(o)) emit(out, all);
    return ok ? exit_ok : exit_verification_failed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Flow polytopes of extended bipartite graphs: DKK triangulations, matchings and h*"};
    app.name("flowpoly");
    app.require_subcommand(1, 1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
        int (*body)(const Options&, std::ostream&);
    };
    const Command commands[] = {
        {"validate", "parse and validate H", cmd_validate},
        {"extend", "print the extension G(H)", cmd_extend},
        {"whisker", "print the almost-degree-whiskered graph W(H)", cmd_whisker},
        {"routes", "list the routes of G(H)", cmd_routes},
        {"cliques", "list clique vectors with their maximal cliques", cmd_cliques},
        {"matchings", "list the matchings of W(H) and the matching polynomial", cmd_matchings},
        {"lattice", "build the framing lattice and check its poset structure", cmd_lattice},
        {"hstar", "compute the h*-polynomial", cmd_hstar},
        {"ehrhart", "count lattice points and interpolate the Ehrhart polynomial", cmd_ehrhart},
        {"verify", "run every cross-check on H", cmd_verify},
        {"corpus", "run verify on the built-in instances", cmd_corpus},
    };

    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        if (std::string(c.name) != "corpus") sub->add_option("--graph", o.graph, "graph file (JSON or text), - for stdin")->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
        const std::string name = c.name;
        if (name == "hstar") sub->add_option("--method", o.method, "covers or ehrhart")->check(CLI::IsMember({"covers", "ehrhart"}));
        if (name == "ehrhart") sub->add_option("--tmax", o.tmax, "largest dilation to count (default d+1)")->check(CLI::NonNegativeNumber);
        if (name == "lattice" || name == "verify" || name == "corpus") {
            sub->add_option("--seed", o.seed, "seed for sampled face checks");
            sub->add_option("--samples", o.samples, "number of sampled faces");
        }
        subs.emplace_back(sub, &c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    for (const auto& [sub, command] : subs) {
        if (!sub->parsed()) continue;
        try {
            return command->body(o, out);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << '\n';
            return exit_invalid;
        } catch (const ValidationError& e) {
            err << "error: " << e.what() << '\n';
            return exit_invalid;
        } catch (const InconsistencyError& e) {
            err << "verification failed: " << e.what() << '\n';
            return exit_verification_failed;
        } catch (const PreconditionError& e) {
            err << "usage error: " << e.what() << '\n';
            return exit_usage;
        }
    }
    return exit_usage;
}

} // namespace flowpoly
