#include "flowpoly/serialize.hpp"

#include <limits>

namespace flowpoly {

Json big_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

Json graph_json(const BipartiteGraph& h)
{
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back({e.left, e.right});
    return {{"shores", {h.left_size(), h.right_size()}}, {"edges", edges}};
}

Json graph_json(const LabeledBipartiteGraph& g)
{
    Json out = graph_json(g.graph);
    if (g.relabeled) {
        Json labels = Json::object();
        for (std::size_t v = 0; v < g.original_labels.size(); ++v) labels[std::to_string(v + 1)] = g.original_labels[v];
        out["labels"] = labels;
    }
    return out;
}

Json dag_json(const ExtendedDag& g)
{
    auto name = [&](int v) {
        if (v == g.source()) return std::string("s");
        if (v == g.sink()) return std::string("t");
        return std::to_string(v);
    };
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({{"id", e.token}, {"tail", name(e.tail)}, {"head", name(e.head)}});
    return {{"base", graph_json(g.base())}, {"edges", edges}, {"dimension", dimension(g)}};
}

Json whisker_json(const WhiskeredGraph& w)
{
    Json leaves = Json::array();
    for (const auto& leaf : w.leaves()) leaves.push_back({{"id", leaf_token(leaf)}, {"attached", leaf.owner}});
    Json edges = Json::array();
    for (const auto& e : w.base().edges()) edges.push_back(to_string(WEdge::base(e.left, e.right)));
    for (const auto& leaf : w.leaves()) edges.push_back(to_string(WEdge::leaf(leaf.owner, leaf.tag)));
    return {{"base", graph_json(w.base())}, {"leaves", leaves}, {"edges", edges}};
}

Json coherence_json(const CoherenceGraph& cg)
{
    Json adjacency = Json::object();
    for (std::size_t r = 0; r < cg.routes.size(); ++r) {
        Json row = Json::array();
        for (auto other : cg.adjacency[r]) row.push_back(route_token(cg.routes[other]));
        adjacency[route_token(cg.routes[r])] = row;
    }
    return adjacency;
}

Json clique_vector_json(const BipartiteGraph& h, const CliqueVector& a)
{
    Json signs = Json::object();
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        signs[std::to_string(h.edge(k).left) + "-" + std::to_string(h.edge(k).right)] = std::string(1, sign_char(a.signs[k]));
    }
    return {{"a", a.choice}, {"signs", signs}};
}

Json clique_json(const BipartiteGraph& h, const Clique& c)
{
    return c.tokens(h);
}

Json matching_json(const Matching& m)
{
    return tokens(m);
}

Json polynomial_json(const Polynomial& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(big_json(c));
    return {{"coeffs", coeffs}};
}

Json ehrhart_json(const EhrhartData& e)
{
    Json counts = Json::array();
    for (const auto& c : e.counts) counts.push_back(big_json(c));
    Json coeffs = Json::array();
    for (const auto& c : e.polynomial.coeffs()) coeffs.push_back(c.str());
    return {{"dimension", e.dimension},
            {"counts", counts},
            {"polynomial", coeffs},
            {"hstar", polynomial_json(e.hstar)["coeffs"]},
            {"volume", big_json(e.volume)},
            {"leading_times_factorial", e.leading_volume.str()},
            {"out_of_sample", {{"t", e.dimension + 1}, {"count", big_json(e.next_count)}, {"interpolated", e.next_value.str()}}}};
}

Json lattice_json(const BipartiteGraph& h, const LatticeReport& lattice)
{
    Json edges = Json::array();
    for (auto [from, to] : lattice.edges) {
        Json edge = {{"from", clique_vector_json(h, lattice.nodes[from])}, {"to", clique_vector_json(h, lattice.nodes[to])}};
        if (auto w = covers(h, lattice.nodes[from], lattice.nodes[to])) edge["condition"] = w->condition;
        edges.push_back(edge);
    }
    return {{"nodes", lattice.node_count()},
            {"cover_edges", lattice.cover_edge_count()},
            {"cover_histogram", lattice.cover_histogram},
            {"acyclic", lattice.acyclic},
            {"unique_minimum", lattice.unique_minimum},
            {"unique_maximum", lattice.unique_maximum},
            {"half_open_faces", lattice.half_open.faces},
            {"half_open_failures", lattice.half_open.failures},
            {"edges", edges}};
}

Json report_json(const VerifyReport& report)
{
    Json points = Json::array();
    for (const auto& c : report.counts.lattice_points) points.push_back(big_json(c));
    Json counts = {{"routes", report.counts.routes},
                   {"conflicting_pairs", report.counts.conflicting_pairs},
                   {"clique_vectors", report.counts.clique_vectors},
                   {"maximal_cliques", report.counts.oracle_cliques},
                   {"matchings", report.counts.matchings},
                   {"cover_edges", report.counts.cover_edges},
                   {"dimension", report.counts.dimension},
                   {"lattice_points", points}};
    Json checks = Json::object();
    Json details = Json::object();
    for (const auto& c : report.checks) {
        checks[c.name] = c.passed ? "pass" : "fail";
        details[c.name] = c.detail;
    }
    return {{"instance", report.instance},
            {"counts", counts},
            {"hstar_covers", polynomial_json(report.hstar_covers)["coeffs"]},
            {"hstar_ehrhart", polynomial_json(report.hstar_ehrhart)["coeffs"]},
            {"matching_poly", polynomial_json(report.matching_poly)["coeffs"]},
            {"volume", big_json(report.volume)},
            {"checks", checks},
            {"details", details}};
}

} // namespace flowpoly
