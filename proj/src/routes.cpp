#include "flowpoly/routes.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <regex>

namespace flowpoly {

RouteId route_id(const BipartiteGraph& h, const Route& r)
{
    if ((r.a != 1 && r.a != 2) || (r.b != 1 && r.b != 2)) {
        throw PreconditionError("route copy indices must be 1 or 2");
    }
    return 4 * h.require_edge_index(r.i, r.j) + static_cast<std::size_t>(2 * (r.a - 1) + (r.b - 1));
}

Route route_from_id(const BipartiteGraph& h, RouteId id)
{
    const auto& e = h.edge(id / 4);
    return Route{e.left, e.right, static_cast<int>((id % 4) / 2) + 1, static_cast<int>(id % 2) + 1};
}

std::size_t route_count(const BipartiteGraph& h)
{
    return 4 * h.edge_count();
}

std::vector<Route> enumerate_routes(const ExtendedDag& g)
{
    const auto& h = g.base();
    std::vector<Route> out;
    out.reserve(route_count(h));
    for (RouteId id = 0; id < route_count(h); ++id) out.push_back(route_from_id(h, id));
    return out;
}

std::string route_token(const Route& r)
{
    return "a" + std::to_string(r.a) + "_" + std::to_string(r.i) + " b_" + std::to_string(r.i) + "_" +
           std::to_string(r.j) + " g_" + std::to_string(r.j) + "_" + std::to_string(r.b);
}

Route parse_route_token(const std::string& token)
{
    static const std::regex pattern(R"(a([12])_(\d+) b_(\d+)_(\d+) g_(\d+)_([12]))");
    std::smatch m;
    if (!std::regex_match(token, m, pattern)) throw ParseError("malformed route token: \"" + token + "\"");
    Route r{std::stoi(m[3]), std::stoi(m[4]), std::stoi(m[1]), std::stoi(m[6])};
    if (std::stoi(m[2]) != r.i || std::stoi(m[5]) != r.j) {
        throw ParseError("route token edges do not form a path: \"" + token + "\"");
    }
    return r;
}

std::vector<std::size_t> route_edges(const ExtendedDag& g, const Route& r)
{
    return {g.alpha(r.i, r.a), g.beta(r.i, r.j), g.gamma(r.j, r.b)};
}

std::vector<int> indicator_vector(const ExtendedDag& g, const Route& r)
{
    std::vector<int> v(g.edge_count(), 0);
    for (auto e : route_edges(g, r)) v[e] = 1;
    return v;
}

bool framing_less(const ExtendedDag& g, int v, std::size_t e1, std::size_t e2)
{
    if (!g.is_inner(v)) throw PreconditionError("framing is only defined at inner vertices");
    const DagEdge& x = g.edge(e1);
    const DagEdge& y = g.edge(e2);
    const bool incoming = x.head == v && y.head == v;
    const bool outgoing = x.tail == v && y.tail == v;
    if (!incoming && !outgoing) {
        throw PreconditionError("edges " + x.token + " and " + y.token + " are not comparable at vertex " +
                                std::to_string(v));
    }
    if (x.kind != y.kind) {
        throw InconsistencyError("edges of different kinds on the same side of a vertex");
    }
    switch (x.kind) {
    case DagEdgeKind::alpha:
    case DagEdgeKind::gamma:
        return x.copy < y.copy;
    case DagEdgeKind::beta:
        // Into j the beta edges are ordered by tail, out of i by head.
        return incoming ? x.tail < y.tail : x.head < y.head;
    }
    return false;
}

std::string to_string(const ConflictKind& c)
{
    switch (c.site) {
    case ConflictSite::beta_cross:
        return "beta-cross at edge " + std::to_string(c.edge.left) + "-" + std::to_string(c.edge.right);
    case ConflictSite::source_side:
        return "source-side cross at vertex " + std::to_string(c.vertex);
    case ConflictSite::sink_side:
        return "sink-side cross at vertex " + std::to_string(c.vertex);
    }
    return {};
}

std::optional<ConflictKind> conflict(const Route& r1, const Route& r2)
{
    if (r1 == r2) throw PreconditionError("conflict() needs two distinct routes");
    if (r1.i == r2.i && r1.j == r2.j) {
        if (r1.a != r2.a && r1.b != r2.b && (r1.a < r2.a) != (r1.b < r2.b)) {
            return ConflictKind{ConflictSite::beta_cross, r1.i, BipartiteEdge{r1.i, r1.j}};
        }
        return std::nullopt;
    }
    if (r1.i == r2.i) {
        if (r1.a != r2.a && (r1.a < r2.a) != (r1.j < r2.j)) {
            return ConflictKind{ConflictSite::source_side, r1.i, {}};
        }
        return std::nullopt;
    }
    if (r1.j == r2.j) {
        if (r1.b != r2.b && (r1.i < r2.i) != (r1.b < r2.b)) {
            return ConflictKind{ConflictSite::sink_side, r1.j, {}};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

struct PathView {
    std::vector<int> vertices;
    std::vector<std::size_t> edges; // edges[k] joins vertices[k] -> vertices[k+1]
};

PathView path_of(const ExtendedDag& g, const Route& r)
{
    return {{g.source(), r.i, r.j, g.sink()}, route_edges(g, r)};
}

int sign_of(const ExtendedDag& g, int v, std::size_t e1, std::size_t e2)
{
    if (framing_less(g, v, e1, e2)) return -1;
    if (framing_less(g, v, e2, e1)) return 1;
    return 0;
}

} // namespace

bool coherent_by_definition(const ExtendedDag& g, const Route& r1, const Route& r2)
{
    const PathView p = path_of(g, r1);
    const PathView q = path_of(g, r2);
    for (std::size_t x = 0; x < p.vertices.size(); ++x) {
        if (!g.is_inner(p.vertices[x])) continue;
        auto it = std::find(q.vertices.begin(), q.vertices.end(), p.vertices[x]);
        if (it == q.vertices.end()) continue;
        std::size_t y = static_cast<std::size_t>(it - q.vertices.begin());

        // Grow the shared subroute backwards to u and forwards to v.
        std::size_t pu = x;
        std::size_t qu = y;
        while (pu > 0 && qu > 0 && p.edges[pu - 1] == q.edges[qu - 1]) {
            --pu;
            --qu;
        }
        std::size_t pv = x;
        std::size_t qv = y;
        while (pv < p.edges.size() && qv < q.edges.size() && p.edges[pv] == q.edges[qv]) {
            ++pv;
            ++qv;
        }
        // Reaching s (or t) means the partial routes coincide there: no order.
        if (pu == 0 || qu == 0 || pv == p.edges.size() || qv == q.edges.size()) continue;

        int prefix = sign_of(g, p.vertices[pu], p.edges[pu - 1], q.edges[qu - 1]);
        int suffix = sign_of(g, p.vertices[pv], p.edges[pv], q.edges[qv]);
        if (prefix != 0 && suffix != 0 && prefix != suffix) return false;
    }
    return true;
}

Orientation cw_cmp(const Route& r1, const Route& r2)
{
    auto c = conflict(r1, r2);
    if (!c) throw PreconditionError("cw_cmp() called on a coherent pair");
    bool first_prefix_smaller = false;
    switch (c->site) {
    case ConflictSite::beta_cross:
    case ConflictSite::source_side:
        first_prefix_smaller = r1.a < r2.a;
        break;
    case ConflictSite::sink_side:
        first_prefix_smaller = r1.i < r2.i;
        break;
    }
    return first_prefix_smaller ? Orientation::first_cw_of_second : Orientation::second_cw_of_first;
}

std::size_t CoherenceGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& nb : adjacency) total += nb.size();
    return total / 2;
}

std::size_t CoherenceGraph::conflicting_pair_count() const
{
    const std::size_t n = routes.size();
    return n * (n - 1) / 2 - edge_count();
}

bool CoherenceGraph::adjacent(RouteId a, RouteId b) const
{
    const auto& nb = adjacency.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

CoherenceGraph coherence_graph(const ExtendedDag& g)
{
    CoherenceGraph cg;
    cg.routes = enumerate_routes(g);
    cg.adjacency.assign(cg.routes.size(), {});
    for (RouteId a = 0; a < cg.routes.size(); ++a) {
        for (RouteId b = a + 1; b < cg.routes.size(); ++b) {
            if (!conflict(cg.routes[a], cg.routes[b])) {
                cg.adjacency[a].push_back(b);
                cg.adjacency[b].push_back(a);
            }
        }
    }
    for (auto& nb : cg.adjacency) std::sort(nb.begin(), nb.end());
    return cg;
}

} // namespace flowpoly
