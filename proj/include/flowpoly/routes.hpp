#pragma once

#include "flowpoly/graph_core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flowpoly {

/// The s-t path alpha_{a,i} beta_{i,j} gamma_{j,b} of G(H).
struct Route {
    int i = 0;
    int j = 0;
    int a = 1;
    int b = 1;

    auto operator<=>(const Route&) const = default;
};

/// Position of a route in enumerate_routes order:
/// 4 * (lexicographic index of ij) + 2 * (a - 1) + (b - 1).
using RouteId = std::size_t;

RouteId route_id(const BipartiteGraph& h, const Route& r);
Route route_from_id(const BipartiteGraph& h, RouteId id);
std::size_t route_count(const BipartiteGraph& h);

/// All 4|E(H)| routes ordered by (i, j, a, b).
std::vector<Route> enumerate_routes(const ExtendedDag& g);

/// "a{a}_{i} b_{i}_{j} g_{j}_{b}".
std::string route_token(const Route& r);
Route parse_route_token(const std::string& token);

/// The three edge coordinates of the route, in path order.
std::vector<std::size_t> route_edges(const ExtendedDag& g, const Route& r);
std::vector<int> indicator_vector(const ExtendedDag& g, const Route& r);

/// Canonical bipartite framing at inner vertex v: true iff e1 precedes e2.
/// Throws PreconditionError unless both edges enter v or both leave v.
bool framing_less(const ExtendedDag& g, int v, std::size_t e1, std::size_t e2);

enum class ConflictSite { beta_cross, source_side, sink_side };

/// Where two routes cross. `vertex` is the shared inner vertex (i for
/// source_side, j for sink_side, i for beta_cross); `edge` is the shared
/// H-edge for beta_cross.
struct ConflictKind {
    ConflictSite site;
    int vertex = 0;
    BipartiteEdge edge{};

    bool operator==(const ConflictKind&) const = default;
};

std::string to_string(const ConflictKind& c);

/// Specialized test for length-3 routes: nullopt iff coherent.
std::optional<ConflictKind> conflict(const Route& r1, const Route& r2);

/// Coherence straight from the general definition: for every maximal
/// shared subroute [u, v], compare the prefix order at u with the suffix
/// order at v using framing_less. Used to validate conflict().
bool coherent_by_definition(const ExtendedDag& g, const Route& r1, const Route& r2);

enum class Orientation { first_cw_of_second, second_cw_of_first };

/// For a conflicting pair, which route is clockwise of the other: R1 is
/// cw of R2 when R1's prefix precedes and R1's suffix follows R2's.
/// Throws PreconditionError on a coherent pair.
Orientation cw_cmp(const Route& r1, const Route& r2);

inline bool is_cw_of(const Route& r1, const Route& r2)
{
    return conflict(r1, r2).has_value() && cw_cmp(r1, r2) == Orientation::first_cw_of_second;
}

/// Adjacency over route ids: coherent pairs.
struct CoherenceGraph {
    std::vector<Route> routes;
    std::vector<std::vector<RouteId>> adjacency;

    std::size_t edge_count() const;
    std::size_t conflicting_pair_count() const;
    bool adjacent(RouteId a, RouteId b) const;
};

CoherenceGraph coherence_graph(const ExtendedDag& g);

} // namespace flowpoly
