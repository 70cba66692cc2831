#pragma once

#include "flowpoly/clique_vectors.hpp"
#include "flowpoly/graph_core.hpp"
#include "flowpoly/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flowpoly {

/// An edge of W(H): either an edge ij of H, or the pendant edge v-w_{v,u}.
struct WEdge {
    enum class Kind : std::uint8_t { base, leaf };

    Kind kind;
    int first;  ///< i (base) or leaf owner v
    int second; ///< j (base) or leaf tag u

    static WEdge base(int i, int j) { return {Kind::base, std::min(i, j), std::max(i, j)}; }
    static WEdge leaf(int owner, int tag) { return {Kind::leaf, owner, tag}; }

    auto operator<=>(const WEdge&) const = default;
};

/// "1-4" for a base edge, "w_2_5-2" for a pendant edge.
std::string to_string(const WEdge& e);
WEdge parse_wedge(const BipartiteGraph& h, const std::string& token);

/// Set of pairwise disjoint edges of W(H), kept sorted.
using Matching = std::vector<WEdge>;

std::vector<std::string> tokens(const Matching& m);

/// Throws PreconditionError unless m is a matching of W(H).
void check_matching(const WhiskeredGraph& w, const Matching& m);

/// Backtracking over the graph's edge order; each matching (as sorted edge
/// indices, the empty one included) is visited exactly once.
void for_each_matching(const SimpleGraph& g, const std::function<void(const std::vector<std::size_t>&)>& visit);
void for_each_matching(const WhiskeredGraph& w, const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(const WhiskeredGraph& w);

Polynomial matching_polynomial(const SimpleGraph& g);
Polynomial matching_polynomial(const WhiskeredGraph& w);

/// Matching map.
Matching psi(const BipartiteGraph& h, const CliqueVector& a);

/// Inverse of psi, reading a_v off leaf edges and base edges, and sending
/// uncovered left (right) vertices to their smallest (largest) neighbor.
CliqueVector psi_inverse(const BipartiteGraph& h, const Matching& m);

} // namespace flowpoly
