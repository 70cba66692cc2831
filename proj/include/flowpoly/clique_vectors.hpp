#pragma once

#include "flowpoly/graph_core.hpp"
#include "flowpoly/routes.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flowpoly {

enum class Sign : std::uint8_t { minus = 0, plus = 1 };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Encodes one maximal clique of G(H).
///
/// choice[v - 1] is the neighbor a_v picked by vertex v; signs[k] is a_{i,j}
/// for the k-th edge of H in lexicographic order.
struct CliqueVector {
    std::vector<int> choice;
    std::vector<Sign> signs;

    int at(int v) const { return choice.at(static_cast<std::size_t>(v - 1)); }
    int& at(int v) { return choice.at(static_cast<std::size_t>(v - 1)); }

    auto operator<=>(const CliqueVector&) const = default;
};

/// "(4,5,4,1,3,+,-,-,-,-,-)".
std::string to_string(const CliqueVector& a);

/// True iff the endpoints of e pick each other (a_i = j and a_j = i).
bool is_mutual(const BipartiteGraph& h, const CliqueVector& a, const BipartiteEdge& e);

struct ValidationResult {
    bool valid = true;
    std::string diagnostic;

    explicit operator bool() const { return valid; }
};

/// Checks the two defining conditions. Throws PreconditionError on an
/// arity mismatch.
ValidationResult validate_clique_vector(const BipartiteGraph& h, const CliqueVector& a);

/// Visits every clique vector once, in odometer order over (a_1..a_{n+m})
/// with the last vertex turning fastest. For each choice the all-minus
/// vector comes first, followed by its sign variants in binary order over
/// the mutual edges (first mutual edge most significant).
void for_each_clique_vector(const BipartiteGraph& h, const std::function<void(const CliqueVector&)>& visit);
std::vector<CliqueVector> enumerate_clique_vectors(const BipartiteGraph& h);

/// Maximal clique as a sorted list of route ids (equivalently sorted by
/// (i, j, a, b)).
class Clique {
public:
    Clique() = default;
    explicit Clique(std::vector<RouteId> ids);

    std::span<const RouteId> ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool contains(RouteId id) const;

    std::vector<Route> routes(const BipartiteGraph& h) const;
    std::vector<std::string> tokens(const BipartiteGraph& h) const;

    auto operator<=>(const Clique&) const = default;

private:
    std::vector<RouteId> ids_;
};

/// Number of routes in every maximal clique: n + m + |E(H)|.
std::size_t maximal_clique_size(const BipartiteGraph& h);

/// Clique map: routes through each beta_{i,j} per the three cases
/// (neither, exactly one, or both endpoints choose each other).
Clique phi(const BipartiteGraph& h, const CliqueVector& a);

/// Inverse of phi: read a_i, a_j and the sign off the routes supported on
/// each beta edge. Throws PreconditionError if C is not a maximal clique.
CliqueVector phi_inverse(const BipartiteGraph& h, const Clique& c);

/// Independent enumeration of all maximal cliques of the coherence graph
/// (Bron-Kerbosch with Tomita pivoting). Sorted.
std::vector<Clique> enumerate_maximal_cliques_oracle(const ExtendedDag& g);

} // namespace flowpoly
