#pragma once

#include "flowpoly/clique_vectors.hpp"
#include "flowpoly/graph_core.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flowpoly {

/// Why phi(a) is covered by phi(b): which of the four cover conditions
/// matched, and the entries that changed ("a_2: 5 -> 4", "a_{1,4}: - -> +").
struct CoverWitness {
    int condition = 0;
    std::vector<std::string> changes;
    /// False when more than one condition matched. The conditions are
    /// mutually exclusive, so this flags a bug.
    bool exclusive = true;
};

/// Decides phi(a) ⋖ phi(b) from the entries of a and b alone.
std::optional<CoverWitness> covers(const BipartiteGraph& h, const CliqueVector& a, const CliqueVector& b);

/// Every b with phi(a) ⋖ phi(b), one per edge of psi(a), in psi(a) order.
std::vector<CliqueVector> upper_covers(const BipartiteGraph& h, const CliqueVector& a);

/// |psi(a)|. Throws InconsistencyError if upper_covers disagrees.
std::size_t cover_count(const BipartiteGraph& h, const CliqueVector& a);

/// True iff C1 and C2 differ in one route each and the route of C1 is cw
/// of the route of C2, i.e. C2 is a single ccw rotation of C1.
bool covers_oracle(const BipartiteGraph& h, const Clique& c1, const Clique& c2);

/// Clique vector a^S built from the bounds the routes of a face S put on
/// each a_v. Left vertices take their lower bound, right vertices their
/// upper bound.
CliqueVector top_vector_for_face(const BipartiteGraph& h, const std::vector<Route>& face);

struct HalfOpenSampleReport {
    std::size_t faces = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

/// Cover digraph over all clique vectors.
struct LatticeReport {
    std::vector<CliqueVector> nodes;                     ///< enumeration order
    std::vector<std::pair<std::size_t, std::size_t>> edges; ///< (a, b) with phi(a) ⋖ phi(b)
    std::vector<std::size_t> cover_histogram;            ///< k -> #nodes with k upper covers
    bool acyclic = false;
    bool unique_minimum = false;
    bool unique_maximum = false;
    std::size_t maximum = 0;
    HalfOpenSampleReport half_open;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t cover_edge_count() const { return edges.size(); }
};

inline constexpr std::uint64_t default_seed = 20240611;
inline constexpr std::size_t default_face_samples = 200;

/// Builds the cover digraph and checks its poset structure. Also samples
/// faces S and checks that among the cliques containing S, phi(a^S) is the
/// only one with no upper cover that still contains S.
LatticeReport build_lattice(const BipartiteGraph& h, std::uint64_t seed = default_seed,
                            std::size_t face_samples = default_face_samples);

/// The face check on its own, against a prebuilt node list and cover
/// digraph (successor lists by node index).
HalfOpenSampleReport sample_half_open_hypothesis(const BipartiteGraph& h, const std::vector<CliqueVector>& nodes,
                                                 const std::vector<std::vector<std::size_t>>& successors,
                                                 std::uint64_t seed, std::size_t face_samples);

} // namespace flowpoly
