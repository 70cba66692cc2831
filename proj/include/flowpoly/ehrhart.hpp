#pragma once

#include "flowpoly/clique_vectors.hpp"
#include "flowpoly/graph_core.hpp"
#include "flowpoly/numeric.hpp"
#include "flowpoly/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flowpoly {

/// Integer flow on G(H) of value t, one entry per edge in coordinate order.
struct FlowPoint {
    std::vector<std::int64_t> values;
    std::int64_t t = 0;

    auto operator<=>(const FlowPoint&) const = default;
};

/// Throws PreconditionError unless p is a nonnegative integer flow of value
/// p.t on G: conservation at every inner vertex, p.t leaving s.
void validate_flow(const ExtendedDag& g, const FlowPoint& p);

/// Every integer flow of value t, built from the beta loads and the splits
/// of each load over the two parallel alpha and gamma edges.
void for_each_flow_point(const ExtendedDag& g, std::int64_t t, const std::function<void(const FlowPoint&)>& visit);

/// i(t) = sum over beta loads b with |b| = t of prod_i (d_i + 1) prod_j (e_j + 1).
BigInt count_lattice_points(const ExtendedDag& g, std::int64_t t);

struct EhrhartData {
    int dimension = 0;
    std::vector<BigInt> counts; ///< i(0..d)
    RationalPolynomial polynomial;
    Polynomial hstar;
    BigInt volume;              ///< sum of h*
    BigRational leading_volume; ///< leading coefficient times d!
    BigInt next_count;          ///< i(d+1) counted directly
    BigRational next_value;     ///< interpolant at d+1
};

/// Counts i(0..d+1) (concurrently), interpolates and reads off h*.
/// Throws InconsistencyError if an h* coefficient comes out negative.
EhrhartData ehrhart_data(const ExtendedDag& g);

RationalPolynomial ehrhart_polynomial(const ExtendedDag& g);

/// h*_j = sum_{k <= j} (-1)^k C(d+1, k) i(j - k).
Polynomial hstar_via_ehrhart(const ExtendedDag& g);
Polynomial hstar_from_counts(const std::vector<BigInt>& counts, int dimension);

/// Coefficient k counts the clique vectors with k upper covers.
Polynomial hstar_via_covers(const BipartiteGraph& h);

struct UnimodularityResult {
    bool unimodular = false;
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors;
    std::string witness; ///< why it failed
};

/// Vertices of the clique must be affinely independent unit flows whose
/// differences generate a saturated sublattice of rank d.
UnimodularityResult unimodularity_check(const ExtendedDag& g, const Clique& c);
UnimodularityResult unimodularity_check(const ExtendedDag& g, const std::vector<std::vector<std::int64_t>>& vertices);

struct HalfOpenMembership {
    std::size_t owner = 0;                 ///< index into HalfOpenTriangulation::nodes()
    std::vector<std::int64_t> barycentric; ///< per route of the owner, in id order
};

/// The DKK triangulation with each simplex stripped of the facets it shares
/// with its upper covers.
class HalfOpenTriangulation {
public:
    explicit HalfOpenTriangulation(const BipartiteGraph& h);

    const std::vector<CliqueVector>& nodes() const { return nodes_; }
    const Clique& clique(std::size_t x) const { return simplices_[x].clique; }
    std::size_t removed_facets(std::size_t x) const { return simplices_[x].departing.size(); }

    /// Every simplex whose half-open part contains p.
    std::vector<HalfOpenMembership> owners(const FlowPoint& p) const;

    /// The unique owner of p. Throws InconsistencyError on zero or several.
    HalfOpenMembership locate(const FlowPoint& p) const;

private:
    struct Simplex {
        Clique clique;
        std::vector<std::vector<std::size_t>> route_edges; ///< per route
        std::vector<std::size_t> pivot_rows;               ///< coordinates read by the inverse
        std::vector<std::vector<std::int64_t>> inverse;    ///< lambda = inverse * p[pivot_rows]
        std::vector<std::size_t> departing;                ///< route positions leaving on an upper cover
    };

    BipartiteGraph h_;
    ExtendedDag g_;
    std::vector<CliqueVector> nodes_;
    std::vector<Simplex> simplices_;
};

HalfOpenMembership half_open_locate(const HalfOpenTriangulation& tri, const FlowPoint& p);
/// One-off form; builds the triangulation of H first.
HalfOpenMembership half_open_locate(const BipartiteGraph& h, const FlowPoint& p);

} // namespace flowpoly
