#include "doctest.h"

#include "golden.hpp"
#include "oracles.hpp"

#include "flowpoly/ehrhart.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/matchings.hpp"
#include "flowpoly/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

using namespace flowpoly;

namespace {

FlowPoint route_point(const ExtendedDag& g, const Route& r)
{
    FlowPoint p;
    for (int x : indicator_vector(g, r)) p.values.push_back(x);
    p.t = 1;
    return p;
}

std::vector<std::vector<std::int64_t>> vertex_rows(const ExtendedDag& g, const Clique& c)
{
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : c.routes(g.base())) {
        const auto v = indicator_vector(g, r);
        rows.emplace_back(v.begin(), v.end());
    }
    return rows;
}

} // namespace

TEST_CASE("lattice point counts")
{
    const ExtendedDag g = extend(complete_bipartite(3, 2));
    CHECK(count_lattice_points(g, 0) == 1);
    CHECK(count_lattice_points(g, 1) == 24);
    CHECK(count_lattice_points(g, 2) == 258);
    CHECK_THROWS_AS(count_lattice_points(g, -1), PreconditionError);
}

TEST_CASE("product formula agrees with direct enumerations")
{
    for (const auto& inst : golden::instances()) {
        const ExtendedDag g = extend(inst.graph);
        for (std::size_t k = 0; k < inst.counts.size(); ++k) {
            const int t = static_cast<int>(k) + 1;
            CHECK_MESSAGE(count_lattice_points(g, t) == inst.counts[k], inst.name << " t=" << t);
            if (t <= 2) {
                CHECK(count_lattice_points(g, t) == oracle::naive_flow_count(g, t));
                CHECK(count_lattice_points(g, t) == oracle::distinct_route_sums(g, t));
            }
        }
        std::size_t visited = 0;
        for_each_flow_point(g, 2, [&](const FlowPoint& p) {
            validate_flow(g, p);
            ++visited;
        });
        CHECK(visited == oracle::naive_flow_count(g, 2));
    }
}

TEST_CASE("Ehrhart data of K3,2")
{
    const ExtendedDag g = extend(complete_bipartite(3, 2));
    const EhrhartData e = ehrhart_data(g);
    CHECK(e.dimension == 10);
    CHECK(e.counts.size() == 11);
    CHECK(e.polynomial.coeff(0) == 1);
    CHECK(e.polynomial.degree() == 10);
    CHECK(e.hstar == Polynomial{1, 13, 49, 61, 28, 4});
    CHECK(e.hstar.coeff(1) == e.counts[1] - (e.dimension + 1));
    CHECK(e.volume == 156);
    CHECK(e.leading_volume == 156);
    CHECK(BigRational(e.next_count) == e.next_value);
    CHECK(e.next_count == count_lattice_points(g, 11));
    CHECK(hstar_via_ehrhart(g) == e.hstar);
}

TEST_CASE("h* through covers, counts and matchings")
{
    for (const auto& inst : golden::instances()) {
        const Polynomial mu(std::vector<BigInt>(inst.mu.begin(), inst.mu.end()));
        CHECK_MESSAGE(hstar_via_covers(inst.graph) == mu, inst.name);
        if (inst.graph.edge_count() <= 6) CHECK_MESSAGE(hstar_via_ehrhart(extend(inst.graph)) == mu, inst.name);
    }
}

TEST_CASE("negative h* is reported")
{
    CHECK_THROWS_AS(hstar_from_counts({1, 1, 1}, 2), InconsistencyError);
    // the unit square: i(t) = (t+1)^2, h* = 1 + z
    CHECK(hstar_from_counts({1, 4, 9}, 2) == Polynomial{1, 1});
}

TEST_CASE("flow validation")
{
    const ExtendedDag g = extend(complete_bipartite(2, 2));
    FlowPoint p = route_point(g, Route{1, 3, 1, 1});
    CHECK_NOTHROW(validate_flow(g, p));
    p.values[g.gamma(3, 1)] = 0;
    p.values[g.gamma(4, 1)] = 1;
    CHECK_THROWS_AS(validate_flow(g, p), PreconditionError);
    FlowPoint q = route_point(g, Route{1, 3, 1, 1});
    q.t = 2;
    CHECK_THROWS_AS(validate_flow(g, q), PreconditionError);
    q.values.pop_back();
    CHECK_THROWS_AS(validate_flow(g, q), PreconditionError);
}

TEST_CASE("every maximal simplex is unimodular")
{
    for (const auto& inst : golden::instances()) {
        if (inst.cliques > 200) continue;
        const ExtendedDag g = extend(inst.graph);
        const auto expected_rank = static_cast<std::size_t>(dimension(g));
        for (const auto& c : enumerate_maximal_cliques_oracle(g)) {
            const auto u = unimodularity_check(g, c);
            REQUIRE_MESSAGE(u.unimodular, u.witness);
            REQUIRE(u.rank == expected_rank);
            for (const auto& f : u.invariant_factors) REQUIRE(f == 1);
        }
    }
}

TEST_CASE("unimodularity negative controls")
{
    const ExtendedDag g = extend(complete_bipartite(3, 2));
    const Clique c = phi(g.base(), CliqueVector{{4, 5, 4, 1, 3}, {Sign::minus, Sign::minus, Sign::minus, Sign::minus,
                                                                     Sign::minus, Sign::minus}});
    auto rows = vertex_rows(g, c);

    // a 0/1 vector that is not a flow
    auto bad = rows;
    std::fill(bad.back().begin(), bad.back().end(), 0);
    bad.back()[g.alpha(1, 1)] = 1;
    CHECK_FALSE(unimodularity_check(g, bad).unimodular);

    // a repeated vertex makes the simplex degenerate
    auto degenerate = rows;
    degenerate.back() = degenerate.front();
    const auto u = unimodularity_check(g, degenerate);
    CHECK_FALSE(u.unimodular);
    CHECK(u.rank < 10);
    CHECK_FALSE(u.witness.empty());

    // the untouched simplex passes
    CHECK(unimodularity_check(g, rows).unimodular);
}

TEST_CASE("half-open owner of a vertex")
{
    const auto h = complete_bipartite(2, 2);
    const ExtendedDag g = extend(h);
    const HalfOpenTriangulation tri(h);
    for (const auto& r : enumerate_routes(g)) {
        const auto own = tri.locate(route_point(g, r));
        const Clique& c = tri.clique(own.owner);
        REQUIRE(c.contains(route_id(h, r)));
        // lambda is the indicator of r
        const auto ids = c.ids();
        for (std::size_t k = 0; k < ids.size(); ++k) CHECK(own.barycentric[k] == (ids[k] == route_id(h, r) ? 1 : 0));
        // no removed facet contains r
        for (const auto& b : upper_covers(h, tri.nodes()[own.owner])) {
            CHECK_FALSE(phi(h, b).contains(route_id(h, r)));
        }
    }
}

TEST_CASE("half-open partition of dilates")
{
    for (const auto& inst : golden::instances()) {
        if (inst.cliques > 200) continue;
        const auto& h = inst.graph;
        const ExtendedDag g = extend(h);
        const HalfOpenTriangulation tri(h);
        const Polynomial mu(std::vector<BigInt>(inst.mu.begin(), inst.mu.end()));
        const int d = dimension(g);
        for (std::int64_t t = 1; t <= 2; ++t) {
            std::size_t points = 0;
            std::map<std::size_t, BigInt> per_class;
            for_each_flow_point(g, t, [&](const FlowPoint& p) {
                const auto owners = tri.owners(p);
                REQUIRE(owners.size() == 1);
                std::int64_t sum = 0;
                for (auto x : owners.front().barycentric) {
                    REQUIRE(x >= 0);
                    sum += x;
                }
                REQUIRE(sum == t);
                ++per_class[tri.removed_facets(owners.front().owner)];
                ++points;
            });
            CHECK(BigInt(points) == count_lattice_points(g, t));
            for (const auto& [k, n] : per_class) {
                CHECK(n == mu.coeff(k) * binomial(t - static_cast<std::int64_t>(k) + d, d));
            }
        }
    }
}

TEST_CASE("locate rejects a non-flow")
{
    const auto h = complete_bipartite(2, 2);
    FlowPoint p = route_point(extend(h), Route{1, 3, 1, 1});
    p.values[0] = 3;
    CHECK_THROWS_AS(half_open_locate(h, p), PreconditionError);
}
