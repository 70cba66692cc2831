#include "doctest.h"

#include "golden.hpp"

#include "flowpoly/errors.hpp"
#include "flowpoly/routes.hpp"
#include "flowpoly/verify.hpp"

#include <vector>

using namespace flowpoly;

namespace {

Route r(int a, int i, int j, int b) { return Route{i, j, a, b}; }

} // namespace

TEST_CASE("routes of K3,2")
{
    const auto h = complete_bipartite(3, 2);
    const ExtendedDag g = extend(h);
    const auto routes = enumerate_routes(g);
    REQUIRE(routes.size() == 24);
    CHECK(routes.front() == r(1, 1, 4, 1));
    CHECK(routes.back() == r(2, 3, 5, 2));
    for (std::size_t k = 0; k < routes.size(); ++k) {
        CHECK(route_id(h, routes[k]) == k);
        CHECK(route_from_id(h, k) == routes[k]);
        CHECK(parse_route_token(route_token(routes[k])) == routes[k]);
    }
    CHECK(route_token(r(2, 2, 5, 2)) == "a2_2 b_2_5 g_5_2");
}

TEST_CASE("indicator vector has ones on the three edges")
{
    const ExtendedDag g = extend(complete_bipartite(3, 2));
    const auto v = indicator_vector(g, r(2, 2, 5, 2));
    REQUIRE(v.size() == 16);
    int ones = 0;
    for (int x : v) ones += x;
    CHECK(ones == 3);
    CHECK(v[g.alpha(2, 2)] == 1);
    CHECK(v[g.beta(2, 5)] == 1);
    CHECK(v[g.gamma(5, 2)] == 1);
}

TEST_CASE("canonical framing")
{
    const ExtendedDag g = extend(complete_bipartite(3, 2));
    CHECK(framing_less(g, 1, g.beta(1, 4), g.beta(1, 5)));
    CHECK_FALSE(framing_less(g, 1, g.beta(1, 5), g.beta(1, 4)));
    CHECK(framing_less(g, 4, g.gamma(4, 1), g.gamma(4, 2)));
    CHECK(framing_less(g, 1, g.alpha(1, 1), g.alpha(1, 2)));
    CHECK(framing_less(g, 4, g.beta(1, 4), g.beta(2, 4)));
    CHECK_THROWS_AS(framing_less(g, 1, g.alpha(1, 1), g.beta(1, 4)), PreconditionError);
}

TEST_CASE("coherence examples")
{
    CHECK_FALSE(conflict(r(2, 1, 5, 2), r(1, 1, 5, 1)).has_value());
    const auto c = conflict(r(2, 1, 5, 1), r(1, 1, 5, 2));
    REQUIRE(c.has_value());
    CHECK(c->site == ConflictSite::beta_cross);
    CHECK(c->edge == BipartiteEdge{1, 5});
}

TEST_CASE("clockwise orientation")
{
    CHECK(is_cw_of(r(1, 1, 4, 2), r(2, 1, 4, 1)));
    CHECK_FALSE(is_cw_of(r(2, 1, 4, 1), r(1, 1, 4, 2)));
    CHECK(cw_cmp(r(1, 2, 5, 2), r(2, 2, 5, 1)) == Orientation::first_cw_of_second);
    CHECK_THROWS_AS(cw_cmp(r(1, 1, 4, 1), r(1, 1, 4, 2)), PreconditionError);
}

TEST_CASE("conflict properties on the corpus")
{
    for (const auto& inst : builtin_corpus()) {
        const ExtendedDag g = extend(inst.graph);
        const auto routes = enumerate_routes(g);
        for (const auto& x : routes) {
            for (const auto& y : routes) {
                if (x == y) continue;
                const auto c1 = conflict(x, y);
                const auto c2 = conflict(y, x);
                REQUIRE(c1.has_value() == c2.has_value());
                REQUIRE(coherent_by_definition(g, x, y) == !c1.has_value());
                if (c1) {
                    REQUIRE(*c1 == *c2);
                    REQUIRE(cw_cmp(x, y) != cw_cmp(y, x));
                }
            }
        }
        // one conflicting pair among the four routes through each beta edge
        for (const auto& e : inst.graph.edges()) {
            int pairs = 0;
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b)
                    for (int a2 = 1; a2 <= 2; ++a2)
                        for (int b2 = 1; b2 <= 2; ++b2)
                            if ((a != a2 || b != b2) && conflict(r(a, e.left, e.right, b), r(a2, e.left, e.right, b2))) ++pairs;
            CHECK(pairs == 2);
        }
    }
}

TEST_CASE("coherence graph sizes match the brute force")
{
    for (const auto& inst : golden::instances()) {
        const CoherenceGraph cg = coherence_graph(extend(inst.graph));
        CHECK_MESSAGE(cg.routes.size() == inst.routes, inst.name);
        CHECK_MESSAGE(cg.conflicting_pair_count() == inst.conflicting_pairs, inst.name);
        std::size_t beta_cross = 0;
        for (std::size_t x = 0; x < cg.routes.size(); ++x)
            for (std::size_t y = x + 1; y < cg.routes.size(); ++y) {
                auto c = conflict(cg.routes[x], cg.routes[y]);
                if (c && c->site == ConflictSite::beta_cross) ++beta_cross;
            }
        CHECK(beta_cross == inst.graph.edge_count());
    }
}
