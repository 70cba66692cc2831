#include "doctest.h"

#include "golden.hpp"
#include "oracles.hpp"

#include "flowpoly/errors.hpp"
#include "flowpoly/graph_core.hpp"
#include "flowpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace flowpoly;

namespace {

BipartiteGraph k32() { return complete_bipartite(3, 2); }

} // namespace

TEST_CASE("K3,2 parses from the shores document")
{
    const auto h = parse_bipartite(R"({"shores":[3,2],"edges":[[1,4],[1,5],[2,4],[2,5],[3,4],[3,5]]})");
    CHECK(h.left_size() == 3);
    CHECK(h.right_size() == 2);
    CHECK(h.edge_count() == 6);
    CHECK(h == k32());
    CHECK(h.neighbors(4).size() == 3);
    CHECK(h.neighbors(1)[0] == 4);
}

TEST_CASE("text form and reversed edges")
{
    const auto a = parse_bipartite("2 2\n# comment\n1 3\n4 1\n2 3\n2 4\n");
    CHECK(a == complete_bipartite(2, 2));
}

TEST_CASE("string labels are canonicalized")
{
    const auto l = parse_labeled_bipartite(R"({"left":["x","y"],"right":["p","q"],"edges":[["x","p"],["x","q"],["y","p"],["y","q"]]})");
    CHECK(l.relabeled);
    CHECK(l.graph == complete_bipartite(2, 2));
    CHECK(l.original_labels == std::vector<std::string>{"x", "y", "p", "q"});
}

TEST_CASE("invalid inputs are rejected")
{
    CHECK_THROWS_AS(BipartiteGraph::create(2, 2, {{1, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), ValidationError);
    CHECK_THROWS_AS(BipartiteGraph::create(2, 2, {{1, 3}, {1, 4}, {2, 3}}), ValidationError);
    CHECK_THROWS_AS(BipartiteGraph::create(2, 2, {{1, 2}, {1, 3}, {2, 3}, {2, 4}}), ValidationError);
    // two disjoint 4-cycles
    CHECK_THROWS_AS(BipartiteGraph::create(4, 4, {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 7}, {4, 8}}),
                    ValidationError);
    CHECK_THROWS_AS(parse_bipartite("{not json"), ParseError);
    CHECK_THROWS_AS(parse_bipartite("2 2\n1 x\n"), ParseError);
}

TEST_CASE("extension of K3,2")
{
    const ExtendedDag g = extend(k32());
    CHECK(g.edge_count() == 16);
    CHECK(dimension(g) == 10);
    CHECK(g.edge(g.alpha(1, 1)).token == "a1_1");
    CHECK(g.edge(g.beta(3, 5)).token == "b_3_5");
    CHECK(g.edge(g.gamma(5, 2)).token == "g_5_2");
    CHECK(g.alpha(3, 2) < g.beta(1, 4));
    CHECK(g.beta(3, 5) < g.gamma(4, 1));
    CHECK(dimension(extend(complete_bipartite(2, 2))) == 7);
    CHECK(dimension(extend(even_cycle(3))) == 11);
}

TEST_CASE("edge and dimension identities on the corpus")
{
    for (const auto& inst : builtin_corpus()) {
        const auto& h = inst.graph;
        const ExtendedDag g = extend(h);
        const auto n = static_cast<std::size_t>(h.left_size());
        const auto m = static_cast<std::size_t>(h.right_size());
        CHECK(g.edge_count() == 2 * n + 2 * m + h.edge_count());
        CHECK(static_cast<std::size_t>(dimension(g)) + 1 == n + m + h.edge_count());
        CHECK(whisker(h).leaf_count() == 2 * h.edge_count() - n - m);
    }
}

TEST_CASE("corona of a path with complete graphs")
{
    const SimpleGraph p = SimpleGraph::path(3);
    const SimpleGraph c = corona(p, {{0, SimpleGraph::complete(1)}, {1, SimpleGraph::complete(2)}, {2, SimpleGraph::complete(3)}});
    CHECK(c.vertex_count() == 9);
    CHECK(c.edge_count() == 12);
    CHECK(c.degree(0) == 2);
    CHECK(c.degree(2) == 4);
}

TEST_CASE("whisker leaves of K3,2")
{
    const WhiskeredGraph w = whisker(k32());
    std::vector<std::string> got;
    for (const auto& leaf : w.leaves()) got.push_back(leaf_token(leaf));
    CHECK(got == std::vector<std::string>{"w_1_5", "w_2_5", "w_3_5", "w_4_1", "w_4_2", "w_5_1", "w_5_2"});
    CHECK_FALSE(leaf_exists(k32(), 1, 4));
    CHECK_FALSE(leaf_exists(k32(), 4, 3));
    CHECK(leaf_exists(k32(), 4, 2));
}

TEST_CASE("whisker equals corona with empty graphs")
{
    for (const auto& inst : golden::instances()) {
        const auto& h = inst.graph;
        if (h.vertex_count() > 6) continue;
        std::map<std::size_t, SimpleGraph> family;
        for (int v = 1; v <= h.vertex_count(); ++v) {
            family[static_cast<std::size_t>(v - 1)] = SimpleGraph::empty(static_cast<std::size_t>(h.degree(v) - 1));
        }
        const SimpleGraph c = corona(to_simple_graph(h), family);
        CHECK_MESSAGE(oracle::isomorphic(whisker(h).as_simple_graph(), c), inst.name);
    }
}

TEST_CASE("neighbor below and above")
{
    const auto h = k32();
    CHECK(h.neighbor_below(2, 5) == 4);
    CHECK_FALSE(h.neighbor_below(2, 4).has_value());
    CHECK(h.neighbor_above(4, 1) == 2);
    CHECK_FALSE(h.neighbor_above(4, 3).has_value());
}
