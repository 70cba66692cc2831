#pragma once

// Slow reference computations used only to check the library.

#include "flowpoly/clique_vectors.hpp"
#include "flowpoly/graph_core.hpp"
#include "flowpoly/routes.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

/// i(t) as the number of distinct sums of t route vectors (t <= 3 is cheap).
inline std::size_t distinct_route_sums(const flowpoly::ExtendedDag& g, int t)
{
    const auto routes = flowpoly::enumerate_routes(g);
    std::set<std::vector<int>> seen;
    std::vector<int> acc(g.edge_count(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) {
            seen.insert(acc);
            return;
        }
        for (std::size_t r = from; r < routes.size(); ++r) {
            const auto edges = flowpoly::route_edges(g, routes[r]);
            for (auto e : edges) ++acc[e];
            rec(r, left - 1);
            for (auto e : edges) --acc[e];
        }
    };
    rec(0, t);
    return seen.size();
}

/// Clique vectors counted straight from the definition: every choice of
/// neighbors, times 2 for each edge whose endpoints pick each other.
inline std::size_t clique_vector_count(const flowpoly::BipartiteGraph& h)
{
    const int v = h.vertex_count();
    std::vector<int> pick(static_cast<std::size_t>(v), 0);
    std::size_t total = 0;
    std::function<void(int)> rec = [&](int k) {
        if (k == v) {
            std::size_t w = 1;
            for (const auto& e : h.edges()) {
                if (pick[e.left - 1] == e.right && pick[e.right - 1] == e.left) w *= 2;
            }
            total += w;
            return;
        }
        for (int u : h.neighbors(k + 1)) {
            pick[k] = u;
            rec(k + 1);
        }
    };
    rec(0);
    return total;
}

/// Matchings of g counted over every subset of edges.
inline std::vector<std::size_t> matching_counts_by_subsets(const flowpoly::SimpleGraph& g)
{
    const std::size_t e = g.edge_count();
    std::vector<std::size_t> counts(g.vertex_count() / 2 + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::vector<bool> used(g.vertex_count(), false);
        bool ok = true;
        std::size_t size = 0;
        for (std::size_t k = 0; k < e && ok; ++k) {
            if (!(mask >> k & 1)) continue;
            auto [a, b] = g.edges()[k];
            if (used[a] || used[b]) ok = false;
            used[a] = used[b] = true;
            ++size;
        }
        if (ok) ++counts[size];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

/// Plain backtracking isomorphism test with degree pruning.
inline bool isomorphic(const flowpoly::SimpleGraph& a, const flowpoly::SimpleGraph& b)
{
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::size_t> map(n, n);
    std::vector<bool> taken(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (taken[c] || a.degree(k) != b.degree(c)) continue;
            bool ok = true;
            for (std::size_t p = 0; p < k && ok; ++p) ok = a.has_edge(p, k) == b.has_edge(map[p], c);
            if (!ok) continue;
            map[k] = c;
            taken[c] = true;
            if (rec(k + 1)) return true;
            taken[c] = false;
        }
        return false;
    };
    return rec(0);
}

/// Integer flows of value t, enumerated vertex by vertex in topological
/// order by splitting each vertex's inflow over its out-edges every way.
inline std::size_t naive_flow_count(const flowpoly::ExtendedDag& g, int t)
{
    std::vector<int> val(g.edge_count(), 0);
    std::size_t total = 0;
    std::function<void(int)> at_vertex;
    std::function<void(int, const std::vector<std::size_t>&, std::size_t, int)> split =
        [&](int v, const std::vector<std::size_t>& outs, std::size_t k, int left) {
            if (k + 1 == outs.size()) {
                val[outs[k]] = left;
                at_vertex(v + 1);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                val[outs[k]] = x;
                split(v, outs, k + 1, left - x);
            }
        };
    at_vertex = [&](int v) {
        if (v == g.sink()) {
            ++total;
            return;
        }
        int inflow = t;
        if (v != g.source()) {
            inflow = 0;
            for (auto x : g.in_edges(v)) inflow += val[x];
        }
        split(v, g.out_edges(v), 0, inflow);
    };
    at_vertex(g.source());
    return total;
}

} // namespace oracle
