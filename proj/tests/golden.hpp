#pragma once

// Values from an independent brute force (general coherence definition,
// generic maximal-clique search, sums of route multisets), frozen here.

#include "flowpoly/verify.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace golden {

struct Instance {
    std::string name;
    flowpoly::BipartiteGraph graph;
    std::size_t routes;
    std::size_t conflicting_pairs;
    std::size_t cliques;
    std::vector<long long> mu;
    std::vector<long long> counts; ///< i(1), i(2), [i(3)]
};

inline std::vector<Instance> instances()
{
    using flowpoly::complete_bipartite;
    return {
        {"K2,2", complete_bipartite(2, 2), 16, 20, 34, {1, 8, 16, 8, 1}, {16, 116, 544}},
        {"K3,2", complete_bipartite(3, 2), 24, 42, 156, {1, 13, 49, 61, 28, 4}, {24, 258, 1744}},
        {"K2,3", complete_bipartite(2, 3), 24, 42, 156, {1, 13, 49, 61, 28, 4}, {24, 258, 1744}},
        {"K3,3", complete_bipartite(3, 3), 36, 81, 1626, {1, 21, 150, 454, 600, 336, 64}, {36, 585}},
        {"C6", flowpoly::BipartiteGraph::create(3, 3, {{1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 4}}), 24, 30, 198, {1, 12, 48, 76, 48, 12, 1}, {24, 270, 1952}},
        {"C8", flowpoly::BipartiteGraph::create(4, 4, {{1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}, {4, 5}}), 32, 40, 1154, {1, 16, 96, 272, 384, 272, 96, 16, 1}, {32, 488}},
    };
}

} // namespace golden
