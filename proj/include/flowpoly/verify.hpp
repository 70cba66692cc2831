#pragma once

#include "flowpoly/framing_lattice.hpp"
#include "flowpoly/graph_core.hpp"
#include "flowpoly/numeric.hpp"
#include "flowpoly/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace flowpoly {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = default_seed;
    std::size_t face_samples = default_face_samples;
};

struct VerifyCounts {
    std::size_t routes = 0;
    std::size_t conflicting_pairs = 0;
    std::size_t clique_vectors = 0;
    std::size_t oracle_cliques = 0;
    std::size_t matchings = 0;
    std::size_t cover_edges = 0;
    int dimension = 0;
    std::vector<BigInt> lattice_points; ///< i(0..d+1)
};

struct VerifyReport {
    std::string instance;
    VerifyCounts counts;
    Polynomial hstar_covers;
    Polynomial hstar_ehrhart;
    Polynomial matching_poly;
    BigInt volume;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// nullptr if no check has that name.
    const CheckResult* find(const std::string& name) const;
};

/// Runs every cross-check on H. Exceptions inside a check are caught and
/// reported as that check failing; checks whose inputs could not be
/// computed fail with a note instead of being dropped.
VerifyReport verify_all(const BipartiteGraph& h, const std::string& instance = "", const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Built-in instances

BipartiteGraph complete_bipartite(int p, int q);
/// C_{2k} as 1-(k+1)-2-(k+2)-...-k-(2k)-1.
BipartiteGraph even_cycle(int k);
/// K_{k,k} without the edges i-(k+i).
BipartiteGraph crown(int k);

struct CorpusInstance {
    std::string name;
    BipartiteGraph graph;
};

/// K22, K23, K32, K33, C6, C8, K33 minus a perfect matching.
std::vector<CorpusInstance> builtin_corpus();

} // namespace flowpoly
