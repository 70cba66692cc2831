#pragma once

#include "flowpoly/clique_vectors.hpp"
#include "flowpoly/ehrhart.hpp"
#include "flowpoly/framing_lattice.hpp"
#include "flowpoly/graph_core.hpp"
#include "flowpoly/matchings.hpp"
#include "flowpoly/polynomial.hpp"
#include "flowpoly/verify.hpp"

#include <json.hpp>

namespace flowpoly {

/// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// Integer if it fits in 64 bits, decimal string otherwise.
Json big_json(const BigInt& v);

/// {"shores":[n,m],"edges":[[i,j],...]}, plus "labels" when relabeled.
Json graph_json(const LabeledBipartiteGraph& g);
Json graph_json(const BipartiteGraph& h);
Json dag_json(const ExtendedDag& g);
Json whisker_json(const WhiskeredGraph& w);
Json coherence_json(const CoherenceGraph& cg);

/// {"a":[...],"signs":{"1-4":"+",...}}
Json clique_vector_json(const BipartiteGraph& h, const CliqueVector& a);
/// Array of route tokens.
Json clique_json(const BipartiteGraph& h, const Clique& c);
/// Array of edge tokens.
Json matching_json(const Matching& m);
/// {"coeffs":[...]} lowest degree first.
Json polynomial_json(const Polynomial& p);
Json ehrhart_json(const EhrhartData& e);
Json lattice_json(const BipartiteGraph& h, const LatticeReport& lattice);
Json report_json(const VerifyReport& report);

} // namespace flowpoly
