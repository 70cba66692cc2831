#include "flowpoly/verify.hpp"

#include "flowpoly/clique_vectors.hpp"
#include "flowpoly/ehrhart.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/matchings.hpp"
#include "flowpoly/parallel.hpp"
#include "flowpoly/routes.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace flowpoly {

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome pass(std::string detail = {})
{
    return {true, std::move(detail)};
}

Outcome fail(std::string detail)
{
    return {false, std::move(detail)};
}

std::string poly_text(const Polynomial& p)
{
    std::string s = "[";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) s += (k ? "," : "") + to_string(p.coeffs()[k]);
    return s + "]";
}

const std::string missing = "prerequisite computation failed";

} // namespace

VerifyReport verify_all(const BipartiteGraph& h, const std::string& instance, const VerifyOptions& options)
{
    VerifyReport report;
    report.instance = instance;

    auto run = [&](const std::string& name, const std::function<Outcome()>& body) {
        CheckResult result{name, false, {}};
        try {
            Outcome o = body();
            result.passed = o.passed;
            result.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            result.detail = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(result));
    };

    const ExtendedDag g = extend(h);
    const WhiskeredGraph w = whisker(h);
    const int d = dimension(g);
    report.counts.dimension = d;

    // Shared data, each piece computed once.
    std::vector<CliqueVector> vectors;
    std::vector<Clique> cliques;
    std::optional<std::vector<Clique>> oracle;
    std::optional<std::vector<Matching>> matchings;
    std::optional<LatticeReport> lattice;
    std::optional<EhrhartData> ehrhart;

    auto attempt = [](auto&& fn) {
        try {
            fn();
        } catch (const std::exception&) {
            // Reported by the checks that need the value.
        }
    };
    vectors = enumerate_clique_vectors(h);
    cliques.resize(vectors.size());
    parallel_for(vectors.size(), [&](std::size_t x) { cliques[x] = phi(h, vectors[x]); });
    report.counts.clique_vectors = vectors.size();
    attempt([&] { oracle = enumerate_maximal_cliques_oracle(g); });
    attempt([&] { matchings = enumerate_matchings(w); });
    attempt([&] { lattice = build_lattice(h, options.seed, options.face_samples); });
    attempt([&] { ehrhart = ehrhart_data(g); });
    attempt([&] { report.matching_poly = matching_polynomial(w); });
    attempt([&] { report.hstar_covers = hstar_via_covers(h); });
    if (oracle) report.counts.oracle_cliques = oracle->size();
    if (matchings) report.counts.matchings = matchings->size();
    if (lattice) report.counts.cover_edges = lattice->cover_edge_count();
    if (ehrhart) {
        report.hstar_ehrhart = ehrhart->hstar;
        report.volume = ehrhart->volume;
        report.counts.lattice_points = ehrhart->counts;
        report.counts.lattice_points.push_back(ehrhart->next_count);
    }

    run("coherence_rule_agreement", [&]() -> Outcome {
        const CoherenceGraph cg = coherence_graph(g);
        report.counts.routes = cg.routes.size();
        report.counts.conflicting_pairs = cg.conflicting_pair_count();
        for (std::size_t x = 0; x < cg.routes.size(); ++x) {
            for (std::size_t y = x + 1; y < cg.routes.size(); ++y) {
                const Route& r1 = cg.routes[x];
                const Route& r2 = cg.routes[y];
                const bool specialized = !conflict(r1, r2).has_value();
                if (specialized != coherent_by_definition(g, r1, r2)) {
                    return fail("rules disagree on " + route_token(r1) + " / " + route_token(r2));
                }
                if (!specialized && is_cw_of(r1, r2) == is_cw_of(r2, r1)) {
                    return fail("orientation not antisymmetric on " + route_token(r1) + " / " + route_token(r2));
                }
            }
        }
        return pass(std::to_string(cg.routes.size()) + " routes, " + std::to_string(cg.conflicting_pair_count()) +
                    " conflicting pairs");
    });

    run("phi_bijection", [&]() -> Outcome {
        if (!oracle) return fail(missing);
        std::vector<Clique> image = cliques;
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) return fail("phi is not injective");
        if (image != *oracle) {
            return fail("phi image has " + std::to_string(image.size()) + " cliques, search found " +
                        std::to_string(oracle->size()));
        }
        for (std::size_t x = 0; x < vectors.size(); ++x) {
            if (phi_inverse(h, cliques[x]) != vectors[x]) return fail("round trip fails at " + to_string(vectors[x]));
        }
        return pass(std::to_string(image.size()) + " maximal cliques");
    });

    run("psi_bijection", [&]() -> Outcome {
        if (!matchings) return fail(missing);
        std::vector<Matching> image(vectors.size());
        parallel_for(vectors.size(), [&](std::size_t x) { image[x] = psi(h, vectors[x]); });
        for (std::size_t x = 0; x < vectors.size(); ++x) {
            if (psi_inverse(h, image[x]) != vectors[x]) return fail("round trip fails at " + to_string(vectors[x]));
        }
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) return fail("psi is not injective");
        std::vector<Matching> all = *matchings;
        std::sort(all.begin(), all.end());
        if (image != all) {
            return fail("psi image has " + std::to_string(image.size()) + " matchings, W(H) has " +
                        std::to_string(all.size()));
        }
        return pass(std::to_string(all.size()) + " matchings");
    });

    run("clique_count_identity", [&]() -> Outcome {
        if (!oracle || !matchings || !ehrhart) return fail(missing);
        const BigInt cliques_found = oracle->size();
        const bool ok = cliques_found == BigInt(vectors.size()) && cliques_found == BigInt(matchings->size()) &&
                        cliques_found == ehrhart->volume && BigRational(cliques_found) == ehrhart->leading_volume;
        std::string detail = "cliques " + to_string(cliques_found) + ", clique vectors " +
                             std::to_string(vectors.size()) + ", matchings " + std::to_string(matchings->size()) +
                             ", sum h* " + to_string(ehrhart->volume) + ", d! * leading " +
                             ehrhart->leading_volume.str();
        return ok ? pass(detail) : fail(detail);
    });

    run("hstar_identity", [&]() -> Outcome {
        if (!ehrhart || report.hstar_covers.is_zero() || report.matching_poly.is_zero()) return fail(missing);
        std::string detail = "covers " + poly_text(report.hstar_covers) + ", ehrhart " +
                             poly_text(report.hstar_ehrhart) + ", matchings " + poly_text(report.matching_poly);
        const bool ok = report.hstar_covers == report.hstar_ehrhart && report.hstar_ehrhart == report.matching_poly;
        return ok ? pass(detail) : fail(detail);
    });

    run("cover_characterization", [&]() -> Outcome {
        if (!lattice) return fail(missing);
        const std::size_t n = vectors.size();
        const std::size_t size = maximal_clique_size(h);
        std::vector<std::string> problem(n);
        std::vector<std::size_t> covering_pairs(n, 0);
        parallel_for(n, [&](std::size_t x) {
            const auto ups = upper_covers(h, vectors[x]);
            if (ups.size() != psi(h, vectors[x]).size()) {
                problem[x] = "|upper_covers| != |psi| at " + to_string(vectors[x]);
                return;
            }
            for (const auto& b : ups) {
                if (!covers(h, vectors[x], b)) {
                    problem[x] = "generated cover " + to_string(b) + " of " + to_string(vectors[x]) + " fails the conditions";
                    return;
                }
            }
            for (std::size_t y = 0; y < n; ++y) {
                const auto witness = covers(h, vectors[x], vectors[y]);
                const bool rotated = covers_oracle(h, cliques[x], cliques[y]);
                if (witness && !witness->exclusive) {
                    problem[x] = "two conditions hold for " + to_string(vectors[x]) + " < " + to_string(vectors[y]);
                    return;
                }
                if (witness.has_value() != rotated) {
                    problem[x] = "conditions say " + std::string(witness ? "cover" : "no cover") + ", rotation says " +
                                 (rotated ? "cover" : "no cover") + " for " + to_string(vectors[x]) + " < " +
                                 to_string(vectors[y]);
                    return;
                }
                if (rotated) ++covering_pairs[x];
                if (y > x) {
                    std::vector<RouteId> shared;
                    std::set_intersection(cliques[x].ids().begin(), cliques[x].ids().end(), cliques[y].ids().begin(),
                                          cliques[y].ids().end(), std::back_inserter(shared));
                    if (shared.size() + 1 == size &&
                        rotated == covers_oracle(h, cliques[y], cliques[x])) {
                        problem[x] = "adjacent cliques " + to_string(vectors[x]) + " and " + to_string(vectors[y]) +
                                     " are not oriented exactly one way";
                        return;
                    }
                }
            }
        });
        for (const auto& p : problem) {
            if (!p.empty()) return fail(p);
        }
        std::size_t total = 0;
        for (auto c : covering_pairs) total += c;
        if (total != lattice->cover_edge_count()) {
            return fail(std::to_string(total) + " covering pairs, but " + std::to_string(lattice->cover_edge_count()) +
                        " generated upper covers");
        }
        return pass(std::to_string(n) + "^2 ordered pairs, " + std::to_string(total) + " covers");
    });

    run("lattice_structure", [&]() -> Outcome {
        if (!lattice) return fail(missing);
        std::string detail = std::string("acyclic ") + (lattice->acyclic ? "yes" : "no") + ", unique minimum " +
                             (lattice->unique_minimum ? "yes" : "no") + ", unique maximum " +
                             (lattice->unique_maximum ? "yes" : "no");
        const Polynomial histogram = Polynomial::from_counts(lattice->cover_histogram);
        const bool ok = lattice->acyclic && lattice->unique_minimum && lattice->unique_maximum &&
                        lattice->node_count() == vectors.size() && histogram == report.matching_poly &&
                        psi(h, lattice->nodes[lattice->maximum]).empty();
        return ok ? pass(detail) : fail(detail + ", cover histogram " + poly_text(histogram));
    });

    run("half_open_hypothesis", [&]() -> Outcome {
        if (!lattice) return fail(missing);
        const auto& s = lattice->half_open;
        std::string detail = std::to_string(s.faces) + " sampled faces, seed " + std::to_string(options.seed);
        return s.failures == 0 ? pass(detail) : fail(detail + "; " + s.first_failure);
    });

    run("unimodularity", [&]() -> Outcome {
        std::vector<std::string> problem(cliques.size());
        parallel_for(cliques.size(), [&](std::size_t x) {
            auto r = unimodularity_check(g, cliques[x]);
            if (!r.unimodular) problem[x] = to_string(vectors[x]) + ": " + r.witness;
        });
        for (const auto& p : problem) {
            if (!p.empty()) return fail(p);
        }
        return pass(std::to_string(cliques.size()) + " simplices, rank " + std::to_string(d));
    });

    std::optional<HalfOpenTriangulation> tri;
    attempt([&] { tri.emplace(h); });
    for (std::int64_t t : {1, 2}) {
        run("half_open_partition_t" + std::to_string(t), [&]() -> Outcome {
            if (!tri || !ehrhart) return fail(missing);
            std::vector<FlowPoint> points;
            for_each_flow_point(g, t, [&](const FlowPoint& p) { points.push_back(p); });
            if (BigInt(points.size()) != ehrhart->counts[static_cast<std::size_t>(t)]) {
                return fail(std::to_string(points.size()) + " enumerated points, i(t) = " +
                            to_string(ehrhart->counts[static_cast<std::size_t>(t)]));
            }
            std::vector<std::size_t> owner_count(points.size());
            std::vector<std::size_t> owner(points.size());
            parallel_for(points.size(), [&](std::size_t k) {
                auto found = tri->owners(points[k]);
                owner_count[k] = found.size();
                if (found.size() == 1) owner[k] = found.front().owner;
            });
            std::vector<BigInt> by_class(static_cast<std::size_t>(d) + 1, 0);
            for (std::size_t k = 0; k < points.size(); ++k) {
                if (owner_count[k] != 1) {
                    return fail("a point at t = " + std::to_string(t) + " has " + std::to_string(owner_count[k]) +
                                " owners");
                }
                by_class[tri->removed_facets(owner[k])] += 1;
            }
            for (int k = 0; k <= d; ++k) {
                const BigInt expected = report.hstar_ehrhart.coeff(static_cast<std::size_t>(k)) * binomial(t - k + d, d);
                if (by_class[static_cast<std::size_t>(k)] != expected) {
                    return fail("simplices with " + std::to_string(k) + " removed facets own " +
                                to_string(by_class[static_cast<std::size_t>(k)]) + " points, expected " +
                                to_string(expected));
                }
            }
            return pass(std::to_string(points.size()) + " points, one owner each");
        });
    }

    run("ehrhart_out_of_sample", [&]() -> Outcome {
        if (!ehrhart) return fail(missing);
        std::string detail = "i(" + std::to_string(d + 1) + ") counted " + to_string(ehrhart->next_count) +
                             ", interpolated " + ehrhart->next_value.str();
        const bool ok = ehrhart->counts.front() == 1 && BigRational(ehrhart->next_count) == ehrhart->next_value;
        return ok ? pass(detail) : fail(detail);
    });

    run("polynomial_shape", [&]() -> Outcome {
        if (!ehrhart) return fail(missing);
        const Polynomial& p = report.hstar_ehrhart;
        std::string detail = p.to_string();
        const bool ok = p.coeff(0) == 1 && p.nonnegative() && p.log_concave() && p.unimodal() && p.real_rooted();
        return ok ? pass(detail) : fail(detail);
    });

    return report;
}

// ---------------------------------------------------------------------------
// Corpus

BipartiteGraph complete_bipartite(int p, int q)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= p; ++i) {
        for (int j = p + 1; j <= p + q; ++j) edges.emplace_back(i, j);
    }
    return BipartiteGraph::create(p, q, std::move(edges));
}

BipartiteGraph even_cycle(int k)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(i, k + i);
        edges.emplace_back(i % k + 1, k + i);
    }
    return BipartiteGraph::create(k, k, std::move(edges));
}

BipartiteGraph crown(int k)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (i != j) edges.emplace_back(i, k + j);
        }
    }
    return BipartiteGraph::create(k, k, std::move(edges));
}

std::vector<CorpusInstance> builtin_corpus()
{
    return {
        {"K2,2", complete_bipartite(2, 2)},
        {"K2,3", complete_bipartite(2, 3)},
        {"K3,2", complete_bipartite(3, 2)},
        {"K3,3", complete_bipartite(3, 3)},
        {"C6", even_cycle(3)},
        {"C8", even_cycle(4)},
        {"K3,3 minus a perfect matching", crown(3)},
    };
}

} // namespace flowpoly
