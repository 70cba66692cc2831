#include "flowpoly/framing_lattice.hpp"

#include "flowpoly/errors.hpp"
#include "flowpoly/matchings.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace flowpoly {

namespace {

std::string vertex_change(int v, int before, int after)
{
    return "a_" + std::to_string(v) + ": " + std::to_string(before) + " -> " + std::to_string(after);
}

std::string sign_change(const BipartiteEdge& e, Sign before, Sign after)
{
    return "a_{" + std::to_string(e.left) + "," + std::to_string(e.right) + "}: " + sign_char(before) + " -> " +
           sign_char(after);
}

bool is_below(const BipartiteGraph& h, int v, int u, int candidate)
{
    auto below = h.neighbor_below(v, u);
    return below && *below == candidate;
}

bool is_above(const BipartiteGraph& h, int v, int u, int candidate)
{
    auto above = h.neighbor_above(v, u);
    return above && *above == candidate;
}

} // namespace

std::optional<CoverWitness> covers(const BipartiteGraph& h, const CliqueVector& a, const CliqueVector& b)
{
    for (const auto* x : {&a, &b}) {
        if (auto ok = validate_clique_vector(h, *x); !ok) {
            throw PreconditionError("covers: invalid clique vector " + to_string(*x) + ": " + ok.diagnostic);
        }
    }
    std::vector<int> moved;
    for (int v = 1; v <= h.vertex_count(); ++v) {
        if (a.at(v) != b.at(v)) moved.push_back(v);
    }
    std::vector<std::size_t> flipped;
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        if (a.signs[k] != b.signs[k]) flipped.push_back(k);
    }

    std::vector<CoverWitness> matched;
    if (moved.size() == 1 && flipped.empty()) {
        const int v = moved.front();
        const int u = a.at(v);
        if (h.is_left(v) && a.at(u) != v && is_below(h, v, u, b.at(v))) {
            matched.push_back({1, {vertex_change(v, u, b.at(v))}});
        }
        if (h.is_right(v) && a.at(u) != v && is_above(h, v, u, b.at(v))) {
            matched.push_back({2, {vertex_change(v, u, b.at(v))}});
        }
    }
    if (moved.empty() && flipped.size() == 1) {
        const auto k = flipped.front();
        if (a.signs[k] == Sign::minus && b.signs[k] == Sign::plus) {
            matched.push_back({3, {sign_change(h.edge(k), Sign::minus, Sign::plus)}});
        }
    }
    if (moved.size() == 1 && flipped.size() == 1) {
        const auto k = flipped.front();
        const auto& e = h.edge(k);
        const int v = moved.front();
        if (a.signs[k] == Sign::plus && b.signs[k] == Sign::minus &&
            ((v == e.left && is_below(h, e.left, e.right, b.at(v))) ||
             (v == e.right && is_above(h, e.right, e.left, b.at(v))))) {
            matched.push_back({4, {sign_change(e, Sign::plus, Sign::minus), vertex_change(v, a.at(v), b.at(v))}});
        }
    }

    if (matched.empty()) return std::nullopt;
    CoverWitness w = matched.front();
    w.exclusive = matched.size() == 1;
    return w;
}

std::vector<CliqueVector> upper_covers(const BipartiteGraph& h, const CliqueVector& a)
{
    std::vector<CliqueVector> out;
    for (const auto& e : psi(h, a)) {
        CliqueVector b = a;
        if (e.kind == WEdge::Kind::base) {
            b.signs[h.require_edge_index(e.first, e.second)] = Sign::plus;
        } else {
            const int v = e.first;
            const int u = e.second;
            // A leaf never sits at the extreme neighbor, so the move exists.
            b.at(v) = h.is_left(v) ? *h.neighbor_below(v, u) : *h.neighbor_above(v, u);
            if (a.at(u) == v) b.signs[h.require_edge_index(v, u)] = Sign::minus;
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::size_t cover_count(const BipartiteGraph& h, const CliqueVector& a)
{
    const std::size_t edges = psi(h, a).size();
    const std::size_t generated = upper_covers(h, a).size();
    if (edges != generated) {
        throw InconsistencyError("cover_count: |psi(a)| = " + std::to_string(edges) + " but " +
                                 std::to_string(generated) + " upper covers for " + to_string(a));
    }
    return edges;
}

bool covers_oracle(const BipartiteGraph& h, const Clique& c1, const Clique& c2)
{
    if (c1.size() != c2.size()) return false;
    std::vector<RouteId> only1;
    std::vector<RouteId> only2;
    std::set_difference(c1.ids().begin(), c1.ids().end(), c2.ids().begin(), c2.ids().end(), std::back_inserter(only1));
    std::set_difference(c2.ids().begin(), c2.ids().end(), c1.ids().begin(), c1.ids().end(), std::back_inserter(only2));
    if (only1.size() != 1 || only2.size() != 1) return false;
    return is_cw_of(route_from_id(h, only1.front()), route_from_id(h, only2.front()));
}

CliqueVector top_vector_for_face(const BipartiteGraph& h, const std::vector<Route>& face)
{
    const auto total = static_cast<std::size_t>(h.vertex_count());
    std::vector<int> lower(total + 1, 0);
    std::vector<int> upper(total + 1, 0);
    for (int v = 1; v <= h.vertex_count(); ++v) {
        lower[static_cast<std::size_t>(v)] = h.min_neighbor(v);
        upper[static_cast<std::size_t>(v)] = h.max_neighbor(v);
    }
    auto at_most = [&](int v, int bound) { upper[static_cast<std::size_t>(v)] = std::min(upper[static_cast<std::size_t>(v)], bound); };
    auto at_least = [&](int v, int bound) { lower[static_cast<std::size_t>(v)] = std::max(lower[static_cast<std::size_t>(v)], bound); };

    std::vector<bool> forced_minus(h.edge_count(), false);
    for (const auto& r : face) {
        if (r.a == 2) at_most(r.i, r.j); else at_least(r.i, r.j);
        if (r.b == 2) at_most(r.j, r.i); else at_least(r.j, r.i);
        if (r.a == 1 && r.b == 2) forced_minus[h.require_edge_index(r.i, r.j)] = true;
    }

    CliqueVector a;
    a.choice.resize(total);
    a.signs.assign(h.edge_count(), Sign::minus);
    for (int v = 1; v <= h.vertex_count(); ++v) {
        a.at(v) = h.is_left(v) ? lower[static_cast<std::size_t>(v)] : upper[static_cast<std::size_t>(v)];
    }
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        if (is_mutual(h, a, h.edge(k)) && !forced_minus[k]) a.signs[k] = Sign::plus;
    }
    return a;
}

HalfOpenSampleReport sample_half_open_hypothesis(const BipartiteGraph& h, const std::vector<CliqueVector>& nodes,
                                                 const std::vector<std::vector<std::size_t>>& successors,
                                                 std::uint64_t seed, std::size_t face_samples)
{
    HalfOpenSampleReport report;
    if (nodes.empty()) return report;

    std::vector<Clique> cliques;
    cliques.reserve(nodes.size());
    std::map<CliqueVector, std::size_t> index;
    for (std::size_t x = 0; x < nodes.size(); ++x) {
        cliques.push_back(phi(h, nodes[x]));
        index.emplace(nodes[x], x);
    }

    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    auto fail = [&](const std::vector<RouteId>& face, const std::string& why) {
        ++report.failures;
        if (!report.first_failure.empty()) return;
        std::string text = "face {";
        for (std::size_t k = 0; k < face.size(); ++k) {
            text += (k ? ", " : "") + route_token(route_from_id(h, face[k]));
        }
        report.first_failure = text + "}: " + why;
    };

    for (std::size_t sample = 0; sample < face_samples; ++sample) {
        std::vector<RouteId> face;
        if (sample == 0) {
            // The empty face: its top clique is the global maximum.
        } else if (sample % 2 == 1) {
            const auto& c = cliques[pick(cliques.size())];
            for (auto id : c.ids()) {
                if (rng() & 1U) face.push_back(id);
            }
        } else {
            const std::size_t x = pick(nodes.size());
            if (successors[x].empty()) {
                face.assign(cliques[x].ids().begin(), cliques[x].ids().end());
            } else {
                const auto& c1 = cliques[x];
                const auto& c2 = cliques[successors[x][pick(successors[x].size())]];
                std::set_intersection(c1.ids().begin(), c1.ids().end(), c2.ids().begin(), c2.ids().end(),
                                      std::back_inserter(face));
            }
        }
        ++report.faces;

        std::vector<Route> routes;
        for (auto id : face) routes.push_back(route_from_id(h, id));
        const CliqueVector top = top_vector_for_face(h, routes);
        if (auto ok = validate_clique_vector(h, top); !ok) {
            fail(face, "a^S = " + to_string(top) + " is not a clique vector");
            continue;
        }
        const std::size_t top_index = index.at(top);
        const auto& top_clique = cliques[top_index];
        if (!std::includes(top_clique.ids().begin(), top_clique.ids().end(), face.begin(), face.end())) {
            fail(face, "phi(a^S) = phi" + to_string(top) + " does not contain the face");
            continue;
        }

        std::vector<bool> contains(nodes.size(), false);
        for (std::size_t x = 0; x < nodes.size(); ++x) {
            contains[x] = std::includes(cliques[x].ids().begin(), cliques[x].ids().end(), face.begin(), face.end());
        }
        std::vector<std::size_t> sinks;
        for (std::size_t x = 0; x < nodes.size(); ++x) {
            if (!contains[x]) continue;
            bool stuck = std::none_of(successors[x].begin(), successors[x].end(),
                                      [&](std::size_t y) { return contains[y]; });
            if (stuck) sinks.push_back(x);
        }
        if (sinks.size() != 1 || sinks.front() != top_index) {
            fail(face, std::to_string(sinks.size()) + " maximal cliques containing the face, expected only phi" +
                           to_string(top));
        }
    }
    return report;
}

LatticeReport build_lattice(const BipartiteGraph& h, std::uint64_t seed, std::size_t face_samples)
{
    LatticeReport report;
    report.nodes = enumerate_clique_vectors(h);
    const std::size_t n = report.nodes.size();
    std::map<CliqueVector, std::size_t> index;
    for (std::size_t x = 0; x < n; ++x) index.emplace(report.nodes[x], x);

    std::vector<std::vector<std::size_t>> successors(n);
    std::vector<std::size_t> in_degree(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (const auto& b : upper_covers(h, report.nodes[x])) {
            auto it = index.find(b);
            if (it == index.end()) {
                throw InconsistencyError("upper cover " + to_string(b) + " of " + to_string(report.nodes[x]) +
                                         " is not a clique vector");
            }
            successors[x].push_back(it->second);
            ++in_degree[it->second];
            report.edges.emplace_back(x, it->second);
        }
        const std::size_t k = successors[x].size();
        if (report.cover_histogram.size() <= k) report.cover_histogram.resize(k + 1, 0);
        ++report.cover_histogram[k];
    }

    // Kahn's algorithm.
    std::vector<std::size_t> pending = in_degree;
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        if (pending[x] == 0) queue.push_back(x);
    }
    std::size_t processed = 0;
    while (processed < queue.size()) {
        const std::size_t x = queue[processed++];
        for (auto y : successors[x]) {
            if (--pending[y] == 0) queue.push_back(y);
        }
    }
    report.acyclic = processed == n;

    const auto minima = std::count(in_degree.begin(), in_degree.end(), std::size_t{0});
    std::size_t maxima = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (successors[x].empty()) {
            ++maxima;
            report.maximum = x;
        }
    }
    report.unique_minimum = minima == 1;
    report.unique_maximum = maxima == 1;
    report.half_open = sample_half_open_hypothesis(h, report.nodes, successors, seed, face_samples);
    return report;
}

} // namespace flowpoly
