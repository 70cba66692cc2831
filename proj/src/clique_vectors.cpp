#include "flowpoly/clique_vectors.hpp"

#include "flowpoly/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <sstream>

namespace flowpoly {

std::string to_string(const CliqueVector& a)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int c : a.choice) {
        os << (first ? "" : ",") << c;
        first = false;
    }
    for (Sign s : a.signs) {
        os << (first ? "" : ",") << sign_char(s);
        first = false;
    }
    os << ')';
    return os.str();
}

bool is_mutual(const BipartiteGraph&, const CliqueVector& a, const BipartiteEdge& e)
{
    return a.at(e.left) == e.right && a.at(e.right) == e.left;
}

ValidationResult validate_clique_vector(const BipartiteGraph& h, const CliqueVector& a)
{
    if (a.choice.size() != static_cast<std::size_t>(h.vertex_count()) || a.signs.size() != h.edge_count()) {
        throw PreconditionError("clique vector has arity (" + std::to_string(a.choice.size()) + ", " +
                                std::to_string(a.signs.size()) + "), expected (" +
                                std::to_string(h.vertex_count()) + ", " + std::to_string(h.edge_count()) + ")");
    }
    for (int v = 1; v <= h.vertex_count(); ++v) {
        if (!h.adjacent(v, a.at(v))) {
            return {false, "a_" + std::to_string(v) + " = " + std::to_string(a.at(v)) + " is not a neighbor of " +
                               std::to_string(v)};
        }
    }
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        const auto& e = h.edge(k);
        if (a.signs[k] == Sign::plus && !is_mutual(h, a, e)) {
            return {false, "a_{" + std::to_string(e.left) + "," + std::to_string(e.right) + "} = + but a_" +
                               std::to_string(e.left) + " = " + std::to_string(a.at(e.left)) + " and a_" +
                               std::to_string(e.right) + " = " + std::to_string(a.at(e.right))};
        }
    }
    return {};
}

void for_each_clique_vector(const BipartiteGraph& h, const std::function<void(const CliqueVector&)>& visit)
{
    const int total = h.vertex_count();
    std::vector<std::size_t> digit(static_cast<std::size_t>(total), 0);
    CliqueVector a;
    a.choice.resize(static_cast<std::size_t>(total));
    a.signs.assign(h.edge_count(), Sign::minus);

    for (;;) {
        for (int v = 1; v <= total; ++v) a.at(v) = h.neighbors(v)[digit[static_cast<std::size_t>(v - 1)]];

        std::vector<std::size_t> mutual;
        for (std::size_t k = 0; k < h.edge_count(); ++k) {
            if (is_mutual(h, a, h.edge(k))) mutual.push_back(k);
        }
        const std::size_t variants = std::size_t{1} << mutual.size();
        for (std::size_t mask = 0; mask < variants; ++mask) {
            for (std::size_t b = 0; b < mutual.size(); ++b) {
                bool plus = (mask >> (mutual.size() - 1 - b)) & 1U;
                a.signs[mutual[b]] = plus ? Sign::plus : Sign::minus;
            }
            visit(a);
        }
        for (auto k : mutual) a.signs[k] = Sign::minus;

        int pos = total - 1;
        while (pos >= 0) {
            auto& d = digit[static_cast<std::size_t>(pos)];
            if (++d < static_cast<std::size_t>(h.degree(pos + 1))) break;
            d = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

std::vector<CliqueVector> enumerate_clique_vectors(const BipartiteGraph& h)
{
    std::vector<CliqueVector> out;
    for_each_clique_vector(h, [&](const CliqueVector& a) { out.push_back(a); });
    return out;
}

// ---------------------------------------------------------------------------
// Clique

Clique::Clique(std::vector<RouteId> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
        throw PreconditionError("clique lists a route twice");
    }
}

bool Clique::contains(RouteId id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::vector<Route> Clique::routes(const BipartiteGraph& h) const
{
    std::vector<Route> out;
    out.reserve(ids_.size());
    for (auto id : ids_) out.push_back(route_from_id(h, id));
    return out;
}

std::vector<std::string> Clique::tokens(const BipartiteGraph& h) const
{
    std::vector<std::string> out;
    for (const auto& r : routes(h)) out.push_back(route_token(r));
    return out;
}

std::size_t maximal_clique_size(const BipartiteGraph& h)
{
    return static_cast<std::size_t>(h.vertex_count()) + h.edge_count();
}

Clique phi(const BipartiteGraph& h, const CliqueVector& a)
{
    if (auto ok = validate_clique_vector(h, a); !ok) {
        throw PreconditionError("phi: invalid clique vector " + to_string(a) + ": " + ok.diagnostic);
    }
    std::vector<RouteId> ids;
    ids.reserve(maximal_clique_size(h));
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        const int i = h.edge(k).left;
        const int j = h.edge(k).right;
        const int ai = a.at(i);
        const int aj = a.at(j);
        auto add = [&](int alpha, int gamma) { ids.push_back(4 * k + static_cast<std::size_t>(2 * (alpha - 1) + (gamma - 1))); };

        const bool i_picks = ai == j;
        const bool j_picks = aj == i;
        if (!i_picks && !j_picks) {
            add(ai < j ? 2 : 1, aj < i ? 2 : 1);
        } else if (i_picks && !j_picks) {
            const int gamma = aj < i ? 2 : 1;
            add(1, gamma);
            add(2, gamma);
        } else if (!i_picks && j_picks) {
            const int alpha = ai < j ? 2 : 1;
            add(alpha, 1);
            add(alpha, 2);
        } else if (a.signs[k] == Sign::minus) {
            add(1, 1);
            add(1, 2);
            add(2, 2);
        } else {
            add(1, 1);
            add(2, 1);
            add(2, 2);
        }
    }
    return Clique(std::move(ids));
}

CliqueVector phi_inverse(const BipartiteGraph& h, const Clique& c)
{
    const std::size_t expected = maximal_clique_size(h);
    if (c.size() != expected) {
        throw PreconditionError("not a maximal clique: " + std::to_string(c.size()) + " routes, expected " +
                                std::to_string(expected));
    }
    const auto routes = c.routes(h);
    for (std::size_t x = 0; x < routes.size(); ++x) {
        for (std::size_t y = x + 1; y < routes.size(); ++y) {
            if (auto k = conflict(routes[x], routes[y])) {
                throw PreconditionError("not a clique: " + route_token(routes[x]) + " and " + route_token(routes[y]) +
                                        " conflict (" + to_string(*k) + ")");
            }
        }
    }

    CliqueVector a;
    a.choice.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    a.signs.assign(h.edge_count(), Sign::minus);
    auto assign = [&](int v, int u) {
        if (a.at(v) != 0) {
            throw PreconditionError("not a maximal clique: vertex " + std::to_string(v) +
                                    " has two doubled edges (" + std::to_string(a.at(v)) + " and " +
                                    std::to_string(u) + ")");
        }
        a.at(v) = u;
    };

    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        const int i = h.edge(k).left;
        const int j = h.edge(k).right;
        bool present[2][2] = {};
        int count = 0;
        for (int q = 0; q < 4; ++q) {
            if (c.contains(4 * k + static_cast<std::size_t>(q))) {
                present[q / 2][q % 2] = true;
                ++count;
            }
        }
        if (count == 0 || count == 4) {
            throw PreconditionError("not a maximal clique: edge " + std::to_string(i) + "-" + std::to_string(j) +
                                    " supports " + std::to_string(count) + " routes");
        }
        if (count == 3) {
            assign(i, j);
            assign(j, i);
            a.signs[k] = present[1][0] ? Sign::plus : Sign::minus;
        } else if (count == 2) {
            const bool same_gamma = (present[0][0] && present[1][0]) || (present[0][1] && present[1][1]);
            const bool same_alpha = (present[0][0] && present[0][1]) || (present[1][0] && present[1][1]);
            if (same_gamma) {
                assign(i, j);
            } else if (same_alpha) {
                assign(j, i);
            } else {
                throw PreconditionError("not a maximal clique: the two routes on edge " + std::to_string(i) + "-" +
                                        std::to_string(j) + " differ in both copies");
            }
        }
    }
    for (int v = 1; v <= h.vertex_count(); ++v) {
        if (a.at(v) == 0) {
            throw PreconditionError("not a maximal clique: vertex " + std::to_string(v) + " has no doubled edge");
        }
    }
    if (phi(h, a) != c) {
        throw PreconditionError("not a maximal clique: single-route edges disagree with " + to_string(a));
    }
    return a;
}

// ---------------------------------------------------------------------------
// Bron-Kerbosch oracle

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct CliqueSearch {
    std::vector<Bits> neighbors;
    std::vector<Clique> found;
    std::vector<RouteId> current;

    void expand(Bits candidates, Bits excluded)
    {
        if (candidates.none() && excluded.none()) {
            found.emplace_back(current);
            return;
        }
        // Tomita pivot: maximize |candidates ∩ N(u)| over candidates ∪ excluded.
        Bits pool = candidates | excluded;
        std::size_t pivot = pool.find_first();
        std::size_t best = (candidates & neighbors[pivot]).count();
        for (std::size_t u = pool.find_next(pivot); u != Bits::npos; u = pool.find_next(u)) {
            std::size_t cnt = (candidates & neighbors[u]).count();
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        Bits branch = candidates - neighbors[pivot];
        for (std::size_t v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
            current.push_back(v);
            expand(candidates & neighbors[v], excluded & neighbors[v]);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    }
};

} // namespace

std::vector<Clique> enumerate_maximal_cliques_oracle(const ExtendedDag& g)
{
    const CoherenceGraph cg = coherence_graph(g);
    const std::size_t n = cg.routes.size();
    CliqueSearch search;
    search.neighbors.assign(n, Bits(n));
    for (RouteId a = 0; a < n; ++a) {
        for (RouteId b : cg.adjacency[a]) search.neighbors[a].set(b);
    }
    Bits all(n);
    all.set();
    search.expand(all, Bits(n));
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

} // namespace flowpoly
