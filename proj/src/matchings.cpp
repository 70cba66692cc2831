#include "flowpoly/matchings.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <regex>

namespace flowpoly {

std::string to_string(const WEdge& e)
{
    if (e.kind == WEdge::Kind::base) return std::to_string(e.first) + "-" + std::to_string(e.second);
    return leaf_token({e.first, e.second}) + "-" + std::to_string(e.first);
}

WEdge parse_wedge(const BipartiteGraph& h, const std::string& token)
{
    static const std::regex base_pattern(R"((\d+)-(\d+))");
    static const std::regex leaf_pattern(R"(w_(\d+)_(\d+)-(\d+))");
    std::smatch m;
    if (std::regex_match(token, m, base_pattern)) {
        const int u = std::stoi(m[1]);
        const int v = std::stoi(m[2]);
        if (!h.adjacent(u, v)) throw ParseError("\"" + token + "\" is not an edge of H");
        return WEdge::base(u, v);
    }
    if (std::regex_match(token, m, leaf_pattern)) {
        const int owner = std::stoi(m[1]);
        const int tag = std::stoi(m[2]);
        if (std::stoi(m[3]) != owner) throw ParseError("leaf edge \"" + token + "\" does not end at its owner");
        if (!leaf_exists(h, owner, tag)) throw ParseError("W(H) has no leaf " + leaf_token({owner, tag}));
        return WEdge::leaf(owner, tag);
    }
    throw ParseError("malformed matching edge: \"" + token + "\"");
}

std::vector<std::string> tokens(const Matching& m)
{
    std::vector<std::string> out;
    out.reserve(m.size());
    for (const auto& e : m) out.push_back(to_string(e));
    return out;
}

void check_matching(const WhiskeredGraph& w, const Matching& m)
{
    const BipartiteGraph& h = w.base();
    std::vector<bool> covered(static_cast<std::size_t>(h.vertex_count()) + 1, false);
    auto cover = [&](int v, const WEdge& e) {
        if (covered[static_cast<std::size_t>(v)]) {
            throw PreconditionError("not a matching: vertex " + std::to_string(v) + " is covered twice (at " +
                                    to_string(e) + ")");
        }
        covered[static_cast<std::size_t>(v)] = true;
    };
    for (const auto& e : m) {
        if (e.kind == WEdge::Kind::base) {
            if (!h.adjacent(e.first, e.second)) throw PreconditionError(to_string(e) + " is not an edge of W(H)");
            cover(e.first, e);
            cover(e.second, e);
        } else {
            if (!w.leaf_index(e.first, e.second)) throw PreconditionError(to_string(e) + " is not an edge of W(H)");
            cover(e.first, e);
        }
    }
}

void for_each_matching(const SimpleGraph& g, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    const auto edges = g.edges();
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<std::size_t> chosen;

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == edges.size()) {
            visit(chosen);
            return;
        }
        self(self, k + 1);
        auto [u, v] = edges[k];
        if (used[u] || used[v]) return;
        used[u] = used[v] = true;
        chosen.push_back(k);
        self(self, k + 1);
        chosen.pop_back();
        used[u] = used[v] = false;
    };
    recurse(recurse, 0);
}

void for_each_matching(const WhiskeredGraph& w, const std::function<void(const Matching&)>& visit)
{
    const BipartiteGraph& h = w.base();
    const std::size_t base_edges = h.edge_count();
    Matching m;
    for_each_matching(w.as_simple_graph(), [&](const std::vector<std::size_t>& idx) {
        // Base edges precede leaf edges in both layouts, so m comes out sorted.
        m.clear();
        for (auto k : idx) {
            if (k < base_edges) {
                m.push_back(WEdge::base(h.edge(k).left, h.edge(k).right));
            } else {
                const Leaf& leaf = w.leaves()[k - base_edges];
                m.push_back(WEdge::leaf(leaf.owner, leaf.tag));
            }
        }
        visit(m);
    });
}

std::vector<Matching> enumerate_matchings(const WhiskeredGraph& w)
{
    std::vector<Matching> out;
    for_each_matching(w, [&](const Matching& m) { out.push_back(m); });
    return out;
}

Polynomial matching_polynomial(const SimpleGraph& g)
{
    std::vector<std::size_t> counts(g.vertex_count() / 2 + 1, 0);
    for_each_matching(g, [&](const std::vector<std::size_t>& idx) { ++counts[idx.size()]; });
    return Polynomial::from_counts(counts);
}

Polynomial matching_polynomial(const WhiskeredGraph& w)
{
    return matching_polynomial(w.as_simple_graph());
}

Matching psi(const BipartiteGraph& h, const CliqueVector& a)
{
    if (auto ok = validate_clique_vector(h, a); !ok) {
        throw PreconditionError("psi: invalid clique vector " + to_string(a) + ": " + ok.diagnostic);
    }
    Matching m;
    auto add_leaf = [&](int owner, int tag) {
        if (leaf_exists(h, owner, tag)) m.push_back(WEdge::leaf(owner, tag));
    };
    for (int i = 1; i <= h.left_size(); ++i) {
        if (a.at(a.at(i)) != i) add_leaf(i, a.at(i));
    }
    for (int j = h.left_size() + 1; j <= h.vertex_count(); ++j) {
        if (a.at(a.at(j)) != j) add_leaf(j, a.at(j));
    }
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        const auto& e = h.edge(k);
        if (!is_mutual(h, a, e)) continue;
        if (a.signs[k] == Sign::minus) {
            m.push_back(WEdge::base(e.left, e.right));
        } else {
            add_leaf(e.left, e.right);
            add_leaf(e.right, e.left);
        }
    }
    std::sort(m.begin(), m.end());
    return m;
}

CliqueVector psi_inverse(const BipartiteGraph& h, const Matching& m)
{
    check_matching(WhiskeredGraph(h), m);
    CliqueVector a;
    a.choice.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    a.signs.assign(h.edge_count(), Sign::minus);
    std::vector<bool> base_in_m(h.edge_count(), false);

    for (const auto& e : m) {
        if (e.kind == WEdge::Kind::leaf) {
            a.at(e.first) = e.second;
        } else {
            a.at(e.first) = e.second;
            a.at(e.second) = e.first;
            base_in_m[h.require_edge_index(e.first, e.second)] = true;
        }
    }
    for (int v = 1; v <= h.vertex_count(); ++v) {
        if (a.at(v) == 0) a.at(v) = h.is_left(v) ? h.min_neighbor(v) : h.max_neighbor(v);
    }
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
        if (is_mutual(h, a, h.edge(k)) && !base_in_m[k]) a.signs[k] = Sign::plus;
    }

    Matching sorted = m;
    std::sort(sorted.begin(), sorted.end());
    if (psi(h, a) != sorted) {
        throw InconsistencyError("psi_inverse: round trip failed for " + to_string(a));
    }
    return a;
}

} // namespace flowpoly
