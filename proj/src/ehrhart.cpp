#include "flowpoly/ehrhart.hpp"

#include "flowpoly/errors.hpp"
#include "flowpoly/framing_lattice.hpp"
#include "flowpoly/parallel.hpp"
#include "flowpoly/smith.hpp"

#include <algorithm>
#include <numeric>

namespace flowpoly {

void validate_flow(const ExtendedDag& g, const FlowPoint& p)
{
    if (p.values.size() != g.edge_count()) {
        throw PreconditionError("flow has " + std::to_string(p.values.size()) + " coordinates, G(H) has " +
                                std::to_string(g.edge_count()) + " edges");
    }
    if (p.t < 0) throw PreconditionError("flow value t = " + std::to_string(p.t) + " is negative");
    std::vector<std::int64_t> net(static_cast<std::size_t>(g.sink()) + 1, 0);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        if (p.values[k] < 0) {
            throw PreconditionError("flow is negative on " + g.edge(k).token);
        }
        net[static_cast<std::size_t>(g.edge(k).tail)] -= p.values[k];
        net[static_cast<std::size_t>(g.edge(k).head)] += p.values[k];
    }
    if (-net[0] != p.t) {
        throw PreconditionError("flow out of s is " + std::to_string(-net[0]) + ", expected " + std::to_string(p.t));
    }
    for (int v = 1; v <= g.inner_vertex_count(); ++v) {
        if (net[static_cast<std::size_t>(v)] != 0) {
            throw PreconditionError("flow is not conserved at vertex " + std::to_string(v) + " (net inflow " +
                                    std::to_string(net[static_cast<std::size_t>(v)]) + ")");
        }
    }
}

namespace {

// Calls visit(loads, through) for every beta load vector with total t;
// through[v] is the load passing vertex v, indexed by label.
template <typename Visit>
void for_each_load(const BipartiteGraph& h, std::int64_t t, Visit&& visit)
{
    const std::size_t edges = h.edge_count();
    std::vector<std::int64_t> loads(edges, 0);
    std::vector<std::int64_t> through(static_cast<std::size_t>(h.vertex_count()) + 1, 0);

    auto recurse = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
        const auto& e = h.edge(k);
        auto& x = through[static_cast<std::size_t>(e.left)];
        auto& y = through[static_cast<std::size_t>(e.right)];
        if (k + 1 == edges) {
            loads[k] = left;
            x += left;
            y += left;
            visit(loads, through);
            x -= left;
            y -= left;
            return;
        }
        for (std::int64_t b = 0; b <= left; ++b) {
            loads[k] = b;
            x += b;
            y += b;
            self(self, k + 1, left - b);
            x -= b;
            y -= b;
        }
    };
    recurse(recurse, 0, t);
}

} // namespace

void for_each_flow_point(const ExtendedDag& g, std::int64_t t, const std::function<void(const FlowPoint&)>& visit)
{
    if (t < 0) throw PreconditionError("dilation t = " + std::to_string(t) + " is negative");
    const BipartiteGraph& h = g.base();
    const int total = h.vertex_count();
    FlowPoint p;
    p.t = t;
    p.values.assign(g.edge_count(), 0);

    for_each_load(h, t, [&](const std::vector<std::int64_t>& loads, const std::vector<std::int64_t>& through) {
        for (std::size_t k = 0; k < h.edge_count(); ++k) p.values[g.beta_by_index(k)] = loads[k];
        // Split each vertex load between copy 1 and copy 2 of its alpha/gamma pair.
        auto split = [&](auto&& self, int v) -> void {
            if (v > total) {
                visit(p);
                return;
            }
            const std::int64_t load = through[static_cast<std::size_t>(v)];
            const std::size_t first = h.is_left(v) ? g.alpha(v, 1) : g.gamma(v, 1);
            const std::size_t second = h.is_left(v) ? g.alpha(v, 2) : g.gamma(v, 2);
            for (std::int64_t x = 0; x <= load; ++x) {
                p.values[first] = x;
                p.values[second] = load - x;
                self(self, v + 1);
            }
        };
        split(split, 1);
    });
}

BigInt count_lattice_points(const ExtendedDag& g, std::int64_t t)
{
    if (t < 0) throw PreconditionError("dilation t = " + std::to_string(t) + " is negative");
    const BipartiteGraph& h = g.base();
    BigInt total = 0;
    for_each_load(h, t, [&](const std::vector<std::int64_t>&, const std::vector<std::int64_t>& through) {
        BigInt term = 1;
        for (int v = 1; v <= h.vertex_count(); ++v) term *= through[static_cast<std::size_t>(v)] + 1;
        total += term;
    });
    return total;
}

Polynomial hstar_from_counts(const std::vector<BigInt>& counts, int dimension)
{
    if (counts.size() < static_cast<std::size_t>(dimension) + 1) {
        throw PreconditionError("need i(0..d) to read off h*");
    }
    std::vector<BigInt> h(static_cast<std::size_t>(dimension) + 1, 0);
    for (int j = 0; j <= dimension; ++j) {
        BigInt acc = 0;
        for (int k = 0; k <= j; ++k) {
            BigInt term = binomial(dimension + 1, k) * counts[static_cast<std::size_t>(j - k)];
            acc += (k % 2 == 0) ? term : BigInt(-term);
        }
        if (acc < 0) {
            throw InconsistencyError("h*_" + std::to_string(j) + " = " + to_string(acc) + " is negative");
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return Polynomial(std::move(h));
}

EhrhartData ehrhart_data(const ExtendedDag& g)
{
    EhrhartData data;
    data.dimension = dimension(g);
    const auto d = static_cast<std::size_t>(data.dimension);
    std::vector<BigInt> counts(d + 2);
    parallel_for(d + 2, [&](std::size_t t) { counts[t] = count_lattice_points(g, static_cast<std::int64_t>(t)); });

    data.next_count = counts.back();
    counts.pop_back();
    data.counts = counts;
    data.polynomial = RationalPolynomial::interpolate(counts);
    data.next_value = data.polynomial.evaluate(BigRational(static_cast<long long>(d + 1)));
    data.hstar = hstar_from_counts(counts, data.dimension);
    data.volume = data.hstar.sum();
    data.leading_volume = data.polynomial.coeff(d) * BigRational(factorial(data.dimension));
    return data;
}

RationalPolynomial ehrhart_polynomial(const ExtendedDag& g)
{
    return ehrhart_data(g).polynomial;
}

Polynomial hstar_via_ehrhart(const ExtendedDag& g)
{
    return ehrhart_data(g).hstar;
}

Polynomial hstar_via_covers(const BipartiteGraph& h)
{
    std::vector<std::size_t> histogram;
    for_each_clique_vector(h, [&](const CliqueVector& a) {
        const std::size_t k = cover_count(h, a);
        if (histogram.size() <= k) histogram.resize(k + 1, 0);
        ++histogram[k];
    });
    return Polynomial::from_counts(histogram);
}

UnimodularityResult unimodularity_check(const ExtendedDag& g, const std::vector<std::vector<std::int64_t>>& vertices)
{
    UnimodularityResult result;
    const auto d = static_cast<std::size_t>(dimension(g));
    if (vertices.size() != d + 1) {
        result.witness = std::to_string(vertices.size()) + " vertices, a full simplex needs " + std::to_string(d + 1);
        return result;
    }
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        try {
            validate_flow(g, {vertices[k], 1});
        } catch (const PreconditionError& e) {
            result.witness = "vertex " + std::to_string(k) + " is not a unit flow: " + e.what();
            return result;
        }
    }

    IntMatrix diff;
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        std::vector<BigInt> row(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) row[e] = vertices[k][e] - vertices[0][e];
        diff.push_back(std::move(row));
    }
    result.invariant_factors = smith_invariant_factors(std::move(diff));
    result.rank = result.invariant_factors.size();
    if (result.rank != d) {
        result.witness = "edge vectors have rank " + std::to_string(result.rank) + ", expected " + std::to_string(d);
        return result;
    }
    for (std::size_t k = 0; k < result.invariant_factors.size(); ++k) {
        if (result.invariant_factors[k] != 1) {
            result.witness = "invariant factor " + std::to_string(k + 1) + " is " + to_string(result.invariant_factors[k]);
            return result;
        }
    }
    result.unimodular = true;
    return result;
}

UnimodularityResult unimodularity_check(const ExtendedDag& g, const Clique& c)
{
    std::vector<std::vector<std::int64_t>> vertices;
    for (const auto& r : c.routes(g.base())) {
        auto v = indicator_vector(g, r);
        vertices.emplace_back(v.begin(), v.end());
    }
    return unimodularity_check(g, vertices);
}

// ---------------------------------------------------------------------------
// Half-open triangulation

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

// Row-reduces m in place, pivoting only on +-1 (the vertex matrices here are
// totally unimodular, so no other pivot can occur). Returns pivot columns.
std::vector<std::size_t> unit_pivot_reduce(Dense& m, std::size_t cols, bool full)
{
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t r = rank;
        while (r < m.size() && m[r][c] == 0) ++r;
        if (r == m.size()) continue;
        std::swap(m[rank], m[r]);
        const std::int64_t p = m[rank][c];
        if (p != 1 && p != -1) throw InconsistencyError("vertex matrix is not totally unimodular (pivot " + std::to_string(p) + ")");
        for (auto& x : m[rank]) x *= p;
        for (std::size_t q = full ? 0 : rank + 1; q < m.size(); ++q) {
            if (q == rank || m[q][c] == 0) continue;
            const std::int64_t f = m[q][c];
            for (std::size_t k = 0; k < m[q].size(); ++k) m[q][k] -= f * m[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

} // namespace

HalfOpenTriangulation::HalfOpenTriangulation(const BipartiteGraph& h) : h_(h), g_(extend(h)), nodes_(enumerate_clique_vectors(h))
{
    simplices_.resize(nodes_.size());
    parallel_for(nodes_.size(), [&](std::size_t x) {
        Simplex& s = simplices_[x];
        s.clique = phi(h_, nodes_[x]);
        const auto routes = s.clique.routes(h_);
        const std::size_t size = routes.size();
        for (const auto& r : routes) s.route_edges.push_back(route_edges(g_, r));

        // Rows of the transposed vertex matrix are routes; its pivot
        // columns are independent coordinates.
        Dense vt(size, std::vector<std::int64_t>(g_.edge_count(), 0));
        for (std::size_t r = 0; r < size; ++r) {
            for (auto e : s.route_edges[r]) vt[r][e] = 1;
        }
        s.pivot_rows = unit_pivot_reduce(vt, g_.edge_count(), false);
        if (s.pivot_rows.size() != size) {
            throw InconsistencyError("clique " + to_string(nodes_[x]) + " is affinely dependent");
        }

        // Invert the square block [B | I] by Gauss-Jordan.
        Dense aug(size, std::vector<std::int64_t>(2 * size, 0));
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t r = 0; r < size; ++r) {
                const auto& es = s.route_edges[r];
                aug[a][r] = std::count(es.begin(), es.end(), s.pivot_rows[a]);
            }
            aug[a][size + a] = 1;
        }
        unit_pivot_reduce(aug, size, true);
        s.inverse.assign(size, std::vector<std::int64_t>(size));
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t a = 0; a < size; ++a) s.inverse[r][a] = aug[r][size + a];
        }

        for (const auto& b : upper_covers(h_, nodes_[x])) {
            const Clique above = phi(h_, b);
            std::vector<RouteId> leaving;
            std::set_difference(s.clique.ids().begin(), s.clique.ids().end(), above.ids().begin(), above.ids().end(),
                                std::back_inserter(leaving));
            if (leaving.size() != 1) {
                throw InconsistencyError("upper cover " + to_string(b) + " of " + to_string(nodes_[x]) +
                                         " does not share a facet");
            }
            const auto ids = s.clique.ids();
            s.departing.push_back(static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), leaving.front()) - ids.begin()));
        }
    });
}

std::vector<HalfOpenMembership> HalfOpenTriangulation::owners(const FlowPoint& p) const
{
    std::vector<HalfOpenMembership> found;
    std::vector<std::int64_t> rebuilt(g_.edge_count());
    for (std::size_t x = 0; x < simplices_.size(); ++x) {
        const Simplex& s = simplices_[x];
        const std::size_t size = s.route_edges.size();
        std::vector<std::int64_t> lambda(size, 0);
        bool inside = true;
        for (std::size_t r = 0; r < size && inside; ++r) {
            for (std::size_t a = 0; a < size; ++a) lambda[r] += s.inverse[r][a] * p.values[s.pivot_rows[a]];
            inside = lambda[r] >= 0;
        }
        if (!inside) continue;
        inside = std::all_of(s.departing.begin(), s.departing.end(), [&](std::size_t r) { return lambda[r] >= 1; });
        if (!inside) continue;

        std::fill(rebuilt.begin(), rebuilt.end(), 0);
        for (std::size_t r = 0; r < size; ++r) {
            for (auto e : s.route_edges[r]) rebuilt[e] += lambda[r];
        }
        if (rebuilt != p.values) continue;
        found.push_back({x, std::move(lambda)});
    }
    return found;
}

HalfOpenMembership HalfOpenTriangulation::locate(const FlowPoint& p) const
{
    validate_flow(g_, p);
    auto found = owners(p);
    if (found.size() != 1) {
        std::string text = "lattice point (";
        for (std::size_t k = 0; k < p.values.size(); ++k) text += (k ? "," : "") + std::to_string(p.values[k]);
        throw InconsistencyError(text + ") at t = " + std::to_string(p.t) + " has " + std::to_string(found.size()) +
                                 " half-open owners");
    }
    return std::move(found.front());
}

HalfOpenMembership half_open_locate(const HalfOpenTriangulation& tri, const FlowPoint& p)
{
    return tri.locate(p);
}

HalfOpenMembership half_open_locate(const BipartiteGraph& h, const FlowPoint& p)
{
    return HalfOpenTriangulation(h).locate(p);
}

} // namespace flowpoly
