#include "flowpoly/graph_core.hpp"

#include "flowpoly/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace flowpoly {

namespace {

std::string join_vertices(const std::vector<int>& vs)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k > 0) os << (k + 1 == vs.size() ? " and " : ", ");
        os << "vertex " << vs[k];
    }
    return os.str();
}

std::string edge_str(int u, int v)
{
    return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

} // namespace

// ---------------------------------------------------------------------------
// BipartiteGraph

BipartiteGraph BipartiteGraph::create(int n, int m, std::vector<std::pair<int, int>> edges)
{
    if (n < 1 || m < 1) {
        throw ValidationError("both shores must be nonempty (got n=" + std::to_string(n) +
                              ", m=" + std::to_string(m) + ")");
    }
    BipartiteGraph h;
    h.n_ = n;
    h.m_ = m;
    const int total = n + m;

    std::set<BipartiteEdge> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > total || v < 1 || v > total) {
            throw ValidationError("edge " + edge_str(u, v) + " uses a label outside 1.." +
                                  std::to_string(total));
        }
        if (u == v) throw ValidationError("edge " + edge_str(u, v) + " is a loop");
        if (h.is_left(u) == h.is_left(v)) {
            throw ValidationError("edge " + edge_str(u, v) + " joins two vertices of the " +
                                  (h.is_left(u) ? "left" : "right") + " shore");
        }
        BipartiteEdge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) {
            throw ValidationError("edge " + edge_str(e.left, e.right) + " appears more than once");
        }
    }
    h.edges_.assign(seen.begin(), seen.end());
    h.adjacency_.assign(static_cast<std::size_t>(total), {});
    for (const auto& e : h.edges_) {
        h.adjacency_[static_cast<std::size_t>(e.left - 1)].push_back(e.right);
        h.adjacency_[static_cast<std::size_t>(e.right - 1)].push_back(e.left);
    }
    for (auto& nb : h.adjacency_) std::sort(nb.begin(), nb.end());

    std::vector<int> low;
    for (int v = 1; v <= total; ++v) {
        if (h.degree(v) < 2) low.push_back(v);
    }
    if (!low.empty()) {
        std::ostringstream os;
        os << join_vertices(low) << (low.size() == 1 ? " has" : " have") << " degree below 2 (";
        for (std::size_t k = 0; k < low.size(); ++k) {
            os << (k ? ", " : "") << "deg(" << low[k] << ")=" << h.degree(low[k]);
        }
        os << ")";
        throw ValidationError(os.str());
    }

    std::vector<char> reached(static_cast<std::size_t>(total), 0);
    std::vector<int> stack{1};
    reached[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : h.neighbors(v)) {
            if (!reached[static_cast<std::size_t>(u - 1)]) {
                reached[static_cast<std::size_t>(u - 1)] = 1;
                stack.push_back(u);
            }
        }
    }
    for (int v = 1; v <= total; ++v) {
        if (!reached[static_cast<std::size_t>(v - 1)]) {
            throw ValidationError("graph is disconnected: vertex " + std::to_string(v) +
                                  " is not reachable from vertex 1");
        }
    }
    return h;
}

std::optional<std::size_t> BipartiteGraph::edge_index(int u, int v) const
{
    BipartiteEdge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t BipartiteGraph::require_edge_index(int u, int v) const
{
    auto idx = edge_index(u, v);
    if (!idx) throw PreconditionError("no edge " + edge_str(u, v) + " in H");
    return *idx;
}

std::optional<int> BipartiteGraph::neighbor_below(int v, int u) const
{
    auto nb = neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), u);
    if (it == nb.begin()) return std::nullopt;
    return *std::prev(it);
}

std::optional<int> BipartiteGraph::neighbor_above(int v, int u) const
{
    auto nb = neighbors(v);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    if (it == nb.end()) return std::nullopt;
    return *it;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

LabeledBipartiteGraph identity_labels(BipartiteGraph h)
{
    LabeledBipartiteGraph out;
    out.original_labels.reserve(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 1; v <= h.vertex_count(); ++v) out.original_labels.push_back(std::to_string(v));
    out.graph = std::move(h);
    return out;
}

int json_int(const nlohmann::json& j, const char* what)
{
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string json_label(const nlohmann::json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("vertex labels must be strings or integers");
}

LabeledBipartiteGraph parse_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("graph document needs an \"edges\" array");
    }

    if (doc.contains("shores")) {
        const auto& shores = doc["shores"];
        if (!shores.is_array() || shores.size() != 2) {
            throw ParseError("\"shores\" must be a two-element array [n, m]");
        }
        int n = json_int(shores[0], "shores[0]");
        int m = json_int(shores[1], "shores[1]");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]");
            edges.emplace_back(json_int(e[0], "edge endpoint"), json_int(e[1], "edge endpoint"));
        }
        return identity_labels(BipartiteGraph::create(n, m, std::move(edges)));
    }

    if (doc.contains("left") && doc.contains("right")) {
        std::map<std::string, int> canonical;
        LabeledBipartiteGraph out;
        int next = 1;
        for (const char* side : {"left", "right"}) {
            if (!doc[side].is_array()) throw ParseError(std::string("\"") + side + "\" must be an array");
            for (const auto& l : doc[side]) {
                std::string name = json_label(l);
                if (!canonical.emplace(name, next).second) {
                    throw ParseError("label \"" + name + "\" listed twice");
                }
                out.original_labels.push_back(name);
                ++next;
            }
        }
        int n = static_cast<int>(doc["left"].size());
        int m = static_cast<int>(doc["right"].size());
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
            std::string a = json_label(e[0]);
            std::string b = json_label(e[1]);
            auto ia = canonical.find(a);
            auto ib = canonical.find(b);
            if (ia == canonical.end()) throw ParseError("edge uses unknown label \"" + a + "\"");
            if (ib == canonical.end()) throw ParseError("edge uses unknown label \"" + b + "\"");
            edges.emplace_back(ia->second, ib->second);
        }
        out.graph = BipartiteGraph::create(n, m, std::move(edges));
        for (int v = 1; v <= out.graph.vertex_count(); ++v) {
            if (out.original_labels[static_cast<std::size_t>(v - 1)] != std::to_string(v)) out.relabeled = true;
        }
        return out;
    }
    throw ParseError("graph document needs either \"shores\" or \"left\"/\"right\"");
}

LabeledBipartiteGraph parse_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<std::pair<int, int>> shores;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": \"" + tok + "\" is not an integer");
            }
        }
        if (nums.empty()) continue;
        if (nums.size() != 2) {
            throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
        }
        if (!shores) {
            shores = {static_cast<int>(nums[0]), static_cast<int>(nums[1])};
        } else {
            edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
        }
    }
    if (!shores) throw ParseError("empty edge list: first line must be \"n m\"");
    return identity_labels(BipartiteGraph::create(shores->first, shores->second, std::move(edges)));
}

} // namespace

LabeledBipartiteGraph parse_labeled_bipartite(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty graph document");
    if (text[first] == '{') return parse_json(text);
    return parse_text(text);
}

BipartiteGraph parse_bipartite(std::string_view text)
{
    return parse_labeled_bipartite(text).graph;
}

BipartiteGraph load_bipartite(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bipartite(ss.str());
}

// ---------------------------------------------------------------------------
// ExtendedDag

ExtendedDag::ExtendedDag(BipartiteGraph base) : base_(std::move(base))
{
    const int n = base_.left_size();
    const int m = base_.right_size();
    const int t = sink();
    edges_.reserve(static_cast<std::size_t>(2 * n + 2 * m) + base_.edge_count());
    for (int i = 1; i <= n; ++i) {
        for (int c = 1; c <= 2; ++c) {
            edges_.push_back({DagEdgeKind::alpha, 0, i, c, "a" + std::to_string(c) + "_" + std::to_string(i)});
        }
    }
    beta_offset_ = edges_.size();
    for (const auto& e : base_.edges()) {
        edges_.push_back({DagEdgeKind::beta, e.left, e.right, 0,
                          "b_" + std::to_string(e.left) + "_" + std::to_string(e.right)});
    }
    gamma_offset_ = edges_.size();
    for (int j = n + 1; j <= n + m; ++j) {
        for (int c = 1; c <= 2; ++c) {
            edges_.push_back({DagEdgeKind::gamma, j, t, c, "g_" + std::to_string(j) + "_" + std::to_string(c)});
        }
    }
}

std::size_t ExtendedDag::alpha(int i, int copy) const
{
    if (!base_.is_left(i) || (copy != 1 && copy != 2)) {
        throw PreconditionError("no alpha edge for vertex " + std::to_string(i) + " copy " + std::to_string(copy));
    }
    return static_cast<std::size_t>(2 * (i - 1) + (copy - 1));
}

std::size_t ExtendedDag::beta(int i, int j) const
{
    return beta_offset_ + base_.require_edge_index(i, j);
}

std::size_t ExtendedDag::gamma(int j, int copy) const
{
    if (!base_.is_right(j) || (copy != 1 && copy != 2)) {
        throw PreconditionError("no gamma edge for vertex " + std::to_string(j) + " copy " + std::to_string(copy));
    }
    return gamma_offset_ + static_cast<std::size_t>(2 * (j - base_.left_size() - 1) + (copy - 1));
}

std::vector<std::size_t> ExtendedDag::in_edges(int v) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (edges_[k].head == v) out.push_back(k);
    }
    return out;
}

std::vector<std::size_t> ExtendedDag::out_edges(int v) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (edges_[k].tail == v) out.push_back(k);
    }
    return out;
}

ExtendedDag extend(const BipartiteGraph& h)
{
    ExtendedDag g(h);
    // G(H) never has idle edges: every inner vertex has two edges on its
    // source-facing side and deg_H >= 2 on the other.
    for (int v = 1; v <= h.vertex_count(); ++v) {
        if (g.in_edges(v).size() < 2 || g.out_edges(v).size() < 2) {
            throw InconsistencyError("extension has an idle edge at vertex " + std::to_string(v));
        }
    }
    return g;
}

int dimension(const ExtendedDag& g)
{
    return static_cast<int>(g.edge_count()) - g.inner_vertex_count() - 1;
}

// ---------------------------------------------------------------------------
// SimpleGraph and corona

SimpleGraph::SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

std::size_t SimpleGraph::add_vertex(std::string label)
{
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= labels_.size() || v >= labels_.size()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loop at vertex " + labels_[u]);
    if (has_edge(u, v)) throw PreconditionError("repeated edge " + labels_[u] + "-" + labels_[v]);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const
{
    std::pair<std::size_t, std::size_t> e{std::min(u, v), std::max(u, v)};
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::size_t SimpleGraph::degree(std::size_t v) const
{
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

SimpleGraph SimpleGraph::empty(std::size_t k)
{
    SimpleGraph g;
    for (std::size_t v = 0; v < k; ++v) g.add_vertex(std::to_string(v + 1));
    return g;
}

SimpleGraph SimpleGraph::complete(std::size_t k)
{
    SimpleGraph g = empty(k);
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = u + 1; v < k; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph SimpleGraph::path(std::size_t k)
{
    SimpleGraph g = empty(k);
    for (std::size_t v = 1; v < k; ++v) g.add_edge(v - 1, v);
    return g;
}

SimpleGraph corona(const SimpleGraph& g, const std::map<std::size_t, SimpleGraph>& family)
{
    SimpleGraph out{std::vector<std::string>(g.labels().begin(), g.labels().end())};
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto it = family.find(v);
        if (it == family.end()) {
            throw PreconditionError("corona family has no graph for vertex " + g.label(v));
        }
        const SimpleGraph& attached = it->second;
        std::vector<std::size_t> fresh;
        fresh.reserve(attached.vertex_count());
        for (std::size_t x = 0; x < attached.vertex_count(); ++x) {
            fresh.push_back(out.add_vertex(g.label(v) + "/" + attached.label(x)));
            out.add_edge(v, fresh.back());
        }
        for (auto [x, y] : attached.edges()) out.add_edge(fresh[x], fresh[y]);
    }
    return out;
}

SimpleGraph to_simple_graph(const BipartiteGraph& h)
{
    SimpleGraph g = SimpleGraph::empty(static_cast<std::size_t>(h.vertex_count()));
    for (const auto& e : h.edges()) {
        g.add_edge(static_cast<std::size_t>(e.left - 1), static_cast<std::size_t>(e.right - 1));
    }
    return g;
}

// ---------------------------------------------------------------------------
// W(H)

bool leaf_exists(const BipartiteGraph& h, int v, int u)
{
    if (v < 1 || v > h.vertex_count() || !h.adjacent(v, u)) return false;
    return h.is_left(v) ? u != h.min_neighbor(v) : u != h.max_neighbor(v);
}

std::string leaf_token(const Leaf& leaf)
{
    return "w_" + std::to_string(leaf.owner) + "_" + std::to_string(leaf.tag);
}

WhiskeredGraph::WhiskeredGraph(BipartiteGraph base) : base_(std::move(base))
{
    for (int v = 1; v <= base_.vertex_count(); ++v) {
        for (int u : base_.neighbors(v)) {
            if (leaf_exists(base_, v, u)) leaves_.push_back({v, u});
        }
    }
}

std::optional<std::size_t> WhiskeredGraph::leaf_index(int owner, int tag) const
{
    Leaf key{owner, tag};
    auto it = std::lower_bound(leaves_.begin(), leaves_.end(), key);
    if (it == leaves_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - leaves_.begin());
}

SimpleGraph WhiskeredGraph::as_simple_graph() const
{
    SimpleGraph g = to_simple_graph(base_);
    for (const auto& leaf : leaves_) {
        std::size_t w = g.add_vertex(leaf_token(leaf));
        g.add_edge(static_cast<std::size_t>(leaf.owner - 1), w);
    }
    return g;
}

WhiskeredGraph whisker(const BipartiteGraph& h)
{
    return WhiskeredGraph(h);
}

} // namespace flowpoly
