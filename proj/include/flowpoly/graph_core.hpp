#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flowpoly {

/// An edge of H, always stored with the left-shore endpoint first.
struct BipartiteEdge {
    int left = 0;
    int right = 0;

    auto operator<=>(const BipartiteEdge&) const = default;
};

/// Simple connected bipartite graph with every degree >= 2.
///
/// Vertices are labelled 1..n (left shore S) and n+1..n+m (right shore T).
/// Edges are kept in lexicographic order and every neighbor list is sorted
/// ascending; the framing, the clique map and the matching map all read
/// these orders.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Validates and builds H. Edges may be given in either orientation.
    /// Throws ValidationError naming the offending vertex or edge.
    static BipartiteGraph create(int n, int m, std::vector<std::pair<int, int>> edges);

    int left_size() const { return n_; }
    int right_size() const { return m_; }
    int vertex_count() const { return n_ + m_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool is_left(int v) const { return v >= 1 && v <= n_; }
    bool is_right(int v) const { return v > n_ && v <= n_ + m_; }

    std::span<const BipartiteEdge> edges() const { return edges_; }
    const BipartiteEdge& edge(std::size_t idx) const { return edges_.at(idx); }

    /// Lexicographic index of edge {u, v}; accepts either endpoint order.
    std::optional<std::size_t> edge_index(int u, int v) const;
    std::size_t require_edge_index(int u, int v) const;

    std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v - 1)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int min_neighbor(int v) const { return neighbors(v).front(); }
    int max_neighbor(int v) const { return neighbors(v).back(); }
    bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

    /// Largest neighbor of v strictly below u, if any.
    std::optional<int> neighbor_below(int v, int u) const;
    /// Smallest neighbor of v strictly above u, if any.
    std::optional<int> neighbor_above(int v, int u) const;

    bool operator==(const BipartiteGraph& other) const
    {
        return n_ == other.n_ && m_ == other.m_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<BipartiteEdge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// H together with the labels it carried in the input document.
/// original_labels[v - 1] is the input name of canonical vertex v.
struct LabeledBipartiteGraph {
    BipartiteGraph graph;
    std::vector<std::string> original_labels;
    bool relabeled = false;
};

/// Parses the JSON form {"shores":[n,m],"edges":[[i,j],...]}, the
/// string-label JSON form {"left":[...],"right":[...],"edges":[[u,v],...]}
/// or the plain-text form ("n m" then one "i j" per line).
LabeledBipartiteGraph parse_labeled_bipartite(std::string_view text);
BipartiteGraph parse_bipartite(std::string_view text);
BipartiteGraph load_bipartite(const std::string& path);

// ---------------------------------------------------------------------------
// Extension DAG G(H)

enum class DagEdgeKind { alpha, beta, gamma };

/// One edge of G(H). For alpha edges `tail` is the source (vertex 0) and
/// `copy` is 1 or 2; for gamma edges `head` is the sink (vertex n+m+1).
struct DagEdge {
    DagEdgeKind kind;
    int tail;
    int head;
    int copy;
    std::string token;
};

/// G(H): source s, sink t, two parallel edges s->i for i in S, one edge
/// i->j per edge of H, two parallel edges j->t for j in T.
///
/// Coordinate order: alpha edges by (i, copy), then beta edges in
/// lexicographic (i, j) order, then gamma edges by (j, copy).
class ExtendedDag {
public:
    explicit ExtendedDag(BipartiteGraph base);

    const BipartiteGraph& base() const { return base_; }

    int source() const { return 0; }
    int sink() const { return base_.vertex_count() + 1; }
    int inner_vertex_count() const { return base_.vertex_count(); }
    bool is_inner(int v) const { return v >= 1 && v <= base_.vertex_count(); }

    std::size_t edge_count() const { return edges_.size(); }
    const DagEdge& edge(std::size_t idx) const { return edges_.at(idx); }
    std::span<const DagEdge> edges() const { return edges_; }

    std::size_t alpha(int i, int copy) const;
    std::size_t beta(int i, int j) const;
    std::size_t beta_by_index(std::size_t h_edge) const { return beta_offset_ + h_edge; }
    std::size_t gamma(int j, int copy) const;

    std::vector<std::size_t> in_edges(int v) const;
    std::vector<std::size_t> out_edges(int v) const;

private:
    BipartiteGraph base_;
    std::vector<DagEdge> edges_;
    std::size_t beta_offset_ = 0;
    std::size_t gamma_offset_ = 0;
};

ExtendedDag extend(const BipartiteGraph& h);

/// |E(G)| - #inner vertices - 1.
int dimension(const ExtendedDag& g);

// ---------------------------------------------------------------------------
// Generic simple graphs and coronas

/// Undirected simple loop-free graph with string vertex labels.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<std::string> labels);

    std::size_t add_vertex(std::string label);
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    std::span<const std::string> labels() const { return labels_; }
    /// Edges with first < second, in insertion order.
    std::span<const std::pair<std::size_t, std::size_t>> edges() const { return edges_; }
    std::size_t degree(std::size_t v) const;

    static SimpleGraph complete(std::size_t k);
    static SimpleGraph empty(std::size_t k);
    static SimpleGraph path(std::size_t k);

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// G joined vertex-by-vertex with its family: every vertex v of G gets a
/// fresh copy of family[v], each of whose vertices is made adjacent to v.
/// Fresh vertices are labelled "<label of v>/<label in family[v]>".
SimpleGraph corona(const SimpleGraph& g, const std::map<std::size_t, SimpleGraph>& family);

/// H as a SimpleGraph on labels "1".."n+m" (vertex v at index v-1).
SimpleGraph to_simple_graph(const BipartiteGraph& h);

// ---------------------------------------------------------------------------
// Almost-degree-whiskered graph W(H)

/// True iff W(H) has the leaf w_{v,u}: u is a neighbor of v, and u is not
/// the smallest neighbor when v is on the left shore, nor the largest
/// neighbor when v is on the right shore.
bool leaf_exists(const BipartiteGraph& h, int v, int u);

/// The pendant vertex w_{owner,tag}.
struct Leaf {
    int owner;
    int tag;

    auto operator<=>(const Leaf&) const = default;
};

std::string leaf_token(const Leaf& leaf);

class WhiskeredGraph {
public:
    explicit WhiskeredGraph(BipartiteGraph base);

    const BipartiteGraph& base() const { return base_; }
    /// Leaves ordered by (owner, tag).
    std::span<const Leaf> leaves() const { return leaves_; }
    std::size_t leaf_count() const { return leaves_.size(); }
    std::size_t vertex_count() const { return static_cast<std::size_t>(base_.vertex_count()) + leaves_.size(); }
    std::size_t edge_count() const { return base_.edge_count() + leaves_.size(); }

    /// Index of the leaf in leaves(), if present.
    std::optional<std::size_t> leaf_index(int owner, int tag) const;

    /// Vertex layout: base vertex v at v-1, then leaves in leaves() order.
    /// Edge layout: base edges in lexicographic order, then leaf edges.
    SimpleGraph as_simple_graph() const;

private:
    BipartiteGraph base_;
    std::vector<Leaf> leaves_;
};

WhiskeredGraph whisker(const BipartiteGraph& h);

} // namespace flowpoly
