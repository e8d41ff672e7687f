#pragma once

// Graph representations shared by every other module: undirected graphs,
// DAGs and partially directed graphs (PDAGs), plus the structural predicates
// used throughout (acyclicity, skeleton, immoralities, chordality, clique
// trees, partially directed cycles).

#include "gms/numeric.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gms {

using VertexId = std::uint32_t;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered vertex pair from -> to.
struct Arc {
    VertexId from = 0;
    VertexId to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Throws std::invalid_argument on a self-loop.
Edge make_edge(VertexId a, VertexId b);

class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t n);
    UndirectedGraph(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_edge(VertexId a, VertexId b) const;
    void add_edge(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);

    /// Sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

    /// Position of {a,b} in edges(); throws if absent.
    std::size_t edge_index(VertexId a, VertexId b) const;

    /// Subgraph induced by `vertices` (sorted, distinct), relabelled 0..k-1 in
    /// the given order.
    UndirectedGraph induced(std::span<const VertexId> vertices) const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

class Dag {
public:
    Dag() = default;
    explicit Dag(std::size_t n);
    /// Throws std::invalid_argument on cycles, self-loops or duplicate pairs.
    Dag(std::size_t n, std::span<const Arc> arcs);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_arcs() const { return arcs_.size(); }

    bool has_arc(VertexId from, VertexId to) const;
    bool adjacent(VertexId a, VertexId b) const { return has_arc(a, b) || has_arc(b, a); }

    /// Sorted lexicographically.
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<VertexId>& parents(VertexId v) const { return parents_.at(v); }
    const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }

    friend bool operator==(const Dag& a, const Dag& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<VertexId>> parents_;
    std::vector<std::vector<VertexId>> children_;
};

/// Relation of an ordered vertex pair (u, v) inside a Pdag.
enum class Mark : std::uint8_t {
    None,
    Line,
    Out,  ///< u -> v
    In,   ///< v -> u
};

class Pdag {
public:
    Pdag() = default;
    explicit Pdag(std::size_t n);
    /// Throws std::invalid_argument when an arc and a line share a vertex pair.
    Pdag(std::size_t n, std::span<const Arc> arcs, std::span<const Edge> lines);

    static Pdag from_dag(const Dag& d);
    static Pdag from_undirected(const UndirectedGraph& g);

    std::size_t num_vertices() const { return n_; }

    Mark mark(VertexId u, VertexId v) const { return marks_[index(u, v)]; }
    bool has_arc(VertexId from, VertexId to) const { return mark(from, to) == Mark::Out; }
    bool has_line(VertexId a, VertexId b) const { return mark(a, b) == Mark::Line; }
    bool adjacent(VertexId a, VertexId b) const { return mark(a, b) != Mark::None; }

    void add_arc(VertexId from, VertexId to);
    void add_line(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);
    /// Replaces whatever joins a and b (or nothing) by the arc from -> to.
    void set_arc(VertexId from, VertexId to);
    void set_line(VertexId a, VertexId b);

    /// Sorted lexicographically.
    std::vector<Arc> arcs() const;
    std::vector<Edge> lines() const;
    std::size_t num_arcs() const;
    std::size_t num_lines() const;

    std::vector<VertexId> parents(VertexId v) const;
    std::vector<VertexId> children(VertexId v) const;
    std::vector<VertexId> line_neighbors(VertexId v) const;
    std::vector<VertexId> adjacent_vertices(VertexId v) const;

    UndirectedGraph skeleton() const;
    UndirectedGraph undirected_part() const;
    /// Throws std::invalid_argument if lines remain or the arcs form a cycle.
    Dag to_dag() const;

    /// Canonical state encoding: one character per unordered pair u < v.
    std::string key() const;

    friend bool operator==(const Pdag& a, const Pdag& b) { return a.n_ == b.n_ && a.marks_ == b.marks_; }

private:
    std::size_t index(VertexId u, VertexId v) const;
    void set_pair(VertexId u, VertexId v, Mark m);

    std::size_t n_ = 0;
    std::vector<Mark> marks_;
};

// ---------------------------------------------------------------------------
// Structural predicates

bool is_acyclic(std::size_t n, std::span<const Arc> arcs);

UndirectedGraph skeleton(const Dag& d);

/// v-structure a -> c <- b with a < b and a, b nonadjacent.
struct Immorality {
    VertexId a = 0;
    VertexId b = 0;
    VertexId c = 0;

    friend auto operator<=>(const Immorality&, const Immorality&) = default;
};

/// Sorted lexicographically.
std::vector<Immorality> immoralities(const Dag& d);

/// Immoralities formed by arcs already present in a PDAG.
std::vector<Immorality> immoralities(const Pdag& p);

/// Perfect elimination ordering when g is chordal (each vertex's later
/// neighbours form a clique), std::nullopt otherwise.
std::optional<std::vector<VertexId>> perfect_elimination_ordering(const UndirectedGraph& g);

bool is_chordal(const UndirectedGraph& g);

/// Vertices of some chordless cycle of length >= 4, in cycle order.
std::optional<std::vector<VertexId>> find_chordless_cycle(const UndirectedGraph& g);

/// Cycle that follows lines in either direction and arcs forward only, with
/// at least one arc.
bool has_partially_directed_cycle(const Pdag& p);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);

/// Every maximal clique once, each sorted, list sorted lexicographically.
/// Throws std::invalid_argument for non-chordal input.
std::vector<std::vector<VertexId>> maximal_cliques(const UndirectedGraph& g);

// ---------------------------------------------------------------------------
// Clique trees

class CliqueTree {
public:
    /// Validates connectivity, acyclicity, maximality of cliques and the
    /// running intersection property; throws std::invalid_argument otherwise.
    CliqueTree(const UndirectedGraph& g, std::vector<std::vector<VertexId>> cliques,
               std::vector<std::pair<std::size_t, std::size_t>> tree_edges);

    std::size_t size() const { return cliques_.size(); }
    const std::vector<VertexId>& clique(std::size_t i) const { return cliques_.at(i); }
    const std::vector<std::vector<VertexId>>& cliques() const { return cliques_; }
    /// Each pair (i, j) has i < j; sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& tree_edges() const { return tree_edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_.at(i); }

    /// |t_i ∩ t_j| for the tree edge at position e of tree_edges().
    std::size_t separator_size(std::size_t e) const { return separator_sizes_.at(e); }
    std::size_t intersection_size(std::size_t i, std::size_t j) const;

    /// |D_i| = prod over j != i of |t_j \ s_j|!, s_j preceding t_j on the
    /// path from t_i.
    const BigInt& dilation_size(std::size_t i) const { return dilation_sizes_.at(i); }

    std::size_t max_degree() const;
    std::size_t diameter() const;
    std::size_t max_clique_size() const;
    /// Largest number of maximal cliques sharing one vertex of the graph.
    std::size_t max_vertex_overlap() const { return max_vertex_overlap_; }

private:
    std::vector<std::vector<VertexId>> cliques_;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> separator_sizes_;
    std::vector<BigInt> dilation_sizes_;
    std::size_t max_vertex_overlap_ = 0;
};

/// Deterministic clique tree: Prim's maximum-weight spanning tree over the
/// clique intersection graph, grown from the lexicographically smallest
/// clique; ties go to the smallest outside clique, then the smallest tree
/// clique. Throws std::invalid_argument for non-chordal or disconnected g.
CliqueTree clique_tree(const UndirectedGraph& g);

}  // namespace gms
