#pragma once

// Acyclic, v-structure-free orientations (AMOs) of chordal graphs and the
// flip graph H_G whose vertices are AMOs and whose edges reverse one edge.

#include "gms/errors.hpp"
#include "gms/graph.hpp"
#include "gms/numeric.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gms {

using GraphPtr = std::shared_ptr<const UndirectedGraph>;

/// Orientation of every edge of a base graph. forward[e] is true when
/// base.edges()[e] = {u < v} is oriented u -> v, so the bit vector is an
/// encoding of the sorted arc set and serves as the canonical key.
class Amo {
public:
    /// Does not validate; see make_amo().
    Amo(GraphPtr base, std::vector<bool> forward);

    const UndirectedGraph& base() const { return *base_; }
    const GraphPtr& base_ptr() const { return base_; }
    std::size_t num_vertices() const { return base_->num_vertices(); }
    std::size_t num_edges() const { return forward_.size(); }

    Arc arc(std::size_t e) const;
    /// Sorted lexicographically.
    std::vector<Arc> arcs() const;
    bool has_arc(VertexId from, VertexId to) const;
    std::vector<VertexId> parents(VertexId v) const;

    /// Same orientation with edge e reversed; the result is not validated.
    Amo flipped(std::size_t e) const;

    Dag to_dag() const;
    Pdag to_pdag() const;

    const std::vector<bool>& key() const { return forward_; }

    friend bool operator==(const Amo& a, const Amo& b) { return a.forward_ == b.forward_; }
    friend bool operator<(const Amo& a, const Amo& b) { return a.forward_ < b.forward_; }

private:
    GraphPtr base_;
    std::vector<bool> forward_;
};

/// Throws std::invalid_argument unless `orientation` orients exactly the
/// edges of g, one direction each.
bool is_amo(const UndirectedGraph& g, std::span<const Arc> orientation);

/// Validating constructor; throws std::invalid_argument if not an AMO.
Amo make_amo(GraphPtr g, std::span<const Arc> orientation);

/// Throws std::logic_error when the orientation has zero or several sources.
VertexId unique_source(const Amo& a);

/// Removes the vertices of `sequence` one by one, orienting each vertex's
/// remaining edges away from it. Throws std::invalid_argument when sequence
/// is not a permutation or a vertex's already-removed neighbours are not
/// pairwise adjacent (which would create a v-structure).
Amo orient_from_source_sequence(GraphPtr g, std::span<const VertexId> sequence);

/// Start state of the edge-flip chain: sources taken in maximum cardinality
/// search order (the reverse of perfect_elimination_ordering()).
Amo canonical_amo(GraphPtr g);

/// All AMOs by recursive source choice; each appears once, in a
/// deterministic order. Throws std::invalid_argument for non-chordal input
/// and CapExceeded when the count exceeds `cap`.
std::vector<Amo> enumerate_amos(GraphPtr g, std::size_t cap = kDefaultStateCap);

/// |AMO(g)| without enumeration (memoised over chain components). Throws
/// std::invalid_argument for non-chordal input.
BigInt count_amos(const UndirectedGraph& g);

/// Indices of maximal cliques t such that every arc (v, w) with w in t has v
/// in t.
std::vector<std::size_t> non_follower_cliques(const Amo& a, const CliqueTree& ct);

/// Whether reversing edge e yields another AMO: the edge u -> v is covered,
/// i.e. pa(v) = pa(u) + {u}.
bool is_flippable(const Amo& a, std::size_t e);

/// Edge indices whose reversal yields an AMO, ascending.
std::vector<std::size_t> flip_candidates(const Amo& a);

/// H_G with its flip adjacency and per-state non-follower counts M(v).
class OrientationSpace {
public:
    const UndirectedGraph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const CliqueTree& tree() const { return tree_; }

    std::size_t size() const { return states_.size(); }
    const std::vector<Amo>& states() const { return states_; }
    const Amo& state(std::size_t i) const { return states_.at(i); }
    /// Loop-free neighbours, ascending.
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
    std::size_t non_follower_count(std::size_t i) const { return non_followers_.at(i); }
    const std::vector<std::size_t>& non_follower_set(std::size_t i) const { return non_follower_sets_.at(i); }

    /// Throws std::out_of_range when `a` is not a state.
    std::size_t index_of(const Amo& a) const;

    /// {"graph": text, "n_states", "n_edges", "adjacency": [[...], ...]}.
    std::string to_json() const;

private:
    friend OrientationSpace build_orientation_space(GraphPtr g, std::size_t cap);

    OrientationSpace(GraphPtr g, CliqueTree tree) : graph_(std::move(g)), tree_(std::move(tree)) {}

    GraphPtr graph_;
    CliqueTree tree_;
    std::vector<Amo> states_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> non_followers_;
    std::vector<std::vector<std::size_t>> non_follower_sets_;
    std::unordered_map<std::vector<bool>, std::size_t> index_;
};

/// States sorted by key. Requires a connected chordal graph; throws
/// CapExceeded before allocating when |AMO(g)| > cap.
OrientationSpace build_orientation_space(GraphPtr g, std::size_t cap = kDefaultStateCap);

}  // namespace gms
