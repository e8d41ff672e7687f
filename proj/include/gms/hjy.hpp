#pragma once

// Lazy reversible Markov chain on essential graphs with six moves: insert or
// delete an arc, insert or delete a line, make or remove an immorality. Each
// edit is repaired by taking a consistent extension and mapping it back to
// its essential graph.

#include "gms/errors.hpp"
#include "gms/essential.hpp"
#include "gms/graph.hpp"
#include "gms/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gms {

enum class MoveKind { InsertArc, DeleteArc, InsertLine, DeleteLine, MakeImmorality, RemoveImmorality };

inline constexpr std::array<MoveKind, 6> kMoveKinds = {MoveKind::InsertArc,  MoveKind::DeleteArc,
                                                       MoveKind::InsertLine, MoveKind::DeleteLine,
                                                       MoveKind::MakeImmorality, MoveKind::RemoveImmorality};

/// "insert-arc", "delete-arc", ...
std::string_view to_string(MoveKind kind);
/// Inverse of to_string. Throws std::invalid_argument on unknown names.
MoveKind parse_move_kind(std::string_view name);

/// Arc moves use (a, b) as from -> to. Line moves keep a < b. Immorality
/// moves target a -> b <- c with a < c and b in the middle.
struct Move {
    MoveKind kind = MoveKind::InsertArc;
    VertexId a = 0;
    VertexId b = 0;
    VertexId c = 0;

    /// Throws std::invalid_argument unless kind is an edge move and u != v.
    static Move edge(MoveKind kind, VertexId u, VertexId v);
    /// Throws std::invalid_argument unless kind is an immorality move and the
    /// three vertices are distinct.
    static Move immorality(MoveKind kind, VertexId a, VertexId middle, VertexId c);

    bool is_immorality_move() const;

    friend auto operator<=>(const Move&, const Move&) = default;
};

/// The move that undoes m: insert <-> delete, make <-> remove.
Move inverse(const Move& m);

/// "insert-arc 0 1", "make-immorality 0 2 1" (outer, middle, outer).
std::string format_move(const Move& m);

/// Dor-Tarsi sink peeling with smallest-index tie-breaking: a DAG that keeps
/// every arc of p, orients every line, and has exactly p's immoralities.
/// std::nullopt when no such DAG exists.
std::optional<Dag> consistent_extension(const Pdag& p);

/// Reference: tries all 2^lines orientations. Throws CapExceeded when
/// 2^lines > cap.
std::optional<Dag> consistent_extension_bruteforce(const Pdag& p, std::size_t cap = kDefaultStateCap);

/// One move with repair and no reversibility check: std::nullopt when a
/// precondition fails, no consistent extension exists, or an inserted edge
/// (or made or removed immorality) does not keep its type after repair.
/// Throws std::invalid_argument for vertices out of range.
std::optional<EssentialGraph> repair_move(const EssentialGraph& s, const Move& m);

/// Chain transition: repair_move, accepted only when the inverse move from
/// the result repairs back to s. This keeps the proposal kernel symmetric so
/// the lazy chain is uniform-stationary.
std::optional<EssentialGraph> apply_move(const EssentialGraph& s, const Move& m);

/// Number of tuples proposed for a kind on n vertices.
std::size_t proposal_count(MoveKind kind, std::size_t n);
/// Every tuple for a kind on n vertices, sorted.
std::vector<Move> all_moves(MoveKind kind, std::size_t n);
/// Probability that a single step proposes m: 1/6 times 1/proposal_count.
Rational proposal_probability(const Move& m, std::size_t n);

using HjyRng = std::mt19937_64;

/// Kind uniform over six, tuple uniform within the kind. std::nullopt when
/// the drawn kind has no tuples on n vertices.
std::optional<Move> propose(std::size_t n, HjyRng& rng);

struct StepRecord {
    std::optional<Move> move;
    bool accepted = false;
};

/// One lazy step: propose, apply_move, stay on rejection.
StepRecord step(EssentialGraph& state, HjyRng& rng);

/// FNV-1a of the state key.
std::uint64_t state_hash(const EssentialGraph& eg);

/// Empty essential graph on n vertices.
EssentialGraph empty_essential_graph(std::size_t n);

/// Distinct states reachable in one accepted move (the state itself excluded).
std::vector<EssentialGraph> chain_neighbors(const EssentialGraph& s);

/// Exact transition matrix over the states reachable from the empty graph.
struct HjyTransitionMatrix {
    std::vector<EssentialGraph> states;       ///< sorted by key
    std::vector<std::vector<Rational>> prob;  ///< prob[i][j]

    std::size_t size() const { return states.size(); }
    bool is_symmetric() const;
    bool is_stochastic() const;
    /// Uniform row vector u with u P = u, checked exactly.
    bool uniform_is_stationary() const;
    /// min_i prob[i][i].
    Rational min_holding() const;
};

/// Throws CapExceeded when more than cap states are discovered.
HjyTransitionMatrix exact_transition_matrix(std::size_t n, std::size_t cap = 20'000);

/// All essential graphs on n vertices, via the essential graphs of every
/// labeled DAG. Sorted by key. Throws CapExceeded above kMaxEnumeratedDag.
std::vector<EssentialGraph> essential_graphs_bruteforce(std::size_t n);

/// Moves from eg to the empty graph: lines first along a perfect elimination
/// ordering, then arcs into maximal elements of height >= 3, then the
/// remaining immoralities. Every move is replayed through apply_move; throws
/// std::logic_error if one is rejected or leaves a non-essential graph.
/// Throws std::invalid_argument above 64 vertices.
std::vector<Move> emptying_sequence(const EssentialGraph& eg);

/// Vertex pairs whose status (absent, line, arc either way) differs. Throws
/// std::invalid_argument on differing vertex counts.
std::size_t hamming_distance(const EssentialGraph& x, const EssentialGraph& y);

/// One or two moves taking x to y when they differ at one pair; a reversed
/// arc goes through the graph without that edge. Throws
/// std::invalid_argument unless hamming_distance(x, y) == 1, and
/// std::logic_error if a move is rejected.
std::vector<Move> two_step_path(const EssentialGraph& x, const EssentialGraph& y);

/// Pair at Hamming distance two on 5k + 4 vertices with 12k + 5 edges. Hubs
/// are 0..3; the undirected part holds the cycle a - c - b - d - a plus the
/// chord a - b (first) or c - d (second). Four independent k-sets are each
/// joined by lines to one adjacent hub pair of the cycle and a fifth
/// receives arcs from all four hubs.
struct Counterexample {
    static constexpr VertexId a = 0;
    static constexpr VertexId b = 1;
    static constexpr VertexId c = 2;
    static constexpr VertexId d = 3;
    EssentialGraph with_ab;
    EssentialGraph with_cd;
};

/// Throws std::invalid_argument for k == 0.
Counterexample counterexample_family(std::size_t k);

/// Length of a shortest chain path of length <= max_depth, by search from
/// both ends. std::nullopt when none is that short. Throws CapExceeded
/// when a frontier outgrows cap.
std::optional<std::size_t> chain_distance(const EssentialGraph& from, const EssentialGraph& to,
                                          std::size_t max_depth, std::size_t cap = 2'000'000);

}  // namespace gms
