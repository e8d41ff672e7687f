#pragma once

// Markov equivalence of DAGs and essential graphs (CPDAGs): the partially
// directed graph whose arcs are the edges oriented the same way in every
// member of an equivalence class.

#include "gms/errors.hpp"
#include "gms/graph.hpp"
#include "gms/numeric.hpp"

#include <string>
#include <vector>

namespace gms {

/// Same skeleton and same immoralities. Throws std::invalid_argument when
/// the vertex counts differ.
bool markov_equivalent(const Dag& a, const Dag& b);

/// Every member of d's class, found by scanning all 2^|E| orientations of
/// the skeleton. Sorted by arc list. Throws CapExceeded when 2^|E| > cap.
std::vector<Dag> mec_of_dag(const Dag& d, std::size_t cap = kDefaultStateCap);

/// Reference construction: arcs shared by every member of mec_of_dag(d),
/// lines elsewhere.
Pdag essential_graph_by_intersection(const Dag& d, std::size_t cap = kDefaultStateCap);

/// Whether arc u -> v sits in one of the four protecting configurations:
///   (a) w -> u -> v, w and v nonadjacent
///   (b) u -> v <- w, u and w nonadjacent
///   (c) u -> w -> v
///   (d) w1 - u - w2 with w1 -> v, w2 -> v, w1 and w2 nonadjacent.
/// Throws std::invalid_argument when u -> v is not an arc of p.
bool is_strongly_protected(const Pdag& p, VertexId u, VertexId v);

/// Parent-set form for graphs without lines: pa(u) != pa(v) \ {u}.
/// Throws std::invalid_argument when u -> v is not an arc of d.
bool protected_directed_only(const Dag& d, VertexId u, VertexId v);

/// The four defining conditions: no partially directed cycle, chordal
/// undirected part, no induced a -> b - c, every arc strongly protected.
bool is_essential_graph(const Pdag& p);

/// Which of the four conditions fails first, or empty when none does.
std::string essential_graph_violation(const Pdag& p);

/// A Pdag known to satisfy is_essential_graph().
class EssentialGraph {
public:
    /// Throws std::invalid_argument naming the violated condition.
    explicit EssentialGraph(Pdag p);

    const Pdag& pdag() const { return pdag_; }
    std::size_t num_vertices() const { return pdag_.num_vertices(); }
    std::string key() const { return pdag_.key(); }

    friend bool operator==(const EssentialGraph& a, const EssentialGraph& b) { return a.pdag_ == b.pdag_; }

private:
    Pdag pdag_;
};

/// Fast path: start from d and repeatedly turn the lexicographically first
/// unprotected arc into a line until every arc is strongly protected.
EssentialGraph essential_graph_of_dag(const Dag& d);

/// Product over connected components of the undirected part of their AMO
/// counts.
BigInt class_size(const EssentialGraph& eg);

/// Members of the class, combining AMOs of each undirected component with
/// the fixed arcs. Sorted by arc list. Throws CapExceeded when class_size
/// exceeds cap.
std::vector<Dag> class_members(const EssentialGraph& eg, std::size_t cap = kDefaultStateCap);

}  // namespace gms
