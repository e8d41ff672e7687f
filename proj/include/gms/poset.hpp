#pragma once

// Labeled posets, the reachability poset of a DAG, and exact counts of
// labeled DAGs and of DAGs alone in their Markov equivalence class, both by
// summation over posets and by the classical recursions.

#include "gms/graph.hpp"
#include "gms/numeric.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gms {

inline constexpr std::size_t kMaxEnumeratedPoset = 6;
/// Brute-force sweeps over all labeled DAGs scan 3^C(n,2) arc choices.
inline constexpr std::size_t kMaxEnumeratedDag = 5;

/// Partial order on {0, ..., n-1}, n <= 64, stored as strict down-sets.
class Poset {
public:
    explicit Poset(std::size_t n);  ///< antichain

    /// below[v] is the bit mask of elements strictly below v. Throws
    /// std::invalid_argument unless the relation is irreflexive,
    /// antisymmetric and transitive.
    static Poset from_down_sets(std::vector<std::uint64_t> below);

    std::size_t size() const { return below_.size(); }
    bool less(std::size_t u, std::size_t v) const { return (below_.at(v) >> u) & 1U; }
    bool leq(std::size_t u, std::size_t v) const { return u == v || less(u, v); }
    std::uint64_t down_set(std::size_t v) const { return below_.at(v); }

    /// d(v): number of elements strictly below v.
    std::size_t down_size(std::size_t v) const;
    /// Elements covered by v (u < v with nothing strictly between), as a mask.
    std::uint64_t covers(std::size_t v) const;
    /// c(v): number of elements covered by v.
    std::size_t cover_count(std::size_t v) const;
    /// Size of the longest chain ending at v; minimal elements have height 1.
    std::size_t height(std::size_t v) const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::uint64_t> below_;
};

struct PosetStats {
    std::vector<std::size_t> down;    ///< d(v)
    std::vector<std::size_t> covers;  ///< c(v)
    std::vector<std::size_t> height;
};

PosetStats poset_stats(const Poset& p);

/// u < v iff v is reachable from u. Throws std::invalid_argument above 64
/// vertices.
Poset reachability_poset(const Dag& d);

/// Calls `visit` once for every labeled poset on n elements, built by
/// inserting element k with an order ideal below it and a disjoint filter
/// above it. Throws CapExceeded when n > kMaxEnumeratedPoset.
void for_each_labeled_poset(std::size_t n, const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_labeled_posets(std::size_t n);

/// Number of DAGs with reachability poset p: prod_v 2^(d(v) - c(v)).
BigInt dag_weight(const Poset& p);
/// Number of those DAGs alone in their class: prod_v (2^(d(v) - c(v)) - [c(v) = 1]).
BigInt essential_dag_weight(const Poset& p);

BigInt count_dags_via_posets(std::size_t n);
BigInt count_essential_dags_via_posets(std::size_t n);

/// a'_0..a'_n by a'_m = sum_{i=1..m} (-1)^(i+1) C(m,i) 2^(i(m-i)) a'_(m-i).
std::vector<BigInt> robinson_table(std::size_t n);
/// a_0..a_n by a_m = sum_{i=1..m} (-1)^(i+1) C(m,i) (2^(m-i) - (m-i))^i a_(m-i).
std::vector<BigInt> steinsky_table(std::size_t n);
BigInt robinson(std::size_t n);
BigInt steinsky(std::size_t n);

/// (a; q)_n = prod_{i=0}^{n-1} (1 - a q^i).
Rational q_pochhammer(const Rational& a, const Rational& q, std::size_t n);

struct CountRow {
    std::size_t n = 0;
    BigInt essential;               ///< a_n
    BigInt all;                     ///< a'_n
    Rational ratio;                 ///< a'_n / a_n
    std::optional<Rational> adjusted;  ///< ratio * (1/2; 1/2)_{n-2}, for n >= 2
};

/// Rows for n = 1..n_max. Throws std::invalid_argument for n_max = 0.
std::vector<CountRow> ratio_table(std::size_t n_max);

/// Every labeled DAG on n vertices, by filtering the 3^C(n,2) arc choices.
/// Throws CapExceeded when n > kMaxEnumeratedDag.
std::vector<Dag> enumerate_labeled_dags(std::size_t n);

BigInt count_dags_bruteforce(std::size_t n);

/// Groups all labeled DAGs by (skeleton, immoralities) and counts the groups
/// of size one.
BigInt singleton_class_count_bruteforce(std::size_t n);

}  // namespace gms
