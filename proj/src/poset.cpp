#include "gms/poset.hpp"

#include "gms/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace gms {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::vector<std::pair<VertexId, VertexId>> vertex_pairs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

// Visits each acyclic arc set on n vertices; arcs come in pair order.
template <typename Visit>
void for_each_labeled_dag(std::size_t n, Visit&& visit) {
    const auto pairs = vertex_pairs(n);
    std::vector<int> choice(pairs.size(), 0);
    std::vector<Arc> arcs;
    for (;;) {
        arcs.clear();
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (choice[k] == 1) {
                arcs.push_back({pairs[k].first, pairs[k].second});
            } else if (choice[k] == 2) {
                arcs.push_back({pairs[k].second, pairs[k].first});
            }
        }
        if (is_acyclic(n, arcs)) {
            visit(arcs);
        }
        std::size_t k = 0;
        while (k < choice.size() && choice[k] == 2) {
            choice[k++] = 0;
        }
        if (k == choice.size()) {
            return;
        }
        ++choice[k];
    }
}

void require_dag_sweep(std::size_t n, const char* who) {
    if (n > kMaxEnumeratedDag) {
        throw CapExceeded(std::string(who) + ": " + std::to_string(n) + " vertices", kMaxEnumeratedDag);
    }
}

}  // namespace

Poset::Poset(std::size_t n) : below_(n, 0) {
    if (n > 64) {
        throw std::invalid_argument("Poset: at most 64 elements");
    }
}

Poset Poset::from_down_sets(std::vector<std::uint64_t> below) {
    const std::size_t n = below.size();
    Poset p(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (n < 64 && (below[v] >> n) != 0) {
            throw std::invalid_argument("Poset: element out of range");
        }
        if (below[v] & bit(v)) {
            throw std::invalid_argument("Poset: relation is not irreflexive");
        }
        for (std::size_t u = 0; u < n; ++u) {
            if (!(below[v] & bit(u))) {
                continue;
            }
            if (below[u] & bit(v)) {
                throw std::invalid_argument("Poset: relation is not antisymmetric");
            }
            if ((below[u] & ~below[v]) != 0) {
                throw std::invalid_argument("Poset: relation is not transitive");
            }
        }
    }
    p.below_ = std::move(below);
    return p;
}

std::size_t Poset::down_size(std::size_t v) const { return static_cast<std::size_t>(std::popcount(below_.at(v))); }

std::uint64_t Poset::covers(std::size_t v) const {
    std::uint64_t indirect = 0;
    for (std::uint64_t rest = below_.at(v); rest != 0; rest &= rest - 1) {
        indirect |= below_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return below_[v] & ~indirect;
}

std::size_t Poset::cover_count(std::size_t v) const { return static_cast<std::size_t>(std::popcount(covers(v))); }

std::size_t Poset::height(std::size_t v) const { return poset_stats(*this).height.at(v); }

PosetStats poset_stats(const Poset& p) {
    const std::size_t n = p.size();
    PosetStats s;
    s.down.resize(n);
    s.covers.resize(n);
    s.height.assign(n, 0);
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) {
        order[v] = v;
        s.down[v] = p.down_size(v);
        s.covers[v] = p.cover_count(v);
    }
    // Anything strictly below v has a strictly smaller down-set.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.down[a] < s.down[b]; });
    for (std::size_t v : order) {
        std::size_t best = 0;
        for (std::uint64_t rest = p.down_set(v); rest != 0; rest &= rest - 1) {
            best = std::max(best, s.height[static_cast<std::size_t>(std::countr_zero(rest))]);
        }
        s.height[v] = best + 1;
    }
    return s;
}

Poset reachability_poset(const Dag& d) {
    const std::size_t n = d.num_vertices();
    if (n > 64) {
        throw std::invalid_argument("reachability_poset: at most 64 vertices");
    }
    std::vector<std::size_t> indegree(n);
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v) {
        indegree[v] = d.parents(v).size();
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    std::vector<std::uint64_t> below(n, 0);
    while (!ready.empty()) {
        const VertexId v = ready.back();
        ready.pop_back();
        for (VertexId p : d.parents(v)) {
            below[v] |= below[p] | bit(p);
        }
        for (VertexId c : d.children(v)) {
            if (--indegree[c] == 0) {
                ready.push_back(c);
            }
        }
    }
    return Poset::from_down_sets(std::move(below));
}

void for_each_labeled_poset(std::size_t n, const std::function<void(const Poset&)>& visit) {
    if (n > kMaxEnumeratedPoset) {
        throw CapExceeded("for_each_labeled_poset: " + std::to_string(n) + " elements", kMaxEnumeratedPoset);
    }
    std::vector<std::uint64_t> below(n, 0);
    auto extend = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            visit(Poset::from_down_sets(below));
            return;
        }
        const std::uint64_t all = bit(k) - 1;
        std::vector<std::uint64_t> above(k, 0);
        for (std::size_t v = 0; v < k; ++v) {
            for (std::uint64_t rest = below[v]; rest != 0; rest &= rest - 1) {
                above[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(v);
            }
        }
        for (std::uint64_t down = 0; down <= all; ++down) {
            bool ideal = true;
            for (std::uint64_t rest = down; rest != 0 && ideal; rest &= rest - 1) {
                ideal = (below[static_cast<std::size_t>(std::countr_zero(rest))] & ~down) == 0;
            }
            if (!ideal) {
                continue;
            }
            const std::uint64_t free = all & ~down;
            // Submasks of `free`, including the empty one.
            for (std::uint64_t up = free;; up = (up - 1) & free) {
                bool ok = true;
                for (std::uint64_t rest = up; rest != 0 && ok; rest &= rest - 1) {
                    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
                    ok = (above[u] & ~up) == 0 && (down & ~below[u]) == 0;
                }
                if (ok) {
                    below[k] = down;
                    for (std::uint64_t rest = up; rest != 0; rest &= rest - 1) {
                        below[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(k);
                    }
                    self(self, k + 1);
                    for (std::uint64_t rest = up; rest != 0; rest &= rest - 1) {
                        below[static_cast<std::size_t>(std::countr_zero(rest))] &= ~bit(k);
                    }
                    below[k] = 0;
                }
                if (up == 0) {
                    break;
                }
            }
        }
    };
    extend(extend, 0);
}

std::vector<Poset> enumerate_labeled_posets(std::size_t n) {
    std::vector<Poset> out;
    for_each_labeled_poset(n, [&](const Poset& p) { out.push_back(p); });
    return out;
}

BigInt dag_weight(const Poset& p) {
    std::size_t exponent = 0;
    for (std::size_t v = 0; v < p.size(); ++v) {
        exponent += p.down_size(v) - p.cover_count(v);
    }
    return pow2(exponent);
}

BigInt essential_dag_weight(const Poset& p) {
    BigInt product = 1;
    for (std::size_t v = 0; v < p.size(); ++v) {
        const std::size_t c = p.cover_count(v);
        product *= pow2(p.down_size(v) - c) - (c == 1 ? 1 : 0);
        if (product == 0) {
            break;
        }
    }
    return product;
}

BigInt count_dags_via_posets(std::size_t n) {
    BigInt total = 0;
    for_each_labeled_poset(n, [&](const Poset& p) { total += dag_weight(p); });
    return total;
}

BigInt count_essential_dags_via_posets(std::size_t n) {
    BigInt total = 0;
    for_each_labeled_poset(n, [&](const Poset& p) { total += essential_dag_weight(p); });
    return total;
}

std::vector<BigInt> robinson_table(std::size_t n) {
    std::vector<BigInt> a{1};
    std::vector<BigInt> row{1};  // binomials C(m, .)
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, 1);
        for (std::size_t i = 1; i < m; ++i) {
            next[i] = row[i - 1] + row[i];
        }
        row.swap(next);
        BigInt sum = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            BigInt term = row[i] * a[m - i];
            term <<= static_cast<unsigned>(i * (m - i));
            if (i % 2 == 1) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        a.push_back(std::move(sum));
    }
    return a;
}

std::vector<BigInt> steinsky_table(std::size_t n) {
    std::vector<BigInt> a{1};
    std::vector<BigInt> row{1};
    // powers[j] = (2^j - j)^(m - j) at step m.
    std::vector<BigInt> powers;
    std::vector<BigInt> bases;
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, 1);
        for (std::size_t i = 1; i < m; ++i) {
            next[i] = row[i - 1] + row[i];
        }
        row.swap(next);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            powers[j] *= bases[j];
        }
        bases.push_back(pow2(m - 1) - (m - 1));
        powers.push_back(bases.back());
        BigInt sum = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            const BigInt term = row[i] * powers[m - i] * a[m - i];
            if (i % 2 == 1) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        a.push_back(std::move(sum));
    }
    return a;
}

BigInt robinson(std::size_t n) { return robinson_table(n).back(); }
BigInt steinsky(std::size_t n) { return steinsky_table(n).back(); }

Rational q_pochhammer(const Rational& a, const Rational& q, std::size_t n) {
    Rational product = 1;
    Rational power = 1;
    for (std::size_t i = 0; i < n; ++i) {
        product *= 1 - a * power;
        power *= q;
    }
    return product;
}

std::vector<CountRow> ratio_table(std::size_t n_max) {
    if (n_max == 0) {
        throw std::invalid_argument("ratio_table: n_max must be positive");
    }
    const auto all = robinson_table(n_max);
    const auto essential = steinsky_table(n_max);
    std::vector<CountRow> rows;
    Rational pochhammer = 1;  // (1/2; 1/2)_{n-2}
    for (std::size_t n = 1; n <= n_max; ++n) {
        CountRow r;
        r.n = n;
        r.essential = essential[n];
        r.all = all[n];
        r.ratio = Rational(r.all, r.essential);
        if (n >= 3) {
            pochhammer *= 1 - Rational(BigInt(1), pow2(n - 2));
        }
        if (n >= 2) {
            r.adjusted = r.ratio * pochhammer;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Dag> enumerate_labeled_dags(std::size_t n) {
    require_dag_sweep(n, "enumerate_labeled_dags");
    std::vector<Dag> out;
    for_each_labeled_dag(n, [&](const std::vector<Arc>& arcs) { out.emplace_back(n, arcs); });
    return out;
}

BigInt count_dags_bruteforce(std::size_t n) {
    require_dag_sweep(n, "count_dags_bruteforce");
    BigInt total = 0;
    for_each_labeled_dag(n, [&](const std::vector<Arc>&) { total += 1; });
    return total;
}

BigInt singleton_class_count_bruteforce(std::size_t n) {
    require_dag_sweep(n, "singleton_class_count_bruteforce");
    std::map<std::pair<std::vector<Edge>, std::vector<Immorality>>, std::size_t> classes;
    for_each_labeled_dag(n, [&](const std::vector<Arc>& arcs) {
        const Dag d(n, arcs);
        ++classes[{skeleton(d).edges(), immoralities(d)}];
    });
    BigInt singles = 0;
    for (const auto& [key, size] : classes) {
        singles += size == 1 ? 1 : 0;
    }
    return singles;
}

}  // namespace gms
