#pragma once

// Graph builders and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's algorithms.

#include "gms/amo.hpp"
#include "gms/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <vector>

namespace gms::test {

inline UndirectedGraph complete_graph(std::size_t n) {
    UndirectedGraph g(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline UndirectedGraph path_graph(std::size_t n) {
    UndirectedGraph g(n);
    for (VertexId v = 1; v < n; ++v) {
        g.add_edge(v - 1, v);
    }
    return g;
}

inline UndirectedGraph star_graph(std::size_t leaves) {
    UndirectedGraph g(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

inline UndirectedGraph cycle_graph(std::size_t n) {
    UndirectedGraph g = path_graph(n);
    g.add_edge(0, static_cast<VertexId>(n - 1));
    return g;
}

/// Cliques on vertices [0, a) and [a - s, a - s + b): overlap s.
inline UndirectedGraph two_cliques(std::size_t a, std::size_t b, std::size_t s) {
    const std::size_t n = a + b - s;
    UndirectedGraph g(n);
    auto fill = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u) {
            for (std::size_t v = u + 1; v < hi; ++v) {
                if (!g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
                    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
                }
            }
        }
    };
    fill(0, a);
    fill(a - s, n);
    return g;
}

/// Chain of k cliques of size t, consecutive ones overlapping in s vertices.
inline UndirectedGraph clique_chain(std::size_t k, std::size_t t, std::size_t s) {
    const std::size_t n = t + (k - 1) * (t - s);
    UndirectedGraph g(n);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t lo = c * (t - s);
        for (std::size_t u = lo; u < lo + t; ++u) {
            for (std::size_t v = u + 1; v < lo + t; ++v) {
                if (!g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
                    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
                }
            }
        }
    }
    return g;
}

inline UndirectedGraph from_mask(std::size_t n, std::uint64_t mask) {
    UndirectedGraph g(n);
    std::size_t bit = 0;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1U) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

inline GraphPtr share(UndirectedGraph g) { return std::make_shared<const UndirectedGraph>(std::move(g)); }

/// Depth-first cycle search on an explicit arc list.
inline bool brute_acyclic(std::size_t n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<VertexId>> out(n);
    for (const Arc& a : arcs) {
        out[a.from].push_back(a.to);
    }
    std::vector<int> colour(n, 0);
    auto dfs = [&](auto&& self, VertexId v) -> bool {
        colour[v] = 1;
        for (VertexId w : out[v]) {
            if (colour[w] == 1 || (colour[w] == 0 && !self(self, w))) {
                return false;
            }
        }
        colour[v] = 2;
        return true;
    };
    for (VertexId v = 0; v < n; ++v) {
        if (colour[v] == 0 && !dfs(dfs, v)) {
            return false;
        }
    }
    return true;
}

/// Orientation test by definition: acyclic and every pair of co-parents adjacent.
inline bool brute_is_amo(const UndirectedGraph& g, const std::vector<Arc>& arcs) {
    if (!brute_acyclic(g.num_vertices(), arcs)) {
        return false;
    }
    for (const Arc& x : arcs) {
        for (const Arc& y : arcs) {
            if (x.to == y.to && x.from < y.from && !g.has_edge(x.from, y.from)) {
                return false;
            }
        }
    }
    return true;
}

/// All AMOs by filtering the 2^|E| orientations; each as a sorted arc list.
inline std::set<std::vector<Arc>> brute_amos(const UndirectedGraph& g) {
    std::set<std::vector<Arc>> out;
    const auto& edges = g.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const bool fwd = (mask >> e) & 1U;
            arcs.push_back(fwd ? Arc{edges[e].u, edges[e].v} : Arc{edges[e].v, edges[e].u});
        }
        if (brute_is_amo(g, arcs)) {
            std::sort(arcs.begin(), arcs.end());
            out.insert(arcs);
        }
    }
    return out;
}

/// Chordless cycle of length >= 4 by checking every vertex subset of size >= 4
/// for inducing a cycle (connected, all degrees 2).
inline bool brute_chordal(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1U << e.v;
        adj[e.v] |= 1U << e.u;
    }
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (__builtin_popcount(s) < 4) {
            continue;
        }
        bool degrees_two = true;
        for (std::size_t v = 0; v < n && degrees_two; ++v) {
            if ((s >> v) & 1U) {
                degrees_two = __builtin_popcount(adj[v] & s) == 2;
            }
        }
        if (!degrees_two) {
            continue;
        }
        std::uint32_t seen = s & (~s + 1);
        for (;;) {
            std::uint32_t grow = seen;
            for (std::size_t v = 0; v < n; ++v) {
                if ((seen >> v) & 1U) {
                    grow |= adj[v] & s;
                }
            }
            if (grow == seen) {
                break;
            }
            seen = grow;
        }
        if (seen == s) {
            return false;
        }
    }
    return true;
}

/// Maximal cliques by subset enumeration.
inline std::set<std::vector<VertexId>> brute_maximal_cliques(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = u + 1; v < n && ok; ++v) {
                if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
                    ok = false;
                }
            }
        }
        if (ok) {
            cliques.push_back(s);
        }
    }
    std::set<std::vector<VertexId>> out;
    for (std::uint32_t c : cliques) {
        const bool maximal = std::none_of(cliques.begin(), cliques.end(),
                                          [&](std::uint32_t d) { return d != c && (d & c) == c; });
        if (maximal) {
            std::vector<VertexId> vs;
            for (VertexId v = 0; v < n; ++v) {
                if ((c >> v) & 1U) {
                    vs.push_back(v);
                }
            }
            out.insert(vs);
        }
    }
    return out;
}

/// A small suite of connected chordal graphs with 1 to 4 maximal cliques.
inline std::vector<UndirectedGraph> chordal_suite() {
    std::vector<UndirectedGraph> out;
    out.push_back(complete_graph(3));
    out.push_back(complete_graph(4));
    out.push_back(path_graph(4));
    out.push_back(star_graph(3));
    out.push_back(two_cliques(3, 3, 1));
    out.push_back(two_cliques(3, 3, 2));
    out.push_back(two_cliques(4, 4, 2));
    out.push_back(two_cliques(4, 3, 1));
    out.push_back(clique_chain(3, 3, 1));
    out.push_back(clique_chain(3, 3, 2));
    out.push_back(clique_chain(4, 3, 2));
    {
        // Triangle 0-1-2 with pendant cliques on each of its vertices.
        UndirectedGraph g(6);
        for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 0}}) {
            if (!g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
                g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            }
        }
        out.push_back(g);
    }
    {
        // K4 with two triangles hanging off different edges.
        UndirectedGraph g = complete_graph(4);
        UndirectedGraph h(6);
        for (const Edge& e : g.edges()) {
            h.add_edge(e.u, e.v);
        }
        h.add_edge(0, 4);
        h.add_edge(1, 4);
        h.add_edge(2, 5);
        h.add_edge(3, 5);
        out.push_back(h);
    }
    return out;
}

}  // namespace gms::test
