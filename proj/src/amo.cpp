#include "gms/amo.hpp"

#include "gms/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gms {

namespace {

// Orients lines forced by the arcs already present (Meek's four rules). All
// rules are sound, so every AMO extending the input agrees with the result.
void apply_meek_rules(Pdag& p) {
    const VertexId n = static_cast<VertexId>(p.num_vertices());
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId b = 0; b < n; ++b) {
            for (VertexId c = 0; c < n; ++c) {
                if (b == c || !p.has_line(b, c)) {
                    continue;
                }
                bool orient = false;
                for (VertexId a = 0; a < n && !orient; ++a) {
                    if (a == b || a == c) {
                        continue;
                    }
                    // R1: a -> b - c, a and c nonadjacent.
                    if (p.has_arc(a, b) && !p.adjacent(a, c)) {
                        orient = true;
                    }
                    // R2: b -> a -> c.
                    if (p.has_arc(b, a) && p.has_arc(a, c)) {
                        orient = true;
                    }
                }
                for (VertexId a = 0; a < n && !orient; ++a) {
                    if (a == b || a == c) {
                        continue;
                    }
                    for (VertexId d = a + 1; d < n && !orient; ++d) {
                        if (d == b || d == c || p.adjacent(a, d)) {
                            continue;
                        }
                        // R3: b - a -> c, b - d -> c, a and d nonadjacent.
                        if (p.has_line(b, a) && p.has_line(b, d) && p.has_arc(a, c) && p.has_arc(d, c)) {
                            orient = true;
                        }
                    }
                }
                for (VertexId k = 0; k < n && !orient; ++k) {
                    if (k == b || k == c || !p.has_line(b, k) || p.adjacent(k, c)) {
                        continue;
                    }
                    for (VertexId l = 0; l < n && !orient; ++l) {
                        // R4: b - k -> l -> c, b adjacent to l, k and c nonadjacent.
                        if (l != b && l != c && l != k && p.has_arc(k, l) && p.has_arc(l, c) && p.adjacent(b, l)) {
                            orient = true;
                        }
                    }
                }
                if (orient) {
                    p.set_arc(b, c);
                    changed = true;
                }
            }
        }
    }
}

// Connected components of the line graph restricted to `vertices`.
std::vector<std::vector<VertexId>> line_components(const Pdag& p, const std::vector<VertexId>& vertices) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> in(p.num_vertices(), false);
    for (VertexId v : vertices) {
        in[v] = true;
    }
    std::vector<bool> seen(p.num_vertices(), false);
    for (VertexId s : vertices) {
        if (seen[s]) {
            continue;
        }
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId w : p.line_neighbors(u)) {
                if (in[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

void root_at(Pdag& p, VertexId s) {
    for (VertexId w : p.line_neighbors(s)) {
        p.set_arc(s, w);
    }
    apply_meek_rules(p);
}

void require_chordal(const UndirectedGraph& g, const char* who) {
    if (!is_chordal(g)) {
        throw std::invalid_argument(std::string(who) + ": graph is not chordal");
    }
}

BigInt count_component(const UndirectedGraph& g, const std::vector<VertexId>& comp,
                       std::map<std::vector<VertexId>, BigInt>& memo) {
    if (comp.size() <= 1) {
        return 1;
    }
    if (auto it = memo.find(comp); it != memo.end()) {
        return it->second;
    }
    const UndirectedGraph h = g.induced(comp);
    std::vector<VertexId> local(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
        local[i] = static_cast<VertexId>(i);
    }
    BigInt total = 0;
    for (VertexId s = 0; s < comp.size(); ++s) {
        Pdag p = Pdag::from_undirected(h);
        root_at(p, s);
        BigInt product = 1;
        for (const auto& sub : line_components(p, local)) {
            if (sub.size() <= 1) {
                continue;
            }
            std::vector<VertexId> global;
            for (VertexId v : sub) {
                global.push_back(comp[v]);
            }
            product *= count_component(g, global, memo);
        }
        total += product;
    }
    memo.emplace(comp, total);
    return total;
}

// Orients the first chain component that still has lines, once per choice of
// root, and recurses; fully oriented graphs are reported to `emit`.
template <typename Emit>
void expand(const Pdag& p, const std::vector<VertexId>& all, Emit& emit) {
    for (const auto& comp : line_components(p, all)) {
        if (comp.size() <= 1) {
            continue;
        }
        for (VertexId s : comp) {
            Pdag next = p;
            root_at(next, s);
            expand(next, all, emit);
        }
        return;
    }
    emit(p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Amo

Amo::Amo(GraphPtr base, std::vector<bool> forward) : base_(std::move(base)), forward_(std::move(forward)) {
    if (!base_ || forward_.size() != base_->num_edges()) {
        throw std::invalid_argument("Amo: orientation does not match the base graph");
    }
}

Arc Amo::arc(std::size_t e) const {
    const Edge& edge = base_->edges().at(e);
    return forward_[e] ? Arc{edge.u, edge.v} : Arc{edge.v, edge.u};
}

std::vector<Arc> Amo::arcs() const {
    std::vector<Arc> out;
    out.reserve(forward_.size());
    for (std::size_t e = 0; e < forward_.size(); ++e) {
        out.push_back(arc(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Amo::has_arc(VertexId from, VertexId to) const {
    if (!base_->has_edge(from, to)) {
        return false;
    }
    const std::size_t e = base_->edge_index(from, to);
    return forward_[e] == (from < to);
}

std::vector<VertexId> Amo::parents(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId w : base_->neighbors(v)) {
        if (has_arc(w, v)) {
            out.push_back(w);
        }
    }
    return out;
}

Amo Amo::flipped(std::size_t e) const {
    std::vector<bool> next = forward_;
    next.at(e) = !next.at(e);
    return Amo(base_, std::move(next));
}

Dag Amo::to_dag() const {
    const auto a = arcs();
    return Dag(num_vertices(), a);
}

Pdag Amo::to_pdag() const {
    Pdag p(num_vertices());
    for (std::size_t e = 0; e < forward_.size(); ++e) {
        const Arc a = arc(e);
        p.add_arc(a.from, a.to);
    }
    return p;
}

// ---------------------------------------------------------------------------

bool is_amo(const UndirectedGraph& g, std::span<const Arc> orientation) {
    const std::size_t n = g.num_vertices();
    if (orientation.size() != g.num_edges()) {
        throw std::invalid_argument("is_amo: orientation must orient every edge exactly once");
    }
    Pdag p(n);
    for (const Arc& a : orientation) {
        if (!g.has_edge(a.from, a.to) || p.adjacent(a.from, a.to)) {
            throw std::invalid_argument("is_amo: orientation must orient every edge exactly once");
        }
        p.add_arc(a.from, a.to);
    }
    if (!is_acyclic(n, orientation)) {
        return false;
    }
    return immoralities(p).empty();
}

Amo make_amo(GraphPtr g, std::span<const Arc> orientation) {
    if (!is_amo(*g, orientation)) {
        throw std::invalid_argument("make_amo: orientation has a cycle or a v-structure");
    }
    std::vector<bool> forward(g->num_edges(), false);
    for (const Arc& a : orientation) {
        forward[g->edge_index(a.from, a.to)] = a.from < a.to;
    }
    return Amo(std::move(g), std::move(forward));
}

VertexId unique_source(const Amo& a) {
    std::vector<bool> has_parent(a.num_vertices(), false);
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
        has_parent[a.arc(e).to] = true;
    }
    std::vector<VertexId> sources;
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        if (!has_parent[v]) {
            sources.push_back(v);
        }
    }
    if (sources.size() != 1) {
        throw std::logic_error("unique_source: found " + std::to_string(sources.size()) + " sources");
    }
    return sources.front();
}

Amo orient_from_source_sequence(GraphPtr g, std::span<const VertexId> sequence) {
    const std::size_t n = g->num_vertices();
    if (sequence.size() != n) {
        throw std::invalid_argument("source sequence must list every vertex once");
    }
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sequence[i] >= n || position[sequence[i]] != n) {
            throw std::invalid_argument("source sequence must list every vertex once");
        }
        position[sequence[i]] = i;
    }
    for (VertexId v : sequence) {
        std::vector<VertexId> earlier;
        for (VertexId w : g->neighbors(v)) {
            if (position[w] < position[v]) {
                earlier.push_back(w);
            }
        }
        for (std::size_t i = 0; i < earlier.size(); ++i) {
            for (std::size_t j = i + 1; j < earlier.size(); ++j) {
                if (!g->has_edge(earlier[i], earlier[j])) {
                    throw std::invalid_argument("vertex " + std::to_string(v) +
                                                " is not a valid next source: it would create a v-structure");
                }
            }
        }
    }
    std::vector<bool> forward(g->num_edges());
    for (std::size_t e = 0; e < g->num_edges(); ++e) {
        const Edge& edge = g->edges()[e];
        forward[e] = position[edge.u] < position[edge.v];
    }
    return Amo(std::move(g), std::move(forward));
}

Amo canonical_amo(GraphPtr g) {
    auto peo = perfect_elimination_ordering(*g);
    if (!peo) {
        throw std::invalid_argument("canonical_amo: graph is not chordal");
    }
    std::reverse(peo->begin(), peo->end());
    return orient_from_source_sequence(std::move(g), *peo);
}

std::vector<Amo> enumerate_amos(GraphPtr g, std::size_t cap) {
    require_chordal(*g, "enumerate_amos");
    const BigInt total = count_amos(*g);
    if (total > cap) {
        throw CapExceeded("enumerate_amos: " + total.str() + " orientations", cap);
    }
    std::vector<VertexId> all(g->num_vertices());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<VertexId>(i);
    }
    std::vector<Amo> out;
    out.reserve(total.convert_to<std::size_t>());
    auto emit = [&](const Pdag& p) {
        std::vector<bool> forward(g->num_edges());
        for (std::size_t e = 0; e < g->num_edges(); ++e) {
            forward[e] = p.has_arc(g->edges()[e].u, g->edges()[e].v);
        }
        out.emplace_back(g, std::move(forward));
    };
    expand(Pdag::from_undirected(*g), all, emit);
    return out;
}

BigInt count_amos(const UndirectedGraph& g) {
    require_chordal(g, "count_amos");
    std::map<std::vector<VertexId>, BigInt> memo;
    BigInt total = 1;
    for (const auto& comp : connected_components(g)) {
        total *= count_component(g, comp, memo);
    }
    return total;
}

std::vector<std::size_t> non_follower_cliques(const Amo& a, const CliqueTree& ct) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ct.size(); ++i) {
        const auto& t = ct.clique(i);
        bool closed = true;
        for (VertexId w : t) {
            for (VertexId v : a.parents(w)) {
                if (!std::binary_search(t.begin(), t.end(), v)) {
                    closed = false;
                }
            }
        }
        if (closed) {
            out.push_back(i);
        }
    }
    return out;
}

bool is_flippable(const Amo& a, std::size_t e) {
    const Arc arc = a.arc(e);
    auto pa_head = a.parents(arc.to);
    auto pa_tail = a.parents(arc.from);
    pa_tail.insert(std::lower_bound(pa_tail.begin(), pa_tail.end(), arc.from), arc.from);
    return pa_head == pa_tail;
}

std::vector<std::size_t> flip_candidates(const Amo& a) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
        if (is_flippable(a, e)) {
            out.push_back(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// OrientationSpace

std::size_t OrientationSpace::index_of(const Amo& a) const {
    const auto it = index_.find(a.key());
    if (it == index_.end()) {
        throw std::out_of_range("orientation is not a state of this space");
    }
    return it->second;
}

std::string OrientationSpace::to_json() const {
    nlohmann::json j;
    j["graph"] = format_undirected(*graph_);
    j["n_states"] = states_.size();
    j["n_edges"] = graph_->num_edges();
    j["adjacency"] = adjacency_;
    j["non_followers"] = non_followers_;
    return j.dump();
}

OrientationSpace build_orientation_space(GraphPtr g, std::size_t cap) {
    require_chordal(*g, "build_orientation_space");
    if (!is_connected(*g)) {
        throw std::invalid_argument("build_orientation_space: graph is not connected");
    }
    OrientationSpace space(g, clique_tree(*g));
    space.states_ = enumerate_amos(g, cap);
    std::sort(space.states_.begin(), space.states_.end());
    const std::size_t count = space.states_.size();
    space.index_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        space.index_.emplace(space.states_[i].key(), i);
    }
    space.adjacency_.resize(count);
    space.non_followers_.resize(count);
    space.non_follower_sets_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Amo& a = space.states_[i];
        for (std::size_t e : flip_candidates(a)) {
            space.adjacency_[i].push_back(space.index_of(a.flipped(e)));
        }
        std::sort(space.adjacency_[i].begin(), space.adjacency_[i].end());
        space.non_follower_sets_[i] = non_follower_cliques(a, space.tree_);
        space.non_followers_[i] = space.non_follower_sets_[i].size();
    }
    return space;
}

}  // namespace gms
