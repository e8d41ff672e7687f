#include "gms/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <stdexcept>
#include <string>

namespace gms {

namespace {

std::string pair_text(VertexId a, VertexId b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) {
        list.erase(it);
    }
}

std::size_t sorted_intersection_size(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

Edge make_edge(VertexId a, VertexId b) {
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(std::size_t n) : n_(n), adj_(n) {}

UndirectedGraph::UndirectedGraph(std::size_t n, std::span<const Edge> edges) : UndirectedGraph(n) {
    for (const Edge& e : edges) {
        add_edge(e.u, e.v);
    }
}

void UndirectedGraph::check_vertex(VertexId v) const {
    if (v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
    }
}

bool UndirectedGraph::has_edge(VertexId a, VertexId b) const {
    if (a >= n_ || b >= n_ || a == b) {
        return false;
    }
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

void UndirectedGraph::add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) {
        throw std::invalid_argument("duplicate edge " + pair_text(a, b));
    }
    edges_.insert(it, e);
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
}

void UndirectedGraph::remove_edge(VertexId a, VertexId b) {
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        throw std::invalid_argument("no edge " + pair_text(a, b));
    }
    edges_.erase(it);
    erase_sorted(adj_[a], b);
    erase_sorted(adj_[b], a);
}

std::size_t UndirectedGraph::edge_index(VertexId a, VertexId b) const {
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        throw std::invalid_argument("no edge " + pair_text(a, b));
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

UndirectedGraph UndirectedGraph::induced(std::span<const VertexId> vertices) const {
    std::vector<std::int64_t> relabel(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        relabel[vertices[i]] = static_cast<std::int64_t>(i);
    }
    UndirectedGraph sub(vertices.size());
    for (const Edge& e : edges_) {
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
            sub.add_edge(static_cast<VertexId>(relabel[e.u]), static_cast<VertexId>(relabel[e.v]));
        }
    }
    return sub;
}

// ---------------------------------------------------------------------------
// Dag

Dag::Dag(std::size_t n) : n_(n), parents_(n), children_(n) {}

Dag::Dag(std::size_t n, std::span<const Arc> arcs) : Dag(n) {
    for (const Arc& a : arcs) {
        if (a.from >= n || a.to >= n) {
            throw std::invalid_argument("arc " + pair_text(a.from, a.to) + " out of range");
        }
        if (a.from == a.to) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a.from));
        }
    }
    arcs_.assign(arcs.begin(), arcs.end());
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (i > 0 && arcs_[i - 1] == a) {
            throw std::invalid_argument("duplicate arc " + pair_text(a.from, a.to));
        }
        if (std::binary_search(arcs_.begin(), arcs_.end(), Arc{a.to, a.from})) {
            throw std::invalid_argument("arcs in both directions between " + pair_text(a.from, a.to));
        }
    }
    if (!is_acyclic(n, arcs_)) {
        throw std::invalid_argument("arc set contains a directed cycle");
    }
    for (const Arc& a : arcs_) {
        parents_[a.to].push_back(a.from);
        children_[a.from].push_back(a.to);
    }
    for (auto& list : parents_) {
        std::sort(list.begin(), list.end());
    }
}

bool Dag::has_arc(VertexId from, VertexId to) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to});
}

// ---------------------------------------------------------------------------
// Pdag

Pdag::Pdag(std::size_t n) : n_(n), marks_(n * n, Mark::None) {}

Pdag::Pdag(std::size_t n, std::span<const Arc> arcs, std::span<const Edge> lines) : Pdag(n) {
    for (const Arc& a : arcs) {
        add_arc(a.from, a.to);
    }
    for (const Edge& e : lines) {
        add_line(e.u, e.v);
    }
}

Pdag Pdag::from_dag(const Dag& d) {
    Pdag p(d.num_vertices());
    for (const Arc& a : d.arcs()) {
        p.add_arc(a.from, a.to);
    }
    return p;
}

Pdag Pdag::from_undirected(const UndirectedGraph& g) {
    Pdag p(g.num_vertices());
    for (const Edge& e : g.edges()) {
        p.add_line(e.u, e.v);
    }
    return p;
}

std::size_t Pdag::index(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) {
        throw std::invalid_argument("pair " + pair_text(u, v) + " out of range for n = " + std::to_string(n_));
    }
    return static_cast<std::size_t>(u) * n_ + v;
}

void Pdag::set_pair(VertexId u, VertexId v, Mark m) {
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    Mark reverse = m;
    if (m == Mark::Out) {
        reverse = Mark::In;
    } else if (m == Mark::In) {
        reverse = Mark::Out;
    }
    marks_[index(u, v)] = m;
    marks_[index(v, u)] = reverse;
}

void Pdag::add_arc(VertexId from, VertexId to) {
    if (from != to && adjacent(from, to)) {
        throw std::invalid_argument("pair " + pair_text(from, to) + " already joined");
    }
    set_pair(from, to, Mark::Out);
}

void Pdag::add_line(VertexId a, VertexId b) {
    if (a != b && adjacent(a, b)) {
        throw std::invalid_argument("pair " + pair_text(a, b) + " already joined");
    }
    set_pair(a, b, Mark::Line);
}

void Pdag::remove_edge(VertexId a, VertexId b) {
    if (!adjacent(a, b)) {
        throw std::invalid_argument("no edge " + pair_text(a, b));
    }
    set_pair(a, b, Mark::None);
}

void Pdag::set_arc(VertexId from, VertexId to) { set_pair(from, to, Mark::Out); }

void Pdag::set_line(VertexId a, VertexId b) { set_pair(a, b, Mark::Line); }

std::vector<Arc> Pdag::arcs() const {
    std::vector<Arc> out;
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v = 0; v < n_; ++v) {
            if (u != v && mark(u, v) == Mark::Out) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

std::vector<Edge> Pdag::lines() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v = u + 1; v < n_; ++v) {
            if (mark(u, v) == Mark::Line) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

std::size_t Pdag::num_arcs() const {
    return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), Mark::Out));
}

std::size_t Pdag::num_lines() const {
    return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), Mark::Line)) / 2;
}

std::vector<VertexId> Pdag::parents(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u) {
        if (u != v && mark(u, v) == Mark::Out) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<VertexId> Pdag::children(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u) {
        if (u != v && mark(v, u) == Mark::Out) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<VertexId> Pdag::line_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u) {
        if (u != v && mark(v, u) == Mark::Line) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<VertexId> Pdag::adjacent_vertices(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u) {
        if (u != v && mark(v, u) != Mark::None) {
            out.push_back(u);
        }
    }
    return out;
}

UndirectedGraph Pdag::skeleton() const {
    UndirectedGraph g(n_);
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

UndirectedGraph Pdag::undirected_part() const {
    UndirectedGraph g(n_);
    for (const Edge& e : lines()) {
        g.add_edge(e.u, e.v);
    }
    return g;
}

Dag Pdag::to_dag() const {
    if (num_lines() != 0) {
        throw std::invalid_argument("PDAG still has undirected edges");
    }
    const auto a = arcs();
    return Dag(n_, a);
}

std::string Pdag::key() const {
    std::string out;
    out.reserve(n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2);
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v = u + 1; v < n_; ++v) {
            out.push_back(static_cast<char>('0' + static_cast<int>(mark(u, v))));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_acyclic(std::size_t n, std::span<const Arc> arcs) {
    std::vector<std::vector<VertexId>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const Arc& a : arcs) {
        if (a.from >= n || a.to >= n) {
            throw std::invalid_argument("arc " + pair_text(a.from, a.to) + " out of range");
        }
        out[a.from].push_back(a.to);
        ++indegree[a.to];
    }
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const VertexId v = ready.back();
        ready.pop_back();
        ++removed;
        for (VertexId w : out[v]) {
            if (--indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    return removed == n;
}

UndirectedGraph skeleton(const Dag& d) {
    UndirectedGraph g(d.num_vertices());
    for (const Arc& a : d.arcs()) {
        g.add_edge(a.from, a.to);
    }
    return g;
}

std::vector<Immorality> immoralities(const Dag& d) {
    std::vector<Immorality> out;
    for (VertexId c = 0; c < d.num_vertices(); ++c) {
        const auto& pa = d.parents(c);
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = i + 1; j < pa.size(); ++j) {
                if (!d.adjacent(pa[i], pa[j])) {
                    out.push_back({pa[i], pa[j], c});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Immorality> immoralities(const Pdag& p) {
    std::vector<Immorality> out;
    for (VertexId c = 0; c < p.num_vertices(); ++c) {
        const auto pa = p.parents(c);
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = i + 1; j < pa.size(); ++j) {
                if (!p.adjacent(pa[i], pa[j])) {
                    out.push_back({pa[i], pa[j], c});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<VertexId>> perfect_elimination_ordering(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    // Maximum cardinality search; smallest index wins ties. The reverse of
    // the visiting order is a perfect elimination ordering iff g is chordal.
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<VertexId> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId best = 0;
        bool found = false;
        for (VertexId v = 0; v < n; ++v) {
            if (!visited[v] && (!found || weight[v] > weight[best])) {
                best = v;
                found = true;
            }
        }
        visited[best] = true;
        visit.push_back(best);
        for (VertexId w : g.neighbors(best)) {
            if (!visited[w]) {
                ++weight[w];
            }
        }
    }
    std::vector<VertexId> order(visit.rbegin(), visit.rend());
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[order[i]] = i;
    }
    for (VertexId v : order) {
        std::vector<VertexId> later;
        for (VertexId w : g.neighbors(v)) {
            if (position[w] > position[v]) {
                later.push_back(w);
            }
        }
        if (later.empty()) {
            continue;
        }
        const VertexId first = *std::min_element(later.begin(), later.end(), [&](VertexId a, VertexId b) {
            return position[a] < position[b];
        });
        for (VertexId w : later) {
            if (w != first && !g.has_edge(first, w)) {
                return std::nullopt;
            }
        }
    }
    return order;
}

bool is_chordal(const UndirectedGraph& g) { return perfect_elimination_ordering(g).has_value(); }

std::optional<std::vector<VertexId>> find_chordless_cycle(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    // A chordless cycle of length >= 4 through v uses two nonadjacent
    // neighbours x, y of v joined by a path that avoids the rest of N[v].
    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const VertexId x = nb[i];
                const VertexId y = nb[j];
                if (g.has_edge(x, y)) {
                    continue;
                }
                std::vector<bool> blocked(n, false);
                blocked[v] = true;
                for (VertexId w : nb) {
                    blocked[w] = (w != x && w != y);
                }
                std::vector<std::int64_t> prev(n, -1);
                std::deque<VertexId> queue{x};
                prev[x] = x;
                while (!queue.empty() && prev[y] < 0) {
                    const VertexId u = queue.front();
                    queue.pop_front();
                    for (VertexId w : g.neighbors(u)) {
                        if (!blocked[w] && prev[w] < 0) {
                            prev[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if (prev[y] < 0) {
                    continue;
                }
                std::vector<VertexId> path;
                for (VertexId u = y; u != x; u = static_cast<VertexId>(prev[u])) {
                    path.push_back(u);
                }
                path.push_back(x);
                std::vector<VertexId> cycle{v};
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
        }
    }
    return std::nullopt;
}

bool has_partially_directed_cycle(const Pdag& p) {
    const std::size_t n = p.num_vertices();
    for (const Arc& a : p.arcs()) {
        // Walk from the head back to the tail along arcs (forward) and lines.
        std::vector<bool> seen(n, false);
        std::vector<VertexId> stack{a.to};
        seen[a.to] = true;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w = 0; w < n; ++w) {
                if (w == u || seen[w]) {
                    continue;
                }
                const Mark m = p.mark(u, w);
                if (m == Mark::Out || m == Mark::Line) {
                    if (w == a.from) {
                        return true;
                    }
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return false;
}

std::vector<std::vector<VertexId>> connected_components(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < n; ++s) {
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
            for (VertexId w : g.neighbors(u)) {
                if (!seen[w]) {
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

bool is_connected(const UndirectedGraph& g) { return connected_components(g).size() <= 1; }

std::vector<std::vector<VertexId>> maximal_cliques(const UndirectedGraph& g) {
    const auto order = perfect_elimination_ordering(g);
    if (!order) {
        throw std::invalid_argument("maximal_cliques: graph is not chordal");
    }
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[(*order)[i]] = i;
    }
    std::vector<std::vector<VertexId>> candidates;
    for (VertexId v : *order) {
        std::vector<VertexId> c{v};
        for (VertexId w : g.neighbors(v)) {
            if (position[w] > position[v]) {
                c.push_back(w);
            }
        }
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<std::vector<VertexId>> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < candidates.size() && !contained; ++j) {
            contained = i != j && candidates[j].size() > candidates[i].size() &&
                        std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(),
                                      candidates[i].end());
        }
        if (!contained) {
            out.push_back(candidates[i]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// CliqueTree

CliqueTree::CliqueTree(const UndirectedGraph& g, std::vector<std::vector<VertexId>> cliques,
                       std::vector<std::pair<std::size_t, std::size_t>> tree_edges)
    : cliques_(std::move(cliques)), tree_edges_(std::move(tree_edges)) {
    const std::size_t m = cliques_.size();
    if (m == 0) {
        throw std::invalid_argument("clique tree needs at least one clique");
    }
    for (auto& c : cliques_) {
        std::sort(c.begin(), c.end());
        if (c.empty() || std::adjacent_find(c.begin(), c.end()) != c.end()) {
            throw std::invalid_argument("clique tree: empty clique or repeated vertex");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (!g.has_edge(c[i], c[j])) {
                    throw std::invalid_argument("clique tree: vertex set is not a clique");
                }
            }
        }
        for (VertexId x = 0; x < g.num_vertices(); ++x) {
            if (std::binary_search(c.begin(), c.end(), x)) {
                continue;
            }
            if (std::all_of(c.begin(), c.end(), [&](VertexId y) { return g.has_edge(x, y); })) {
                throw std::invalid_argument("clique tree: clique is not maximal");
            }
        }
    }
    if (maximal_cliques(g).size() != m) {
        throw std::invalid_argument("clique tree: cliques do not match the maximal cliques of the graph");
    }
    if (tree_edges_.size() + 1 != m) {
        throw std::invalid_argument("clique tree: wrong number of tree edges");
    }
    adj_.assign(m, {});
    for (auto& [i, j] : tree_edges_) {
        if (i == j || i >= m || j >= m) {
            throw std::invalid_argument("clique tree: invalid tree edge");
        }
        if (i > j) {
            std::swap(i, j);
        }
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    std::sort(tree_edges_.begin(), tree_edges_.end());
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }
    // Connected with m - 1 edges means a tree.
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t j : adj_[i]) {
            if (!seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    if (reached != m) {
        throw std::invalid_argument("clique tree: tree edges do not connect all cliques");
    }
    // Running intersection: cliques containing each vertex form a subtree.
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
        std::vector<std::size_t> holders;
        for (std::size_t i = 0; i < m; ++i) {
            if (std::binary_search(cliques_[i].begin(), cliques_[i].end(), x)) {
                holders.push_back(i);
            }
        }
        max_vertex_overlap_ = std::max(max_vertex_overlap_, holders.size());
        if (holders.size() <= 1) {
            continue;
        }
        std::vector<bool> in(m, false);
        for (std::size_t i : holders) {
            in[i] = true;
        }
        std::vector<bool> mark(m, false);
        std::vector<std::size_t> todo{holders.front()};
        mark[holders.front()] = true;
        std::size_t count = 0;
        while (!todo.empty()) {
            const std::size_t i = todo.back();
            todo.pop_back();
            ++count;
            for (std::size_t j : adj_[i]) {
                if (in[j] && !mark[j]) {
                    mark[j] = true;
                    todo.push_back(j);
                }
            }
        }
        if (count != holders.size()) {
            throw std::invalid_argument("clique tree: running intersection property fails at vertex " +
                                        std::to_string(x));
        }
    }
    for (const auto& [i, j] : tree_edges_) {
        separator_sizes_.push_back(intersection_size(i, j));
    }
    dilation_sizes_.assign(m, BigInt(1));
    for (std::size_t root = 0; root < m; ++root) {
        std::vector<std::int64_t> parent(m, -1);
        std::vector<std::size_t> queue{root};
        parent[root] = static_cast<std::int64_t>(root);
        for (std::size_t k = 0; k < queue.size(); ++k) {
            const std::size_t i = queue[k];
            for (std::size_t j : adj_[i]) {
                if (parent[j] < 0) {
                    parent[j] = static_cast<std::int64_t>(i);
                    queue.push_back(j);
                    dilation_sizes_[root] *= factorial(cliques_[j].size() - intersection_size(i, j));
                }
            }
        }
    }
}

std::size_t CliqueTree::intersection_size(std::size_t i, std::size_t j) const {
    return sorted_intersection_size(cliques_.at(i), cliques_.at(j));
}

std::size_t CliqueTree::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) {
        best = std::max(best, list.size());
    }
    return best;
}

std::size_t CliqueTree::diameter() const {
    const std::size_t m = cliques_.size();
    auto farthest = [&](std::size_t start) {
        std::vector<std::int64_t> dist(m, -1);
        std::vector<std::size_t> queue{start};
        dist[start] = 0;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            for (std::size_t j : adj_[queue[k]]) {
                if (dist[j] < 0) {
                    dist[j] = dist[queue[k]] + 1;
                    queue.push_back(j);
                }
            }
        }
        const auto it = std::max_element(dist.begin(), dist.end());
        return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(it - dist.begin()),
                                                   static_cast<std::size_t>(*it));
    };
    return farthest(farthest(0).first).second;
}

std::size_t CliqueTree::max_clique_size() const {
    std::size_t best = 0;
    for (const auto& c : cliques_) {
        best = std::max(best, c.size());
    }
    return best;
}

CliqueTree clique_tree(const UndirectedGraph& g) {
    if (g.num_vertices() == 0) {
        throw std::invalid_argument("clique_tree: empty graph");
    }
    if (!is_chordal(g)) {
        throw std::invalid_argument("clique_tree: graph is not chordal");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("clique_tree: graph is not connected");
    }
    auto cliques = maximal_cliques(g);
    const std::size_t m = cliques.size();
    std::vector<bool> in_tree(m, false);
    in_tree[0] = true;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t added = 1; added < m; ++added) {
        std::size_t best_in = 0;
        std::size_t best_out = 0;
        std::size_t best_weight = 0;
        bool found = false;
        for (std::size_t j = 0; j < m; ++j) {
            if (in_tree[j]) {
                continue;
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (!in_tree[i]) {
                    continue;
                }
                const std::size_t w = sorted_intersection_size(cliques[i], cliques[j]);
                if (!found || w > best_weight) {
                    found = true;
                    best_weight = w;
                    best_in = i;
                    best_out = j;
                }
            }
        }
        in_tree[best_out] = true;
        edges.emplace_back(std::min(best_in, best_out), std::max(best_in, best_out));
    }
    return CliqueTree(g, std::move(cliques), std::move(edges));
}

}  // namespace gms
