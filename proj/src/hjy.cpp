#include "gms/hjy.hpp"

#include "gms/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace gms {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {"insert-arc",  "delete-arc",      "insert-line",
                                                        "delete-line", "make-immorality", "remove-immorality"};

bool is_edge_kind(MoveKind k) { return k != MoveKind::MakeImmorality && k != MoveKind::RemoveImmorality; }

void check_range(const Move& m, std::size_t n) {
    const VertexId top = std::max({m.a, m.b, m.is_immorality_move() ? m.c : 0});
    if (top >= n) {
        throw std::invalid_argument("move " + format_move(m) + " names a vertex outside 0.." + std::to_string(n - 1));
    }
}

}  // namespace

std::string_view to_string(MoveKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

MoveKind parse_move_kind(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) {
            return kMoveKinds[i];
        }
    }
    throw std::invalid_argument("unknown move kind '" + std::string(name) + "'");
}

Move Move::edge(MoveKind kind, VertexId u, VertexId v) {
    if (!is_edge_kind(kind)) {
        throw std::invalid_argument("Move::edge: " + std::string(to_string(kind)) + " is not an edge move");
    }
    if (u == v) {
        throw std::invalid_argument("Move::edge: endpoints coincide");
    }
    if ((kind == MoveKind::InsertLine || kind == MoveKind::DeleteLine) && u > v) {
        std::swap(u, v);
    }
    return Move{kind, u, v, 0};
}

Move Move::immorality(MoveKind kind, VertexId a, VertexId middle, VertexId c) {
    if (is_edge_kind(kind)) {
        throw std::invalid_argument("Move::immorality: " + std::string(to_string(kind)) + " is an edge move");
    }
    if (a == middle || c == middle || a == c) {
        throw std::invalid_argument("Move::immorality: vertices must be distinct");
    }
    if (a > c) {
        std::swap(a, c);
    }
    return Move{kind, a, middle, c};
}

bool Move::is_immorality_move() const { return !is_edge_kind(kind); }

Move inverse(const Move& m) {
    Move out = m;
    switch (m.kind) {
        case MoveKind::InsertArc: out.kind = MoveKind::DeleteArc; break;
        case MoveKind::DeleteArc: out.kind = MoveKind::InsertArc; break;
        case MoveKind::InsertLine: out.kind = MoveKind::DeleteLine; break;
        case MoveKind::DeleteLine: out.kind = MoveKind::InsertLine; break;
        case MoveKind::MakeImmorality: out.kind = MoveKind::RemoveImmorality; break;
        case MoveKind::RemoveImmorality: out.kind = MoveKind::MakeImmorality; break;
    }
    return out;
}

std::string format_move(const Move& m) {
    std::string s(to_string(m.kind));
    s += " " + std::to_string(m.a);
    if (m.is_immorality_move()) {
        s += " " + std::to_string(m.b) + " " + std::to_string(m.c);
    } else {
        s += " " + std::to_string(m.b);
    }
    return s;
}

std::optional<Dag> consistent_extension(const Pdag& p) {
    const auto n = static_cast<VertexId>(p.num_vertices());
    std::vector<bool> alive(n, true);
    std::vector<Arc> arcs = p.arcs();
    for (std::size_t left = n; left > 0; --left) {
        bool peeled = false;
        for (VertexId x = 0; x < n && !peeled; ++x) {
            if (!alive[x]) {
                continue;
            }
            std::vector<VertexId> nbrs;
            bool sink = true;
            for (VertexId y = 0; y < n; ++y) {
                if (!alive[y] || y == x || !p.adjacent(x, y)) {
                    continue;
                }
                if (p.has_arc(x, y)) {
                    sink = false;
                    break;
                }
                nbrs.push_back(y);
            }
            if (!sink) {
                continue;
            }
            // Every line neighbour must see all of x's other live neighbours.
            bool ok = true;
            for (VertexId y : nbrs) {
                if (!p.has_line(x, y)) {
                    continue;
                }
                for (VertexId z : nbrs) {
                    if (z != y && !p.adjacent(y, z)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            for (VertexId y : nbrs) {
                if (p.has_line(x, y)) {
                    arcs.push_back({y, x});
                }
            }
            alive[x] = false;
            peeled = true;
        }
        if (!peeled) {
            return std::nullopt;
        }
    }
    return Dag(n, arcs);
}

std::optional<Dag> consistent_extension_bruteforce(const Pdag& p, std::size_t cap) {
    const auto lines = p.lines();
    if (lines.size() >= 63 || (std::uint64_t{1} << lines.size()) > cap) {
        throw CapExceeded("consistent_extension_bruteforce: 2^" + std::to_string(lines.size()) + " orientations", cap);
    }
    const auto target = immoralities(p);
    const auto fixed = p.arcs();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << lines.size()); ++mask) {
        std::vector<Arc> arcs = fixed;
        for (std::size_t e = 0; e < lines.size(); ++e) {
            arcs.push_back(((mask >> e) & 1U) ? Arc{lines[e].u, lines[e].v} : Arc{lines[e].v, lines[e].u});
        }
        if (!is_acyclic(p.num_vertices(), arcs)) {
            continue;
        }
        Dag d(p.num_vertices(), arcs);
        if (immoralities(d) == target) {
            return d;
        }
    }
    return std::nullopt;
}

std::optional<EssentialGraph> repair_move(const EssentialGraph& s, const Move& m) {
    const Pdag& g = s.pdag();
    check_range(m, g.num_vertices());
    Pdag edited = g;
    switch (m.kind) {
        case MoveKind::InsertArc:
        case MoveKind::InsertLine:
            if (g.adjacent(m.a, m.b)) {
                return std::nullopt;
            }
            if (m.kind == MoveKind::InsertArc) {
                edited.add_arc(m.a, m.b);
            } else {
                edited.add_line(m.a, m.b);
            }
            break;
        case MoveKind::DeleteArc:
            if (!g.has_arc(m.a, m.b)) {
                return std::nullopt;
            }
            edited.remove_edge(m.a, m.b);
            break;
        case MoveKind::DeleteLine:
            if (!g.has_line(m.a, m.b)) {
                return std::nullopt;
            }
            edited.remove_edge(m.a, m.b);
            break;
        case MoveKind::MakeImmorality:
            if (!g.has_line(m.a, m.b) || !g.has_line(m.c, m.b) || g.adjacent(m.a, m.c)) {
                return std::nullopt;
            }
            edited.set_arc(m.a, m.b);
            edited.set_arc(m.c, m.b);
            break;
        case MoveKind::RemoveImmorality:
            if (!g.has_arc(m.a, m.b) || !g.has_arc(m.c, m.b) || g.adjacent(m.a, m.c)) {
                return std::nullopt;
            }
            edited.set_line(m.a, m.b);
            edited.set_line(m.c, m.b);
            break;
    }
    const auto ext = consistent_extension(edited);
    if (!ext) {
        return std::nullopt;
    }
    EssentialGraph out = essential_graph_of_dag(*ext);
    const Pdag& r = out.pdag();
    switch (m.kind) {
        case MoveKind::InsertArc:
            if (!r.has_arc(m.a, m.b)) {
                return std::nullopt;
            }
            break;
        case MoveKind::InsertLine:
            if (!r.has_line(m.a, m.b)) {
                return std::nullopt;
            }
            break;
        case MoveKind::MakeImmorality:
            if (!r.has_arc(m.a, m.b) || !r.has_arc(m.c, m.b)) {
                return std::nullopt;
            }
            break;
        case MoveKind::RemoveImmorality:
            if (!r.has_line(m.a, m.b) || !r.has_line(m.c, m.b)) {
                return std::nullopt;
            }
            break;
        default: break;
    }
    return out;
}

std::optional<EssentialGraph> apply_move(const EssentialGraph& s, const Move& m) {
    auto forward = repair_move(s, m);
    if (!forward) {
        return std::nullopt;
    }
    const auto back = repair_move(*forward, inverse(m));
    if (!back || !(*back == s)) {
        return std::nullopt;
    }
    return forward;
}

std::size_t proposal_count(MoveKind kind, std::size_t n) {
    switch (kind) {
        case MoveKind::InsertArc:
        case MoveKind::DeleteArc: return n < 2 ? 0 : n * (n - 1);
        case MoveKind::InsertLine:
        case MoveKind::DeleteLine: return n < 2 ? 0 : n * (n - 1) / 2;
        default: return n < 3 ? 0 : n * ((n - 1) * (n - 2) / 2);
    }
}

std::vector<Move> all_moves(MoveKind kind, std::size_t n) {
    std::vector<Move> out;
    const auto nv = static_cast<VertexId>(n);
    if (is_edge_kind(kind)) {
        const bool ordered = kind == MoveKind::InsertArc || kind == MoveKind::DeleteArc;
        for (VertexId u = 0; u < nv; ++u) {
            for (VertexId v = ordered ? 0 : u + 1; v < nv; ++v) {
                if (u != v) {
                    out.push_back(Move::edge(kind, u, v));
                }
            }
        }
    } else {
        for (VertexId a = 0; a < nv; ++a) {
            for (VertexId mid = 0; mid < nv; ++mid) {
                for (VertexId c = a + 1; c < nv; ++c) {
                    if (mid != a && mid != c) {
                        out.push_back(Move::immorality(kind, a, mid, c));
                    }
                }
            }
        }
    }
    return out;
}

Rational proposal_probability(const Move& m, std::size_t n) {
    const std::size_t count = proposal_count(m.kind, n);
    if (count == 0) {
        return 0;
    }
    return Rational(1, 6 * static_cast<long long>(count));
}

std::optional<Move> propose(std::size_t n, HjyRng& rng) {
    const MoveKind kind = kMoveKinds[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    if (proposal_count(kind, n) == 0) {
        return std::nullopt;
    }
    auto pick = [&](std::size_t bound) {
        return static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng));
    };
    // Uniform over 0..bound-1 without skip.
    auto pick_other = [&](std::size_t bound, VertexId skip) {
        VertexId v = pick(bound - 1);
        return v >= skip ? v + 1 : v;
    };
    if (is_edge_kind(kind)) {
        const VertexId u = pick(n);
        return Move::edge(kind, u, pick_other(n, u));
    }
    const VertexId mid = pick(n);
    const VertexId a = pick_other(n, mid);
    // Second outer vertex avoids both mid and a.
    const VertexId lo = std::min(a, mid);
    const VertexId hi = std::max(a, mid);
    VertexId c = pick(n - 2);
    if (c >= lo) {
        ++c;
    }
    if (c >= hi) {
        ++c;
    }
    return Move::immorality(kind, a, mid, c);
}

StepRecord step(EssentialGraph& state, HjyRng& rng) {
    StepRecord rec;
    rec.move = propose(state.num_vertices(), rng);
    if (!rec.move) {
        return rec;
    }
    if (auto next = apply_move(state, *rec.move)) {
        state = std::move(*next);
        rec.accepted = true;
    }
    return rec;
}

std::uint64_t state_hash(const EssentialGraph& eg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : eg.key()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

EssentialGraph empty_essential_graph(std::size_t n) { return EssentialGraph(Pdag(n)); }

std::vector<EssentialGraph> chain_neighbors(const EssentialGraph& s) {
    std::map<std::string, EssentialGraph> found;
    for (MoveKind kind : kMoveKinds) {
        for (const Move& m : all_moves(kind, s.num_vertices())) {
            if (auto t = apply_move(s, m); t && !(*t == s)) {
                found.emplace(t->key(), std::move(*t));
            }
        }
    }
    std::vector<EssentialGraph> out;
    out.reserve(found.size());
    for (auto& [key, eg] : found) {
        out.push_back(std::move(eg));
    }
    return out;
}

bool HjyTransitionMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (prob[i][j] != prob[j][i]) {
                return false;
            }
        }
    }
    return true;
}

bool HjyTransitionMatrix::is_stochastic() const {
    for (const auto& row : prob) {
        Rational sum = 0;
        for (const Rational& x : row) {
            if (x < 0) {
                return false;
            }
            sum += x;
        }
        if (sum != 1) {
            return false;
        }
    }
    return true;
}

bool HjyTransitionMatrix::uniform_is_stationary() const {
    const Rational u(1, static_cast<long long>(size()));
    for (std::size_t j = 0; j < size(); ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            col += u * prob[i][j];
        }
        if (col != u) {
            return false;
        }
    }
    return true;
}

Rational HjyTransitionMatrix::min_holding() const {
    Rational best = 1;
    for (std::size_t i = 0; i < size(); ++i) {
        best = std::min(best, prob[i][i]);
    }
    return best;
}

HjyTransitionMatrix exact_transition_matrix(std::size_t n, std::size_t cap) {
    std::map<std::string, EssentialGraph> seen;
    std::vector<EssentialGraph> frontier{empty_essential_graph(n)};
    seen.emplace(frontier.front().key(), frontier.front());
    while (!frontier.empty()) {
        std::vector<EssentialGraph> next;
        for (const auto& s : frontier) {
            for (auto& t : chain_neighbors(s)) {
                if (seen.emplace(t.key(), t).second) {
                    if (seen.size() > cap) {
                        throw CapExceeded("exact_transition_matrix: reachable states", cap);
                    }
                    next.push_back(std::move(t));
                }
            }
        }
        frontier = std::move(next);
    }
    HjyTransitionMatrix out;
    std::unordered_map<std::string, std::size_t> index;
    for (auto& [key, eg] : seen) {
        index.emplace(key, out.states.size());
        out.states.push_back(eg);
    }
    const std::size_t size = out.states.size();
    out.prob.assign(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t i = 0; i < size; ++i) {
        for (MoveKind kind : kMoveKinds) {
            const std::size_t count = proposal_count(kind, n);
            if (count == 0) {
                out.prob[i][i] += Rational(1, 6);
                continue;
            }
            const Rational p(1, 6 * static_cast<long long>(count));
            for (const Move& m : all_moves(kind, n)) {
                const auto t = apply_move(out.states[i], m);
                out.prob[i][t ? index.at(t->key()) : i] += p;
            }
        }
    }
    return out;
}

std::vector<EssentialGraph> essential_graphs_bruteforce(std::size_t n) {
    std::map<std::string, EssentialGraph> found;
    for (const Dag& d : enumerate_labeled_dags(n)) {
        auto eg = essential_graph_of_dag(d);
        found.emplace(eg.key(), std::move(eg));
    }
    std::vector<EssentialGraph> out;
    for (auto& [key, eg] : found) {
        out.push_back(std::move(eg));
    }
    return out;
}

namespace {

// Replays m through the chain and insists it lands on `expected`.
void replay(EssentialGraph& state, const Move& m, const Pdag& expected, const char* who) {
    auto next = apply_move(state, m);
    if (!next) {
        throw std::logic_error(std::string(who) + ": move " + format_move(m) + " rejected");
    }
    if (!(next->pdag() == expected)) {
        throw std::logic_error(std::string(who) + ": move " + format_move(m) + " did not give the expected graph");
    }
    state = std::move(*next);
}

}  // namespace

std::vector<Move> emptying_sequence(const EssentialGraph& eg) {
    constexpr const char* who = "emptying_sequence";
    if (eg.num_vertices() > 64) {
        throw std::invalid_argument("emptying_sequence: more than 64 vertices");
    }
    std::vector<Move> moves;
    EssentialGraph state = eg;
    auto run = [&](const Move& m) {
        Pdag expected = state.pdag();
        switch (m.kind) {
            case MoveKind::DeleteArc:
            case MoveKind::DeleteLine: expected.remove_edge(m.a, m.b); break;
            case MoveKind::RemoveImmorality:
                expected.set_line(m.a, m.b);
                expected.set_line(m.c, m.b);
                break;
            default: throw std::logic_error("emptying_sequence: unexpected move kind");
        }
        replay(state, m, expected, who);
        moves.push_back(m);
    };

    // Lines: each vertex is simplicial once the earlier ones are stripped.
    const auto order = perfect_elimination_ordering(state.pdag().undirected_part());
    if (!order) {
        throw std::logic_error("emptying_sequence: undirected part is not chordal");
    }
    for (VertexId v : *order) {
        for (VertexId w : state.pdag().line_neighbors(v)) {
            run(Move::edge(MoveKind::DeleteLine, v, w));
        }
    }

    // Arcs into maximal elements of height >= 3.
    for (;;) {
        const Dag dag = state.pdag().to_dag();
        const Poset order_rel = reachability_poset(dag);
        const PosetStats stats = poset_stats(order_rel);
        std::optional<VertexId> top;
        for (VertexId v = 0; v < dag.num_vertices(); ++v) {
            if (dag.children(v).empty() && stats.height[v] >= 3) {
                top = v;
                break;
            }
        }
        if (!top) {
            break;
        }
        const VertexId v = *top;
        const std::uint64_t cover_mask = order_rel.covers(v);
        std::vector<VertexId> covers;
        std::vector<VertexId> others;
        for (VertexId u : dag.parents(v)) {
            ((cover_mask >> u) & 1U ? covers : others).push_back(u);
        }
        std::vector<VertexId> removal;
        if (covers.size() >= 2) {
            // Non-covers, then covers from lowest to highest.
            removal = others;
            std::stable_sort(covers.begin(), covers.end(),
                             [&](VertexId x, VertexId y) { return stats.height[x] < stats.height[y]; });
            removal.insert(removal.end(), covers.begin(), covers.end());
        } else {
            // Single cover w: parents shared with w first, then the rest, w last.
            const VertexId w = covers.front();
            const auto& shared = dag.parents(w);
            for (VertexId u : others) {
                if (std::binary_search(shared.begin(), shared.end(), u)) {
                    removal.push_back(u);
                }
            }
            for (VertexId u : others) {
                if (!std::binary_search(shared.begin(), shared.end(), u)) {
                    removal.push_back(u);
                }
            }
            removal.push_back(w);
        }
        for (VertexId u : removal) {
            run(Move::edge(MoveKind::DeleteArc, u, v));
        }
    }

    // Heights 1 and 2 only: prune each collider to two parents.
    const Dag flat = state.pdag().to_dag();
    for (VertexId b = 0; b < flat.num_vertices(); ++b) {
        const auto& pa = flat.parents(b);
        if (pa.size() == 1) {
            throw std::logic_error("emptying_sequence: arc into " + std::to_string(b) + " is unprotected");
        }
        for (std::size_t i = 2; i < pa.size(); ++i) {
            run(Move::edge(MoveKind::DeleteArc, pa[i], b));
        }
    }
    for (VertexId b = 0; b < flat.num_vertices(); ++b) {
        const auto& pa = flat.parents(b);
        if (pa.size() < 2) {
            continue;
        }
        run(Move::immorality(MoveKind::RemoveImmorality, pa[0], b, pa[1]));
        run(Move::edge(MoveKind::DeleteLine, pa[0], b));
        run(Move::edge(MoveKind::DeleteLine, pa[1], b));
    }
    if (state.pdag().num_arcs() + state.pdag().num_lines() != 0) {
        throw std::logic_error("emptying_sequence: edges remain");
    }
    return moves;
}

std::size_t hamming_distance(const EssentialGraph& x, const EssentialGraph& y) {
    if (x.num_vertices() != y.num_vertices()) {
        throw std::invalid_argument("hamming_distance: vertex counts differ");
    }
    std::size_t diff = 0;
    const auto n = static_cast<VertexId>(x.num_vertices());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            diff += x.pdag().mark(u, v) != y.pdag().mark(u, v) ? 1 : 0;
        }
    }
    return diff;
}

std::vector<Move> two_step_path(const EssentialGraph& x, const EssentialGraph& y) {
    constexpr const char* who = "two_step_path";
    if (hamming_distance(x, y) != 1) {
        throw std::invalid_argument("two_step_path: graphs are not at Hamming distance 1");
    }
    const Pdag& p = x.pdag();
    const Pdag& q = y.pdag();
    const auto n = static_cast<VertexId>(p.num_vertices());
    VertexId u = 0;
    VertexId v = 0;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (p.mark(i, j) != q.mark(i, j)) {
                u = i;
                v = j;
            }
        }
    }
    std::vector<Move> path;
    if (!p.adjacent(u, v)) {
        path.push_back(q.has_line(u, v) ? Move::edge(MoveKind::InsertLine, u, v)
                       : q.has_arc(u, v) ? Move::edge(MoveKind::InsertArc, u, v)
                                         : Move::edge(MoveKind::InsertArc, v, u));
    } else if (!q.adjacent(u, v)) {
        path.push_back(p.has_line(u, v) ? Move::edge(MoveKind::DeleteLine, u, v)
                       : p.has_arc(u, v) ? Move::edge(MoveKind::DeleteArc, u, v)
                                         : Move::edge(MoveKind::DeleteArc, v, u));
    } else if (p.has_line(u, v) || q.has_line(u, v)) {
        throw std::invalid_argument("two_step_path: graphs differ by a line against an arc");
    } else {
        const Arc from = p.has_arc(u, v) ? Arc{u, v} : Arc{v, u};
        path.push_back(Move::edge(MoveKind::DeleteArc, from.from, from.to));
        path.push_back(Move::edge(MoveKind::InsertArc, from.to, from.from));
    }
    EssentialGraph state = x;
    Pdag middle = p;
    if (p.adjacent(u, v)) {
        middle.remove_edge(u, v);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
        replay(state, path[i], i + 1 == path.size() ? q : middle, who);
    }
    return path;
}

Counterexample counterexample_family(std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("counterexample_family: k must be at least 1");
    }
    constexpr VertexId a = Counterexample::a;
    constexpr VertexId b = Counterexample::b;
    constexpr VertexId c = Counterexample::c;
    constexpr VertexId d = Counterexample::d;
    const std::size_t n = 5 * k + 4;
    std::vector<Edge> lines{make_edge(a, c), make_edge(c, b), make_edge(b, d), make_edge(d, a)};
    std::vector<Arc> arcs;
    const std::array<std::pair<VertexId, VertexId>, 4> pairs{{{a, c}, {c, b}, {b, d}, {d, a}}};
    for (std::size_t i = 0; i < k; ++i) {
        const auto base = static_cast<VertexId>(4 + 5 * i);
        for (std::size_t s = 0; s < 4; ++s) {
            lines.push_back(make_edge(base + static_cast<VertexId>(s), pairs[s].first));
            lines.push_back(make_edge(base + static_cast<VertexId>(s), pairs[s].second));
        }
        for (VertexId hub = 0; hub < 4; ++hub) {
            arcs.push_back({hub, base + 4});
        }
    }
    auto build = [&](Edge chord) {
        std::vector<Edge> all = lines;
        all.push_back(chord);
        return EssentialGraph(Pdag(n, arcs, all));
    };
    return Counterexample{build(make_edge(a, b)), build(make_edge(c, d))};
}

std::optional<std::size_t> chain_distance(const EssentialGraph& from, const EssentialGraph& to,
                                          std::size_t max_depth, std::size_t cap) {
    if (from.num_vertices() != to.num_vertices()) {
        throw std::invalid_argument("chain_distance: vertex counts differ");
    }
    if (from == to) {
        return 0;
    }
    // Accepted moves are symmetric, so the backward ball uses forward moves.
    struct Side {
        std::unordered_map<std::string, std::size_t> depth;
        std::vector<EssentialGraph> frontier;
        std::size_t radius = 0;
    };
    Side fwd;
    Side bwd;
    fwd.depth.emplace(from.key(), 0);
    fwd.frontier.push_back(from);
    bwd.depth.emplace(to.key(), 0);
    bwd.frontier.push_back(to);
    std::optional<std::size_t> best;
    while (fwd.radius + bwd.radius < max_depth) {
        Side& grow = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
        const Side& other = &grow == &fwd ? bwd : fwd;
        if (grow.frontier.empty()) {
            break;
        }
        std::vector<EssentialGraph> next;
        ++grow.radius;
        for (const auto& s : grow.frontier) {
            for (auto& t : chain_neighbors(s)) {
                if (!grow.depth.emplace(t.key(), grow.radius).second) {
                    continue;
                }
                if (auto hit = other.depth.find(t.key()); hit != other.depth.end()) {
                    const std::size_t total = grow.radius + hit->second;
                    best = best ? std::min(*best, total) : total;
                }
                next.push_back(std::move(t));
                if (grow.depth.size() > cap) {
                    throw CapExceeded("chain_distance: search ball", cap);
                }
            }
        }
        grow.frontier = std::move(next);
        if (best) {
            return best;
        }
    }
    return std::nullopt;
}

}  // namespace gms
