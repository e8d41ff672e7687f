#include "doctest.h"

#include "gms/hjy.hpp"

#include <map>
#include <set>

using namespace gms;

namespace {

EssentialGraph eg(std::size_t n, std::vector<Arc> arcs, std::vector<Edge> lines) {
    return EssentialGraph(Pdag(n, arcs, lines));
}

// Every Pdag on n vertices: each pair is absent, a line, or an arc either way.
std::vector<Pdag> all_pdags(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        total *= 4;
    }
    std::vector<Pdag> out;
    for (std::size_t code = 0; code < total; ++code) {
        Pdag p(n);
        std::size_t c = code;
        for (const auto& [u, v] : pairs) {
            switch (c % 4) {
                case 1: p.add_line(u, v); break;
                case 2: p.add_arc(u, v); break;
                case 3: p.add_arc(v, u); break;
                default: break;
            }
            c /= 4;
        }
        out.push_back(p);
    }
    return out;
}

bool is_extension_of(const Dag& d, const Pdag& p) {
    if (skeleton(d) != p.skeleton()) {
        return false;
    }
    for (const Arc& a : p.arcs()) {
        if (!d.has_arc(a.from, a.to)) {
            return false;
        }
    }
    return immoralities(d) == immoralities(p);
}

std::set<std::string> keys(const std::vector<EssentialGraph>& v) {
    std::set<std::string> out;
    for (const auto& e : v) {
        out.insert(e.key());
    }
    return out;
}

}  // namespace

TEST_CASE("moves") {
    const Move line = Move::edge(MoveKind::InsertLine, 3, 1);
    CHECK(line.a == 1);
    CHECK(line.b == 3);
    const Move arc = Move::edge(MoveKind::DeleteArc, 3, 1);
    CHECK(arc.a == 3);
    const Move imm = Move::immorality(MoveKind::MakeImmorality, 2, 0, 1);
    CHECK(imm.a == 1);
    CHECK(imm.b == 0);
    CHECK(imm.c == 2);
    CHECK(format_move(imm) == "make-immorality 1 0 2");
    CHECK(inverse(imm).kind == MoveKind::RemoveImmorality);
    CHECK(inverse(inverse(arc)) == arc);
    for (MoveKind k : kMoveKinds) {
        CHECK(parse_move_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_move_kind("flip"), std::invalid_argument);
    CHECK_THROWS_AS(Move::edge(MoveKind::InsertArc, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Move::edge(MoveKind::MakeImmorality, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Move::immorality(MoveKind::InsertArc, 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Move::immorality(MoveKind::RemoveImmorality, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(empty_essential_graph(2), Move::edge(MoveKind::InsertArc, 0, 2)),
                    std::invalid_argument);
}

TEST_CASE("proposal counts") {
    CHECK(proposal_count(MoveKind::InsertArc, 4) == 12);
    CHECK(proposal_count(MoveKind::DeleteLine, 4) == 6);
    CHECK(proposal_count(MoveKind::MakeImmorality, 4) == 12);
    CHECK(proposal_count(MoveKind::RemoveImmorality, 2) == 0);
    CHECK(proposal_count(MoveKind::InsertLine, 1) == 0);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (MoveKind k : kMoveKinds) {
            const auto moves = all_moves(k, n);
            CHECK(moves.size() == proposal_count(k, n));
            CHECK(std::set<Move>(moves.begin(), moves.end()).size() == moves.size());
            for (const Move& m : moves) {
                CHECK(proposal_probability(m, n) == proposal_probability(inverse(m), n));
            }
        }
    }

    HjyRng rng(7);
    std::map<MoveKind, int> kinds;
    std::map<Move, int> lines;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
        const auto m = propose(5, rng);
        REQUIRE(m.has_value());
        CHECK(std::max({m->a, m->b, m->c}) < 5);
        ++kinds[m->kind];
        if (m->kind == MoveKind::InsertLine) {
            ++lines[*m];
        }
    }
    for (MoveKind k : kMoveKinds) {
        CHECK(kinds[k] == doctest::Approx(draws / 6.0).epsilon(0.05));
    }
    CHECK(lines.size() == 10);
    for (const auto& [m, c] : lines) {
        CHECK(c == doctest::Approx(kinds[MoveKind::InsertLine] / 10.0).epsilon(0.15));
    }
    HjyRng tiny(1);
    int none = 0;
    for (int i = 0; i < 600; ++i) {
        none += propose(2, tiny).has_value() ? 0 : 1;
    }
    CHECK(none > 0);
}

TEST_CASE("consistent extension examples") {
    const Pdag triangle = Pdag::from_undirected(UndirectedGraph(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    const auto t = consistent_extension(triangle);
    REQUIRE(t.has_value());
    CHECK(t->num_arcs() == 3);
    CHECK(immoralities(*t).empty());

    const Pdag forced(3, std::vector<Arc>{{0, 1}}, std::vector<Edge>{{1, 2}});
    const auto f = consistent_extension(forced);
    REQUIRE(f.has_value());
    CHECK(f->has_arc(1, 2));

    const Pdag square = Pdag::from_undirected(UndirectedGraph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK_FALSE(consistent_extension(square).has_value());
    CHECK_FALSE(consistent_extension_bruteforce(square).has_value());

    const Pdag cyclic(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}, {});
    CHECK_FALSE(consistent_extension(cyclic).has_value());
}

TEST_CASE("consistent extension agrees with exhaustive search on every PDAG up to 4 vertices") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t extendable = 0;
        for (const Pdag& p : all_pdags(n)) {
            const auto fast = consistent_extension(p);
            const auto slow = consistent_extension_bruteforce(p);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) {
                ++extendable;
                CHECK(is_extension_of(*fast, p));
            }
        }
        CHECK(extendable > 0);
    }
}

TEST_CASE("apply_move examples") {
    const auto one = apply_move(empty_essential_graph(2), Move::edge(MoveKind::InsertLine, 0, 1));
    REQUIRE(one.has_value());
    CHECK(one->pdag().has_line(0, 1));

    // 0 - 1 plus 2 -> 1: the only extension is a chain, whose class leaves 1 - 2 undirected.
    const EssentialGraph line01 = eg(3, {}, {{0, 1}});
    Pdag edited = line01.pdag();
    edited.add_arc(2, 1);
    const auto ext = consistent_extension_bruteforce(edited);
    REQUIRE(ext.has_value());
    const bool stays_arc = essential_graph_of_dag(*ext).pdag().has_arc(2, 1);
    CHECK(apply_move(line01, Move::edge(MoveKind::InsertArc, 2, 1)).has_value() == stays_arc);
    CHECK_FALSE(stays_arc);

    CHECK_FALSE(apply_move(one.value(), Move::edge(MoveKind::InsertArc, 0, 1)).has_value());
    CHECK_FALSE(apply_move(one.value(), Move::edge(MoveKind::DeleteArc, 0, 1)).has_value());

    // Completing the immorality at 2 from the path 0 - 2 - 1.
    const EssentialGraph path = eg(3, {}, {{0, 2}, {1, 2}});
    const auto collider = apply_move(path, Move::immorality(MoveKind::MakeImmorality, 0, 2, 1));
    REQUIRE(collider.has_value());
    CHECK(collider->pdag() == Pdag(3, std::vector<Arc>{{0, 2}, {1, 2}}, {}));
    const auto back = apply_move(*collider, Move::immorality(MoveKind::RemoveImmorality, 0, 2, 1));
    REQUIRE(back.has_value());
    CHECK(*back == path);
    CHECK_FALSE(apply_move(path, Move::immorality(MoveKind::MakeImmorality, 0, 1, 2)).has_value());
}

TEST_CASE("unchecked repair is not reversible on its own") {
    const EssentialGraph collider = eg(3, {{0, 2}, {1, 2}}, {});
    const Move drop = Move::edge(MoveKind::DeleteArc, 0, 2);
    const auto forward = repair_move(collider, drop);
    REQUIRE(forward.has_value());
    CHECK(forward->pdag() == Pdag(3, {}, std::vector<Edge>{{1, 2}}));
    CHECK_FALSE(repair_move(*forward, inverse(drop)).has_value());
    CHECK_FALSE(apply_move(collider, drop).has_value());
}

TEST_CASE("exact transition matrices") {
    const auto two = exact_transition_matrix(2);
    CHECK(two.size() == 2);
    CHECK(two.is_symmetric());
    CHECK(two.is_stochastic());

    const auto three = exact_transition_matrix(3);
    CHECK(three.size() == 11);
    CHECK(three.is_symmetric());
    CHECK(three.is_stochastic());
    CHECK(three.uniform_is_stationary());
    CHECK(three.min_holding() > 0);
    CHECK(keys(three.states) == keys(essential_graphs_bruteforce(3)));

    const auto four = exact_transition_matrix(4);
    CHECK(four.size() == 185);
    CHECK(four.is_symmetric());
    CHECK(four.is_stochastic());
    CHECK(four.uniform_is_stationary());
    CHECK(four.min_holding() > 0);
    CHECK(keys(four.states) == keys(essential_graphs_bruteforce(4)));

    CHECK(exact_transition_matrix(1).size() == 1);
    CHECK_THROWS_AS(exact_transition_matrix(4, 50), CapExceeded);
}

TEST_CASE("random walk stays on essential graphs and is reproducible") {
    HjyRng r1(2024);
    HjyRng r2(2024);
    EssentialGraph s1 = empty_essential_graph(5);
    EssentialGraph s2 = empty_essential_graph(5);
    std::size_t accepted = 0;
    std::set<std::string> visited;
    for (int i = 0; i < 3000; ++i) {
        const auto rec = step(s1, r1);
        step(s2, r2);
        accepted += rec.accepted ? 1 : 0;
        CHECK(is_essential_graph(s1.pdag()));
        visited.insert(s1.key());
    }
    CHECK(s1 == s2);
    CHECK(accepted > 0);
    CHECK(accepted < 3000);
    CHECK(visited.size() > 50);
    CHECK(state_hash(s1) == state_hash(s2));
    CHECK(state_hash(empty_essential_graph(3)) != state_hash(eg(3, {}, {{0, 1}})));
}

TEST_CASE("emptying sequences") {
    CHECK(emptying_sequence(empty_essential_graph(4)).empty());

    const auto single = emptying_sequence(eg(3, {{0, 2}, {1, 2}}, {}));
    REQUIRE(single.size() == 3);
    CHECK(single[0] == Move::immorality(MoveKind::RemoveImmorality, 0, 2, 1));
    CHECK(single[1].kind == MoveKind::DeleteLine);
    CHECK(single[2].kind == MoveKind::DeleteLine);

    for (std::size_t n = 1; n <= 4; ++n) {
        for (const EssentialGraph& start : essential_graphs_bruteforce(n)) {
            const auto moves = emptying_sequence(start);
            EssentialGraph state = start;
            for (const Move& m : moves) {
                const auto next = apply_move(state, m);
                REQUIRE(next.has_value());
                CHECK(is_essential_graph(next->pdag()));
                CHECK(hamming_distance(state, *next) >= 1);
                state = *next;
            }
            CHECK(state == empty_essential_graph(n));
        }
    }

    // Taller posets on five vertices exercise the single-cover rule.
    const Dag tall(5, std::vector<Arc>{{0, 2}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
    const auto start = essential_graph_of_dag(tall);
    CHECK_FALSE(emptying_sequence(start).empty());
}

TEST_CASE("hamming distance") {
    const EssentialGraph empty = empty_essential_graph(3);
    const EssentialGraph fwd = eg(3, {{0, 1}, {2, 1}}, {});
    const EssentialGraph rev = eg(3, {{1, 0}, {2, 0}}, {});
    const EssentialGraph tail = eg(4, {{0, 2}, {1, 2}, {2, 3}}, {});
    CHECK(hamming_distance(empty, empty) == 0);
    CHECK(hamming_distance(empty, eg(3, {}, {{0, 1}})) == 1);
    CHECK(hamming_distance(fwd, rev) == 3);
    CHECK(hamming_distance(tail, eg(4, {{0, 2}, {1, 2}}, {})) == 1);
    CHECK_THROWS_AS(hamming_distance(empty, empty_essential_graph(2)), std::invalid_argument);
}

TEST_CASE("two-step paths") {
    const EssentialGraph collider = eg(4, {{0, 2}, {1, 2}}, {});
    const EssentialGraph longer = eg(4, {{0, 2}, {1, 2}, {2, 3}}, {});
    CHECK(two_step_path(collider, longer).size() == 1);
    CHECK(two_step_path(longer, collider).size() == 1);
    CHECK(two_step_path(empty_essential_graph(2), eg(2, {}, {{0, 1}})).size() == 1);

    CHECK_THROWS_AS(two_step_path(collider, collider), std::invalid_argument);
    CHECK_THROWS_AS(two_step_path(empty_essential_graph(4), longer), std::invalid_argument);

    std::size_t reversals = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto all = essential_graphs_bruteforce(n);
        for (const auto& p : all) {
            for (const auto& q : all) {
                if (hamming_distance(p, q) != 1) {
                    continue;
                }
                const auto path = two_step_path(p, q);
                CHECK(path.size() >= 1);
                CHECK(path.size() <= 2);
                reversals += path.size() == 2 ? 1 : 0;
                EssentialGraph state = p;
                for (const Move& m : path) {
                    const auto next = apply_move(state, m);
                    REQUIRE(next.has_value());
                    state = *next;
                }
                CHECK(state == q);
            }
        }
    }
    CHECK(reversals > 0);
}

TEST_CASE("counterexample family") {
    CHECK_THROWS_AS(counterexample_family(0), std::invalid_argument);
    for (std::size_t k = 1; k <= 3; ++k) {
        const Counterexample ce = counterexample_family(k);
        for (const EssentialGraph* g : {&ce.with_ab, &ce.with_cd}) {
            CHECK(g->num_vertices() == 5 * k + 4);
            CHECK(g->pdag().num_arcs() + g->pdag().num_lines() == 12 * k + 5);
            CHECK(is_essential_graph(g->pdag()));
        }
        CHECK(hamming_distance(ce.with_ab, ce.with_cd) == 2);
        CHECK(ce.with_ab.pdag().has_line(Counterexample::a, Counterexample::b));
        CHECK_FALSE(ce.with_ab.pdag().adjacent(Counterexample::c, Counterexample::d));
        CHECK(ce.with_cd.pdag().has_line(Counterexample::c, Counterexample::d));
        CHECK_FALSE(ce.with_cd.pdag().adjacent(Counterexample::a, Counterexample::b));

        Pdag both = ce.with_ab.pdag();
        both.add_line(Counterexample::c, Counterexample::d);
        CHECK_FALSE(is_essential_graph(both));
        CHECK(essential_graph_violation(both).find("protected") != std::string::npos);
        Pdag neither = ce.with_ab.pdag();
        neither.remove_edge(Counterexample::a, Counterexample::b);
        CHECK_FALSE(is_essential_graph(neither));
        CHECK(essential_graph_violation(neither).find("chordal") != std::string::npos);
    }

    const Counterexample ce = counterexample_family(1);
    // Plain breadth-first expansion to depth three from one end.
    std::set<std::string> seen{ce.with_ab.key()};
    std::vector<EssentialGraph> frontier{ce.with_ab};
    for (int depth = 1; depth <= 3; ++depth) {
        std::vector<EssentialGraph> next;
        for (const auto& s : frontier) {
            for (const auto& t : chain_neighbors(s)) {
                if (seen.insert(t.key()).second) {
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    CHECK(seen.count(ce.with_cd.key()) == 0);
    CHECK_FALSE(chain_distance(ce.with_ab, ce.with_cd, 3).has_value());
    CHECK(chain_distance(ce.with_ab, ce.with_cd, 8) == std::optional<std::size_t>(4));
}

TEST_CASE("chain distance") {
    const EssentialGraph empty = empty_essential_graph(3);
    CHECK(chain_distance(empty, empty, 0) == std::optional<std::size_t>(0));
    const EssentialGraph collider = eg(3, {{0, 2}, {1, 2}}, {});
    CHECK(chain_distance(empty, collider, 5) == std::optional<std::size_t>(3));
    CHECK_FALSE(chain_distance(empty, collider, 2).has_value());
}
