#include "doctest.h"

#include "gms/edge_flip.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace gms;
using namespace gms::test;

namespace {

// Worst-start TV distance by repeated dense multiplication.
std::size_t mixing_time_by_powers(const TransitionMatrix& m, double eps) {
    const auto n = static_cast<Eigen::Index>(m.dimension());
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    for (std::size_t t = 0;; ++t) {
        double worst = 0;
        for (Eigen::Index x = 0; x < n; ++x) {
            worst = std::max(worst, 0.5 * (power.row(x).array() - 1.0 / static_cast<double>(n)).abs().sum());
        }
        if (worst <= eps) {
            return t;
        }
        power = power * m.entries();
    }
}

}  // namespace

TEST_CASE("transition matrix of small graphs") {
    const auto k3 = build_orientation_space(share(complete_graph(3)));
    const TransitionMatrix p = transition_matrix(k3);
    REQUIRE(p.dimension() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(p(i, i) == doctest::Approx(1.0 / 3));
        std::size_t off = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            if (j != i && p(i, j) > 0) {
                CHECK(p(i, j) == doctest::Approx(1.0 / 3));
                ++off;
            }
        }
        CHECK(off == 2);
    }
    CHECK(p.is_symmetric());

    const TransitionMatrix k2 = transition_matrix(build_orientation_space(share(complete_graph(2))));
    CHECK(k2(0, 0) == 0.0);
    CHECK(k2(0, 1) == 1.0);

    for (const UndirectedGraph& g : chordal_suite()) {
        const auto hs = build_orientation_space(share(g));
        const TransitionMatrix m = transition_matrix(hs);
        CHECK(m.is_symmetric());
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const double lazy = static_cast<double>(g.num_edges() - flip_candidates(hs.state(i)).size()) /
                                static_cast<double>(g.num_edges());
            CHECK(m(i, i) == doctest::Approx(lazy).epsilon(1e-14));
        }
    }

    CHECK_THROWS_AS(transition_matrix(k3, 5), CapExceeded);
    Eigen::MatrixXd bad(2, 2);
    bad << 0.5, 0.4, 0.5, 0.5;
    CHECK_THROWS_AS(TransitionMatrix{bad}, std::invalid_argument);
}

TEST_CASE("spectral gaps") {
    const auto k3 = build_orientation_space(share(complete_graph(3)));
    CHECK(spectral_gap(transition_matrix(k3)) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    const auto k4 = build_orientation_space(share(complete_graph(4)));
    CHECK(spectral_gap(transition_matrix(k4)) ==
          doctest::Approx((2.0 / 6.0) * (1 - std::cos(std::numbers::pi / 4))).epsilon(1e-12));
    CHECK(spectral_gap(TransitionMatrix(Eigen::MatrixXd::Identity(4, 4))) == doctest::Approx(0.0));
    CHECK(spectral_gap(TransitionMatrix(Eigen::MatrixXd::Identity(1, 1))) == 1.0);

    Eigen::MatrixXd lopsided(2, 2);
    lopsided << 0.5, 0.5, 0.25, 0.75;
    CHECK_THROWS_AS(spectral_gap(TransitionMatrix{lopsided}), std::invalid_argument);

    // Path on n vertices: H_G is the same path with holding 1 - deg/(n-1).
    for (std::size_t n = 3; n <= 7; ++n) {
        const auto hs = build_orientation_space(share(path_graph(n)));
        Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t v = 0; v + 1 < n; ++v) {
            walk(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v + 1)) = 1.0 / static_cast<double>(n - 1);
            walk(static_cast<Eigen::Index>(v + 1), static_cast<Eigen::Index>(v)) = 1.0 / static_cast<double>(n - 1);
        }
        for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(n); ++v) {
            walk(v, v) = 1.0 - walk.row(v).sum();
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(walk);
        const double expect = 1 - es.eigenvalues()(static_cast<Eigen::Index>(n) - 2);
        CHECK(spectral_gap(transition_matrix(hs)) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("permutohedron gap matches the adjacent transposition walk") {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto hs = build_orientation_space(share(complete_graph(n)));
        const double edges = static_cast<double>(n * (n - 1) / 2);
        const double expect = (2.0 / edges) * (1 - std::cos(std::numbers::pi / static_cast<double>(n)));
        CHECK(std::abs(spectral_gap(transition_matrix(hs)) - expect) < 1e-9);
    }
}

TEST_CASE("bottleneck ratio") {
    const auto k2 = build_orientation_space(share(complete_graph(2)));
    const std::vector<std::size_t> one{0};
    const Bottleneck b2 = bottleneck_ratio(k2, one);
    CHECK(b2.phi == 1);
    CHECK(b2.tmix_lower == doctest::Approx(0.25));

    const auto two = build_orientation_space(share(two_cliques(4, 4, 2)));
    const auto cuts = clique_face_cuts(two);
    REQUIRE(cuts.size() == 2);
    for (const auto& cut : cuts) {
        CHECK(cut.size() == 40);
        const Bottleneck b = bottleneck_ratio(two, cut);
        CHECK(b.boundary_edges == 8);
        CHECK(b.phi == Rational(1, 55));
    }
    const auto worst = worst_face_bottleneck(two);
    REQUIRE(worst.has_value());
    CHECK(worst->phi == Rational(1, 55));
    CHECK(worst->tmix_lower == doctest::Approx(55.0 / 4));

    CHECK_FALSE(worst_face_bottleneck(build_orientation_space(share(complete_graph(4)))).has_value());

    std::vector<std::size_t> empty;
    CHECK_THROWS_AS(bottleneck_ratio(two, empty), std::invalid_argument);
    std::vector<std::size_t> heavy(45);
    std::iota(heavy.begin(), heavy.end(), 0);
    CHECK_THROWS_AS(bottleneck_ratio(two, heavy), std::invalid_argument);
    std::vector<std::size_t> repeated{1, 1};
    CHECK_THROWS_AS(bottleneck_ratio(two, repeated), std::invalid_argument);
    std::vector<std::size_t> outside{88};
    CHECK_THROWS_AS(bottleneck_ratio(two, outside), std::invalid_argument);
}

TEST_CASE("face cut of the two-clique family matches its closed form") {
    // Cliques of size 2m sharing m vertices, for m = 1, 2, 3.
    for (std::size_t m = 1; m <= 3; ++m) {
        const UndirectedGraph g = two_cliques(2 * m, 2 * m, m);
        const auto hs = build_orientation_space(share(g));
        const auto worst = worst_face_bottleneck(hs);
        REQUIRE(worst.has_value());
        const BigInt denom = BigInt(g.num_edges()) * (binomial(2 * m, m) - 1);
        CHECK(worst->phi == Rational(BigInt(1), denom));
    }
}

TEST_CASE("bottleneck lower bound never exceeds the exact mixing time") {
    for (const UndirectedGraph& g : chordal_suite()) {
        const auto hs = build_orientation_space(share(g));
        const TransitionMatrix m = transition_matrix(hs);
        const auto tmix = exact_mixing_time(m);
        REQUIRE(tmix.has_value());
        CHECK(*tmix == mixing_time_by_powers(m, 0.25));
        for (const auto& cut : clique_face_cuts(hs)) {
            CHECK(bottleneck_ratio(hs, cut).tmix_lower <= static_cast<double>(*tmix));
        }
        // Single states are cuts too.
        const std::vector<std::size_t> first{0};
        CHECK(bottleneck_ratio(hs, first).tmix_lower <= static_cast<double>(*tmix));
    }
    // A periodic chain never mixes.
    CHECK_FALSE(exact_mixing_time(transition_matrix(build_orientation_space(share(complete_graph(2)))), 0.25, 64)
                    .has_value());
}

TEST_CASE("decomposition statistics") {
    const DecompositionStats single = decomposition_stats(complete_graph(5), clique_tree(complete_graph(5)));
    CHECK(single.o_g == 1);
    CHECK(single.diameter == 0);
    CHECK(single.t_max == 5);

    const DecompositionStats two = decomposition_stats(two_cliques(4, 4, 2), clique_tree(two_cliques(4, 4, 2)));
    CHECK(two.z == 96);
    REQUIRE(two.separator_weights.size() == 1);
    CHECK(two.separator_weights[0] == 8);
    CHECK(two.o_g == 12);
    CHECK(two.theta == 1);
    CHECK(two.diameter == 1);

    // Chains of equal cliques: o_G = |T| C(t, s).
    for (auto [k, t, s] : {std::tuple{3, 3, 2}, {3, 3, 1}, {4, 3, 1}, {3, 4, 2}, {2, 5, 3}}) {
        const UndirectedGraph g = clique_chain(k, t, s);
        const DecompositionStats ds = decomposition_stats(g, clique_tree(g));
        CHECK(ds.o_g == Rational(BigInt(k) * binomial(t, s)));
    }

    // Star: tree degree can be below the clique overlap.
    const UndirectedGraph star = star_graph(3);
    const CliqueTree ct = clique_tree(star);
    CHECK(decomposition_stats(star, ct, ThetaConvention::VertexOverlap).theta == 3);
    CHECK(decomposition_stats(star, ct, ThetaConvention::TreeDegree).theta == ct.max_degree());
}

TEST_CASE("projection chain") {
    const CliqueTree ct2 = clique_tree(two_cliques(4, 4, 2));
    const DecompositionStats ds2 = decomposition_stats(two_cliques(4, 4, 2), ct2);
    const ProjectionChain pc2 = projection_chain(ct2, ds2);
    REQUIRE(pc2.size() == 2);
    CHECK(pc2.transition(0, 1) == Rational(1, 6));
    CHECK(pc2.transition(1, 0) == Rational(1, 6));
    CHECK(pc2.stationary()[0] == Rational(1, 2));
    CHECK(pc2.spectral_gap() == doctest::Approx(1.0 / 3));
    CHECK(comparison_bound(pc2, ds2) <= pc2.spectral_gap());

    const ProjectionChain pc1 = projection_chain(clique_tree(complete_graph(3)), decomposition_stats(complete_graph(3), clique_tree(complete_graph(3))));
    CHECK(pc1.size() == 1);
    CHECK(pc1.spectral_gap() == 1.0);
    CHECK(comparison_bound(pc1, decomposition_stats(complete_graph(3), clique_tree(complete_graph(3)))) == 1.0);

    for (const UndirectedGraph& g : chordal_suite()) {
        const CliqueTree ct = clique_tree(g);
        for (ThetaConvention th : {ThetaConvention::TreeDegree, ThetaConvention::VertexOverlap}) {
            const DecompositionStats ds = decomposition_stats(g, ct, th);
            const ProjectionChain pc = projection_chain(ct, ds);
            CHECK(pc.is_stochastic());
            CHECK(pc.satisfies_detailed_balance());
            Rational total(0);
            for (const Rational& p : pc.stationary()) {
                total += p;
            }
            CHECK(total == 1);
            CHECK(comparison_bound(pc, ds) <= pc.spectral_gap() + 1e-12);
        }
    }
}

TEST_CASE("decomposition bound sits below the exact gap") {
    CHECK_THROWS_AS(madras_randall_bound(complete_graph(4)), std::invalid_argument);
    for (const UndirectedGraph& g : chordal_suite()) {
        if (clique_tree(g).size() < 2) {
            continue;
        }
        const double gap = spectral_gap(transition_matrix(build_orientation_space(share(g))));
        CHECK(madras_randall_bound(g) <= gap);
        CHECK(madras_randall_bound(g, ThetaConvention::VertexOverlap) <= gap);
        CHECK(madras_randall_bound(g) > 0);
    }

    // K_4 minus an edge: H_G is a 10-cycle walked at rate 1/5 per direction,
    // gap (2/5)(1 - cos(pi/5)). o_G = 6, Theta = 1, t_max = 3, diam = 1.
    const UndirectedGraph kite = two_cliques(3, 3, 2);
    const double gap = spectral_gap(transition_matrix(build_orientation_space(share(kite))));
    CHECK(gap == doctest::Approx(0.4 * (1 - std::cos(std::numbers::pi / 5))).epsilon(1e-12));
    CHECK(madras_randall_bound(kite) == doctest::Approx(1.0 / 30));
    // The unit-rate form gives 1/12, above the true gap.
    CHECK(madras_randall_bound(kite, ThetaConvention::TreeDegree, ComponentRate::UnitRate) ==
          doctest::Approx(1.0 / 12));
    CHECK(madras_randall_bound(kite, ThetaConvention::TreeDegree, ComponentRate::UnitRate) > gap);

    // Paths: the bound stays below (2/(n-1))(1 - cos(pi/n)) well past desk scale.
    for (std::size_t n : {3, 10, 50, 100, 400}) {
        const double exact = 2.0 / static_cast<double>(n - 1) * (1 - std::cos(std::numbers::pi / static_cast<double>(n)));
        CHECK(madras_randall_bound(path_graph(n)) <= exact);
    }
}

TEST_CASE("sampling") {
    Rng rng(7);
    const auto g = share(two_cliques(4, 4, 2));
    CHECK(sample(g, 0, rng) == canonical_amo(g));
    const Amo s = sample(g, 500, rng);
    CHECK(is_amo(*g, s.arcs()));

    // K_2 always flips.
    const auto k2 = share(complete_graph(2));
    const Amo a = canonical_amo(k2);
    CHECK(step(a, rng) != a);
    CHECK(step(step(a, rng), rng) == a);

    // Tree steps move the source to a neighbour or stay.
    const auto star = share(star_graph(4));
    Amo cur = canonical_amo(star);
    for (int i = 0; i < 200; ++i) {
        const Amo next = step(cur, rng);
        const VertexId from = unique_source(cur);
        const VertexId to = unique_source(next);
        CHECK((from == to || star->has_edge(from, to)));
        cur = next;
    }

    // Same seed, same trajectory.
    Rng r1(42);
    Rng r2(42);
    CHECK(sample(g, 300, r1) == sample(g, 300, r2));
}

TEST_CASE("empirical total variation") {
    Rng rng(11);
    const auto k3 = build_orientation_space(share(complete_graph(3)));
    CHECK(empirical_tv(k3, 0, 100, rng) == doctest::Approx(1.0 - 1.0 / 6));
    CHECK(empirical_tv(k3, 60, 100000, rng) < 0.02);

    // Simulation against the exact law after a few steps.
    const auto two = build_orientation_space(share(two_cliques(3, 3, 1)));
    const std::size_t start = two.index_of(canonical_amo(two.graph_ptr()));
    const std::size_t steps = 5;
    const auto exact = exact_distribution(two, start, steps);
    double total = 0;
    for (double p : exact) {
        total += p;
    }
    CHECK(total == doctest::Approx(1.0));
    std::vector<double> freq(two.size(), 0.0);
    const std::size_t samples = 200000;
    for (std::size_t s = 0; s < samples; ++s) {
        Amo cur = two.state(start);
        for (std::size_t t = 0; t < steps; ++t) {
            cur = step(cur, rng);
        }
        freq[two.index_of(cur)] += 1.0 / samples;
    }
    for (std::size_t i = 0; i < two.size(); ++i) {
        // Five standard deviations of a binomial frequency.
        const double sd = std::sqrt(exact[i] * (1 - exact[i]) / samples);
        CHECK(std::abs(freq[i] - exact[i]) <= 5 * sd + 1e-12);
    }

    // Exact iteration agrees with the dense matrix power.
    const TransitionMatrix m = transition_matrix(two);
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(two.size()));
    row(static_cast<Eigen::Index>(start)) = 1;
    for (std::size_t t = 0; t < steps; ++t) {
        row = row * m.entries();
    }
    for (std::size_t i = 0; i < two.size(); ++i) {
        CHECK(exact[i] == doctest::Approx(row(static_cast<Eigen::Index>(i))).epsilon(1e-12));
    }
}
