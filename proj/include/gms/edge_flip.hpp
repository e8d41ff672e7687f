#pragma once

// The edge-flip Markov chain on AMOs: pick one of the |E| edges uniformly and
// reverse it when the result is again an AMO, otherwise stay. The chain is
// symmetric, so its stationary law is uniform on AMO(G).
//
// Alongside the sampler this module computes exact spectra at desk scale and
// the decomposition machinery behind the mixing bounds: clique-tree weights,
// the projection chain on cliques, the comparison bound for its gap and the
// assembled lower bound on the chain's spectral gap.

#include "gms/amo.hpp"
#include "gms/graph.hpp"
#include "gms/numeric.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace gms {

using Rng = std::mt19937_64;

inline constexpr std::size_t kDefaultMatrixCap = 10'000;

/// Dense row-stochastic matrix; rows sum to 1 within 1e-12.
class TransitionMatrix {
public:
    explicit TransitionMatrix(Eigen::MatrixXd entries);

    std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
    double operator()(std::size_t i, std::size_t j) const { return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
    const Eigen::MatrixXd& entries() const { return entries_; }

    bool is_symmetric(double tolerance = 1e-12) const;

private:
    Eigen::MatrixXd entries_;
};

// ---------------------------------------------------------------------------
// Sampling

/// One lazy step: a uniformly chosen edge is reversed if that keeps an AMO.
Amo step(const Amo& a, Rng& rng);

/// State after `steps` steps from canonical_amo(g).
Amo sample(GraphPtr g, std::size_t steps, Rng& rng);

/// Distribution after `steps` steps from state `start`, by exact iteration.
std::vector<double> exact_distribution(const OrientationSpace& hs, std::size_t start, std::size_t steps);

/// Total variation between the empirical law of `samples` independent runs
/// of `steps` steps from canonical_amo and the uniform law on AMO(g).
double empirical_tv(const OrientationSpace& hs, std::size_t steps, std::size_t samples, Rng& rng);

// ---------------------------------------------------------------------------
// Exact spectra

/// P[a][b] = 1/|E| for flip-adjacent states, remainder on the diagonal.
/// Throws CapExceeded when the state count exceeds `cap`.
TransitionMatrix transition_matrix(const OrientationSpace& hs, std::size_t cap = kDefaultMatrixCap);

/// Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix.
struct SymmetricSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

/// Throws std::invalid_argument for non-symmetric input.
SymmetricSpectrum symmetric_spectrum(const TransitionMatrix& m, bool with_vectors);

/// 1 - lambda_2. A one-state chain has gap 1. Throws std::invalid_argument
/// for non-symmetric input.
double spectral_gap(const TransitionMatrix& m);

/// Smallest t with max_x TV(P^t(x, .), uniform) <= epsilon, for a symmetric
/// chain; std::nullopt when not reached by `limit` (e.g. periodic chains).
std::optional<std::size_t> exact_mixing_time(const TransitionMatrix& m, double epsilon = 0.25,
                                             std::size_t limit = 1'000'000);

// ---------------------------------------------------------------------------
// Bottleneck ratio

struct Bottleneck {
    Rational phi;            ///< Q(R, R^c) / pi(R)
    double tmix_lower = 0;   ///< 1 / (4 phi)
    std::size_t boundary_edges = 0;
    std::size_t subset_size = 0;
};

/// Throws std::invalid_argument for an empty subset, repeated or
/// out-of-range indices, or pi(R) > 1/2.
Bottleneck bottleneck_ratio(const OrientationSpace& hs, std::span<const std::size_t> subset);

/// For each tree edge and each side of it, the states whose non-follower
/// cliques all lie on that side; only cuts with 0 < pi(R) <= 1/2 are kept.
std::vector<std::vector<std::size_t>> clique_face_cuts(const OrientationSpace& hs);

/// Smallest bottleneck ratio over clique_face_cuts(); std::nullopt for a
/// single clique.
std::optional<Bottleneck> worst_face_bottleneck(const OrientationSpace& hs);

// ---------------------------------------------------------------------------
// Decomposition bounds

/// Which quantity plays the role of Theta in the bounds. TreeDegree is the
/// maximum degree of the clique tree; VertexOverlap is the largest number of
/// maximal cliques sharing a vertex, which bounds how many pieces
/// H_{t_i} x D_i any orientation lies in.
enum class ThetaConvention { TreeDegree, VertexOverlap };

struct DecompositionStats {
    Rational o_g;
    std::size_t theta = 0;
    std::size_t diameter = 0;
    std::size_t t_max = 0;
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::size_t num_cliques = 0;
    std::vector<BigInt> clique_weights;     ///< |t_i|! |D_i|
    std::vector<BigInt> separator_weights;  ///< |t_i ∩ t_j|! |D_{i,j}| per tree edge
    BigInt z;                               ///< sum of clique_weights
};

/// `ct` must be a clique tree of `g`.
DecompositionStats decomposition_stats(const UndirectedGraph& g, const CliqueTree& ct,
                                       ThetaConvention theta = ThetaConvention::TreeDegree);

/// Chain on the cliques: P(t_i, t_j) = 1 / (Theta * C(|t_i|, |t_i ∩ t_j|))
/// along tree edges, remaining mass on the diagonal, stationary law
/// |t_i|! |D_i| / z. Exact rationals.
class ProjectionChain {
public:
    std::size_t size() const { return stationary_.size(); }
    const Rational& transition(std::size_t i, std::size_t j) const { return transitions_.at(i).at(j); }
    const std::vector<Rational>& stationary() const { return stationary_; }

    /// pi(i) P(i, j) == pi(j) P(j, i) for all pairs, exactly.
    bool satisfies_detailed_balance() const;
    /// Row sums equal 1 exactly.
    bool is_stochastic() const;
    /// 1 - lambda_2 of the reversible chain (via its symmetrisation); 1 for a
    /// single state.
    double spectral_gap() const;

private:
    friend ProjectionChain projection_chain(const CliqueTree& ct, const DecompositionStats& ds);

    std::vector<std::vector<Rational>> transitions_;
    std::vector<Rational> stationary_;
};

/// Throws std::invalid_argument if a row's off-diagonal mass exceeds 1.
ProjectionChain projection_chain(const CliqueTree& ct, const DecompositionStats& ds);

/// 1 / (o_G Theta diam(T)); 1 for a single clique.
double comparison_bound(const ProjectionChain& pc, const DecompositionStats& ds);

/// How often the walk inside one piece H_{t_i} x D_i moves. ProposalRate
/// uses the chain's own rate: each adjacent transposition of a clique factor
/// is proposed with probability 1/|E|. UnitRate normalises the piece walk to
/// move every step, spread over its |G| - |T| generators; it reproduces the
/// closed form usually quoted but is not a valid lower bound for the lazy
/// chain (K_4 minus an edge already violates it).
enum class ComponentRate { ProposalRate, UnitRate };

/// 2 (1 - cos(pi / t_max)) / |E| under ProposalRate, with |G| - |T| in place
/// of |E| under UnitRate.
double component_gap_bound(const DecompositionStats& ds, ComponentRate rate = ComponentRate::ProposalRate);

/// component_gap_bound / (o_G Theta^3 diam(T)). Requires at least two
/// maximal cliques (std::invalid_argument otherwise).
double madras_randall_bound(const DecompositionStats& ds, ComponentRate rate = ComponentRate::ProposalRate);
double madras_randall_bound(const UndirectedGraph& g, ThetaConvention theta = ThetaConvention::TreeDegree,
                            ComponentRate rate = ComponentRate::ProposalRate);

}  // namespace gms
