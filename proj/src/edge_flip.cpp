#include "gms/edge_flip.hpp"

#include "gms/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gms {

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("transition matrix must be square");
    }
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        if ((entries_.row(i).array() < 0.0).any()) {
            throw std::invalid_argument("negative transition probability in row " + std::to_string(i));
        }
        if (std::abs(entries_.row(i).sum() - 1.0) > 1e-12) {
            throw std::invalid_argument("row " + std::to_string(i) + " does not sum to 1");
        }
    }
}

bool TransitionMatrix::is_symmetric(double tolerance) const {
    return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff() <= tolerance || entries_.size() == 0;
}

Amo step(const Amo& a, Rng& rng) {
    if (a.num_edges() == 0) {
        return a;
    }
    std::uniform_int_distribution<std::size_t> pick(0, a.num_edges() - 1);
    const std::size_t e = pick(rng);
    return is_flippable(a, e) ? a.flipped(e) : a;
}

Amo sample(GraphPtr g, std::size_t steps, Rng& rng) {
    Amo current = canonical_amo(std::move(g));
    for (std::size_t t = 0; t < steps; ++t) {
        current = step(current, rng);
    }
    return current;
}

std::vector<double> exact_distribution(const OrientationSpace& hs, std::size_t start, std::size_t steps) {
    const std::size_t n = hs.size();
    if (start >= n) {
        throw std::invalid_argument("start state out of range");
    }
    const std::size_t m = hs.graph().num_edges();
    std::vector<double> dist(n, 0.0);
    dist[start] = 1.0;
    if (m == 0) {
        return dist;
    }
    const double move = 1.0 / static_cast<double>(m);
    std::vector<double> next(n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto& nb = hs.neighbors(y);
            double mass = dist[y] * (1.0 - move * static_cast<double>(nb.size()));
            for (std::size_t x : nb) {
                mass += dist[x] * move;
            }
            next[y] = mass;
        }
        dist.swap(next);
    }
    return dist;
}

double empirical_tv(const OrientationSpace& hs, std::size_t steps, std::size_t samples, Rng& rng) {
    if (samples == 0) {
        throw std::invalid_argument("empirical_tv needs at least one sample");
    }
    const Amo start = canonical_amo(hs.graph_ptr());
    std::vector<std::size_t> counts(hs.size(), 0);
    for (std::size_t s = 0; s < samples; ++s) {
        Amo current = start;
        for (std::size_t t = 0; t < steps; ++t) {
            current = step(current, rng);
        }
        ++counts[hs.index_of(current)];
    }
    const double uniform = 1.0 / static_cast<double>(hs.size());
    double tv = 0.0;
    for (std::size_t c : counts) {
        tv += std::abs(static_cast<double>(c) / static_cast<double>(samples) - uniform);
    }
    return tv / 2.0;
}

TransitionMatrix transition_matrix(const OrientationSpace& hs, std::size_t cap) {
    const std::size_t n = hs.size();
    if (n > cap) {
        throw CapExceeded("transition matrix has " + std::to_string(n) + " states", cap);
    }
    const std::size_t m = hs.graph().num_edges();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nb = hs.neighbors(i);
        const auto row = static_cast<Eigen::Index>(i);
        if (m == 0) {
            p(row, row) = 1.0;
            continue;
        }
        for (std::size_t j : nb) {
            p(row, static_cast<Eigen::Index>(j)) = 1.0 / static_cast<double>(m);
        }
        p(row, row) = static_cast<double>(m - nb.size()) / static_cast<double>(m);
    }
    TransitionMatrix result(std::move(p));
    if (!result.is_symmetric()) {
        throw std::logic_error("edge-flip transition matrix is not symmetric");
    }
    return result;
}

SymmetricSpectrum symmetric_spectrum(const TransitionMatrix& m, bool with_vectors) {
    if (!m.is_symmetric(1e-12)) {
        throw std::invalid_argument("spectral computation needs a symmetric matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m.entries(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver did not converge");
    }
    SymmetricSpectrum out;
    out.eigenvalues = solver.eigenvalues();
    if (with_vectors) {
        out.eigenvectors = solver.eigenvectors();
    }
    return out;
}

double spectral_gap(const TransitionMatrix& m) {
    if (m.dimension() == 0) {
        throw std::invalid_argument("empty transition matrix");
    }
    const SymmetricSpectrum s = symmetric_spectrum(m, false);
    if (m.dimension() == 1) {
        return 1.0;
    }
    return 1.0 - s.eigenvalues(s.eigenvalues.size() - 2);
}

namespace {

// max over start states of TV(P^t(x, .), uniform), from the eigendecomposition.
double worst_tv(const SymmetricSpectrum& s, std::size_t t) {
    const Eigen::Index n = s.eigenvalues.size();
    Eigen::VectorXd powers(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        powers(k) = std::pow(s.eigenvalues(k), static_cast<double>(t));
    }
    const Eigen::MatrixXd pt = s.eigenvectors * powers.asDiagonal() * s.eigenvectors.transpose();
    const double uniform = 1.0 / static_cast<double>(n);
    double worst = 0.0;
    for (Eigen::Index x = 0; x < n; ++x) {
        worst = std::max(worst, 0.5 * (pt.row(x).array() - uniform).abs().sum());
    }
    return worst;
}

}  // namespace

std::optional<std::size_t> exact_mixing_time(const TransitionMatrix& m, double epsilon, std::size_t limit) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
    if (m.dimension() == 0) {
        throw std::invalid_argument("empty transition matrix");
    }
    const SymmetricSpectrum s = symmetric_spectrum(m, true);
    if (worst_tv(s, 0) <= epsilon) {
        return 0;
    }
    // d(t) is non-increasing, so gallop then bisect.
    std::size_t lo = 0;
    std::size_t hi = 1;
    while (worst_tv(s, hi) > epsilon) {
        lo = hi;
        if (hi >= limit) {
            return std::nullopt;
        }
        hi = std::min(limit, hi * 2);
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (worst_tv(s, mid) <= epsilon) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

Bottleneck bottleneck_ratio(const OrientationSpace& hs, std::span<const std::size_t> subset) {
    const std::size_t n = hs.size();
    if (subset.empty()) {
        throw std::invalid_argument("bottleneck subset is empty");
    }
    std::vector<bool> inside(n, false);
    for (std::size_t i : subset) {
        if (i >= n) {
            throw std::invalid_argument("bottleneck subset index out of range");
        }
        if (inside[i]) {
            throw std::invalid_argument("bottleneck subset has a repeated index");
        }
        inside[i] = true;
    }
    if (2 * subset.size() > n) {
        throw std::invalid_argument("bottleneck subset has stationary mass above 1/2");
    }
    const std::size_t m = hs.graph().num_edges();
    std::size_t boundary = 0;
    for (std::size_t i : subset) {
        for (std::size_t j : hs.neighbors(i)) {
            boundary += inside[j] ? 0 : 1;
        }
    }
    Bottleneck b;
    b.boundary_edges = boundary;
    b.subset_size = subset.size();
    // Q(R, R^c) = boundary / (|H| |E|) and pi(R) = |R| / |H|.
    b.phi = Rational(BigInt(boundary), BigInt(m) * BigInt(subset.size()));
    b.tmix_lower = boundary == 0 ? std::numeric_limits<double>::infinity() : 1.0 / (4.0 * to_double(b.phi));
    return b;
}

std::vector<std::vector<std::size_t>> clique_face_cuts(const OrientationSpace& hs) {
    const CliqueTree& ct = hs.tree();
    std::vector<std::vector<std::size_t>> cuts;
    for (const auto& [a, b] : ct.tree_edges()) {
        // Side of each clique when the tree edge (a, b) is removed.
        std::vector<int> side(ct.size(), -1);
        for (int s = 0; s < 2; ++s) {
            const std::size_t root = s == 0 ? a : b;
            std::vector<std::size_t> stack{root};
            side[root] = s;
            while (!stack.empty()) {
                const std::size_t c = stack.back();
                stack.pop_back();
                for (std::size_t d : ct.neighbors(c)) {
                    if (side[d] == -1 && !(c == root && d == (s == 0 ? b : a))) {
                        side[d] = s;
                        stack.push_back(d);
                    }
                }
            }
        }
        for (int s = 0; s < 2; ++s) {
            std::vector<std::size_t> cut;
            for (std::size_t i = 0; i < hs.size(); ++i) {
                const auto& nf = hs.non_follower_set(i);
                if (std::all_of(nf.begin(), nf.end(), [&](std::size_t c) { return side[c] == s; })) {
                    cut.push_back(i);
                }
            }
            if (!cut.empty() && 2 * cut.size() <= hs.size()) {
                cuts.push_back(std::move(cut));
            }
        }
    }
    return cuts;
}

std::optional<Bottleneck> worst_face_bottleneck(const OrientationSpace& hs) {
    std::optional<Bottleneck> best;
    for (const auto& cut : clique_face_cuts(hs)) {
        Bottleneck b = bottleneck_ratio(hs, cut);
        if (!best || b.phi < best->phi) {
            best = std::move(b);
        }
    }
    return best;
}

DecompositionStats decomposition_stats(const UndirectedGraph& g, const CliqueTree& ct, ThetaConvention theta) {
    DecompositionStats ds;
    ds.num_vertices = g.num_vertices();
    ds.num_edges = g.num_edges();
    ds.num_cliques = ct.size();
    ds.diameter = ct.diameter();
    ds.t_max = ct.max_clique_size();
    const std::size_t raw_theta = theta == ThetaConvention::TreeDegree ? ct.max_degree() : ct.max_vertex_overlap();
    ds.theta = std::max<std::size_t>(raw_theta, 1);
    ds.z = 0;
    for (std::size_t i = 0; i < ct.size(); ++i) {
        ds.clique_weights.push_back(factorial(ct.clique(i).size()) * ct.dilation_size(i));
        ds.z += ds.clique_weights.back();
    }
    // Orientations of the glued pair that put the separator first: the
    // separator, then the rest of t_i, then everything D_i already counts.
    for (std::size_t e = 0; e < ct.tree_edges().size(); ++e) {
        const auto [i, j] = ct.tree_edges()[e];
        (void)j;
        const std::size_t sep = ct.separator_size(e);
        ds.separator_weights.push_back(factorial(sep) * factorial(ct.clique(i).size() - sep) * ct.dilation_size(i));
    }
    if (ds.separator_weights.empty()) {
        ds.o_g = Rational(1);
    } else {
        const BigInt smallest = *std::min_element(ds.separator_weights.begin(), ds.separator_weights.end());
        ds.o_g = Rational(ds.z, smallest);
    }
    return ds;
}

ProjectionChain projection_chain(const CliqueTree& ct, const DecompositionStats& ds) {
    const std::size_t k = ct.size();
    if (ds.num_cliques != k || ds.clique_weights.size() != k) {
        throw std::invalid_argument("decomposition stats do not match the clique tree");
    }
    ProjectionChain pc;
    pc.transitions_.assign(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        Rational off(0);
        for (std::size_t j : ct.neighbors(i)) {
            const Rational p(BigInt(1), BigInt(ds.theta) * binomial(ct.clique(i).size(), ct.intersection_size(i, j)));
            pc.transitions_[i][j] = p;
            off += p;
        }
        if (off > 1) {
            throw std::invalid_argument("projection chain row " + std::to_string(i) +
                                        " has off-diagonal mass above 1; Theta is too small");
        }
        pc.transitions_[i][i] = 1 - off;
    }
    for (std::size_t i = 0; i < k; ++i) {
        pc.stationary_.emplace_back(ds.clique_weights[i], ds.z);
    }
    return pc;
}

bool ProjectionChain::satisfies_detailed_balance() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (stationary_[i] * transitions_[i][j] != stationary_[j] * transitions_[j][i]) {
                return false;
            }
        }
    }
    return true;
}

bool ProjectionChain::is_stochastic() const {
    for (const auto& row : transitions_) {
        Rational sum(0);
        for (const auto& p : row) {
            if (p < 0) {
                return false;
            }
            sum += p;
        }
        if (sum != 1) {
            return false;
        }
    }
    return true;
}

double ProjectionChain::spectral_gap() const {
    const auto k = static_cast<Eigen::Index>(size());
    if (k <= 1) {
        return 1.0;
    }
    // D^{1/2} P D^{-1/2} is symmetric for a reversible chain and has P's spectrum.
    Eigen::MatrixXd s(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            s(i, j) = to_double(transitions_[ui][uj]) *
                      std::sqrt(to_double(stationary_[ui]) / to_double(stationary_[uj]));
        }
    }
    s = (s + s.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    return 1.0 - solver.eigenvalues()(k - 2);
}

double comparison_bound(const ProjectionChain& pc, const DecompositionStats& ds) {
    if (pc.size() <= 1 || ds.diameter == 0) {
        return 1.0;
    }
    const Rational a = ds.o_g * BigInt(ds.theta) * BigInt(ds.diameter);
    return to_double(1 / a);
}

double component_gap_bound(const DecompositionStats& ds, ComponentRate rate) {
    const std::size_t generators =
        rate == ComponentRate::ProposalRate ? ds.num_edges
                                            : (ds.num_vertices > ds.num_cliques ? ds.num_vertices - ds.num_cliques : 0);
    if (generators == 0 || ds.t_max < 2) {
        throw std::invalid_argument("component gap needs at least one edge");
    }
    const double base = 2.0 * (1.0 - std::cos(std::numbers::pi / static_cast<double>(ds.t_max)));
    return base / static_cast<double>(generators);
}

double madras_randall_bound(const DecompositionStats& ds, ComponentRate rate) {
    if (ds.num_cliques < 2) {
        throw std::invalid_argument("the decomposition bound needs at least two maximal cliques");
    }
    const double theta = static_cast<double>(ds.theta);
    const double denom = to_double(ds.o_g) * theta * theta * theta * static_cast<double>(ds.diameter);
    return component_gap_bound(ds, rate) / denom;
}

double madras_randall_bound(const UndirectedGraph& g, ThetaConvention theta, ComponentRate rate) {
    return madras_randall_bound(decomposition_stats(g, clique_tree(g), theta), rate);
}

}  // namespace gms
