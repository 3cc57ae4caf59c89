#pragma once

#include <cstdint>
#include <optional>

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

struct OptOptions {
    int random_starts = 32;   // Dirichlet(1) starts
    bool uniform_start = true;
    bool edge_starts = true;  // one start supported on each single edge
    uint64_t seed = 0;
    double rel_tol = 1e-12;
    long max_iters = 100000;
};

struct OptResult {
    double value = 0.0;             // attained objective
    std::vector<double> weights;    // maximizing weights, ||.||_p = 1
    double p = 1.0;
    int starts = 0;
    bool converged = true;
    long iterations = 0;            // iterations of the winning start
    uint64_t seed = 0;
    double kkt_residual = 0.0;      // scaled stationarity residual (p >= 1)
};

// Oriented-edge polynomial sum(x_{v1}..x_{vk}) over all oriented edges,
// equal to k! * sum over unordered edges of the vertex-weight product.
double oriented_edge_sum(const Hypergraph& g, const std::vector<double>& x);

// b(G) = k! L(G): maximum of the oriented-edge sum over the probability
// simplex; multistart projected gradient ascent, monotone per iteration.
OptResult blowup_density(const Hypergraph& g, const OptOptions& opts = {});

// b_p(G): maximum of the oriented-edge sum over the nonnegative part of the
// p-norm unit sphere. b_1 = b; for graphs b_2 is the spectral radius.
OptResult p_spectral(const Hypergraph& g, double p, const OptOptions& opts = {});

// prod_{i=1}^{k-1} (1 - i/r) = k! C(r,k) / r^k, exact.
Rational closed_form_complete(int r, int k);

// Largest adjacency eigenvalue via power iteration (Rayleigh quotient,
// deflation free); tolerance 1e-10. Empty graph -> 0.
double adjacency_spectral_radius(const Hypergraph& g);

// Motzkin-Straus exact value 1 - 1/omega(G) for graphs with n <= 12,
// independent of the gradient-ascent path.
std::optional<Rational> motzkin_straus_exact(const Hypergraph& g);

}  // namespace turan
