#pragma once

#include <cstdint>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

struct SymmetryViolation : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};
struct PreconditionFailure : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

// Discrete distribution with finite support over integer tuples of a common
// arity. No zero-probability entries are stored; probabilities sum to 1
// within 1e-12. Outcomes are kept sorted lexicographically.
class FiniteDistribution {
public:
    FiniteDistribution(std::vector<std::vector<int>> outcomes, std::vector<double> probs);
    static FiniteDistribution uniform(std::vector<std::vector<int>> outcomes);
    static FiniteDistribution point_mass(std::vector<int> outcome);

    int arity() const { return arity_; }
    size_t size() const { return outcomes_.size(); }
    const std::vector<std::vector<int>>& outcomes() const { return outcomes_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob_of(const std::vector<int>& outcome) const;  // 0 when absent

    // Marginal onto the given coordinate positions, in the given order.
    FiniteDistribution marginal(const std::vector<int>& coords) const;

    bool same_table(const FiniteDistribution& other, double tol) const;

private:
    FiniteDistribution() = default;
    std::vector<std::vector<int>> outcomes_;
    std::vector<double> probs_;
    int arity_ = 0;
};

// Base-2 Shannon entropy.
double entropy_bits(const FiniteDistribution& d);

// H(rest | coords in `given`) = H(joint) - H(marginal on `given`).
double cond_entropy(const FiniteDistribution& joint, const std::vector<int>& given);

// Symmetric probability distribution on the oriented edges of G ("random
// edge with uniform ordering"): every support tuple spells an edge of G and
// the probability is invariant under all k! coordinate permutations.
class EdgeDistribution {
public:
    static EdgeDistribution uniform(const Hypergraph& g);
    // q: one probability per unordered edge, aligned with g.edges(); each is
    // spread uniformly over the k! orderings.
    static EdgeDistribution from_unordered(const Hypergraph& g, std::vector<double> q);
    // Validates support and symmetry (per unordered edge, each stored
    // ordering must carry total/k!).
    static EdgeDistribution from_joint(const Hypergraph& g, FiniteDistribution joint,
                                       double tol = 1e-9);

    const Hypergraph& graph() const { return g_; }
    const FiniteDistribution& joint() const { return joint_; }
    std::vector<double> unordered_probs() const;  // aligned with graph().edges()

private:
    EdgeDistribution(Hypergraph g, FiniteDistribution joint);
    Hypergraph g_;
    FiniteDistribution joint_;
};

// x_i = 2^{H(X_i | X_{i+1..k}) - H(X_i)}; 0 < x_1 <= ... <= x_k = 1.
struct RatioSequence {
    std::vector<double> x;

    explicit RatioSequence(std::vector<double> values);
    int k() const { return static_cast<int>(x.size()); }
    double product() const;
};

RatioSequence ratio_sequence(const EdgeDistribution& d);

struct MixtureBoundResult {
    std::vector<double> weights;  // w_i = 2^{H(X_i)} / sum_j 2^{H(X_j)}
    FiniteDistribution mixture;
    double lhs = 0.0;  // sum_i 2^{H(X_i)}
    double rhs = 0.0;  // a * 2^{H(Z)}
};

// Requires (a+1)-wise disjoint supports (verified by outcome counting; a
// violation names the offending outcome). The returned pair always satisfies
// lhs <= rhs + 1e-9.
MixtureBoundResult mixture_bound(const std::vector<FiniteDistribution>& dists, int a);

struct EntropicOptions {
    int random_starts = 16;
    bool uniform_start = true;
    bool edge_starts = true;
    std::vector<std::vector<double>> extra_seeds;  // unordered-edge vectors
    uint64_t seed = 0;
    double damping = 0.5;
    double fp_tol = 1e-12;
    long max_iters = 100000;
    double prune_below = 1e-15;
};

struct EntropicResult {
    double value = 0.0;        // 2^{max of H(X_1..X_k) - (k/p) H(X_1)}
    double objective_log2 = 0.0;
    std::vector<double> q;     // winning unordered-edge probabilities
    bool converged = true;
    long iterations = 0;
    int starts = 0;
    int pruned = 0;            // support entries dropped below prune_below
    uint64_t seed = 0;

    EdgeDistribution distribution(const Hypergraph& g) const;
};

// Maximizes H(X_1..X_k) - (k/p) H(X_1) over symmetric edge distributions,
// parameterized by unordered-edge probabilities. Solver: the Lagrange
// fixed point q_e proportional to prod_{v in e} x_v with x_v^p = (1/k)
// sum_{e ni v} q_e, damped, with monotone mirror ascent as fallback;
// multistart.
EntropicResult entropic_density(const Hypergraph& g, double p,
                                const EntropicOptions& opts = {});

// Objective evaluated at a given unordered-edge vector (log2 scale).
double entropic_objective_log2(const Hypergraph& g, double p,
                               const std::vector<double>& q);

}  // namespace turan
