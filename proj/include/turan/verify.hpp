#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>

#include "turan/entropy.hpp"
#include "turan/forest.hpp"
#include "turan/hom.hpp"
#include "turan/hypergraph.hpp"
#include "turan/optimize.hpp"

namespace turan {

struct CheckReport {
    std::string claim;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    double tolerance = 0.0;
    bool pass = false;          // slack >= -tolerance (and hypotheses held)
    bool hypothesis_ok = true;  // false: precondition unverifiable, not a bug
    std::string note;
};

CheckReport make_report(std::string claim, std::string instance, double lhs, double rhs,
                        double tolerance);

// H(X,Y) <= 2 H(X) + log2(1 - 1/r) for K_{r+1}-hom-free graphs.
CheckReport check_entropic_turan(const Hypergraph& g, int r, const EdgeDistribution& d,
                                 double tol = 1e-9);

// rho^l <= (1 - 1/r) #hom(T, G); rho defaults to the power-iteration value.
CheckReport check_spectral_turan(const Hypergraph& g, int r, const Hypergraph& tree,
                                 std::optional<double> rho = std::nullopt,
                                 double tol = 1e-6);

// Both p-spectral bounds: b_p <= (1-1/r) n^{2-2/p} and
// b_p <= (1-1/r)^{1/p} (2m)^{1-1/p}; b_p defaults to the optimizer value.
std::vector<CheckReport> check_pspectral_turan(const Hypergraph& g, int r, double p,
                                               std::optional<double> bp = std::nullopt,
                                               double tol = 1e-6);

// t(S_i, G) >= t(K_2, G)^i, exact rationals.
CheckReport check_star_sidorenko(const Hypergraph& g, int i);

// t(K_2, G) <= 1 - 1/r for K_{r+1}-hom-free graphs, exact rationals.
CheckReport check_density_turan(const Hypergraph& g, int r);

// Superadditive y (y_i + y_j <= y_{i+j}) implies
// y_1..y_k <= k! ((y_1+..+y_k)/C(k+1,2))^k.
CheckReport aux_ineq_72(const std::vector<double>& y);

// 0 < z_1 < .. < z_k, 0 < y_1 < .. < y_k with dominated gap products imply
// y_1..y_{k-1} <= (z_1..z_{k-1}/z_k^{k-1}) y_k^{k-1}.
CheckReport aux_ineq_76(const std::vector<double>& y, const std::vector<double>& z);

// y_1..y_t <= (sum y_i/(z+i))^t (z+1)..(z+t)/t^t for nonnegative y, z.
CheckReport aux_ineq_85(const std::vector<double>& y, double z);

// sum_{i<k} x_i/(r-k+i) <= (k-1)/r x_k under the gap hypotheses; recomputes
// the internal threshold s' and constant c exactly and verifies the defining
// identities.
CheckReport claim_86(const RatioSequence& x, int k, int r, int s);

enum class TentMode { Tents, Fks };

// Verifies hom-freeness against the selected family, then asserts
// b(G) <= target (k!/k^k or the complete closed form) and that the uniform
// edge ratio sequence satisfies the matching derived constraints.
CheckReport tent_density_bound(const Hypergraph& g, TentMode mode, int r = 0, int s = 0,
                               const OptOptions& opts = {});

struct AppendixResult {
    int value = 0;       // s_star or r_star
    double ratio = 0.0;  // against the asymptotic prediction
};

// Largest s with k - s >= sum_{i=1}^{s-1} i/(r-i), exact rational sums;
// ratio = s_star / (C (1 - e^{-1/C}) k) with C = r/k.
AppendixResult appendix_s_star(int k, int r);
// Smallest r making the constraint hold at s = k - d; ratio = r 2d / k^2.
AppendixResult appendix_r_star(int k, int d);

// Exact feasibility of the (k, r, s) relation.
bool krs_feasible(int k, int r, int s);

// Isomorphism-free enumeration of k-graphs on n labeled slots (isolated
// vertices allowed) by canonical-form BFS over edge counts. `keep` must be
// hereditary under edge deletion (hom-freeness and triangle-freeness are);
// only kept classes are expanded. Requires n <= 8 and C(n,k) <= 64.
void enumerate_classes(int n, int k, int max_edges,
                       const std::function<bool(const Hypergraph&)>& keep,
                       const std::function<void(const Hypergraph&)>& visit);

// Named graphs with at most 8 vertices used across cross-module checks.
std::vector<std::pair<std::string, Hypergraph>> corpus_graphs();

Hypergraph random_hypergraph(int n, int k, double edge_prob, std::mt19937_64& rng);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The fourteen desk-scale checks; `quick` shrinks trial counts for smoke
// runs and is never used by the acceptance gate.
std::vector<CriterionResult> acceptance_suite(uint64_t seed = 0, bool quick = false);
CriterionResult run_criterion(int id, uint64_t seed = 0, bool quick = false);

}  // namespace turan
