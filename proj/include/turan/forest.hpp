#pragma once

#include <string>

#include "turan/entropy.hpp"
#include "turan/hom.hpp"
#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

struct NotAForest : InvalidParameters {
    int vertex;
    NotAForest(const std::string& msg, int v) : InvalidParameters(msg), vertex(v) {}
};

// Partial k-graph + linear vertex order satisfying the unique-maximal-edge
// condition: for every v there is exactly one maximal face among the faces
// whose maximum vertex (w.r.t. the order) is v.
struct PartialForest {
    PartialHypergraph complex;
    std::vector<int> order;            // order[pos] = vertex at rank pos
    std::vector<Edge> max_face_of;     // e_v per vertex
    std::vector<int> forest_seq;       // forest_seq[i-1] = n_i = #{v : |e_v| = i}
};

// Verifies the condition and computes the forest sequence; throws NotAForest
// with the offending vertex otherwise.
PartialForest validate_forest(const PartialHypergraph& f, const std::vector<int>& order);

struct SampledHom {
    FiniteDistribution joint;        // coordinates indexed by vertex of F
    double entropy = 0.0;
    double entropy_formula = 0.0;    // v(F) H(X_1) + log2 prod x_i^{n_{k+1-i}}
    double max_marginal_dev = 0.0;   // worst face-marginal deviation
    bool marginals_ok = true;
};

// Exact joint law of the random homomorphism obtained by the inductive
// sampling scheme: each new vertex is drawn conditionally per the edge
// distribution's conditional law on its maximal face. Verifies the entropy
// identity (1e-9) and that every face marginal equals the corresponding
// suffix marginal of d. Guard: n(G)^{v(F)} <= 1e7.
SampledHom sampled_hom_distribution(const PartialForest& pf, const EdgeDistribution& d);

struct NamedForestFamily {
    std::string name;
    std::vector<PartialForest> members;  // shared vertex set and order
    std::vector<Pattern> forbidden;      // patterns justifying disjointness
    int expected_a = 1;
};

// Single k-face on vertices 0..k-1 (identity order).
PartialForest single_face_forest(int k);

// Two forests on {0..k}: base 0..k-1 plus either {i..k-1, k} or
// {0..k-j-1, k}; disjointness is certified against the two-part tents.
NamedForestFamily lemma72_family(int k, int i, int j);

// Chain forest on {v_1..v_{k-i-1}, w_1..w_N} indexed by 1 = t_0 < t_1 < ...
// < t_i <= N (t_{i+1} = N+1): faces {v's, w_m, w_{t_{j+1}}..w_{t_i}} for
// t_j <= m < t_{j+1}. Order: v's ascending, then w_N down to w_1.
PartialForest lemma75_forest(int k, int i, int N, const std::vector<int>& ts);
NamedForestFamily lemma75_family(int k, int i, int N);

// Same members as lemma75_family; forbidden pattern is the (r+1)-vertex
// k-face + all-pairs pattern, giving (binomial(r-k+i,i)+1)-wise disjointness.
NamedForestFamily thm81_family(int k, int r, int i, int N);

// Forest on {v_1..v_{k-i}, w_1..w_N}: faces {v_1..v_{k-i}, w_t},
// {v_1..v_{k-j-1}, w_m, w_t} for m < t, {v_1..v_{k-j-1}, w_m} for m > t.
PartialForest lemma84_forest(int k, int i, int j, int N, int t);
// Forbidden family F^{(k,s)}_{r+1} with s defaulting to k-i.
NamedForestFamily lemma84_family(int k, int r, int i, int j, int N, int s = -1);

// The three 4-vertex 3-uniform forests {[3], [4]-{i}} whose pairwise unions
// span four vertices with three edges.
NamedForestFamily g1_forest_family();

// Star tuple (k = 2): center plus i attached leaves and N-i free vertices.
PartialForest star_tuple_forest(int i, int N);

struct CertifyResult {
    int a = 0;
    long unions_checked = 0;
};

// For each (a+1)-subfamily, forms the union and checks via hom search that
// its extension contains a homomorphic image of a forbidden pattern; returns
// the smallest a for which every subfamily certifies. Enumeration cap 1e5.
CertifyResult certify_disjointness(const std::vector<PartialForest>& members,
                                   const std::vector<Pattern>& forbidden,
                                   long cap = 100000);

// Direct support check: constructs the sampled joints on d and counts
// outcome membership; true iff every outcome lies in at most a supports.
bool supports_disjoint(const std::vector<PartialForest>& members,
                       const EdgeDistribution& d, int a);

struct ConstraintEval {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;      // rhs - lhs
    bool divergent = false;  // x_j >= x_{i+1}: geometric series diverges
    bool pass(double tol = 1e-9) const { return !divergent && slack >= -tol; }
};

// Closed-form N->infinity constraint on ratio sequences (geometric-series
// limits evaluated symbolically, never by truncation).
struct DerivedConstraint {
    std::string family;  // lemma72 | lemma75 | lemma84 | thm81
    int k = 0;
    int i = 0;
    int j = 0;
    int r = 0;
    std::string description;
    std::string provenance;

    ConstraintEval evaluate(const RatioSequence& xs) const;
    // Exact path; xs must satisfy the strict gaps where ratios are formed.
    std::pair<Rational, Rational> evaluate_exact(const std::vector<Rational>& xs) const;
};

DerivedConstraint derive_lemma72(int k, int i, int j);   // x_i + x_j <= x_{i+j}
DerivedConstraint derive_lemma75(int k, int i);          // prod x_j/(x_{i+1}-x_j) <= 1
DerivedConstraint derive_thm81(int k, int r, int i);     // ... <= C(r-k+i, i)
DerivedConstraint derive_lemma84(int k, int r, int i, int j);  // x_i/(r-k+i) <= x_{j+1}-x_j

// Ratio sequence of the uniform edge distribution on K_r^{(k)}: (r-k+i)/r.
std::vector<Rational> complete_ratio_sequence(int k, int r);

}  // namespace turan
