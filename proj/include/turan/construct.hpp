#pragma once

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

struct DesignSearchResult {
    Hypergraph design;
    // certificate: recomputed from the hypergraph and checked on return
    std::vector<int> pair_degrees;             // per vertex pair, rank order
    std::vector<long> intersection_histogram;  // per |e ∩ f| over edge pairs
    long nodes_explored = 0;
    long completions = 0;      // labeled solutions seen by the search
    int isomorphism_classes = 0;
    double density = 0.0;        // k! e(G) / n^k
    double density_ratio = 0.0;  // density / (k!/k^k)
    double indep_ratio = 0.0;    // |IS| / (C(2k,k) / 2^{2 h(alpha) k})
};

// Exhaustive backtracking over 3-subsets of [6] for the 10-edge design with
// every pair in exactly 2 triples; enumerates all completions, buckets them
// by brute-force isomorphism, and verifies no 4 vertices span 3 edges.
DesignSearchResult find_G1();

// Auxiliary intersection graph on the k-subsets of [2k] (adjacent iff the
// overlap is >= alpha k); extracts an independent set by minimum-degree
// greedy deletion and returns the k-graph whose edges are the chosen
// subsets: pairwise edge intersections < alpha k.
DesignSearchResult intersection_design(int k, double alpha);

// Exact density recurrence for the iterated blowup of the 6-vertex design:
// t_1 = 1/2, t_m = t_{m-1}/36 + 10/36; strictly decreasing toward 2/7.
std::vector<Rational> g1_iterated_density(int m);

// All partitions of k (nonincreasing), optionally requiring >= min_parts.
std::vector<Partition> partitions_of(int k, int min_parts = 1);

}  // namespace turan
