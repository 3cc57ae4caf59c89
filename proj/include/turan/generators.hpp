#pragma once

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

// K_r^{(k)}: all C(r,k) k-subsets of r vertices. Requires 1 <= k <= r.
Hypergraph make_complete(int r, int k);

Hypergraph make_path(int n);
Hypergraph make_cycle(int n);
Hypergraph make_complete_bipartite(int a, int b);
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

// lambda-tent, |lambda| = k, length >= 2. Labeling convention: base vertices
// 0..k-1 with the partition blocks consuming the base in part order, apex k,
// fresh vertices of e_1,..,e_l appended afterwards in order. e_i meets the
// base in block i, the edges e_i pairwise meet exactly in the apex.
Hypergraph make_tent(const Partition& lambda);

// The complex generated by the tent restricted to base + apex (vertices
// 0..k): maximal faces are the base and block_i + apex.
PartialHypergraph make_partial_tent(const Partition& lambda);

// All partial lambda-tents with |lambda| = k and exactly two parts.
std::vector<PartialHypergraph> all_partial_tents_two_parts(int k);

// The simplicial complex generated by the edges of a k-graph.
PartialHypergraph complex_of(const Hypergraph& g);

// Pads each maximal face to size k with fresh vertices; fresh vertices are
// never shared between faces and are appended after the existing labels in
// maximal-face order. Requires a nonempty face family.
Hypergraph extend(const PartialHypergraph& f);

// F^{(k,s)}_{r+1}: extension of the partial k-graph on r+1 vertices spanned
// by {[s] + {i} : i = s..r} and all 2-subsets. Requires s < k <= r.
Hypergraph make_Fks(int k, int s, int r);
PartialHypergraph make_Fks_partial(int k, int s, int r);

// Partial k-graph on r+1 vertices spanned by one k-face [k] and all
// 2-subsets; its extension has Turan density b(K_r^{(k)}).
PartialHypergraph make_kface_pair_pattern(int k, int r);

// Extended clique E^{(k)}_{r+1}: extension of the complete graph K_{r+1}
// viewed as a partial k-graph.
Hypergraph make_extended_clique(int k, int r1);

// Replaces vertex v by counts[v] >= 1 copies; an edge of the blowup picks one
// copy per vertex of an original edge. Copy c of v gets label offset(v)+c.
Hypergraph blowup(const Hypergraph& g, const std::vector<int>& counts);

// Exact densities e(G_m)/C(n_m,k) for m = 1..m_max, where G_m is the iterated
// blowup of G_1: n_m = n_1*n_{m-1}, e_m = n_1*e_{m-1} + e_1*n_{m-1}^k. Never
// materializes G_m.
std::vector<Rational> blowup_density_series(long n1, long e1, int k, int m_max);
std::vector<Rational> blowup_density_series(const Hypergraph& g1, int m_max);

// Contraction form of the same recurrence on densities: t_1 = e_1/C(n_1,k),
// t_m = t_{m-1}/n_1^{k-1} + k!*e_1/n_1^k. Strictly decreasing toward its
// fixed point when started above it.
std::vector<Rational> blowup_density_recurrence(long n1, long e1, int k, int m_max);

}  // namespace turan
