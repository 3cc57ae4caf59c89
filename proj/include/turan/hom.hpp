#pragma once

#include <optional>
#include <variant>

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

// Witness map V(F) -> V(G): injective on every (partial) edge of F, with the
// image of each contained in an edge of G.
struct HomWitness {
    std::vector<int> map;
    bool checked = true;
};

using Pattern = std::variant<Hypergraph, PartialHypergraph>;

// Backtracking over vertices of F in a static order (descending number of
// incident faces, ties by label); deterministic, sound and complete.
std::optional<HomWitness> find_hom(const Hypergraph& F, const Hypergraph& G);
std::optional<HomWitness> find_hom(const PartialHypergraph& F, const Hypergraph& G);
// Partial targets: the image of each face must lie inside a face of G.
std::optional<HomWitness> find_hom(const Hypergraph& F, const PartialHypergraph& G);
std::optional<HomWitness> find_hom(const PartialHypergraph& F,
                                   const PartialHypergraph& G);
std::optional<HomWitness> find_hom(const Pattern& F, const Hypergraph& G);

struct HomFreeResult {
    bool hom_free = true;
    // index into the family + the witness, when a homomorphism exists
    std::optional<std::pair<size_t, HomWitness>> witness;
};

HomFreeResult is_hom_free(const Hypergraph& G, const std::vector<Pattern>& family);

// Prop-style property: a partial pattern maps into G iff its extension does.
// Returns the truth of the biconditional (must always be true).
bool check_extension_equivalence(const PartialHypergraph& F, const Hypergraph& G);

// Exact homomorphism count from a tree T into a graph G (both 2-uniform) by
// dynamic programming over a rooted orientation.
BigInt count_tree_homs(const Hypergraph& T, const Hypergraph& G);

}  // namespace turan
