#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

// An edge or face: sorted ascending, distinct vertex labels.
using Edge = std::vector<int>;
using EdgeList = std::vector<Edge>;

enum class Validation { Dedup, Strict };

struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// k-uniform hypergraph on vertices 0..n-1. Immutable after construction;
// isolated vertices are allowed (they matter for densities). Edges are kept
// sorted ascending within each edge and lexicographically across edges.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int k, int n, EdgeList edges, Validation mode = Validation::Dedup);

    int k() const { return k_; }
    int n() const { return n_; }
    const EdgeList& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(const Edge& sorted_edge) const;
    std::vector<int> degrees() const;

    // Edge sets as bitmasks; requires n <= 64.
    std::vector<uint64_t> edge_masks() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int k_ = 1;
    int n_ = 0;
    EdgeList edges_;
};

// Downward-closed face family with faces of size <= k (simplicial-complex
// view). Only the maximal faces are stored; the closure is exposed lazily.
class PartialHypergraph {
public:
    PartialHypergraph() = default;
    PartialHypergraph(int k, int n, EdgeList faces, Validation mode = Validation::Dedup);

    int k() const { return k_; }
    int n() const { return n_; }
    const EdgeList& maximal_faces() const { return maximal_; }

    // All nonempty faces of the closure, sorted lexicographically.
    EdgeList closure() const;
    bool has_face(const Edge& sorted_face) const;
    std::vector<uint64_t> maximal_face_masks() const;

    bool operator==(const PartialHypergraph&) const = default;

private:
    int k_ = 1;
    int n_ = 0;
    EdgeList maximal_;  // inclusion antichain, sorted lexicographically
};

// Integer partition with nonincreasing positive parts.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
};

// Brute-force isomorphism over vertex permutations; restricted to n <= 10.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

// Lexicographically least isomorph (edge list form), n <= 10.
EdgeList canonical_edge_list(const Hypergraph& g);

// --- file formats -----------------------------------------------------------
//
// Text: first non-comment line "k <int> n <int>" (suffix "partial" for face
// families), then one edge/face per line as space-separated vertex indices;
// '#' starts a comment. JSON: {"k":..,"n":..,"edges":[[..],..]} (or "faces").
// Both are written bit-exactly: edges sorted ascending, lexicographic order.

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_);
};

Hypergraph read_hypergraph_text(std::istream& in);
void write_hypergraph_text(std::ostream& out, const Hypergraph& g);
PartialHypergraph read_partial_text(std::istream& in);
void write_partial_text(std::ostream& out, const PartialHypergraph& f);

// Reads either form; returns whichever the header declares.
struct LoadedPattern {
    std::optional<Hypergraph> graph;
    std::optional<PartialHypergraph> partial;
};
LoadedPattern load_pattern_file(const std::string& path);
Hypergraph load_hypergraph_file(const std::string& path);

}  // namespace turan
