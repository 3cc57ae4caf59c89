#include "turan/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "turan/util.hpp"

namespace turan {

namespace {

void normalize_edge(Edge& e, int n, int max_size, const char* what) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw InvalidParameters(std::string(what) + " has repeated vertices");
    if (!e.empty() && (e.front() < 0 || e.back() >= n))
        throw InvalidParameters(std::string(what) + " has vertex out of range");
    if (static_cast<int>(e.size()) > max_size)
        throw InvalidParameters(std::string(what) + " larger than uniformity");
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, EdgeList edges, Validation mode) : k_(k), n_(n) {
    if (k < 1) throw InvalidParameters("uniformity must be >= 1");
    if (n < 0) throw InvalidParameters("vertex count must be >= 0");
    for (auto& e : edges) {
        normalize_edge(e, n, k, "edge");
        if (static_cast<int>(e.size()) != k)
            throw InvalidParameters("edge size differs from uniformity");
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::unique(edges.begin(), edges.end());
    if (mode == Validation::Strict && dup != edges.end())
        throw InvalidParameters("duplicate edge rejected in strict mode");
    edges.erase(dup, edges.end());
    edges_ = std::move(edges);
}

bool Hypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_)
        for (int v : e) ++d[v];
    return d;
}

std::vector<uint64_t> Hypergraph::edge_masks() const {
    if (n_ > 64) throw InvalidParameters("edge_masks requires n <= 64");
    std::vector<uint64_t> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        uint64_t m = 0;
        for (int v : e) m |= (1ull << v);
        out.push_back(m);
    }
    return out;
}

PartialHypergraph::PartialHypergraph(int k, int n, EdgeList faces, Validation mode)
    : k_(k), n_(n) {
    if (k < 1) throw InvalidParameters("uniformity must be >= 1");
    if (n < 0) throw InvalidParameters("vertex count must be >= 0");
    for (auto& f : faces) {
        normalize_edge(f, n, k, "face");
        if (f.empty()) throw InvalidParameters("empty face");
    }
    std::sort(faces.begin(), faces.end());
    auto dup = std::unique(faces.begin(), faces.end());
    if (mode == Validation::Strict && dup != faces.end())
        throw InvalidParameters("duplicate face rejected in strict mode");
    faces.erase(dup, faces.end());
    // Keep the inclusion antichain only; the closure is implied.
    EdgeList maximal;
    for (size_t i = 0; i < faces.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < faces.size() && !covered; ++j) {
            if (i == j || faces[j].size() <= faces[i].size()) continue;
            covered = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                                    faces[i].end());
        }
        if (!covered) maximal.push_back(faces[i]);
    }
    maximal_ = std::move(maximal);
}

EdgeList PartialHypergraph::closure() const {
    EdgeList out;
    for (const auto& f : maximal_) {
        const size_t sz = f.size();
        for (uint64_t sub = 1; sub < (1ull << sz); ++sub) {
            Edge face;
            for (size_t i = 0; i < sz; ++i)
                if (sub & (1ull << i)) face.push_back(f[i]);
            out.push_back(std::move(face));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool PartialHypergraph::has_face(const Edge& f) const {
    for (const auto& m : maximal_)
        if (std::includes(m.begin(), m.end(), f.begin(), f.end())) return true;
    return false;
}

std::vector<uint64_t> PartialHypergraph::maximal_face_masks() const {
    if (n_ > 64) throw InvalidParameters("maximal_face_masks requires n <= 64");
    std::vector<uint64_t> out;
    out.reserve(maximal_.size());
    for (const auto& f : maximal_) {
        uint64_t m = 0;
        for (int v : f) m |= (1ull << v);
        out.push_back(m);
    }
    return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw InvalidParameters("partition must be nonempty");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw InvalidParameters("partition parts must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidParameters("partition parts must be nonincreasing");
    }
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

EdgeList apply_permutation(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out = edges;
    for (auto& e : out) {
        for (int& v : e) v = perm[v];
        std::sort(e.begin(), e.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (a.n() > 10) throw GuardError("isomorphism brute force restricted to n <= 10");
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (apply_permutation(a.edges(), perm) == b.edges()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

EdgeList canonical_edge_list(const Hypergraph& g) {
    if (g.n() > 10) throw GuardError("canonical form restricted to n <= 10");
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best = g.edges();
    do {
        EdgeList cand = apply_permutation(g.edges(), perm);
        if (cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                         std::to_string(col_) + ")"),
      line(line_),
      column(col_) {}

namespace {

struct Header {
    int k = 0;
    int n = 0;
    bool partial = false;
};

// Parses lines, stripping '#' comments; returns header + rows of ints.
struct TextDoc {
    Header header;
    std::vector<std::pair<int, std::vector<int>>> rows;  // (line number, vertices)
};

TextDoc parse_text(std::istream& in) {
    TextDoc doc;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw1, kw2, extra;
            int kv = 0, nv = 0;
            if (!(ls >> kw1)) continue;  // blank line before the header
            if (kw1 != "k" || !(ls >> kv) || !(ls >> kw2) || kw2 != "n" || !(ls >> nv))
                throw ParseError("expected header 'k <int> n <int>'", lineno, 1);
            doc.header.k = kv;
            doc.header.n = nv;
            if (ls >> extra) {
                if (extra != "partial")
                    throw ParseError("unexpected token '" + extra + "' in header", lineno,
                                     1);
                doc.header.partial = true;
            }
            have_header = true;
            continue;
        }
        std::vector<int> verts;
        std::string tok;
        int col = 0;
        while (ls >> tok) {
            ++col;
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                verts.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("expected integer vertex index, got '" + tok + "'",
                                 lineno, col);
            }
        }
        if (!verts.empty()) doc.rows.emplace_back(lineno, std::move(verts));
    }
    if (!have_header) throw ParseError("missing header 'k <int> n <int>'", lineno, 1);
    return doc;
}

}  // namespace

Hypergraph read_hypergraph_text(std::istream& in) {
    TextDoc doc = parse_text(in);
    if (doc.header.partial)
        throw ParseError("expected a k-graph, file declares 'partial'", 1, 1);
    EdgeList edges;
    for (auto& [lineno, verts] : doc.rows) {
        if (static_cast<int>(verts.size()) != doc.header.k)
            throw ParseError("edge has " + std::to_string(verts.size()) +
                                 " vertices, expected " + std::to_string(doc.header.k),
                             lineno, 1);
        edges.push_back(std::move(verts));
    }
    try {
        return Hypergraph(doc.header.k, doc.header.n, std::move(edges));
    } catch (const InvalidParameters& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& g) {
    out << "k " << g.k() << " n " << g.n() << "\n";
    for (const auto& e : g.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
}

PartialHypergraph read_partial_text(std::istream& in) {
    TextDoc doc = parse_text(in);
    if (!doc.header.partial)
        throw ParseError("expected 'partial' marker in header", 1, 1);
    EdgeList faces;
    for (auto& [lineno, verts] : doc.rows) faces.push_back(std::move(verts));
    try {
        return PartialHypergraph(doc.header.k, doc.header.n, std::move(faces));
    } catch (const InvalidParameters& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

void write_partial_text(std::ostream& out, const PartialHypergraph& f) {
    out << "k " << f.k() << " n " << f.n() << " partial\n";
    for (const auto& e : f.maximal_faces()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
}

LoadedPattern load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    LoadedPattern out;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("JSON parse error: ") + e.what(),
                             static_cast<int>(e.byte), 1);
        }
        int k = j.at("k").get<int>();
        int n = j.at("n").get<int>();
        if (j.contains("faces")) {
            out.partial = PartialHypergraph(k, n, j.at("faces").get<EdgeList>());
        } else {
            out.graph = Hypergraph(k, n, j.at("edges").get<EdgeList>());
        }
        return out;
    }
    // Text: peek the header for the partial marker.
    std::string first;
    std::streampos pos = in.tellg();
    bool partial = false;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string t;
        std::vector<std::string> toks;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        partial = !toks.empty() && toks.back() == "partial";
        break;
    }
    in.clear();
    in.seekg(pos);
    if (partial)
        out.partial = read_partial_text(in);
    else
        out.graph = read_hypergraph_text(in);
    return out;
}

Hypergraph load_hypergraph_file(const std::string& path) {
    LoadedPattern p = load_pattern_file(path);
    if (!p.graph) throw InvalidParameters("file holds a partial k-graph: " + path);
    return *p.graph;
}

}  // namespace turan
