#include "turan/hom.hpp"

#include <algorithm>
#include <numeric>

#include "turan/generators.hpp"

namespace turan {

namespace {

struct SearchInstance {
    int nF = 0;
    int nG = 0;
    EdgeList faces;                     // constraint faces of F
    std::vector<uint64_t> targets;      // face/edge masks of G
    std::vector<std::vector<int>> incident;  // vertex of F -> face indices
    std::vector<int> order;             // static assignment order
    std::vector<int> map;               // current partial map, -1 = unassigned

    bool consistent(int v) const {
        for (int fi : incident[v]) {
            const Edge& f = faces[fi];
            uint64_t image = 0;
            for (int u : f) {
                if (map[u] < 0) continue;
                const uint64_t bit = 1ull << map[u];
                if (image & bit) return false;  // not injective on the face
                image |= bit;
            }
            bool inside = false;
            for (uint64_t t : targets)
                if ((image & ~t) == 0) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
        return true;
    }

    bool search(size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        for (int g = 0; g < nG; ++g) {
            map[v] = g;
            if (consistent(v) && search(pos + 1)) return true;
        }
        map[v] = -1;
        return false;
    }
};

std::optional<HomWitness> run_search(int nF, const EdgeList& faces, int kF_max, int nG,
                                     int kG, std::vector<uint64_t> targets) {
    if (kF_max > kG)
        throw InvalidParameters("pattern faces exceed the target uniformity");
    if (nF == 0) return HomWitness{{}, true};
    if (nG == 0) return std::nullopt;
    SearchInstance s;
    s.nF = nF;
    s.nG = nG;
    s.faces = faces;
    s.targets = std::move(targets);
    s.incident.assign(nF, {});
    for (size_t fi = 0; fi < s.faces.size(); ++fi)
        for (int u : s.faces[fi]) s.incident[u].push_back(static_cast<int>(fi));
    s.order.resize(nF);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return s.incident[a].size() > s.incident[b].size();
    });
    s.map.assign(nF, -1);
    if (!s.search(0)) return std::nullopt;
    return HomWitness{s.map, true};
}

int max_face_size(const EdgeList& faces) {
    size_t m = 0;
    for (const auto& f : faces) m = std::max(m, f.size());
    return static_cast<int>(m);
}

}  // namespace

std::optional<HomWitness> find_hom(const Hypergraph& F, const Hypergraph& G) {
    return run_search(F.n(), F.edges(), F.k(), G.n(), G.k(), G.edge_masks());
}

std::optional<HomWitness> find_hom(const PartialHypergraph& F, const Hypergraph& G) {
    // Maximal faces suffice; the closure constraints are implied.
    return run_search(F.n(), F.maximal_faces(), max_face_size(F.maximal_faces()), G.n(),
                      G.k(), G.edge_masks());
}

std::optional<HomWitness> find_hom(const Hypergraph& F, const PartialHypergraph& G) {
    return run_search(F.n(), F.edges(), F.k(), G.n(), G.k(), G.maximal_face_masks());
}

std::optional<HomWitness> find_hom(const PartialHypergraph& F,
                                   const PartialHypergraph& G) {
    return run_search(F.n(), F.maximal_faces(), max_face_size(F.maximal_faces()), G.n(),
                      G.k(), G.maximal_face_masks());
}

std::optional<HomWitness> find_hom(const Pattern& F, const Hypergraph& G) {
    return std::visit([&](const auto& f) { return find_hom(f, G); }, F);
}

HomFreeResult is_hom_free(const Hypergraph& G, const std::vector<Pattern>& family) {
    HomFreeResult res;
    for (size_t i = 0; i < family.size(); ++i) {
        if (auto w = find_hom(family[i], G)) {
            res.hom_free = false;
            res.witness = {i, *w};
            return res;
        }
    }
    return res;
}

bool check_extension_equivalence(const PartialHypergraph& F, const Hypergraph& G) {
    const bool direct = find_hom(F, G).has_value();
    const bool extended = find_hom(extend(F), G).has_value();
    return direct == extended;
}

BigInt count_tree_homs(const Hypergraph& T, const Hypergraph& G) {
    if (T.k() != 2 || G.k() != 2)
        throw InvalidParameters("tree homomorphism count requires 2-graphs");
    const int nT = T.n();
    if (nT < 1) throw InvalidParameters("tree must have at least one vertex");
    if (T.edge_count() != nT - 1) throw InvalidParameters("not a tree");
    std::vector<std::vector<int>> adjT(nT);
    for (const auto& e : T.edges()) {
        adjT[e[0]].push_back(e[1]);
        adjT[e[1]].push_back(e[0]);
    }
    // connectivity via BFS doubles as the parent assignment
    std::vector<int> parent(nT, -2), bfs;
    bfs.push_back(0);
    parent[0] = -1;
    for (size_t i = 0; i < bfs.size(); ++i)
        for (int w : adjT[bfs[i]])
            if (parent[w] == -2) {
                parent[w] = bfs[i];
                bfs.push_back(w);
            }
    if (static_cast<int>(bfs.size()) != nT) throw InvalidParameters("not a tree");

    const int nG = G.n();
    if (nG == 0) return 0;
    std::vector<std::vector<int>> adjG(nG);
    for (const auto& e : G.edges()) {
        adjG[e[0]].push_back(e[1]);
        adjG[e[1]].push_back(e[0]);
    }
    // cnt[v][g]: homomorphisms of v's subtree with v mapped to g
    std::vector<std::vector<BigInt>> cnt(nT, std::vector<BigInt>(nG, 1));
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        const int v = *it;
        if (parent[v] < 0) continue;
        const int p = parent[v];
        for (int g = 0; g < nG; ++g) {
            BigInt s = 0;
            for (int h : adjG[g]) s += cnt[v][h];
            cnt[p][g] *= s;
        }
    }
    BigInt total = 0;
    for (int g = 0; g < nG; ++g) total += cnt[0][g];
    return total;
}

}  // namespace turan
