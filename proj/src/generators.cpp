#include "turan/generators.hpp"

#include <algorithm>
#include <numeric>

namespace turan {

namespace {

void k_subsets(int r, int k, EdgeList& out) {
    Edge cur(k);
    // iterative combination enumeration in lexicographic order
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == r - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

}  // namespace

Hypergraph make_complete(int r, int k) {
    if (k < 1 || k > r) throw InvalidParameters("make_complete requires 1 <= k <= r");
    EdgeList edges;
    k_subsets(r, k, edges);
    return Hypergraph(k, r, std::move(edges));
}

Hypergraph make_path(int n) {
    if (n < 1) throw InvalidParameters("path needs >= 1 vertex");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Hypergraph(2, n, std::move(e));
}

Hypergraph make_cycle(int n) {
    if (n < 3) throw InvalidParameters("cycle needs >= 3 vertices");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Hypergraph(2, n, std::move(e));
}

Hypergraph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParameters("parts must be nonempty");
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Hypergraph(2, a + b, std::move(e));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.k() != b.k()) throw InvalidParameters("uniformities differ");
    EdgeList e = a.edges();
    for (auto edge : b.edges()) {
        for (int& v : edge) v += a.n();
        e.push_back(edge);
    }
    return Hypergraph(a.k(), a.n() + b.n(), std::move(e));
}

namespace {

// Base blocks for a tent: block i covers base vertices [start_i, start_i+l_i).
std::vector<Edge> tent_blocks(const Partition& lambda) {
    std::vector<Edge> blocks;
    int at = 0;
    for (int part : lambda.parts) {
        Edge b(part);
        std::iota(b.begin(), b.end(), at);
        at += part;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace

Hypergraph make_tent(const Partition& lambda) {
    const int k = lambda.total();
    if (lambda.length() < 2)
        throw InvalidParameters("tent requires a partition with at least two parts");
    const int apex = k;
    int fresh = k + 1;
    EdgeList edges;
    Edge base(k);
    std::iota(base.begin(), base.end(), 0);
    edges.push_back(base);
    for (const Edge& block : tent_blocks(lambda)) {
        Edge e = block;
        e.push_back(apex);
        const int need = k - static_cast<int>(e.size());
        for (int j = 0; j < need; ++j) e.push_back(fresh++);
        edges.push_back(std::move(e));
    }
    return Hypergraph(k, fresh, std::move(edges));
}

PartialHypergraph make_partial_tent(const Partition& lambda) {
    const int k = lambda.total();
    if (lambda.length() < 2)
        throw InvalidParameters("tent requires a partition with at least two parts");
    const int apex = k;
    EdgeList faces;
    Edge base(k);
    std::iota(base.begin(), base.end(), 0);
    faces.push_back(base);
    for (const Edge& block : tent_blocks(lambda)) {
        Edge f = block;
        f.push_back(apex);
        faces.push_back(std::move(f));
    }
    return PartialHypergraph(k, k + 1, std::move(faces));
}

std::vector<PartialHypergraph> all_partial_tents_two_parts(int k) {
    std::vector<PartialHypergraph> out;
    for (int l1 = k - 1; l1 >= (k + 1) / 2; --l1)
        out.push_back(make_partial_tent(Partition({l1, k - l1})));
    return out;
}

PartialHypergraph complex_of(const Hypergraph& g) {
    return PartialHypergraph(g.k(), g.n(), g.edges());
}

Hypergraph extend(const PartialHypergraph& f) {
    if (f.maximal_faces().empty())
        throw InvalidParameters("extension of an empty face family");
    int fresh = f.n();
    EdgeList edges;
    for (const auto& face : f.maximal_faces()) {
        Edge e = face;
        while (static_cast<int>(e.size()) < f.k()) e.push_back(fresh++);
        edges.push_back(std::move(e));
    }
    return Hypergraph(f.k(), fresh, std::move(edges));
}

PartialHypergraph make_Fks_partial(int k, int s, int r) {
    if (!(s >= 1 && s < k && k <= r))
        throw InvalidParameters("make_Fks requires 1 <= s < k <= r");
    EdgeList faces;
    for (int i = s; i <= r; ++i) {
        Edge f(s);
        std::iota(f.begin(), f.end(), 0);
        f.push_back(i);
        faces.push_back(std::move(f));
    }
    for (int a = 0; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b) faces.push_back({a, b});
    return PartialHypergraph(k, r + 1, std::move(faces));
}

Hypergraph make_Fks(int k, int s, int r) { return extend(make_Fks_partial(k, s, r)); }

PartialHypergraph make_kface_pair_pattern(int k, int r) {
    if (k > r) throw InvalidParameters("pattern requires k <= r");
    EdgeList faces;
    Edge base(k);
    std::iota(base.begin(), base.end(), 0);
    faces.push_back(std::move(base));
    for (int a = 0; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b) faces.push_back({a, b});
    return PartialHypergraph(k, r + 1, std::move(faces));
}

Hypergraph make_extended_clique(int k, int r1) {
    if (r1 < 2) throw InvalidParameters("extended clique needs >= 2 vertices");
    EdgeList pairs;
    for (int a = 0; a < r1; ++a)
        for (int b = a + 1; b < r1; ++b) pairs.push_back({a, b});
    return extend(PartialHypergraph(k, r1, std::move(pairs)));
}

Hypergraph blowup(const Hypergraph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.n())
        throw InvalidParameters("blowup needs one count per vertex");
    for (int c : counts)
        if (c < 1) throw InvalidParameters("blowup counts must be positive");
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + counts[v];
    EdgeList edges;
    for (const auto& e : g.edges()) {
        std::vector<int> pick(e.size(), 0);
        while (true) {
            Edge img(e.size());
            for (size_t i = 0; i < e.size(); ++i) img[i] = offset[e[i]] + pick[i];
            edges.push_back(std::move(img));
            size_t i = 0;
            while (i < e.size() && ++pick[i] == counts[e[i]]) pick[i++] = 0;
            if (i == e.size()) break;
        }
    }
    return Hypergraph(g.k(), offset[g.n()], std::move(edges));
}

std::vector<Rational> blowup_density_series(long n1, long e1, int k, int m_max) {
    if (m_max < 1) throw InvalidParameters("series needs m >= 1");
    std::vector<Rational> out;
    BigInt n = n1, e = e1;
    for (int m = 1; m <= m_max; ++m) {
        if (m > 1) {
            e = n1 * e + e1 * ipow(n, k);
            n = n1 * n;
        }
        BigInt choose = 1;
        for (int i = 0; i < k; ++i) choose *= (n - i);
        choose /= factorial(k);
        out.emplace_back(e, choose);
    }
    return out;
}

std::vector<Rational> blowup_density_series(const Hypergraph& g1, int m_max) {
    return blowup_density_series(g1.n(), g1.edge_count(), g1.k(), m_max);
}

std::vector<Rational> blowup_density_recurrence(long n1, long e1, int k, int m_max) {
    if (m_max < 1) throw InvalidParameters("series needs m >= 1");
    std::vector<Rational> out;
    Rational t(BigInt(e1), binomial(n1, k));
    const Rational contract(BigInt(1), ipow(n1, k - 1));
    const Rational add(factorial(k) * e1, ipow(n1, k));
    out.push_back(t);
    for (int m = 2; m <= m_max; ++m) {
        t = t * contract + add;
        out.push_back(t);
    }
    return out;
}

}  // namespace turan
