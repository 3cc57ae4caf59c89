#include "turan/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "turan/generators.hpp"
#include "turan/hom.hpp"
#include "turan/util.hpp"

namespace turan {

namespace {

int pair_rank(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

struct G1Search {
    std::vector<Edge> triples;       // all 20, lex order
    std::vector<int> pair_deg;       // 15 pairs
    std::vector<int> chosen;
    std::vector<EdgeList> solutions;
    long nodes = 0;

    void run(size_t from) {
        ++nodes;
        if (chosen.size() == 10) {
            for (int d : pair_deg)
                if (d != 2) return;
            EdgeList sol;
            for (int idx : chosen) sol.push_back(triples[idx]);
            solutions.push_back(std::move(sol));
            return;
        }
        if (from >= triples.size()) return;
        if (triples.size() - from < 10 - chosen.size()) return;
        // take triples[from]
        bool ok = true;
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = a + 1; b < 3; ++b)
                if (pair_deg[pair_rank(triples[from][a], triples[from][b], 6)] >= 2)
                    ok = false;
        if (ok) {
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b)
                    ++pair_deg[pair_rank(triples[from][a], triples[from][b], 6)];
            chosen.push_back(static_cast<int>(from));
            run(from + 1);
            chosen.pop_back();
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b)
                    --pair_deg[pair_rank(triples[from][a], triples[from][b], 6)];
        }
        run(from + 1);
    }
};

}  // namespace

DesignSearchResult find_G1() {
    G1Search search;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) search.triples.push_back({a, b, c});
    search.pair_deg.assign(15, 0);
    search.run(0);

    DesignSearchResult out;
    out.nodes_explored = search.nodes;
    out.completions = static_cast<long>(search.solutions.size());
    if (search.solutions.empty())
        throw std::logic_error("pair-degree-2 design search found nothing");

    std::set<EdgeList> classes;
    EdgeList best;
    for (const auto& sol : search.solutions) {
        EdgeList canon = canonical_edge_list(Hypergraph(3, 6, sol));
        if (classes.insert(canon).second && (best.empty() || canon < best)) best = canon;
    }
    out.isomorphism_classes = static_cast<int>(classes.size());
    out.design = Hypergraph(3, 6, best);

    out.pair_degrees.assign(15, 0);
    for (const auto& e : out.design.edges())
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = a + 1; b < 3; ++b)
                ++out.pair_degrees[pair_rank(e[a], e[b], 6)];
    for (int d : out.pair_degrees)
        if (d != 2) throw std::logic_error("pair-degree certificate failed");

    // no 4 vertices span 3 or more edges
    for (int mask = 0; mask < (1 << 6); ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        int inside = 0;
        for (const auto& e : out.design.edges()) {
            int em = (1 << e[0]) | (1 << e[1]) | (1 << e[2]);
            if ((em & ~mask) == 0) ++inside;
        }
        if (inside >= 3) throw std::logic_error("design contains 4 vertices with 3 edges");
    }

    out.density = 6.0 * out.design.edge_count() / std::pow(6.0, 3);
    out.density_ratio = out.density / (6.0 / 27.0);
    return out;
}

DesignSearchResult intersection_design(int k, double alpha) {
    if (!(alpha > 0.5 && alpha < 1.0))
        throw InvalidParameters("alpha must lie in (1/2, 1)");
    const int n = 2 * k;
    if (binomial(n, k) > 1000000) throw GuardError("C(2k,k) exceeds 1e6");
    std::vector<uint32_t> subsets;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k) subsets.push_back(m);
    const int v = static_cast<int>(subsets.size());
    const double threshold = alpha * k - 1e-12;

    std::vector<std::vector<int>> adj(v);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (__builtin_popcount(subsets[a] & subsets[b]) >= threshold) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }

    // minimum-degree greedy: take a min-degree vertex, delete its closed
    // neighborhood; meets the sum 1/(d(v)+1) guarantee deterministically
    std::vector<int> degree(v);
    std::vector<char> alive(v, 1);
    for (int a = 0; a < v; ++a) degree[a] = static_cast<int>(adj[a].size());
    std::vector<int> independent;
    int remaining = v;
    while (remaining > 0) {
        int pick = -1;
        for (int a = 0; a < v; ++a)
            if (alive[a] && (pick == -1 || degree[a] < degree[pick])) pick = a;
        independent.push_back(pick);
        std::vector<int> removed{pick};
        for (int b : adj[pick])
            if (alive[b]) removed.push_back(b);
        for (int x : removed) {
            alive[x] = 0;
            --remaining;
            for (int y : adj[x])
                if (alive[y]) --degree[y];
        }
    }
    std::sort(independent.begin(), independent.end());

    EdgeList edges;
    for (int idx : independent) {
        Edge e;
        for (int bit = 0; bit < n; ++bit)
            if (subsets[idx] & (1u << bit)) e.push_back(bit);
        edges.push_back(std::move(e));
    }
    DesignSearchResult out;
    out.design = Hypergraph(k, n, std::move(edges));
    out.nodes_explored = v;

    out.intersection_histogram.assign(k + 1, 0);
    const auto masks = out.design.edge_masks();
    for (size_t a = 0; a < masks.size(); ++a)
        for (size_t b = a + 1; b < masks.size(); ++b)
            ++out.intersection_histogram[__builtin_popcount(
                static_cast<uint32_t>(masks[a] & masks[b]))];
    for (int c = static_cast<int>(std::ceil(alpha * k - 1e-12)); c <= k; ++c)
        if (c < static_cast<int>(out.intersection_histogram.size()) &&
            out.intersection_histogram[c] > 0 && c >= threshold)
            throw std::logic_error("independent set left a large intersection");

    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    out.density = kfact * out.design.edge_count() / std::pow(double(n), k);
    out.density_ratio = out.design.edge_count() / std::pow(2.0, k);
    const double h = -alpha * std::log2(alpha) - (1 - alpha) * std::log2(1 - alpha);
    const double predicted =
        binomial(n, k).convert_to<double>() / std::exp2(2.0 * h * k);
    out.indep_ratio = out.design.edge_count() / predicted;
    return out;
}

std::vector<Rational> g1_iterated_density(int m) {
    if (m < 1) throw InvalidParameters("m must be >= 1");
    return blowup_density_recurrence(6, 10, 3, m);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int min_parts) {
    std::vector<Partition> all;
    std::vector<int> cur;
    partitions_rec(k, k, cur, all);
    std::vector<Partition> out;
    for (auto& p : all)
        if (p.length() >= min_parts) out.push_back(p);
    return out;
}

}  // namespace turan
