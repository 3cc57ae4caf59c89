#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "turan/generators.hpp"
#include "turan/hypergraph.hpp"
#include "turan/util.hpp"

using namespace turan;

TEST_CASE("construction normalizes and deduplicates") {
    Hypergraph g(2, 4, {{1, 0}, {0, 1}, {2, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK_THROWS_AS(Hypergraph(2, 4, {{1, 0}, {0, 1}}, Validation::Strict),
                    InvalidParameters);
    CHECK_THROWS_AS(Hypergraph(2, 2, {{0, 2}}), InvalidParameters);
    CHECK_THROWS_AS(Hypergraph(2, 3, {{1, 1}}), InvalidParameters);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1}}), InvalidParameters);
}

TEST_CASE("partial hypergraph keeps the maximal antichain, closure on demand") {
    PartialHypergraph f(3, 4, {{0, 1, 2}, {0, 1}, {2, 3}});
    CHECK(f.maximal_faces() == EdgeList{{0, 1, 2}, {2, 3}});
    const EdgeList cl = f.closure();
    CHECK(cl.size() == 9);  // 7 nonempty subsets of {0,1,2} plus {3}, {2,3}
    CHECK(f.has_face({0, 2}));
    CHECK(f.has_face({3}));
    CHECK_FALSE(f.has_face({1, 3}));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), InvalidParameters);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidParameters);
    CHECK(Partition({3, 2}).total() == 5);
}

TEST_CASE("complete k-graphs") {
    CHECK(make_complete(3, 2).edge_count() == 3);
    CHECK(make_complete(4, 3).edge_count() == 4);
    CHECK(make_complete(6, 3).edge_count() == 20);
    CHECK_THROWS_AS(make_complete(2, 3), InvalidParameters);
}

TEST_CASE("tents") {
    // base 0..k-1, apex k, fresh vertices afterwards
    const Hypergraph f5 = make_tent(Partition({2, 1}));
    CHECK(f5.k() == 3);
    CHECK(f5.n() == 5);
    CHECK(f5.edges() == EdgeList{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    CHECK(isomorphic(f5, Hypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}})));

    const Hypergraph ones = make_tent(Partition({1, 1, 1}));
    CHECK(ones.n() == 3 + 1 + 3 * 1);
    CHECK(ones.edge_count() == 4);
    // every non-base edge meets the base in one vertex and the others in the apex
    for (const auto& e : ones.edges()) {
        if (e == Edge{0, 1, 2}) continue;
        CHECK(std::count_if(e.begin(), e.end(), [](int v) { return v < 3; }) == 1);
        CHECK(std::count(e.begin(), e.end(), 3) == 1);
    }

    const Hypergraph big = make_tent(Partition({3, 2}));
    CHECK(big.k() == 5);
    CHECK(big.n() == 9);
    CHECK(big.edge_count() == 3);

    CHECK_THROWS_AS(make_tent(Partition({3})), InvalidParameters);
}

TEST_CASE("tent blocks partition the base and edges pairwise meet in the apex") {
    for (auto parts : {std::vector<int>{2, 1}, {1, 1, 1}, {3, 2}, {2, 2}, {3, 1}}) {
        const Partition lambda(parts);
        const int k = lambda.total();
        const Hypergraph t = make_tent(lambda);
        Edge base(k);
        std::iota(base.begin(), base.end(), 0);
        REQUIRE(t.has_edge(base));
        std::vector<Edge> others;
        for (const auto& e : t.edges())
            if (e != base) others.push_back(e);
        std::vector<int> covered;
        for (size_t i = 0; i < others.size(); ++i) {
            Edge in_base;
            for (int v : others[i])
                if (v < k) in_base.push_back(v);
            covered.insert(covered.end(), in_base.begin(), in_base.end());
            for (size_t j = i + 1; j < others.size(); ++j) {
                Edge common;
                std::set_intersection(others[i].begin(), others[i].end(),
                                      others[j].begin(), others[j].end(),
                                      std::back_inserter(common));
                CHECK(common == Edge{k});
            }
        }
        std::sort(covered.begin(), covered.end());
        CHECK(covered == base);
    }
}

TEST_CASE("partial tents and extension") {
    const PartialHypergraph pt = make_partial_tent(Partition({2, 1}));
    CHECK(pt.n() == 4);
    CHECK(pt.maximal_faces() == EdgeList{{0, 1, 2}, {0, 1, 3}, {2, 3}});
    CHECK(isomorphic(extend(pt), make_tent(Partition({2, 1}))));

    // extension of a complex generated by a k-graph returns it unchanged
    const Hypergraph k43 = make_complete(4, 3);
    CHECK(extend(complex_of(k43)) == k43);

    // K_4 as 2-faces inside uniformity 3 extends to the extended clique
    const Hypergraph e34 = extend(PartialHypergraph(
        3, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(e34 == make_extended_clique(3, 4));
    CHECK(e34.edge_count() == 6);
    CHECK(e34.n() == 4 + 6);
    CHECK_THROWS_AS(extend(PartialHypergraph(3, 2, {})), InvalidParameters);
}

TEST_CASE("F^{(k,s)}_{r+1}") {
    CHECK(isomorphic(make_Fks(3, 2, 3), make_tent(Partition({2, 1}))));
    CHECK(isomorphic(make_Fks(4, 3, 4), make_tent(Partition({3, 1}))));
    CHECK(isomorphic(make_Fks(2, 1, 4), make_complete(5, 2)));
    CHECK_THROWS_AS(make_Fks(3, 3, 4), InvalidParameters);
}

TEST_CASE("blowup") {
    const Hypergraph edge(2, 2, {{0, 1}});
    const Hypergraph b = blowup(edge, {2, 2});
    CHECK(b.n() == 4);
    CHECK(b.edge_count() == 4);  // complete bipartite on 2+2
    CHECK(b == make_complete_bipartite(2, 2));

    const Hypergraph k43 = make_complete(4, 3);
    for (int c : {2, 3}) {
        const Hypergraph bu = blowup(k43, std::vector<int>(4, c));
        CHECK(bu.edge_count() == k43.edge_count() * c * c * c);
    }
    CHECK_THROWS_AS(blowup(edge, {1}), InvalidParameters);
    CHECK_THROWS_AS(blowup(edge, {0, 1}), InvalidParameters);
}

TEST_CASE("iterated blowup density series") {
    const auto series = blowup_density_series(6, 10, 3, 6);
    CHECK(series[0] == Rational(1, 2));
    CHECK(series[1] == Rational(2220, 7140));
    // decreasing toward 2/7 from above
    for (size_t i = 1; i < series.size(); ++i) CHECK(series[i] < series[i - 1]);
    CHECK(series.back() > Rational(2, 7));
    CHECK(series.back() - Rational(2, 7) < Rational(1, 1000));

    const auto rec = blowup_density_recurrence(6, 10, 3, 4);
    CHECK(rec[0] == Rational(1, 2));
    CHECK(rec[1] == Rational(7, 24));
    CHECK(rec[2] == Rational(247, 864));
    CHECK(rec[2] - Rational(2, 7) == Rational(1, 6048));
    for (size_t i = 1; i < rec.size(); ++i) {
        CHECK(rec[i] < rec[i - 1]);
        CHECK(rec[i] > Rational(2, 7));
    }
}

TEST_CASE("isomorphism brute force") {
    CHECK(isomorphic(make_cycle(5), Hypergraph(2, 5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
    CHECK_FALSE(isomorphic(make_cycle(6), disjoint_union(make_complete(3, 2), make_complete(3, 2))));
    CHECK_THROWS_AS(isomorphic(make_complete(11, 2), make_complete(11, 2)), GuardError);
}

TEST_CASE("text format round trip is bit exact") {
    const Hypergraph g = make_tent(Partition({2, 1}));
    std::ostringstream out;
    write_hypergraph_text(out, g);
    std::istringstream in(out.str());
    const Hypergraph back = read_hypergraph_text(in);
    CHECK(back == g);
    std::ostringstream out2;
    write_hypergraph_text(out2, back);
    CHECK(out.str() == out2.str());
}

TEST_CASE("text format diagnostics carry line numbers") {
    std::istringstream bad("k 3 n 5\n0 1 2\n0 1 x\n");
    try {
        read_hypergraph_text(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    std::istringstream nohdr("# only a comment\n");
    CHECK_THROWS_AS(read_hypergraph_text(nohdr), ParseError);
    std::istringstream small("k 2 n 3\n0 1 2\n");
    CHECK_THROWS_AS(read_hypergraph_text(small), ParseError);
}

TEST_CASE("partial text format") {
    const PartialHypergraph f = make_partial_tent(Partition({2, 1}));
    std::ostringstream out;
    write_partial_text(out, f);
    std::istringstream in(out.str());
    CHECK(read_partial_text(in) == f);
}
