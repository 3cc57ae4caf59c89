#include <cmath>

#include "doctest.h"
#include "turan/entropy.hpp"
#include "turan/generators.hpp"
#include "turan/optimize.hpp"
#include "turan/util.hpp"
#include "turan/verify.hpp"

using namespace turan;

namespace {

FiniteDistribution random_joint(int arity, int base, std::mt19937_64& rng) {
    std::vector<std::vector<int>> outcomes;
    std::vector<int> cur(arity, 0);
    while (true) {
        outcomes.push_back(cur);
        int i = 0;
        while (i < arity && ++cur[i] == base) cur[i++] = 0;
        if (i == arity) break;
    }
    std::gamma_distribution<double> gamma(0.7, 1.0);
    std::vector<double> probs(outcomes.size());
    double z = 0;
    for (double& p : probs) {
        p = gamma(rng) + 1e-12;
        z += p;
    }
    for (double& p : probs) p /= z;
    return FiniteDistribution(std::move(outcomes), std::move(probs));
}

}  // namespace

TEST_CASE("entropy basics") {
    std::vector<std::vector<int>> eight;
    for (int i = 0; i < 8; ++i) eight.push_back({i});
    CHECK(entropy_bits(FiniteDistribution::uniform(eight)) == doctest::Approx(3.0));
    CHECK(entropy_bits(FiniteDistribution::point_mass({4})) == 0.0);

    // H(X|Y) for the joint uniform on {(0,0),(0,1),(1,0)}: 2/3
    const FiniteDistribution j = FiniteDistribution::uniform({{0, 0}, {0, 1}, {1, 0}});
    CHECK(cond_entropy(j, {1}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(entropy_bits(j) == doctest::Approx(std::log2(3.0)));
}

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(FiniteDistribution({{0}, {1}}, {0.5, 0.6}), InvalidParameters);
    CHECK_THROWS_AS(FiniteDistribution({{0}, {0}}, {0.5, 0.5}), InvalidParameters);
    CHECK_THROWS_AS(FiniteDistribution({{0}, {1, 2}}, {0.5, 0.5}), InvalidParameters);
    // zero-probability entries are dropped, never stored
    const FiniteDistribution d({{0}, {1}}, {1.0, 0.0});
    CHECK(d.size() == 1);
}

TEST_CASE("chain rule and basic inequalities on random joints") {
    auto rng = rng_stream(29, 0);
    for (int t = 0; t < 1000; ++t) {
        const int arity = 2 + (t % 2);
        const FiniteDistribution j = random_joint(arity, 2 + (t % 3), rng);
        // chain rule: H(X_1..X_n) = sum H(X_i | X_{i+1..n})
        double total = 0;
        for (int i = 0; i < arity; ++i) {
            std::vector<int> suffix;
            for (int c = i; c < arity; ++c) suffix.push_back(c);
            std::vector<int> strict;
            for (int c = i + 1; c < arity; ++c) strict.push_back(c);
            total += entropy_bits(j.marginal(suffix)) -
                     (strict.empty() ? 0.0 : entropy_bits(j.marginal(strict)));
        }
        CHECK(std::abs(total - entropy_bits(j)) <= 1e-12);
        // subadditivity H(X,Y) <= H(X) + H(Y) and dropping H(X|Y) <= H(X)
        const double hj = entropy_bits(j.marginal({0, 1}));
        const double hx = entropy_bits(j.marginal({0}));
        const double hy = entropy_bits(j.marginal({1}));
        CHECK(hj <= hx + hy + 1e-12);
        CHECK(hj - hy <= hx + 1e-12);
        if (arity == 3) {
            // conditional forms: H(X,Y|Z) <= H(X|Z) + H(Y|Z) and
            // H(X|Y,Z) <= H(X|Z)
            const double hz = entropy_bits(j.marginal({2}));
            const double hxz = entropy_bits(j.marginal({0, 2}));
            const double hyz = entropy_bits(j.marginal({1, 2}));
            const double hxyz = entropy_bits(j);
            CHECK(hxyz - hz <= (hxz - hz) + (hyz - hz) + 1e-12);
            CHECK(hxyz - hyz <= hxz - hz + 1e-12);
        }
    }
}

TEST_CASE("uniform edge distributions") {
    const EdgeDistribution single = EdgeDistribution::uniform(make_complete(2, 2));
    CHECK(entropy_bits(single.joint()) == doctest::Approx(1.0));
    CHECK(entropy_bits(single.joint().marginal({0})) == doctest::Approx(1.0));

    const EdgeDistribution k3 = EdgeDistribution::uniform(make_complete(3, 2));
    CHECK(entropy_bits(k3.joint()) == doctest::Approx(std::log2(6.0)));
    CHECK(entropy_bits(k3.joint().marginal({0})) == doctest::Approx(std::log2(3.0)));

    // all k marginals of a symmetric distribution are identical tables
    const EdgeDistribution f5 = EdgeDistribution::uniform(make_tent(Partition({2, 1})));
    for (int c = 1; c < 3; ++c)
        CHECK(f5.joint().marginal({0}).same_table(f5.joint().marginal({c}), 1e-15));

    CHECK_THROWS_AS(EdgeDistribution::uniform(Hypergraph(3, 4, {})), PreconditionFailure);
}

TEST_CASE("symmetry validation catches asymmetric joints") {
    const Hypergraph edge(2, 2, {{0, 1}});
    CHECK_THROWS_AS(
        EdgeDistribution::from_joint(edge, FiniteDistribution({{0, 1}, {1, 0}}, {0.7, 0.3})),
        SymmetryViolation);
    CHECK_THROWS_AS(
        EdgeDistribution::from_joint(edge, FiniteDistribution::point_mass({0, 1})),
        SymmetryViolation);
    CHECK_NOTHROW(
        EdgeDistribution::from_joint(edge, FiniteDistribution({{0, 1}, {1, 0}}, {0.5, 0.5})));
    // support must consist of oriented edges
    CHECK_THROWS_AS(
        EdgeDistribution::from_joint(edge, FiniteDistribution({{0, 0}}, {1.0})),
        InvalidParameters);
}

TEST_CASE("ratio sequences") {
    // uniform edge on K_r^{(k)}: x_i = (r-k+i)/r
    for (int k : {2, 3}) {
        for (int r = k; r <= 6; ++r) {
            const RatioSequence xs =
                ratio_sequence(EdgeDistribution::uniform(make_complete(r, k)));
            for (int i = 1; i <= k; ++i)
                CHECK(xs.x[i - 1] == doctest::Approx(double(r - k + i) / r).epsilon(1e-12));
        }
    }
    const RatioSequence k43 = ratio_sequence(EdgeDistribution::uniform(make_complete(4, 3)));
    CHECK(k43.x[0] == doctest::Approx(0.5));
    CHECK(k43.x[1] == doctest::Approx(0.75));
    CHECK(k43.x[2] == doctest::Approx(1.0));

    // product identity prod x_i = 2^{H(joint) - k H(X_1)}
    auto rng = rng_stream(31, 1);
    for (int t = 0; t < 40; ++t) {
        Hypergraph g = random_hypergraph(5, 3, 0.5, rng);
        if (g.edge_count() == 0) continue;
        std::gamma_distribution<double> gamma(1.0, 1.0);
        std::vector<double> q(g.edge_count());
        double z = 0;
        for (double& v : q) z += (v = gamma(rng) + 1e-9);
        for (double& v : q) v /= z;
        const EdgeDistribution d = EdgeDistribution::from_unordered(g, q);
        const RatioSequence xs = ratio_sequence(d);
        const double expected = std::exp2(entropy_bits(d.joint()) -
                                          3 * entropy_bits(d.joint().marginal({0})));
        CHECK(xs.product() == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("mixture bound") {
    // two disjoint uniforms on 4 outcomes each, a = 1: equality at 8
    std::vector<FiniteDistribution> two{
        FiniteDistribution::uniform({{0}, {1}, {2}, {3}}),
        FiniteDistribution::uniform({{4}, {5}, {6}, {7}})};
    const MixtureBoundResult mb = mixture_bound(two, 1);
    CHECK(mb.lhs == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(mb.rhs == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(mb.weights[0] == doctest::Approx(0.5));

    // single distribution: lhs = rhs
    const MixtureBoundResult one = mixture_bound({two[0]}, 1);
    CHECK(one.lhs == doctest::Approx(one.rhs).epsilon(1e-12));

    // set-system form: uniform X_i on (a+1)-wise disjoint S_i gives
    // sum |S_i| <= a |union|
    std::vector<FiniteDistribution> sets{
        FiniteDistribution::uniform({{0}, {1}, {2}}),
        FiniteDistribution::uniform({{1}, {2}, {3}}),
        FiniteDistribution::uniform({{0}, {3}})};
    const MixtureBoundResult ss = mixture_bound(sets, 2);
    CHECK(ss.lhs == doctest::Approx(8.0));
    CHECK(ss.lhs <= 2.0 * 4.0 + 1e-9);

    // violated disjointness names the outcome
    CHECK_THROWS_WITH_AS(mixture_bound(sets, 1), doctest::Contains("(1)"),
                         PreconditionFailure);
}

TEST_CASE("claim: product-form objective identity") {
    // for q_e prop to prod x_v: H(joint) - (k/p) H(X_1)
    //   = log2 beta - (k/p) sum_v y_v log2(x_v^p / y_v)
    auto rng = rng_stream(37, 2);
    for (int t = 0; t < 50; ++t) {
        const int k = (t % 2) ? 2 : 3;
        Hypergraph g = random_hypergraph(5, k, 0.6, rng);
        if (g.edge_count() == 0) continue;
        std::gamma_distribution<double> gamma(1.0, 1.0);
        std::vector<double> x(g.n());
        for (double& v : x) v = gamma(rng) + 0.05;
        const double p = (t % 3 == 0) ? 1.0 : 2.0;
        double beta = 0;
        std::vector<double> q(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            double prod = 1;
            for (int v : g.edges()[e]) prod *= x[v];
            q[e] = prod;
            beta += prod;
        }
        double kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        beta *= kfact;  // oriented-edge sum
        for (double& v : q) v = v * kfact / beta;
        const EdgeDistribution d = EdgeDistribution::from_unordered(g, q);
        const double lhs = entropy_bits(d.joint()) -
                           (k / p) * entropy_bits(d.joint().marginal({0}));
        const FiniteDistribution first = d.joint().marginal({0});
        double correction = 0;
        for (size_t i = 0; i < first.outcomes().size(); ++i) {
            const double yv = first.probs()[i];
            const double xv = x[first.outcomes()[i][0]];
            correction += yv * std::log2(std::pow(xv, p) / yv);
        }
        const double rhs = std::log2(beta) - (k / p) * correction;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("entropic density: single edge, equivalences") {
    for (int k : {2, 3}) {
        const EntropicResult r = entropic_density(make_complete(k, k), 1.0);
        double kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        CHECK(r.value == doctest::Approx(kfact / std::pow(k, k)).epsilon(1e-10));
        CHECK(r.converged);
    }
    // p = 1: blowup density; p = 2 on graphs: spectral radius
    std::vector<Hypergraph> gs{make_complete(3, 2), make_cycle(5),
                               make_complete_bipartite(2, 2), make_complete(4, 3)};
    for (const auto& g : gs) {
        CHECK(std::abs(entropic_density(g, 1.0).value - blowup_density(g).value) < 1e-4);
        if (g.k() == 2)
            CHECK(std::abs(entropic_density(g, 2.0).value -
                           adjacency_spectral_radius(g)) < 1e-4);
    }
    CHECK_THROWS_AS(entropic_density(Hypergraph(2, 3, {}), 1.0), PreconditionFailure);
}
