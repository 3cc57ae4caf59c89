#include <cmath>

#include "doctest.h"
#include "turan/construct.hpp"
#include "turan/entropy.hpp"
#include "turan/generators.hpp"
#include "turan/hom.hpp"
#include "turan/verify.hpp"

using namespace turan;

TEST_CASE("the six-vertex pair-degree-2 design") {
    const DesignSearchResult g1 = find_G1();
    CHECK(g1.design.edge_count() == 10);
    CHECK(g1.design.n() == 6);
    CHECK(g1.isomorphism_classes == 1);
    CHECK(g1.completions > 0);
    for (int d : g1.pair_degrees) CHECK(d == 2);
    for (int deg : g1.design.degrees()) CHECK(deg == 5);

    // the uniform edge law sees a uniform vertex: H(X_1) = log2 6, and the
    // pair-degree certificate forces H(X_1 | X_2, X_3) = 1
    const EdgeDistribution ug1 = EdgeDistribution::uniform(g1.design);
    CHECK(entropy_bits(ug1.joint().marginal({0})) == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(entropy_bits(ug1.joint()) - entropy_bits(ug1.joint().marginal({1, 2})) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // ratio sequence of the uniform edge: x_1 = 1/3 exactly
    const RatioSequence xs = ratio_sequence(EdgeDistribution::uniform(g1.design));
    CHECK(std::abs(xs.x[0] - 1.0 / 3.0) <= 1e-12);

    // no homomorphic image of the 4-vertex 3-edge pattern
    const Hypergraph k4minus(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK_FALSE(find_hom(k4minus, g1.design).has_value());
}

TEST_CASE("iterated density recurrence") {
    const auto series = g1_iterated_density(8);
    CHECK(series[0] == Rational(1, 2));
    CHECK(series[1] == Rational(7, 24));
    CHECK(series[2] == Rational(247, 864));
    for (size_t i = 0; i < series.size(); ++i) {
        CHECK(series[i] > Rational(2, 7));
        if (i) CHECK(series[i] < series[i - 1]);
    }
    CHECK(series[2] - Rational(2, 7) == Rational(1, 6048));
    CHECK(series[2] - Rational(2, 7) < Rational(1, 1000));
    CHECK_THROWS_AS(g1_iterated_density(0), InvalidParameters);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4, 2).size() == 4);
    CHECK(partitions_of(6, 2).size() == 10);  // 11 partitions of 6, minus (6)
}

TEST_CASE("intersection designs") {
    for (int k : {4, 5}) {
        const double alpha = 0.8;
        const DesignSearchResult d = intersection_design(k, alpha);
        CHECK(d.design.n() == 2 * k);
        CHECK(d.design.edge_count() >= 2);
        // pairwise intersections below alpha k
        for (int c = 0; c <= k; ++c)
            if (c >= alpha * k - 1e-12) CHECK(d.intersection_histogram[c] == 0);
        CHECK(d.density_ratio > 0);
    }

    // wide tents cannot map in: apex would collapse into the base image
    const DesignSearchResult d4 = intersection_design(4, 0.6);
    for (const auto& lam : partitions_of(4, 2)) {
        if (lam.parts[0] <= 0.6 * 4) continue;
        CHECK_FALSE(find_hom(make_partial_tent(lam), d4.design).has_value());
    }
    CHECK_THROWS_AS(intersection_design(4, 0.4), InvalidParameters);
}
