#include <cmath>

#include "doctest.h"
#include "turan/construct.hpp"
#include "turan/generators.hpp"
#include "turan/util.hpp"
#include "turan/verify.hpp"

using namespace turan;

TEST_CASE("entropic bound reports") {
    // single edge at r = 2: equality 1 <= 1
    const Hypergraph edge(2, 2, {{0, 1}});
    const CheckReport eq = check_entropic_turan(edge, 2, EdgeDistribution::uniform(edge));
    CHECK(eq.pass);
    CHECK(eq.slack == doctest::Approx(0.0).epsilon(1e-12));

    // C_5 uniform: log2 10 <= 2 log2 5 - 1
    const Hypergraph c5 = make_cycle(5);
    const CheckReport r = check_entropic_turan(c5, 2, EdgeDistribution::uniform(c5));
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(std::log2(10.0)));
    CHECK(r.rhs == doctest::Approx(2 * std::log2(5.0) - 1));

    // balanced blowup of K_r: exact equality
    for (int r2 : {2, 3}) {
        const Hypergraph b = blowup(make_complete(r2, 2), std::vector<int>(r2, 2));
        const CheckReport br = check_entropic_turan(b, r2, EdgeDistribution::uniform(b));
        CHECK(br.pass);
        CHECK(std::abs(br.slack) <= 1e-9);
    }

    // precondition rejection carries a witness
    const CheckReport rej =
        check_entropic_turan(make_complete(4, 2), 2, EdgeDistribution::uniform(make_complete(4, 2)));
    CHECK_FALSE(rej.pass);
    CHECK_FALSE(rej.hypothesis_ok);
    CHECK(rej.note.find("map") != std::string::npos);
}

TEST_CASE("spectral bound reports") {
    const Hypergraph c5 = make_cycle(5);
    const Hypergraph vertex(2, 1, {});
    const CheckReport v = check_spectral_turan(c5, 2, vertex);
    CHECK(v.pass);
    CHECK(v.lhs == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(v.rhs == doctest::Approx(2.5));
    const CheckReport e = check_spectral_turan(c5, 2, make_path(2));
    CHECK(e.lhs == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(e.rhs == doctest::Approx(5.0));
    const CheckReport p3 = check_spectral_turan(c5, 2, make_path(3));
    CHECK(p3.lhs == doctest::Approx(8.0).epsilon(1e-8));
    CHECK(p3.rhs == doctest::Approx(10.0));
}

TEST_CASE("p-spectral bound reports") {
    const Hypergraph c5 = make_cycle(5);
    for (double p : {1.0, 2.0}) {
        for (const auto& rep : check_pspectral_turan(c5, 2, p)) CHECK(rep.pass);
    }
    // p = 2 second form: 2 <= sqrt(1/2) sqrt(2m) = sqrt(5)
    const auto reps = check_pspectral_turan(c5, 2, 2.0);
    CHECK(reps[1].rhs == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("star density bounds, exact") {
    const Hypergraph c5 = make_cycle(5);
    CHECK(check_star_sidorenko(c5, 0).pass);
    const CheckReport i1 = check_star_sidorenko(c5, 1);
    CHECK(i1.pass);
    CHECK(i1.slack == 0.0);
    const CheckReport i2 = check_star_sidorenko(c5, 2);
    CHECK(i2.pass);
    CHECK(i2.lhs == doctest::Approx(0.16));
    CHECK(i2.rhs == doctest::Approx(0.16));
    // stars are undercounted on irregular graphs: strict slack
    const CheckReport star = check_star_sidorenko(make_complete_bipartite(1, 4), 2);
    CHECK(star.pass);
    CHECK(star.slack > 0);
    CHECK(check_density_turan(c5, 2).pass);
}

TEST_CASE("auxiliary inequality: superadditive products") {
    // y_i = i: equality
    for (int k = 2; k <= 7; ++k) {
        std::vector<double> y(k);
        for (int i = 0; i < k; ++i) y[i] = i + 1;
        const CheckReport rep = aux_ineq_72(y);
        CHECK(rep.pass);
        CHECK(std::abs(rep.slack) <= 1e-12 * std::max(1.0, rep.rhs));
    }
    // hypothesis failure is reported as such
    const CheckReport bad = aux_ineq_72({1.0, 1.5});
    CHECK_FALSE(bad.hypothesis_ok);
}

TEST_CASE("auxiliary inequality: dominated gap products") {
    for (int k = 2; k <= 6; ++k) {
        std::vector<double> z(k);
        for (int i = 0; i < k; ++i) z[i] = i + 1;
        const CheckReport eq = aux_ineq_76(z, z);
        CHECK(eq.pass);
        CHECK(std::abs(eq.slack) <= 1e-12 * std::max(1.0, eq.rhs));
    }
    CHECK_FALSE(aux_ineq_76({1, 1.1, 3}, {1, 2, 3}).hypothesis_ok);
}

TEST_CASE("auxiliary inequality: shifted AM-GM") {
    CHECK(aux_ineq_85({3.14}, 2.0).pass);  // t = 1 is equality
    CHECK(std::abs(aux_ineq_85({3.14}, 2.0).slack) <= 1e-12 * 3.14);
    // y_i = c (z+i): equality for any t
    for (int t = 1; t <= 5; ++t) {
        std::vector<double> y(t);
        for (int i = 1; i <= t; ++i) y[i - 1] = 0.3 * (1.5 + i);
        const CheckReport rep = aux_ineq_85(y, 1.5);
        CHECK(rep.pass);
        CHECK(std::abs(rep.slack) <= 1e-9 * std::max(1.0, rep.rhs));
    }
}

TEST_CASE("coefficient-chain inequality") {
    // equality at x_i = (r-k+i)/r
    for (int k : {3, 4, 5}) {
        for (int r = k; r <= k + 3; ++r) {
            const AppendixResult ss = appendix_s_star(k, r);
            const int s = std::min(ss.value, k - 1);
            if (s < 1) continue;
            std::vector<double> x(k);
            for (int i = 1; i <= k; ++i) x[i - 1] = double(r - k + i) / r;
            const CheckReport rep = claim_86(RatioSequence(x), k, r, s);
            CHECK(rep.hypothesis_ok);
            CHECK(rep.pass);
            CHECK(std::abs(rep.slack) <= 1e-12);
            CHECK(rep.note.find("s'") != std::string::npos);
        }
    }
    // infeasible (k, r, s) is a hypothesis failure
    const std::vector<double> x{0.25, 0.5, 0.75, 1.0};
    CHECK_FALSE(claim_86(RatioSequence(x), 4, 4, 3).hypothesis_ok);
}

TEST_CASE("tent and pattern density bounds") {
    // single 3-edge: b = 2/9, equality
    const CheckReport single = tent_density_bound(make_complete(3, 3), TentMode::Tents);
    CHECK(single.pass);
    CHECK(single.lhs == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
    CHECK(single.rhs == doctest::Approx(2.0 / 9.0));

    // K_4^{(3)} against the (3,2)-pattern on 5 vertices at r = 4: b = 3/8
    const CheckReport k43 = tent_density_bound(make_complete(4, 3), TentMode::Fks, 4, 2);
    CHECK(k43.pass);
    CHECK(k43.lhs == doctest::Approx(3.0 / 8.0).epsilon(1e-8));

    // K_4^{(3)} is not tent-hom-free: rejected with a witness
    const CheckReport rej = tent_density_bound(make_complete(4, 3), TentMode::Tents);
    CHECK_FALSE(rej.pass);
    CHECK_FALSE(rej.hypothesis_ok);
}

TEST_CASE("end-to-end: pattern-hom-free 3-graphs stay under the complete bound") {
    // every F-hom-free class satisfies b <= 3/8 and the gap constraints
    const PartialHypergraph pat = make_Fks_partial(3, 2, 4);
    int checked = 0;
    enumerate_classes(
        5, 3, 10, [&](const Hypergraph& g) { return !find_hom(pat, g).has_value(); },
        [&](const Hypergraph& g) {
            if (g.edge_count() == 0) return;
            CHECK(tent_density_bound(g, TentMode::Fks, 4, 2).pass);
            ++checked;
        });
    CHECK(checked > 0);
}

TEST_CASE("appendix scans") {
    // s = 1 is always feasible
    CHECK(krs_feasible(1, 1, 1));
    CHECK(krs_feasible(3, 3, 1));
    CHECK(appendix_s_star(3, 3).value >= 1);

    // monotone: s_star nondecreasing in r, r_star nonincreasing in d
    for (int k : {6, 10}) {
        int prev = 0;
        for (int r = k; r <= k + 6; ++r) {
            const int s = appendix_s_star(k, r).value;
            CHECK(s >= prev);
            prev = s;
        }
        int prev_r = 1 << 30;
        for (int d = 1; d < k; ++d) {
            const int rv = appendix_r_star(k, d).value;
            CHECK(rv <= prev_r);
            prev_r = rv;
        }
    }
    // the threshold is exact: s_star feasible, s_star + 1 not
    const AppendixResult a = appendix_s_star(40, 50);
    CHECK(krs_feasible(40, 50, a.value));
    CHECK_FALSE(krs_feasible(40, 50, a.value + 1));
}

TEST_CASE("isomorphism-free enumeration counts") {
    // all graphs on 4 vertices: 11 classes
    int count = 0;
    enumerate_classes(4, 2, 6, [](const Hypergraph&) { return true; },
                      [&](const Hypergraph&) { ++count; });
    CHECK(count == 11);
    // triangle-free graphs on 5 vertices: 14 classes
    const Hypergraph triangle = make_complete(3, 2);
    count = 0;
    enumerate_classes(
        5, 2, 10, [&](const Hypergraph& g) { return !find_hom(triangle, g).has_value(); },
        [&](const Hypergraph&) { ++count; });
    CHECK(count == 14);
    // 3-graphs on 5 vertices with at most 2 edges: empty, one edge, and the
    // two-edge classes by intersection size (0 is impossible on 5 vertices)
    count = 0;
    enumerate_classes(5, 3, 2, [](const Hypergraph&) { return true; },
                      [&](const Hypergraph&) { ++count; });
    CHECK(count == 4);
}

TEST_CASE("corpus sanity") {
    for (const auto& [name, g] : corpus_graphs()) {
        CHECK(g.k() == 2);
        CHECK(g.n() <= 8);
    }
}

TEST_CASE("pipeline: superadditive ratio sequences never beat the single edge") {
    // random sequences satisfying the pairwise-sum constraints with x_k = 1:
    // the product never exceeds k!/k^k
    auto rng = rng_stream(41, 3);
    std::exponential_distribution<double> exp1(1.0);
    for (int t = 0; t < 100000; ++t) {
        const int k = 2 + (t % 5);
        std::vector<double> inc(k);
        for (double& v : inc) v = exp1(rng) + 1e-9;
        std::sort(inc.begin(), inc.end());
        std::vector<double> x(k);
        double run = 0;
        for (int i = 0; i < k; ++i) x[i] = (run += inc[i]);
        for (double& v : x) v /= run;  // superadditivity survives scaling
        double prod = 1, kfact = 1;
        for (int i = 1; i <= k; ++i) {
            prod *= x[i - 1];
            kfact *= i;
        }
        REQUIRE(prod <= kfact / std::pow(double(k), k) + 1e-12);
    }
}

TEST_CASE("entropic bound passes with the optimizer's maximizing distribution") {
    std::vector<Hypergraph> gs{make_complete_bipartite(2, 2), make_cycle(5),
                               make_complete_bipartite(3, 4), make_path(6),
                               disjoint_union(make_path(3), make_cycle(5))};
    for (const auto& g : gs) {
        EntropicOptions eo;
        eo.random_starts = 8;
        const EntropicResult best = entropic_density(g, 1.0, eo);
        const CheckReport rep = check_entropic_turan(g, 2, best.distribution(g), 1e-6);
        CHECK(rep.pass);
    }
}

TEST_CASE("quick acceptance smoke: exact-arithmetic criteria") {
    CHECK(run_criterion(10).pass);
    CHECK(run_criterion(12).pass);
    CHECK(run_criterion(13, 0, true).pass);
}
