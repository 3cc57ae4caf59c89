#include "turan/forest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "turan/generators.hpp"
#include "turan/util.hpp"

namespace turan {

PartialForest validate_forest(const PartialHypergraph& f, const std::vector<int>& order) {
    const int n = f.n();
    if (static_cast<int>(order.size()) != n)
        throw InvalidParameters("order must list every vertex once");
    std::vector<int> rank(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = order[pos];
        if (v < 0 || v >= n || rank[v] != -1)
            throw InvalidParameters("order is not a permutation of the vertices");
        rank[v] = pos;
    }
    const EdgeList faces = f.closure();
    PartialForest pf;
    pf.complex = f;
    pf.order = order;
    pf.max_face_of.resize(n);
    pf.forest_seq.assign(f.k(), 0);
    for (int v = 0; v < n; ++v) {
        // faces whose maximum vertex under the order is v
        EdgeList mv;
        for (const auto& face : faces) {
            bool contains = false, ok = true;
            for (int u : face) {
                if (u == v) contains = true;
                if (rank[u] > rank[v]) {
                    ok = false;
                    break;
                }
            }
            if (contains && ok) mv.push_back(face);
        }
        // maximal elements under inclusion
        EdgeList maximal;
        for (size_t a = 0; a < mv.size(); ++a) {
            bool covered = false;
            for (size_t b = 0; b < mv.size() && !covered; ++b)
                if (a != b && mv[b].size() > mv[a].size())
                    covered = std::includes(mv[b].begin(), mv[b].end(), mv[a].begin(),
                                            mv[a].end());
            if (!covered) maximal.push_back(mv[a]);
        }
        if (maximal.size() != 1)
            throw NotAForest("vertex " + std::to_string(v) + " has " +
                                 std::to_string(maximal.size()) +
                                 " maximal faces below it, expected exactly 1",
                             v);
        pf.max_face_of[v] = maximal.front();
        ++pf.forest_seq[maximal.front().size() - 1];
    }
    return pf;
}

namespace {

using Table = std::map<std::vector<int>, double>;

Table table_of(const FiniteDistribution& d) {
    Table t;
    for (size_t i = 0; i < d.outcomes().size(); ++i) t[d.outcomes()[i]] = d.probs()[i];
    return t;
}

}  // namespace

SampledHom sampled_hom_distribution(const PartialForest& pf, const EdgeDistribution& d) {
    const Hypergraph& g = d.graph();
    const int k = g.k();
    if (pf.complex.k() != k)
        throw InvalidParameters("forest and edge distribution uniformities differ");
    const int nF = pf.complex.n();
    const int nG = g.n();
    double guard = 1.0;
    for (int i = 0; i < nF; ++i) {
        guard *= nG;
        if (guard > 1e7) throw GuardError("n(G)^{v(F)} exceeds 1e7");
    }

    // suffix marginal tables: suffix[j] holds the law of (X_j..X_k), 1-indexed
    std::vector<Table> suffix(k + 2);
    for (int j = 1; j <= k; ++j) {
        std::vector<int> coords;
        for (int c = j - 1; c < k; ++c) coords.push_back(c);
        suffix[j] = table_of(d.joint().marginal(coords));
    }
    suffix[k + 1][{}] = 1.0;

    std::vector<int> rank(nF);
    for (int pos = 0; pos < nF; ++pos) rank[pf.order[pos]] = pos;

    // joint over processed ranks; outcome[pos] = image of pf.order[pos]
    std::vector<std::pair<std::vector<int>, double>> joint{{{}, 1.0}};
    for (int pos = 0; pos < nF; ++pos) {
        const int v = pf.order[pos];
        const Edge& ev = pf.max_face_of[v];
        const int j = k - static_cast<int>(ev.size()) + 1;
        // conditioning vertices of e_v, everything but v, in rank order
        std::vector<int> cond;
        for (int u : ev)
            if (u != v) cond.push_back(u);
        std::sort(cond.begin(), cond.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        std::vector<std::pair<std::vector<int>, double>> next;
        next.reserve(joint.size() * nG);
        for (const auto& [outcome, pw] : joint) {
            std::vector<int> s;
            s.reserve(cond.size());
            for (int u : cond) s.push_back(outcome[rank[u]]);
            const auto den_it = suffix[j + 1].find(s);
            if (den_it == suffix[j + 1].end()) continue;
            const double den = den_it->second;
            for (int y = 0; y < nG; ++y) {
                std::vector<int> key;
                key.reserve(s.size() + 1);
                key.push_back(y);
                key.insert(key.end(), s.begin(), s.end());
                const auto num_it = suffix[j].find(key);
                if (num_it == suffix[j].end()) continue;
                std::vector<int> grown = outcome;
                grown.push_back(y);
                next.emplace_back(std::move(grown), pw * num_it->second / den);
            }
        }
        joint = std::move(next);
    }

    SampledHom out{FiniteDistribution::point_mass({0}), 0, 0, 0, true};
    // reindex: coordinate v = image of vertex v
    std::vector<std::vector<int>> outcomes;
    std::vector<double> probs;
    outcomes.reserve(joint.size());
    for (auto& [vals, pw] : joint) {
        std::vector<int> o(nF);
        for (int v = 0; v < nF; ++v) o[v] = vals[rank[v]];
        outcomes.push_back(std::move(o));
        probs.push_back(pw);
    }
    out.joint = FiniteDistribution(std::move(outcomes), std::move(probs));
    out.entropy = entropy_bits(out.joint);

    const RatioSequence xs = ratio_sequence(d);
    const double h1 = entropy_bits(d.joint().marginal({0}));
    double formula = nF * h1;
    for (int i = 1; i <= k; ++i)
        formula += pf.forest_seq[k - i] * std::log2(xs.x[i - 1]);
    out.entropy_formula = formula;
    if (std::abs(out.entropy - out.entropy_formula) > 1e-9)
        throw std::logic_error("sampled joint entropy deviates from the forest formula");

    // face marginals must equal the suffix laws of d
    EdgeList check_faces = pf.complex.closure();
    if (check_faces.size() > 512) check_faces = pf.complex.maximal_faces();
    for (const auto& face : check_faces) {
        std::vector<int> coords = face;  // coordinate v = vertex v
        std::sort(coords.begin(), coords.end(),
                  [&](int a, int b) { return rank[a] < rank[b]; });
        Table got = table_of(out.joint.marginal(coords));
        std::vector<int> scoords;
        for (int c = k - static_cast<int>(face.size()); c < k; ++c) scoords.push_back(c);
        Table want = table_of(d.joint().marginal(scoords));
        double dev = 0.0;
        for (const auto& [o, pv] : want) {
            auto it = got.find(o);
            dev = std::max(dev, std::abs((it == got.end() ? 0.0 : it->second) - pv));
        }
        for (const auto& [o, pv] : got)
            if (!want.count(o)) dev = std::max(dev, pv);
        out.max_marginal_dev = std::max(out.max_marginal_dev, dev);
    }
    out.marginals_ok = out.max_marginal_dev <= 1e-12;
    if (!out.marginals_ok)
        throw std::logic_error("sampled joint face marginal deviates from the edge law");
    return out;
}

PartialForest single_face_forest(int k) {
    Edge base(k);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    return validate_forest(PartialHypergraph(k, k, {base}), order);
}

NamedForestFamily lemma72_family(int k, int i, int j) {
    if (i < 1 || j < 1 || i + j > k)
        throw InvalidParameters("lemma72 family requires 1 <= i, j and i + j <= k");
    Edge base(k);
    std::iota(base.begin(), base.end(), 0);
    Edge f1;  // {v_{i+1}..v_k, w}
    for (int v = i; v < k; ++v) f1.push_back(v);
    f1.push_back(k);
    Edge f2;  // {v_1..v_{k-j}, w}
    for (int v = 0; v < k - j; ++v) f2.push_back(v);
    f2.push_back(k);
    std::vector<int> order(k + 1);
    std::iota(order.begin(), order.end(), 0);
    NamedForestFamily fam;
    fam.name = "lemma72";
    fam.members.push_back(validate_forest(PartialHypergraph(k, k + 1, {base, f1}), order));
    fam.members.push_back(validate_forest(PartialHypergraph(k, k + 1, {base, f2}), order));
    for (auto& t : all_partial_tents_two_parts(k)) fam.forbidden.emplace_back(t);
    fam.expected_a = 1;
    return fam;
}

PartialForest lemma75_forest(int k, int i, int N, const std::vector<int>& ts) {
    if (i < 1 || i > k - 1) throw InvalidParameters("requires 1 <= i <= k-1");
    if (static_cast<int>(ts.size()) != i) throw InvalidParameters("need i thresholds");
    std::vector<int> t(i + 2);
    t[0] = 1;
    for (int a = 0; a < i; ++a) t[a + 1] = ts[a];
    t[i + 1] = N + 1;
    for (int a = 0; a + 1 < static_cast<int>(t.size()); ++a)
        if (t[a] >= t[a + 1] || (a >= 1 && t[a] > N))
            throw InvalidParameters("thresholds must satisfy 1 < t_1 < ... < t_i <= N");
    const int nv = k - i - 1;
    auto w_id = [&](int m) { return nv + m - 1; };
    EdgeList faces;
    for (int jj = 0; jj <= i; ++jj) {
        for (int m = t[jj]; m < t[jj + 1]; ++m) {
            Edge face;
            for (int v = 0; v < nv; ++v) face.push_back(v);
            face.push_back(w_id(m));
            for (int a = jj + 1; a <= i; ++a) face.push_back(w_id(t[a]));
            faces.push_back(std::move(face));
        }
    }
    std::vector<int> order;
    for (int v = 0; v < nv; ++v) order.push_back(v);
    for (int m = N; m >= 1; --m) order.push_back(w_id(m));
    return validate_forest(PartialHypergraph(k, nv + N, std::move(faces)), order);
}

namespace {

void each_subset(int from, int size, int max_val, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    for (int v = from; v <= max_val; ++v) {
        cur.push_back(v);
        each_subset(v + 1, size, max_val, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

NamedForestFamily lemma75_family(int k, int i, int N) {
    if (N < i + 1) throw InvalidParameters("need N >= i + 1");
    NamedForestFamily fam;
    fam.name = "lemma75";
    std::vector<int> cur;
    each_subset(2, i, N, cur, [&](const std::vector<int>& ts) {
        fam.members.push_back(lemma75_forest(k, i, N, ts));
    });
    for (auto& t : all_partial_tents_two_parts(k)) fam.forbidden.emplace_back(t);
    fam.expected_a = 1;
    return fam;
}

NamedForestFamily thm81_family(int k, int r, int i, int N) {
    if (r < k) throw InvalidParameters("requires r >= k");
    NamedForestFamily fam = lemma75_family(k, i, N);
    fam.name = "thm81";
    fam.forbidden.clear();
    fam.forbidden.emplace_back(make_kface_pair_pattern(k, r));
    fam.expected_a = static_cast<int>(binomial(r - k + i, i).convert_to<long>());
    return fam;
}

PartialForest lemma84_forest(int k, int i, int j, int N, int t) {
    if (i < 1 || i > j || j >= k) throw InvalidParameters("requires 1 <= i <= j < k");
    if (t < 1 || t > N) throw InvalidParameters("t must lie in [1, N]");
    const int nv = k - i;
    auto w_id = [&](int m) { return nv + m - 1; };
    EdgeList faces;
    Edge big;
    for (int v = 0; v < nv; ++v) big.push_back(v);
    big.push_back(w_id(t));
    faces.push_back(std::move(big));
    for (int m = 1; m < t; ++m) {
        Edge f;
        for (int v = 0; v < k - j - 1; ++v) f.push_back(v);
        f.push_back(w_id(m));
        f.push_back(w_id(t));
        faces.push_back(std::move(f));
    }
    for (int m = t + 1; m <= N; ++m) {
        Edge f;
        for (int v = 0; v < k - j - 1; ++v) f.push_back(v);
        f.push_back(w_id(m));
        faces.push_back(std::move(f));
    }
    std::vector<int> order;
    for (int v = 0; v < nv; ++v) order.push_back(v);
    for (int m = N; m >= 1; --m) order.push_back(w_id(m));
    return validate_forest(PartialHypergraph(k, nv + N, std::move(faces)), order);
}

NamedForestFamily lemma84_family(int k, int r, int i, int j, int N, int s) {
    if (s < 0) s = k - i;
    if (s < 1 || s > k - i)
        throw InvalidParameters("requires 1 <= s <= k - i");
    NamedForestFamily fam;
    fam.name = "lemma84";
    for (int t = 1; t <= N; ++t) fam.members.push_back(lemma84_forest(k, i, j, N, t));
    fam.forbidden.emplace_back(make_Fks_partial(k, s, r));
    fam.expected_a = r - k + i;
    return fam;
}

NamedForestFamily g1_forest_family() {
    NamedForestFamily fam;
    fam.name = "g1";
    std::vector<int> order{0, 1, 2, 3};
    for (int skip = 0; skip < 3; ++skip) {
        Edge other;
        for (int v = 0; v < 4; ++v)
            if (v != skip) other.push_back(v);
        fam.members.push_back(
            validate_forest(PartialHypergraph(3, 4, {{0, 1, 2}, other}), order));
    }
    fam.forbidden.emplace_back(
        Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
    fam.expected_a = 1;
    return fam;
}

PartialForest star_tuple_forest(int i, int N) {
    if (i < 0 || i > N) throw InvalidParameters("requires 0 <= i <= N");
    const int center = i;  // vertex labels 0..N, center at label i
    EdgeList faces;
    for (int leaf = 0; leaf < i; ++leaf) faces.push_back({leaf, center});
    faces.push_back({center});
    for (int m = i + 1; m <= N; ++m) faces.push_back({m});
    std::vector<int> order{center};
    for (int v = 0; v <= N; ++v)
        if (v != center) order.push_back(v);
    return validate_forest(PartialHypergraph(2, N + 1, std::move(faces)), order);
}

CertifyResult certify_disjointness(const std::vector<PartialForest>& members,
                                   const std::vector<Pattern>& forbidden, long cap) {
    if (members.empty()) throw InvalidParameters("empty family");
    const int n = members.front().complex.n();
    const int k = members.front().complex.k();
    for (const auto& m : members)
        if (m.complex.n() != n || m.complex.k() != k)
            throw InvalidParameters("family members must share the vertex set");
    CertifyResult res;
    const int count = static_cast<int>(members.size());
    for (int a = 1; a <= count; ++a) {
        if (a + 1 > count) {  // no subfamilies of this size: vacuously certified
            res.a = a;
            return res;
        }
        bool all_ok = true;
        std::vector<int> cur;
        bool cap_hit = false;
        std::function<void(int)> rec = [&](int from) {
            if (!all_ok || cap_hit) return;
            if (static_cast<int>(cur.size()) == a + 1) {
                if (++res.unions_checked > cap) {
                    cap_hit = true;
                    return;
                }
                EdgeList faces;
                for (int idx : cur)
                    for (const auto& f : members[idx].complex.maximal_faces())
                        faces.push_back(f);
                const Hypergraph ext = extend(PartialHypergraph(k, n, std::move(faces)));
                bool found = false;
                for (const auto& pat : forbidden)
                    if (find_hom(pat, ext)) {
                        found = true;
                        break;
                    }
                if (!found) all_ok = false;
                return;
            }
            for (int idx = from; idx < count; ++idx) {
                cur.push_back(idx);
                rec(idx + 1);
                cur.pop_back();
            }
        };
        rec(0);
        if (cap_hit) throw GuardError("certification enumeration cap exceeded");
        if (all_ok) {
            res.a = a;
            return res;
        }
    }
    res.a = count;  // every subfamily of each size failed; vacuous at a = |family|
    return res;
}

bool supports_disjoint(const std::vector<PartialForest>& members,
                       const EdgeDistribution& d, int a) {
    std::map<std::vector<int>, int> counts;
    for (const auto& m : members) {
        SampledHom s = sampled_hom_distribution(m, d);
        for (const auto& o : s.joint.outcomes())
            if (++counts[o] > a) return false;
    }
    return true;
}

namespace {

std::string subscripted(const std::string& base, int idx) {
    return base + "_" + std::to_string(idx);
}

}  // namespace

ConstraintEval DerivedConstraint::evaluate(const RatioSequence& xs) const {
    if (xs.k() != k) throw InvalidParameters("ratio sequence length differs from k");
    ConstraintEval ev;
    if (family == "lemma72") {
        ev.lhs = xs.x[i - 1] + xs.x[j - 1];
        ev.rhs = xs.x[i + j - 1];
    } else if (family == "lemma75" || family == "thm81") {
        ev.rhs = family == "thm81"
                     ? to_double(Rational(binomial(r - k + i, i)))
                     : 1.0;
        double prod = 1.0;
        for (int jj = 1; jj <= i; ++jj) {
            const double gap = xs.x[i] - xs.x[jj - 1];
            if (gap <= 1e-12) {
                ev.divergent = true;
                ev.lhs = std::numeric_limits<double>::infinity();
                ev.slack = -std::numeric_limits<double>::infinity();
                return ev;
            }
            prod *= xs.x[jj - 1] / gap;
        }
        ev.lhs = prod;
    } else if (family == "lemma84") {
        ev.lhs = xs.x[i - 1] / double(r - k + i);
        ev.rhs = xs.x[j] - xs.x[j - 1];
    } else {
        throw InvalidParameters("unknown constraint family " + family);
    }
    ev.slack = ev.rhs - ev.lhs;
    return ev;
}

std::pair<Rational, Rational> DerivedConstraint::evaluate_exact(
    const std::vector<Rational>& xs) const {
    if (static_cast<int>(xs.size()) != k)
        throw InvalidParameters("ratio sequence length differs from k");
    if (family == "lemma72") return {xs[i - 1] + xs[j - 1], xs[i + j - 1]};
    if (family == "lemma75" || family == "thm81") {
        Rational prod = 1;
        for (int jj = 1; jj <= i; ++jj) {
            const Rational gap = xs[i] - xs[jj - 1];
            if (gap <= 0) throw InvalidParameters("x_j >= x_{i+1}: divergent product");
            prod *= xs[jj - 1] / gap;
        }
        return {prod, family == "thm81" ? Rational(binomial(r - k + i, i)) : Rational(1)};
    }
    if (family == "lemma84")
        return {xs[i - 1] / Rational(r - k + i), xs[j] - xs[j - 1]};
    throw InvalidParameters("unknown constraint family " + family);
}

DerivedConstraint derive_lemma72(int k, int i, int j) {
    if (i < 1 || j < 1 || i + j > k)
        throw InvalidParameters("lemma72 requires 1 <= i, j with i + j <= k");
    DerivedConstraint c;
    c.family = "lemma72";
    c.k = k;
    c.i = i;
    c.j = j;
    c.description = subscripted("x", i) + " + " + subscripted("x", j) +
                    " <= " + subscripted("x", i + j);
    c.provenance = "two-forest mixture on the base-plus-apex pair, k=" +
                   std::to_string(k);
    return c;
}

DerivedConstraint derive_lemma75(int k, int i) {
    if (i < 1 || i > k - 1) throw InvalidParameters("lemma75 requires 1 <= i <= k-1");
    DerivedConstraint c;
    c.family = "lemma75";
    c.k = k;
    c.i = i;
    c.description = "prod_{j<=" + std::to_string(i) + "} x_j/(" +
                    subscripted("x", i + 1) + " - x_j) <= 1";
    c.provenance = "threshold-chain forests, geometric-series limit N->infinity, k=" +
                   std::to_string(k);
    return c;
}

DerivedConstraint derive_thm81(int k, int r, int i) {
    if (i < 1 || i > k - 1 || r < k)
        throw InvalidParameters("thm81 requires 1 <= i <= k-1 and r >= k");
    DerivedConstraint c;
    c.family = "thm81";
    c.k = k;
    c.i = i;
    c.r = r;
    c.description = "prod_{j<=" + std::to_string(i) + "} x_j/(" +
                    subscripted("x", i + 1) + " - x_j) <= C(" +
                    std::to_string(r - k + i) + "," + std::to_string(i) + ")";
    c.provenance = "threshold-chain forests against the k-face+pairs pattern, r=" +
                   std::to_string(r);
    return c;
}

DerivedConstraint derive_lemma84(int k, int r, int i, int j) {
    if (i < 1 || i > j || j >= k || r < k)
        throw InvalidParameters("lemma84 requires 1 <= i <= j < k and r >= k");
    DerivedConstraint c;
    c.family = "lemma84";
    c.k = k;
    c.i = i;
    c.j = j;
    c.r = r;
    c.description = subscripted("x", i) + "/" + std::to_string(r - k + i) + " <= " +
                    subscripted("x", j + 1) + " - " + subscripted("x", j);
    c.provenance = "single-threshold forests, geometric-series limit, r=" +
                   std::to_string(r);
    return c;
}

std::vector<Rational> complete_ratio_sequence(int k, int r) {
    if (k < 1 || k > r) throw InvalidParameters("requires 1 <= k <= r");
    std::vector<Rational> x;
    for (int i = 1; i <= k; ++i) x.emplace_back(r - k + i, r);
    return x;
}

}  // namespace turan
