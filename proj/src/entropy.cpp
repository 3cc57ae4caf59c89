#include "turan/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "turan/util.hpp"

namespace turan {

namespace {

std::string outcome_str(const std::vector<int>& o) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i];
    os << ")";
    return os.str();
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<std::vector<int>> outcomes,
                                       std::vector<double> probs) {
    if (outcomes.size() != probs.size())
        throw InvalidParameters("outcomes and probabilities differ in length");
    if (outcomes.empty()) throw InvalidParameters("empty distribution");
    arity_ = static_cast<int>(outcomes.front().size());
    std::vector<size_t> idx(outcomes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return outcomes[a] < outcomes[b]; });
    double sum = 0.0;
    for (size_t i : idx) {
        if (static_cast<int>(outcomes[i].size()) != arity_)
            throw InvalidParameters("outcome arity mismatch");
        const double p = probs[i];
        if (p < 0.0) throw InvalidParameters("negative probability");
        if (p == 0.0) continue;  // zero-probability entries are never stored
        if (!outcomes_.empty() && outcomes_.back() == outcomes[i])
            throw InvalidParameters("duplicate outcome " + outcome_str(outcomes[i]));
        outcomes_.push_back(std::move(outcomes[i]));
        probs_.push_back(p);
        sum += p;
    }
    if (outcomes_.empty()) throw InvalidParameters("empty distribution");
    if (std::abs(sum - 1.0) > 1e-12)
        throw InvalidParameters("probabilities sum to " + std::to_string(sum));
}

FiniteDistribution FiniteDistribution::uniform(std::vector<std::vector<int>> outcomes) {
    const size_t count = outcomes.size();
    const double p = 1.0 / static_cast<double>(count);
    return FiniteDistribution(std::move(outcomes), std::vector<double>(count, p));
}

FiniteDistribution FiniteDistribution::point_mass(std::vector<int> outcome) {
    std::vector<std::vector<int>> o{std::move(outcome)};
    return FiniteDistribution(std::move(o), {1.0});
}

double FiniteDistribution::prob_of(const std::vector<int>& outcome) const {
    auto it = std::lower_bound(outcomes_.begin(), outcomes_.end(), outcome);
    if (it == outcomes_.end() || *it != outcome) return 0.0;
    return probs_[static_cast<size_t>(it - outcomes_.begin())];
}

FiniteDistribution FiniteDistribution::marginal(const std::vector<int>& coords) const {
    for (int c : coords)
        if (c < 0 || c >= arity_) throw InvalidParameters("marginal coordinate out of range");
    std::map<std::vector<int>, double> acc;
    for (size_t i = 0; i < outcomes_.size(); ++i) {
        std::vector<int> key(coords.size());
        for (size_t j = 0; j < coords.size(); ++j) key[j] = outcomes_[i][coords[j]];
        acc[key] += probs_[i];
    }
    FiniteDistribution out;
    out.arity_ = static_cast<int>(coords.size());
    for (auto& [o, p] : acc) {
        out.outcomes_.push_back(o);
        out.probs_.push_back(p);
    }
    return out;
}

bool FiniteDistribution::same_table(const FiniteDistribution& other, double tol) const {
    if (arity_ != other.arity_ || outcomes_.size() != other.outcomes_.size()) return false;
    for (size_t i = 0; i < outcomes_.size(); ++i) {
        if (outcomes_[i] != other.outcomes_[i]) return false;
        if (std::abs(probs_[i] - other.probs_[i]) > tol) return false;
    }
    return true;
}

double entropy_bits(const FiniteDistribution& d) {
    double h = 0.0;
    for (double p : d.probs()) h -= xlog2(p);
    return h;
}

double cond_entropy(const FiniteDistribution& joint, const std::vector<int>& given) {
    return entropy_bits(joint) - entropy_bits(joint.marginal(given));
}

EdgeDistribution::EdgeDistribution(Hypergraph g, FiniteDistribution joint)
    : g_(std::move(g)), joint_(std::move(joint)) {}

EdgeDistribution EdgeDistribution::uniform(const Hypergraph& g) {
    if (g.edge_count() == 0) throw PreconditionFailure("graph has no edges");
    return from_unordered(g, std::vector<double>(g.edge_count(),
                                                 1.0 / g.edge_count()));
}

EdgeDistribution EdgeDistribution::from_unordered(const Hypergraph& g,
                                                  std::vector<double> q) {
    if (static_cast<int>(q.size()) != g.edge_count())
        throw InvalidParameters("need one probability per unordered edge");
    double kfact = 1.0;
    for (int i = 2; i <= g.k(); ++i) kfact *= i;
    std::vector<std::vector<int>> outcomes;
    std::vector<double> probs;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (q[ei] < 0) throw InvalidParameters("negative edge probability");
        if (q[ei] == 0) continue;
        Edge perm = g.edges()[ei];
        const double share = q[ei] / kfact;
        std::sort(perm.begin(), perm.end());
        do {
            outcomes.push_back(perm);
            probs.push_back(share);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return EdgeDistribution(g, FiniteDistribution(std::move(outcomes), std::move(probs)));
}

EdgeDistribution EdgeDistribution::from_joint(const Hypergraph& g,
                                              FiniteDistribution joint, double tol) {
    if (joint.arity() != g.k())
        throw InvalidParameters("joint arity differs from uniformity");
    double kfact = 1.0;
    for (int i = 2; i <= g.k(); ++i) kfact *= i;
    // Per unordered edge, total mass across orderings; symmetry means each
    // ordering carries exactly total/k!.
    std::map<Edge, double> totals;
    for (size_t i = 0; i < joint.outcomes().size(); ++i) {
        Edge e = joint.outcomes()[i];
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidParameters("support tuple repeats a vertex: " +
                                    outcome_str(joint.outcomes()[i]));
        if (!g.has_edge(e))
            throw InvalidParameters("support tuple is not an edge of G: " +
                                    outcome_str(joint.outcomes()[i]));
        totals[e] += joint.probs()[i];
    }
    for (size_t i = 0; i < joint.outcomes().size(); ++i) {
        Edge e = joint.outcomes()[i];
        std::sort(e.begin(), e.end());
        if (std::abs(joint.probs()[i] - totals[e] / kfact) > tol)
            throw SymmetryViolation("ordering probabilities of edge " + outcome_str(e) +
                                    " are not exchangeable");
    }
    for (auto& [e, total] : totals) {
        // all k! orderings must be present when the edge carries mass
        Edge perm = e;
        do {
            if (joint.prob_of(perm) == 0.0)
                throw SymmetryViolation("missing ordering " + outcome_str(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return EdgeDistribution(g, std::move(joint));
}

std::vector<double> EdgeDistribution::unordered_probs() const {
    std::vector<double> q(g_.edge_count(), 0.0);
    for (size_t i = 0; i < joint_.outcomes().size(); ++i) {
        Edge e = joint_.outcomes()[i];
        std::sort(e.begin(), e.end());
        auto it = std::lower_bound(g_.edges().begin(), g_.edges().end(), e);
        q[static_cast<size_t>(it - g_.edges().begin())] += joint_.probs()[i];
    }
    return q;
}

RatioSequence::RatioSequence(std::vector<double> values) : x(std::move(values)) {
    if (x.empty()) throw InvalidParameters("empty ratio sequence");
    const int k = static_cast<int>(x.size());
    if (!(x.front() > 0.0))
        throw SymmetryViolation("ratio sequence requires x_1 > 0");
    if (std::abs(x.back() - 1.0) > 1e-9)
        throw SymmetryViolation("x_k = " + std::to_string(x.back()) +
                                ", expected 1 (asymmetric input?)");
    for (int i = 1; i < k; ++i)
        if (x[i] < x[i - 1] - 1e-9)
            throw SymmetryViolation("ratio sequence not monotone");
}

double RatioSequence::product() const {
    double p = 1.0;
    for (double v : x) p *= v;
    return p;
}

RatioSequence ratio_sequence(const EdgeDistribution& d) {
    const int k = d.graph().k();
    const FiniteDistribution& joint = d.joint();
    const double h1 = entropy_bits(joint.marginal({0}));
    std::vector<double> hsuf(k + 2, 0.0);  // hsuf[i] = H(X_i..X_k), 1-indexed
    for (int i = 1; i <= k; ++i) {
        std::vector<int> coords;
        for (int c = i - 1; c < k; ++c) coords.push_back(c);
        hsuf[i] = entropy_bits(joint.marginal(coords));
    }
    std::vector<double> x(k);
    for (int i = 1; i <= k; ++i)
        x[i - 1] = std::exp2((hsuf[i] - hsuf[i + 1]) - h1);
    return RatioSequence(std::move(x));
}

MixtureBoundResult mixture_bound(const std::vector<FiniteDistribution>& dists, int a) {
    if (dists.empty()) throw InvalidParameters("no distributions");
    if (a < 1) throw InvalidParameters("a must be >= 1");
    const int arity = dists.front().arity();
    std::map<std::vector<int>, int> membership;
    for (const auto& d : dists) {
        if (d.arity() != arity) throw InvalidParameters("mixed arities");
        for (const auto& o : d.outcomes()) {
            if (++membership[o] > a)
                throw PreconditionFailure("outcome " + outcome_str(o) + " lies in " +
                                          std::to_string(a + 1) +
                                          " supports; (a+1)-wise disjointness fails");
        }
    }
    double lhs = 0.0;
    std::vector<double> s(dists.size());
    for (size_t i = 0; i < dists.size(); ++i) {
        s[i] = std::exp2(entropy_bits(dists[i]));
        lhs += s[i];
    }
    std::vector<double> weights(dists.size());
    for (size_t i = 0; i < dists.size(); ++i) weights[i] = s[i] / lhs;
    std::map<std::vector<int>, double> mix;
    for (size_t i = 0; i < dists.size(); ++i)
        for (size_t j = 0; j < dists[i].outcomes().size(); ++j)
            mix[dists[i].outcomes()[j]] += weights[i] * dists[i].probs()[j];
    std::vector<std::vector<int>> outcomes;
    std::vector<double> probs;
    for (auto& [o, p] : mix) {
        outcomes.push_back(o);
        probs.push_back(p);
    }
    MixtureBoundResult out{std::move(weights),
                           FiniteDistribution(std::move(outcomes), std::move(probs)), lhs,
                           0.0};
    out.rhs = a * std::exp2(entropy_bits(out.mixture));
    if (out.lhs > out.rhs + 1e-9 * std::max(1.0, out.lhs))
        throw std::logic_error("mixture bound violated; non-disjoint inputs slipped through");
    return out;
}

double entropic_objective_log2(const Hypergraph& g, double p,
                               const std::vector<double>& q) {
    const int k = g.k();
    double log2kfact = 0.0;
    for (int i = 2; i <= k; ++i) log2kfact += std::log2(double(i));
    std::vector<double> y(g.n(), 0.0);
    double hq = 0.0;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        hq -= xlog2(q[ei]);
        for (int v : g.edges()[ei]) y[v] += q[ei] / k;
    }
    double hy = 0.0;
    for (double yv : y) hy += xlog2(yv);
    return log2kfact + hq + (double(k) / p) * hy;
}

namespace {

struct FixedPointOutcome {
    std::vector<double> q;
    double obj = -1e300;
    bool converged = false;
    long iterations = 0;
    int pruned = 0;
};

void normalize_simplex(std::vector<double>& q) {
    double s = 0.0;
    for (double v : q) s += v;
    if (s > 0)
        for (double& v : q) v /= s;
}

int prune(std::vector<double>& q, double below) {
    int dropped = 0;
    for (double& v : q)
        if (v > 0 && v < below) {
            v = 0.0;
            ++dropped;
        }
    if (dropped) normalize_simplex(q);
    return dropped;
}

FixedPointOutcome fixed_point(const Hypergraph& g, double p, std::vector<double> q,
                              const EntropicOptions& opts) {
    const int k = g.k();
    FixedPointOutcome out;
    normalize_simplex(q);
    out.q = q;
    out.obj = entropic_objective_log2(g, p, q);
    for (long it = 0; it < opts.max_iters; ++it) {
        out.iterations = it + 1;
        std::vector<double> y(g.n(), 0.0);
        for (int ei = 0; ei < g.edge_count(); ++ei)
            for (int v : g.edges()[ei]) y[v] += q[ei] / k;
        std::vector<double> x(g.n(), 0.0);
        for (int v = 0; v < g.n(); ++v) x[v] = y[v] > 0 ? std::pow(y[v], 1.0 / p) : 0.0;
        std::vector<double> qn(q.size(), 0.0);
        double z = 0.0;
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            double prod = 1.0;
            for (int v : g.edges()[ei]) prod *= x[v];
            qn[ei] = prod;
            z += prod;
        }
        if (z <= 0.0) break;
        double delta = 0.0;
        for (size_t ei = 0; ei < q.size(); ++ei) {
            qn[ei] = (1.0 - opts.damping) * q[ei] + opts.damping * qn[ei] / z;
            delta = std::max(delta, std::abs(qn[ei] - q[ei]));
        }
        out.pruned += prune(qn, opts.prune_below);
        q = std::move(qn);
        const double obj = entropic_objective_log2(g, p, q);
        if (obj > out.obj) {
            out.obj = obj;
            out.q = q;
        }
        if (delta < opts.fp_tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

// Monotone multiplicative (mirror) ascent on the unordered-edge simplex.
FixedPointOutcome mirror_ascent(const Hypergraph& g, double p, std::vector<double> q,
                                const EntropicOptions& opts, long max_iters) {
    const int k = g.k();
    const double ln2 = std::log(2.0);
    FixedPointOutcome out;
    normalize_simplex(q);
    out.q = q;
    out.obj = entropic_objective_log2(g, p, q);
    double eta = 0.5;
    for (long it = 0; it < max_iters; ++it) {
        out.iterations = it + 1;
        std::vector<double> y(g.n(), 0.0);
        for (int ei = 0; ei < g.edge_count(); ++ei)
            for (int v : g.edges()[ei]) y[v] += q[ei] / k;
        // dF/dq_e = -log2 q_e + (1/p) sum_{v in e} log2 y_v + const; the
        // constant washes out under the multiplicative renormalization.
        std::vector<double> grad(q.size(), 0.0);
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (q[ei] == 0.0) continue;
            double s = 0.0;
            for (int v : g.edges()[ei]) s += std::log(y[v]);
            grad[ei] = (-std::log(q[ei]) + s / p) / ln2;
        }
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt, eta *= 0.5) {
            std::vector<double> qn(q.size(), 0.0);
            double mx = -1e300;
            for (size_t ei = 0; ei < q.size(); ++ei)
                if (q[ei] > 0) mx = std::max(mx, grad[ei]);
            double z = 0.0;
            for (size_t ei = 0; ei < q.size(); ++ei) {
                qn[ei] = q[ei] > 0 ? q[ei] * std::exp2(eta * (grad[ei] - mx)) : 0.0;
                z += qn[ei];
            }
            if (z <= 0) continue;
            for (double& v : qn) v /= z;
            const double obj = entropic_objective_log2(g, p, qn);
            if (obj > out.obj) {
                q = std::move(qn);
                out.obj = obj;
                out.q = q;
                accepted = true;
                if (bt == 0) eta = std::min(eta * 2.0, 64.0);
                break;
            }
        }
        if (!accepted) {
            out.converged = true;
            break;
        }
        out.pruned += prune(q, opts.prune_below);
    }
    return out;
}

}  // namespace

EdgeDistribution EntropicResult::distribution(const Hypergraph& g) const {
    return EdgeDistribution::from_unordered(g, q);
}

EntropicResult entropic_density(const Hypergraph& g, double p,
                                const EntropicOptions& opts) {
    if (g.edge_count() == 0) throw PreconditionFailure("graph has no edges");
    if (!(p > 0)) throw InvalidParameters("p must be positive");
    const size_t m = static_cast<size_t>(g.edge_count());
    std::vector<std::vector<double>> starts;
    if (opts.uniform_start) starts.emplace_back(m, 1.0 / double(m));
    if (opts.edge_starts)
        for (size_t e = 0; e < m; ++e) {
            std::vector<double> q(m, 0.0);
            q[e] = 1.0;
            starts.push_back(std::move(q));
        }
    for (int s = 0; s < opts.random_starts; ++s) {
        auto rng = rng_stream(opts.seed, 1000 + static_cast<uint64_t>(s));
        std::exponential_distribution<double> exp1(1.0);
        std::vector<double> q(m);
        for (double& v : q) v = exp1(rng);
        starts.push_back(std::move(q));
    }
    for (const auto& seed_q : opts.extra_seeds) {
        if (seed_q.size() == m) starts.push_back(seed_q);
    }

    EntropicResult out;
    out.seed = opts.seed;
    out.starts = static_cast<int>(starts.size());
    bool have = false;
    for (auto& q0 : starts) {
        FixedPointOutcome fp = fixed_point(g, p, std::move(q0), opts);
        if (!fp.converged) {
            FixedPointOutcome polish = mirror_ascent(g, p, fp.q, opts, opts.max_iters);
            polish.pruned += fp.pruned;
            polish.iterations += fp.iterations;
            fp = std::move(polish);
        }
        if (!have || fp.obj > out.objective_log2) {
            have = true;
            out.objective_log2 = fp.obj;
            out.q = fp.q;
            out.converged = fp.converged;
            out.iterations = fp.iterations;
        }
        out.pruned += fp.pruned;
    }
    out.value = std::exp2(out.objective_log2);
    return out;
}

}  // namespace turan
