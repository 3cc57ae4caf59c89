#include "turan/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "turan/util.hpp"

namespace turan {

double oriented_edge_sum(const Hypergraph& g, const std::vector<double>& x) {
    double kfact = 1.0;
    for (int i = 2; i <= g.k(); ++i) kfact *= i;
    double s = 0.0;
    for (const auto& e : g.edges()) {
        double prod = 1.0;
        for (int v : e) prod *= x[v];
        s += prod;
    }
    return kfact * s;
}

namespace {

std::vector<double> gradient(const Hypergraph& g, const std::vector<double>& x) {
    double kfact = 1.0;
    for (int i = 2; i <= g.k(); ++i) kfact *= i;
    std::vector<double> grad(g.n(), 0.0);
    for (const auto& e : g.edges()) {
        for (size_t i = 0; i < e.size(); ++i) {
            double prod = 1.0;
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) prod *= x[e[j]];
            grad[e[i]] += kfact * prod;
        }
    }
    return grad;
}

void project_p_sphere(std::vector<double>& x, double p) {
    double norm = 0.0;
    for (double& v : x) {
        if (v < 0.0) v = 0.0;
        norm += std::pow(v, p);
    }
    if (norm <= 0.0) return;
    const double scale = std::pow(norm, -1.0 / p);
    for (double& v : x) v *= scale;
}

struct StartResult {
    double value = 0.0;
    std::vector<double> x;
    bool converged = true;
    long iterations = 0;
};

StartResult ascend(const Hypergraph& g, double p, std::vector<double> x,
                   const OptOptions& opts) {
    project_p_sphere(x, p);
    double f = oriented_edge_sum(g, x);
    double eta = 1.0;
    long it = 0;
    bool converged = false;
    for (; it < opts.max_iters; ++it) {
        const std::vector<double> grad = gradient(g, x);
        // ascent direction of the normalized objective S(x/||x||_p) on the
        // sphere: g_v - k S x_v^{p-1}
        const double mu = g.k() * f;
        std::vector<double> dir(x.size());
        double dnorm2 = 0.0;
        for (size_t v = 0; v < x.size(); ++v) {
            const double radial =
                x[v] > 0 ? mu * std::pow(x[v], p - 1.0) : (p == 1.0 ? mu : 0.0);
            dir[v] = grad[v] - radial;
            if (x[v] <= 0.0 && dir[v] < 0.0) dir[v] = 0.0;  // blocked at the boundary
            dnorm2 += dir[v] * dir[v];
        }
        const double station = 1e-10 * std::max(1.0, std::abs(mu));
        if (dnorm2 <= station * station) {
            converged = true;
            break;
        }
        bool accepted = false;
        bool first_try = true;
        double eta_try = eta;
        std::vector<double> y;
        double fy = f;
        for (int bt = 0; bt < 80; ++bt, eta_try *= 0.5) {
            y = x;
            for (size_t v = 0; v < y.size(); ++v) y[v] += eta_try * dir[v];
            project_p_sphere(y, p);
            fy = oriented_edge_sum(g, y);
            double along = 0.0;  // <dir, y - x>
            for (size_t v = 0; v < y.size(); ++v) along += dir[v] * (y[v] - x[v]);
            if (fy > f && fy >= f + 1e-4 * std::max(along, 0.0)) {
                accepted = true;
                first_try = (bt == 0);
                break;
            }
        }
        if (!accepted) {
            converged = true;  // no improving step along the gradient
            break;
        }
        const double change = fy - f;
        x = std::move(y);
        f = fy;
        eta = first_try ? std::min(eta_try * 2.0, 1e3) : eta_try;
        // a shrunk step can make the change artificially small, so the
        // relative-change stop only counts on full steps
        if (first_try && change <= opts.rel_tol * std::max(std::abs(f), 1e-300)) {
            converged = true;
            ++it;
            break;
        }
    }
    return StartResult{f, std::move(x), converged, it};
}

double kkt_residual(const Hypergraph& g, const std::vector<double>& x, double p) {
    if (p < 1.0) return 0.0;
    std::vector<double> grad = gradient(g, x);
    const double s = oriented_edge_sum(g, x);
    const double mu = g.k() * s;
    double res = 0.0;
    for (size_t v = 0; v < x.size(); ++v) {
        double r;
        if (x[v] > 1e-10)
            r = std::abs(grad[v] - mu * std::pow(x[v], p - 1.0));
        else if (p == 1.0)
            r = std::max(0.0, grad[v] - mu);
        else
            r = std::max(0.0, grad[v]);
        res = std::max(res, r);
    }
    return res / std::max(1.0, std::abs(mu));
}

OptResult optimize(const Hypergraph& g, double p, const OptOptions& opts) {
    OptResult out;
    out.p = p;
    out.seed = opts.seed;
    if (g.edge_count() == 0 || g.n() == 0) {
        out.weights.assign(g.n(), 0.0);
        return out;
    }
    std::vector<std::vector<double>> starts;
    if (opts.uniform_start) starts.emplace_back(g.n(), 1.0);
    if (opts.edge_starts) {
        for (const auto& e : g.edges()) {
            std::vector<double> x(g.n(), 0.0);
            for (int v : e) x[v] = 1.0;
            starts.push_back(std::move(x));
        }
    }
    for (int s = 0; s < opts.random_starts; ++s) {
        auto rng = rng_stream(opts.seed, static_cast<uint64_t>(s));
        std::exponential_distribution<double> exp1(1.0);
        std::vector<double> x(g.n());
        for (double& v : x) v = exp1(rng);
        starts.push_back(std::move(x));
    }
    out.starts = static_cast<int>(starts.size());
    bool have = false;
    for (auto& x0 : starts) {
        StartResult r = ascend(g, p, std::move(x0), opts);
        if (!have || r.value > out.value) {
            have = true;
            out.value = r.value;
            out.weights = std::move(r.x);
            out.converged = r.converged;
            out.iterations = r.iterations;
        }
    }
    out.kkt_residual = kkt_residual(g, out.weights, p);
    return out;
}

}  // namespace

OptResult blowup_density(const Hypergraph& g, const OptOptions& opts) {
    return optimize(g, 1.0, opts);
}

OptResult p_spectral(const Hypergraph& g, double p, const OptOptions& opts) {
    if (!(p > 0.0)) throw InvalidParameters("p must be positive");
    return optimize(g, p, opts);
}

Rational closed_form_complete(int r, int k) {
    if (k < 1 || k > r) throw InvalidParameters("requires 1 <= k <= r");
    Rational out = 1;
    for (int i = 1; i < k; ++i) out *= Rational(r - i, r);
    return out;
}

double adjacency_spectral_radius(const Hypergraph& g) {
    if (g.k() != 2) throw InvalidParameters("spectral radius requires a 2-graph");
    const int n = g.n();
    if (n == 0 || g.edge_count() == 0) return 0.0;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<double> x(n, 1.0 / std::sqrt(double(n))), ax(n);
    double lam = 0.0, lam_prev = -1.0;
    for (long it = 0; it < 1000000; ++it) {
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int u : adj[v]) s += x[u];
            ax[v] = s;
        }
        lam = 0.0;
        for (int v = 0; v < n; ++v) lam += x[v] * ax[v];  // Rayleigh, ||x|| = 1
        double resid = 0.0;
        for (int v = 0; v < n; ++v) resid = std::max(resid, std::abs(ax[v] - lam * x[v]));
        if (resid <= 1e-10 * std::max(1.0, lam) &&
            std::abs(lam - lam_prev) <= 1e-12 * std::max(1.0, lam))
            break;
        lam_prev = lam;
        // power step on A + I; the shift keeps bipartite spectra from cycling
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            ax[v] += x[v];
            norm += ax[v] * ax[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = ax[v] / norm;
    }
    return lam;
}

std::optional<Rational> motzkin_straus_exact(const Hypergraph& g) {
    if (g.k() != 2 || g.n() > 12) return std::nullopt;
    const int n = g.n();
    if (n == 0 || g.edge_count() == 0) return Rational(0);
    std::vector<uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e[0]] |= (1u << e[1]);
        adj[e[1]] |= (1u << e[0]);
    }
    int omega = 1;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        const int sz = __builtin_popcount(s);
        if (sz <= omega) continue;
        bool clique = true;
        for (int v = 0; v < n && clique; ++v)
            if (s & (1u << v))
                if ((adj[v] & s) != (s & ~(1u << v))) clique = false;
        if (clique) omega = sz;
    }
    return Rational(omega - 1, omega);
}

}  // namespace turan
