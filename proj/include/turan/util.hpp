#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

// x*log2(x) with the 0*log0 = 0 convention.
inline double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Deterministic per-stream RNG: substreams are derived from (seed, stream)
// by counter, never by scheduling order.
inline std::mt19937_64 rng_stream(uint64_t seed, uint64_t stream) {
    const uint64_t mixed = stream ^ uint64_t(0x9e3779b97f4a7c15ull);
    std::seed_seq seq{seed, mixed};
    return std::mt19937_64(seq);
}

// FNV-1a 64-bit, used for input digests in run manifests.
inline uint64_t fnv1a64(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

// Fixed float formatting (17 significant digits) so JSON outputs are
// byte-identical across runs.
std::string format_g17(double x);

std::string hex64(uint64_t v);

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace turan
