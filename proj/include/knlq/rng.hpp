#pragma once

#include <cstdint>

namespace knlq {

// SplitMix64 finalizer; the mixing primitive behind stream keys and seed
// derivation.
std::uint64_t mix64(std::uint64_t z);

// Counter-based splittable RNG.
//
// Each stream is identified by (master_seed, replicate_index, role_tag). The
// per-stream key is derived by chaining SplitMix64 finalizers over the three
// identifiers, and output word i is finalize(key + i * golden_gamma), i.e. a
// pure function of (key, i). Distinct (replicate, role) pairs map to distinct
// keys, so streams never share state and may be consumed from different
// threads as long as each stream object itself stays thread-private.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t replicate_index,
              std::uint64_t role_tag = 0);

    std::uint64_t next_u64();

    // Uniform on [0,1) with 53 random bits.
    double uniform();
    // Uniform on (0,1); never returns 0 (safe as a log argument).
    double uniform_open();

    // Standard normal via Box-Muller; the second variate of each pair is
    // cached.
    double normal();

    // Gamma(shape, scale 1). Marsaglia-Tsang for shape >= 1; for shape < 1
    // samples shape+1 and applies the U^{1/shape} boost.
    double gamma(double shape);

    std::uint64_t master_seed() const { return master_seed_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace knlq
