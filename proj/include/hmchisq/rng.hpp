#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hmchisq {

/// Seeded random number stream with explicit substreams.
///
/// Identical (seed, stream_id) pairs reproduce identical variate sequences;
/// distinct stream_ids give statistically independent sequences, so parallel
/// Monte Carlo workers can each own one stream and results do not depend on
/// scheduling. Normal variates use Box-Muller on top of mt19937_64, keeping
/// the sequence fully determined by this code rather than by standard-library
/// distribution internals.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Mixed 64-bit identity of this (seed, stream) pair.
    std::uint64_t key() const noexcept { return key_; }

    /// Derived stream for worker/block k; disjoint for distinct k.
    RngStream substream(std::uint64_t k) const { return RngStream(key_, k + 1); }

    /// Uniform variate in (0, 1].
    double uniform();

    /// Standard normal variate.
    double normal();

    std::uint64_t next_u64() { return engine_(); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// n i.i.d. standard normal variates from the given stream.
std::vector<double> standard_normal_sample(RngStream& rng, std::size_t n);

}  // namespace hmchisq
