#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ldprg/errors.hpp"

namespace ldprg {

using u64 = std::uint64_t;

/// Deterministic bit source with a consumption counter. Backed either by a
/// fixed bit vector (finite; throws InsufficientRandomness when exhausted)
/// or by a seeded mt19937_64 (unbounded).
class BitStream {
  public:
    explicit BitStream(u64 rng_seed);
    explicit BitStream(std::vector<bool> bits);

    bool next();
    u64 bits(int count);  // big-endian pack of `count` bits
    u64 bits_consumed() const { return consumed_; }

    /// Uniform draw from [0, n) by rejection on ceil(log2 n)-bit words;
    /// portable across platforms (no std::uniform_int_distribution).
    u64 uniform_below(u64 n);

  private:
    std::optional<std::mt19937_64> rng_;
    u64 pending_ = 0;
    int pending_count_ = 0;
    std::vector<bool> fixed_;
    std::size_t pos_ = 0;
    u64 consumed_ = 0;
};

struct SamplerParams {
    u64 domain_size = 0;  // points are indices in [0, domain_size)
    double eps = 0;       // accuracy
    double delta = 0;     // confidence
    u64 t = 0;            // sample count
    int bits_per_sample() const;
    u64 randomness_budget() const { return t * static_cast<u64>(bits_per_sample()); }
};

/// t = ceil(ln(2/delta) / (2 eps^2)), the Chernoff sample count for the
/// independent-samples averaging sampler.
u64 chernoff_samples(double eps, double delta);

SamplerParams make_sampler_params(u64 domain_size, double eps, double delta);

/// Independent uniform samples; consumes exactly t * ceil(log2 domain) bits
/// plus any rejection overhead (reported through the stream counter).
std::vector<u64> sampler_draw(const SamplerParams& params, BitStream& bits);

}  // namespace ldprg
