#include "ldprg/sampler.hpp"

#include <cmath>

namespace ldprg {

BitStream::BitStream(u64 rng_seed) : rng_(std::mt19937_64{rng_seed}) {}

BitStream::BitStream(std::vector<bool> bits) : fixed_(std::move(bits)) {}

bool BitStream::next() {
    ++consumed_;
    if (rng_) {
        if (pending_count_ == 0) {
            pending_ = (*rng_)();
            pending_count_ = 64;
        }
        bool b = (pending_ >> (pending_count_ - 1)) & 1;
        --pending_count_;
        return b;
    }
    if (pos_ >= fixed_.size()) throw InsufficientRandomness();
    return fixed_[pos_++];
}

u64 BitStream::bits(int count) {
    u64 v = 0;
    for (int i = 0; i < count; ++i) v = (v << 1) | static_cast<u64>(next());
    return v;
}

u64 BitStream::uniform_below(u64 n) {
    if (n == 0) throw Error("uniform_below(0)");
    if (n == 1) return 0;
    int m = 0;
    while ((u64{1} << m) < n) ++m;
    for (;;) {
        u64 v = bits(m);
        if (v < n) return v;
    }
}

int SamplerParams::bits_per_sample() const {
    int m = 0;
    while ((u64{1} << m) < domain_size) ++m;
    return m;
}

u64 chernoff_samples(double eps, double delta) {
    return static_cast<u64>(std::ceil(std::log(2.0 / delta) / (2.0 * eps * eps)));
}

SamplerParams make_sampler_params(u64 domain_size, double eps, double delta) {
    if (!(0 < delta && delta <= eps && eps < 1)) throw Error("need 0 < delta <= eps < 1");
    SamplerParams p;
    p.domain_size = domain_size;
    p.eps = eps;
    p.delta = delta;
    p.t = chernoff_samples(eps, delta);
    return p;
}

std::vector<u64> sampler_draw(const SamplerParams& params, BitStream& bits) {
    std::vector<u64> out;
    out.reserve(params.t);
    for (u64 i = 0; i < params.t; ++i) out.push_back(bits.uniform_below(params.domain_size));
    return out;
}

}  // namespace ldprg
