#include "ldprg/prg.hpp"

#include <cmath>

namespace ldprg {

namespace {

// Smallest m with q^m >= 2^d, i.e. ceil(d / log2 q), by exact integer
// comparison (q^m vs 2^d in 128 bits; both sides stay in range at desk scale).
int ceil_d_over_log2q(int d, u128 q) {
    u128 target = u128{1} << d;
    u128 acc = 1;
    int m = 0;
    while (acc < target) {
        acc *= q;
        ++m;
    }
    return m;
}

}  // namespace

PRGParams choose_params(int n, int d, FieldRef field, double eps, double c, double C) {
    if (d < 1) throw Error("degree bound must be >= 1");
    if (!(eps > 0 && eps < 1)) throw Error("eps must lie in (0, 1)");
    const u64 p = field->p;
    if (p < static_cast<u64>(d) * (d - 1) + 1)
        throw CharTooSmall("characteristic " + std::to_string(p) + " < d(d-1)+1 = " +
                           std::to_string(static_cast<u64>(d) * (d - 1) + 1));
    const u128 q = field->size();
    const int m = ceil_d_over_log2q(d, q);
    int k = 1;
    while (k <= m + 1) k <<= 1;
    // existence: the interval (m+1, 2m+2] has ratio 2
    if (k > 2 * m + 2) throw Error("no valid power of 2 for k");  // unreachable
    PRGParams params;
    params.n = n;
    params.d = d;
    params.field = std::move(field);
    params.eps = eps;
    params.k = k;
    params.ell = 0;
    while ((1 << params.ell) < k) ++params.ell;
    params.c = c;
    params.C = C;
    const double qd = static_cast<double>(q);
    params.delta1 = c * d / std::pow(qd, k);
    params.delta2 = c * d / qd;
    const double ld = d > 1 ? std::log2(static_cast<double>(d)) : 0.0;
    params.below_threshold = qd < C * std::pow(d * ld, 4.0) / (eps * eps);
    return params;
}

PrgContext make_context(const PRGParams& params, BitStream& bits, u128 budget) {
    PrgContext ctx;
    ctx.params = params;
    const u64 before = bits.bits_consumed();
    u64 tries = tower_tries_for(u64{1} << params.ell, params.delta1 / 2);
    auto tower = build_tower(params.field, params.ell, bits, TowerStrategy::sampler, tries);
    if (!tower) throw Error("tower construction exhausted its tries");
    ctx.tower = *tower;
    ctx.tower_seed_bits = bits.bits_consumed() - before;
    ctx.S1 = field_enumerate(ctx.tower.full, budget);
    ctx.S2 = field_enumerate(params.field, budget);
    return ctx;
}

u128 seed_space(const PrgContext& ctx) {
    const u128 q = ctx.params.field->size();
    u128 total = q * q;
    for (int i = 0; i < ctx.params.ell; ++i) total *= q;
    for (int i = 0; i < ctx.params.n; ++i) total *= ctx.S1.size() * u128{ctx.S2.size()};
    return total;
}

Seed decode_seed(const PrgContext& ctx, u128 index) {
    if (index >= seed_space(ctx)) throw SeedOutOfRange();
    const FieldRef& f = ctx.params.field;
    const u128 q = f->size();
    Seed seed;
    seed.v = fe_from_index(f, index % q);
    index /= q;
    seed.u = fe_from_index(f, index % q);
    index /= q;
    seed.t.assign(ctx.params.ell, fe_zero(f));
    for (int i = ctx.params.ell - 1; i >= 0; --i) {
        seed.t[i] = fe_from_index(f, index % q);
        index /= q;
    }
    u128 s_space = 1;
    for (int i = 0; i < ctx.params.n; ++i) s_space *= ctx.S2.size();
    seed.s = index % s_space;
    seed.r = index / s_space;
    return seed;
}

std::vector<Fe> prg_generate(const PrgContext& ctx, const Seed& seed) {
    const int n = ctx.params.n;
    PolyPoint h1 = phsg_sample_fixed(ctx.tower, ctx.S1, n, seed.r);
    HsgSpec h2spec = make_grid_hsg(ctx.params.field, n, ctx.params.d, ctx.S2);
    std::vector<Fe> h2 = hsg_sample(h2spec, seed.s);
    std::vector<Fe> out;
    out.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        Fe a = mul(h1.entries[i].eval(seed.t), seed.v);
        out.push_back(add(a, mul(h2[i], seed.u)));
    }
    out.push_back(seed.u);
    return out;
}

SeedLength seed_length(const PrgContext& ctx) {
    const double lq = std::log2(static_cast<double>(ctx.params.field->size()));
    const int n = ctx.params.n;
    SeedLength sl;
    sl.log_t1 = static_cast<double>(ctx.tower_seed_bits) +
                n * std::log2(static_cast<double>(ctx.S1.size()));
    sl.log_t2 = n * std::log2(static_cast<double>(ctx.S2.size()));
    sl.log_qell = ctx.params.ell * lq;
    sl.log_uv = 2 * lq;
    sl.total = sl.log_t1 + sl.log_t2 + sl.log_qell + sl.log_uv;
    // the grid HSG seed spaces grow like n*log q, not d*log n + log q
    const double target = ctx.params.d * std::log2(static_cast<double>(std::max(2, n))) + lq;
    sl.grid_inflated = sl.log_t2 > target || sl.log_t1 > 2 * target + ctx.tower_seed_bits;
    return sl;
}

std::vector<Fe> trace_prg(const PrgContext& ctx, const Seed& seed) {
    if (ctx.params.field->is_prime()) throw PrimeFieldParams();
    auto raw = prg_generate(ctx, seed);
    std::vector<Fe> out;
    out.reserve(raw.size());
    for (const auto& x : raw) out.push_back(absolute_trace(x, /*strict=*/true));
    return out;
}

}  // namespace ldprg
