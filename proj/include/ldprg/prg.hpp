#pragma once

#include "ldprg/hitting.hpp"

namespace ldprg {

/// Parameters of the composed generator. `field` is F_q (possibly itself a
/// tower); the PHSG extends it by k = 2^ell quadratic levels.
struct PRGParams {
    int n = 0;            // output dimension is n + 1
    int d = 0;            // degree bound of the fooled polynomials
    FieldRef field;       // F_q
    double eps = 0;       // target error
    int k = 0;            // extension degree, a power of 2
    int ell = 0;          // log2 k
    double delta1 = 0;    // c*d / q^k
    double delta2 = 0;    // c*d / q
    double c = 4;
    double C = 1;
    bool below_threshold = false;  // q < C*(d log d)^4 / eps^2: outside guarantee
};

/// Pick k as the smallest power of 2 with ceil(d/log2 q) + 1 < k <= 2*ceil(d/log2 q) + 2
/// (the interval has ratio 2, so one always exists). Throws CharTooSmall when
/// the characteristic is below d(d-1)+1.
PRGParams choose_params(int n, int d, FieldRef field, double eps, double c = 4, double C = 1);

/// A generator instance: parameters plus the frozen randomness-independent
/// structure — the tower for H1, its evaluation grid S1 over E, and the grid
/// S2 over F_q for H2.
struct PrgContext {
    PRGParams params;
    TowerSpec tower;
    std::vector<Fe> S1;       // subset of E
    std::vector<Fe> S2;       // subset of F_q
    u64 tower_seed_bits = 0;  // randomness spent building the tower
};

/// Build a context from a randomness stream: tower via the sampler strategy
/// with failure budget delta1/2, S1 = all of E and S2 = all of F_q (both
/// subject to `budget`).
PrgContext make_context(const PRGParams& params, BitStream& bits, u128 budget = (u128{1} << 24));

struct Seed {
    u128 r = 0;          // H1 grid seed in [0, |S1|^n)
    u128 s = 0;          // H2 grid seed in [0, |S2|^n)
    std::vector<Fe> t;   // evaluation point in F_q^ell
    Fe u, v;             // scalars in F_q
};

/// |S1|^n * |S2|^n * q^ell * q^2.
u128 seed_space(const PrgContext& ctx);

/// Mixed-radix decode of [0, seed_space): v least significant, then u, then
/// t_ell..t_1, then s, then r most significant.
Seed decode_seed(const PrgContext& ctx, u128 index);

/// G(r, s, t, u, v) = (H1(r)_1(t)*v + H2(s)_1*u, ..., H1(r)_n(t)*v + H2(s)_n*u, u).
std::vector<Fe> prg_generate(const PrgContext& ctx, const Seed& seed);

struct SeedLength {
    double log_t1 = 0;   // tower bits + n*log2|S1|
    double log_t2 = 0;   // n*log2|S2|
    double log_qell = 0; // ell*log2 q
    double log_uv = 0;   // 2*log2 q
    double total = 0;    // exact sum of the four components
    bool grid_inflated = false;  // grid seed spaces exceed O(d log n + log q)
};

SeedLength seed_length(const PrgContext& ctx);

/// Trace-reduced generator: absolute_trace applied coordinate-wise to
/// prg_generate, mapping into F_p^{n+1}. Requires a non-prime F_q.
std::vector<Fe> trace_prg(const PrgContext& ctx, const Seed& seed);

}  // namespace ldprg
