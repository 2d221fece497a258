#pragma once

#include "ldprg/tower.hpp"

namespace ldprg {

struct Rational;  // oracle/distribution.hpp

/// Schwartz-Zippel grid hitting set generator: seeds decode in base |S| to
/// coordinate picks from S, so every nonzero degree-<=d polynomial vanishes
/// on at most a d/|S| fraction of the seed space.
struct HsgSpec {
    FieldRef field;
    int n = 0;
    int d = 0;
    enum class Kind { grid, uniform } kind = Kind::grid;
    std::vector<Fe> S;  // for uniform, the whole field in enumeration order

    double delta() const { return static_cast<double>(d) / static_cast<double>(S.size()); }
    u128 seed_space() const;
};

HsgSpec make_grid_hsg(FieldRef field, int n, int d, std::vector<Fe> S);
HsgSpec make_uniform_hsg(FieldRef field, int n, int d, u128 budget = (u128{1} << 24));

/// Big-endian base-|S| decode; bijective from [0, |S|^n) onto the grid.
std::vector<Fe> hsg_sample(const HsgSpec& spec, u128 seed);

/// Same grid viewed over the extension field E of the tower: points embed,
/// density is unchanged (a grid over a subset keeps delta = d/|S| against
/// polynomials over any extension). With S_E = all of E the density defect
/// drops to d/Q^k.
HsgSpec hsg_over_extension(const HsgSpec& base_spec, const TowerSpec& tower,
                           u128 budget = (u128{1} << 24));

/// A PHSG output: n multilinear polynomials in w_1..w_ell over the base
/// field (total degree <= ell each).
struct PolyPoint {
    std::vector<MultiPoly> entries;
    int ell = 0;

    bool is_zero() const;
    static PolyPoint zero(const FieldRef& base, int n, int ell);
};

struct PhsgConfig {
    FieldRef base;
    int n = 0;
    int d = 0;
    int ell = 0;
    double delta = 0;  // overall defect target, split delta/2 + delta/2
    double c = 4;      // configured constant in delta >= c*d/q^k
    u64 tower_tries = 0;  // 0: derive from delta/2
};

struct PhsgResult {
    PolyPoint point;
    bool tower_failed = false;
    std::optional<TowerSpec> tower;
    u64 tower_bits = 0;
};

/// H = phi o Hhat: build the tower from the randomness stream with failure
/// budget delta/2, sample the full-E grid HSG with defect delta/2, and lift
/// coordinate-wise through phi. On tower failure the output is the all-zero
/// PolyPoint (the failure is absorbed into the defect budget).
PhsgResult phsg_sample(const PhsgConfig& cfg, BitStream& tower_bits, u128 hsg_seed,
                       u128 budget = (u128{1} << 24));

/// PHSG sampling against a pre-built tower (no tower randomness consumed),
/// with an explicit E-grid.
PolyPoint phsg_sample_fixed(const TowerSpec& tower, const std::vector<Fe>& S_ext, int n,
                            u128 hsg_seed);

}  // namespace ldprg
