#include "ldprg/hitting.hpp"

namespace ldprg {

u128 HsgSpec::seed_space() const {
    u128 s = 1;
    for (int i = 0; i < n; ++i) s *= S.size();
    return s;
}

HsgSpec make_grid_hsg(FieldRef field, int n, int d, std::vector<Fe> S) {
    if (S.empty()) throw Error("grid HSG needs a nonempty evaluation set");
    for (const auto& s : S)
        if (!same_field(s.field(), field)) throw DescriptorMismatch();
    HsgSpec spec;
    spec.field = std::move(field);
    spec.n = n;
    spec.d = d;
    spec.kind = HsgSpec::Kind::grid;
    spec.S = std::move(S);
    return spec;
}

HsgSpec make_uniform_hsg(FieldRef field, int n, int d, u128 budget) {
    auto S = field_enumerate(field, budget);
    HsgSpec spec = make_grid_hsg(field, n, d, std::move(S));
    spec.kind = HsgSpec::Kind::uniform;
    return spec;
}

std::vector<Fe> hsg_sample(const HsgSpec& spec, u128 seed) {
    if (seed >= spec.seed_space()) throw SeedOutOfRange();
    std::vector<Fe> point(spec.n, fe_zero(spec.field));
    for (int i = spec.n - 1; i >= 0; --i) {
        point[i] = spec.S[static_cast<std::size_t>(seed % spec.S.size())];
        seed /= spec.S.size();
    }
    return point;
}

HsgSpec hsg_over_extension(const HsgSpec& base_spec, const TowerSpec& tower, u128 budget) {
    if (!same_field(base_spec.field, tower.base)) throw DescriptorMismatch();
    std::vector<Fe> S;
    S.reserve(base_spec.S.size());
    for (const auto& s : base_spec.S) S.push_back(tower_embed(tower, s));
    HsgSpec spec = make_grid_hsg(tower.full, base_spec.n, base_spec.d, std::move(S));
    if (base_spec.kind == HsgSpec::Kind::uniform) {
        // widen to the whole extension field for the density gain d/Q^k
        spec.S = field_enumerate(tower.full, budget);
        spec.kind = HsgSpec::Kind::uniform;
    }
    return spec;
}

bool PolyPoint::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

PolyPoint PolyPoint::zero(const FieldRef& base, int n, int ell) {
    PolyPoint p;
    p.ell = ell;
    p.entries.assign(n, MultiPoly(base, ell));
    return p;
}

PolyPoint phsg_sample_fixed(const TowerSpec& tower, const std::vector<Fe>& S_ext, int n,
                            u128 hsg_seed) {
    HsgSpec ext = make_grid_hsg(tower.full, n, 0, S_ext);
    auto pt = hsg_sample(ext, hsg_seed);
    PolyPoint out;
    out.ell = tower.ell;
    out.entries.reserve(n);
    for (const auto& e : pt) out.entries.push_back(tower_lift(tower, e));
    return out;
}

PhsgResult phsg_sample(const PhsgConfig& cfg, BitStream& tower_bits, u128 hsg_seed, u128 budget) {
    if (cfg.base->p == 2) throw CharacteristicTwo();
    const u64 k = u64{1} << cfg.ell;
    u64 tries = cfg.tower_tries;
    if (tries == 0) tries = tower_tries_for(k, cfg.delta / 2);
    PhsgResult res;
    TowerBuildStats stats;
    auto tower = build_tower(cfg.base, cfg.ell, tower_bits, TowerStrategy::sampler, tries, &stats);
    res.tower_bits = stats.bits_consumed;
    if (!tower) {
        res.tower_failed = true;
        res.point = PolyPoint::zero(cfg.base, cfg.n, cfg.ell);
        return res;
    }
    res.tower = *tower;
    auto S_ext = field_enumerate(tower->full, budget);
    res.point = phsg_sample_fixed(*tower, S_ext, cfg.n, hsg_seed);
    return res;
}

}  // namespace ldprg
