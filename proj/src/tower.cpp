#include "ldprg/tower.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace ldprg {

Fe TowerSpec::defining_constant(int i) const {
    if (i < 1 || i > ell) throw Error("tower level out of range");
    const int base_levels = base->levels();
    auto level_field = std::make_shared<FieldDesc>();
    level_field->p = full->p;
    level_field->h.assign(full->h.begin(), full->h.begin() + base_levels + i - 1);
    return Fe::from_coeffs(level_field, full->h[base_levels + i - 1]);
}

MultiPoly TowerSpec::defining_poly(int i) const {
    if (!base->is_prime()) throw Error("defining_poly requires a prime base field");
    if (i < 1 || i > ell) throw Error("tower level out of range");
    const auto& coeffs = full->h[i - 1];
    MultiPoly out(base, ell);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0) continue;
        Exps e(ell, 0);
        for (int j = 0; j < i - 1; ++j) e[j] = static_cast<int>((m >> j) & 1);
        out.add_term(e, Fe(base, coeffs[m]));
    }
    return out;
}

MultiPoly tower_lift(const TowerSpec& t, const Fe& a) {
    if (!same_field(a.field(), t.full)) throw DescriptorMismatch();
    const std::size_t base_deg = t.base->degree();
    const std::size_t k = t.extension_degree();
    MultiPoly out(t.base, t.ell);
    for (std::size_t m = 0; m < k; ++m) {
        // coefficient of the multilinear monomial indexed by m: the
        // base-field element spread over the base coordinates
        std::vector<u64> c(base_deg);
        bool nonzero = false;
        for (std::size_t j = 0; j < base_deg; ++j) {
            // full-tower index: base bits low, w bits high
            c[j] = a.coeffs()[m * base_deg + j];
            nonzero |= (c[j] != 0);
        }
        if (!nonzero) continue;
        Exps e(t.ell, 0);
        for (int j = 0; j < t.ell; ++j) e[j] = static_cast<int>((m >> j) & 1);
        out.add_term(e, Fe::from_coeffs(t.base, std::move(c)));
    }
    return out;
}

Fe tower_embed(const TowerSpec& t, const Fe& base_elem) {
    if (!same_field(base_elem.field(), t.base)) throw DescriptorMismatch();
    std::vector<u64> c(t.full->degree(), 0);
    std::copy(base_elem.coeffs().begin(), base_elem.coeffs().end(), c.begin());
    return Fe::from_coeffs(t.full, std::move(c));
}

std::optional<Fe> tower_restrict(const TowerSpec& t, const Fe& elem) {
    if (!same_field(elem.field(), t.full)) throw DescriptorMismatch();
    const std::size_t base_deg = t.base->degree();
    for (std::size_t j = base_deg; j < elem.coeffs().size(); ++j)
        if (elem.coeffs()[j] != 0) return std::nullopt;
    std::vector<u64> c(elem.coeffs().begin(), elem.coeffs().begin() + base_deg);
    return Fe::from_coeffs(t.base, std::move(c));
}

Fe tower_reduce(const TowerSpec& t, const MultiPoly& g) {
    if (!same_field(g.field(), t.base)) throw DescriptorMismatch();
    if (g.nvars() > t.ell) throw ArityMismatch("polynomial has more variables than tower levels");
    Fe acc = fe_zero(t.full);
    // evaluate g at the residue classes of w_1..w_ell, which is exactly
    // reduction modulo the defining ideal
    std::vector<Fe> wpow_cache;
    for (const auto& [e, c] : g.terms()) {
        Fe term = tower_embed(t, c);
        for (int v = 0; v < g.nvars(); ++v) {
            if (e[v] == 0) continue;
            // w_{v+1} as a full-tower element
            std::vector<u64> wc(t.full->degree(), 0);
            wc[t.base->degree() << v] = 1;
            Fe w = Fe::from_coeffs(t.full, std::move(wc));
            term = mul(term, pow(w, static_cast<u128>(e[v])));
        }
        acc = add(acc, term);
    }
    return acc;
}

bool is_irreducible_univariate(const UniPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw NonMonic();
    if (!f.is_monic()) throw NonMonic();
    const int a = f.degree();
    if (a == 1) return true;
    const u128 q = f.field()->size();
    const UniPoly x = UniPoly::x(f.field());
    UniPoly xq = x;
    for (int i = 1; i < a; ++i) {
        xq = powmod(xq, q, f);  // x^{q^i} mod f
        UniPoly g = gcd(f, sub(xq, x));
        if (g.degree() != 0) return false;
    }
    xq = powmod(xq, q, f);
    return sub(xq, x).is_zero();  // f | x^{q^a} - x
}

bool quadratic_irreducible_fast(const Fe& h) {
    const FieldRef& f = h.field();
    if (f->p == 2) throw CharacteristicTwo();
    if (h.is_zero()) return false;
    u128 e = (f->size() - 1) / 2;
    return !pow(h, e).is_one();
}

namespace {

// Sample a uniform nonzero element of the level field above `base` with
// i - 1 extra tower levels (i.e. h_i's home), as a raw coefficient vector.
std::vector<u64> sample_level_constant(const FieldRef& base, int i, BitStream& bits) {
    const std::size_t len = base->degree() << (i - 1);
    const u64 p = base->p;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<u64> c(len);
        bool nonzero = false;
        for (auto& x : c) {
            x = bits.uniform_below(p);
            nonzero |= (x != 0);
        }
        if (nonzero) return c;
    }
    throw RejectionTimeout("nonzero defining constant");
}

FieldRef extend_once(const FieldRef& f, std::vector<u64> h) {
    std::vector<std::vector<u64>> hh = f->h;
    hh.push_back(std::move(h));
    return FieldDesc::make_tower(f->p, std::move(hh));
}

// One whole tuple draw: returns the full descriptor if every level is
// irreducible, nullopt otherwise.
std::optional<FieldRef> try_tuple(const FieldRef& base, int ell, BitStream& bits) {
    FieldRef cur = base;
    std::vector<std::vector<u64>> hs;
    bool ok = true;
    // draw the entire tuple so a failed tuple still consumes its bits
    for (int i = 1; i <= ell; ++i) hs.push_back(sample_level_constant(base, i, bits));
    for (int i = 1; i <= ell && ok; ++i) {
        Fe h = Fe::from_coeffs(cur, hs[i - 1]);
        ok = quadratic_irreducible_fast(h);
        if (ok) cur = extend_once(cur, hs[i - 1]);
    }
    if (!ok) return std::nullopt;
    return cur;
}

}  // namespace

u64 tower_tries_for(u64 k, double delta) {
    // (1 - 1/k)^t <= delta
    double t = std::log(delta) / std::log(1.0 - 1.0 / static_cast<double>(k));
    return static_cast<u64>(std::ceil(t));
}

std::optional<TowerSpec> build_tower(const FieldRef& base, int ell, BitStream& bits,
                                     TowerStrategy strategy, u64 tries, TowerBuildStats* stats) {
    if (base->p == 2) throw CharacteristicTwo();
    if (ell < 0) throw Error("negative level count");
    const u64 before = bits.bits_consumed();
    auto finish = [&](std::optional<FieldRef> full) -> std::optional<TowerSpec> {
        if (stats) stats->bits_consumed = bits.bits_consumed() - before;
        if (!full) return std::nullopt;
        TowerSpec t;
        t.base = base;
        t.full = *full;
        t.ell = ell;
        return t;
    };
    if (ell == 0) return finish(base);
    if (strategy == TowerStrategy::sampler) {
        for (u64 i = 0; i < tries; ++i) {
            if (stats) stats->tuples_tried = i + 1;
            if (auto full = try_tuple(base, ell, bits)) return finish(full);
        }
        return finish(std::nullopt);
    }
    // per-level rejection with a bounded retry budget
    FieldRef cur = base;
    for (int i = 1; i <= ell; ++i) {
        bool found = false;
        for (u64 r = 0; r < tries; ++r) {
            if (stats) ++stats->tuples_tried;
            auto hc = sample_level_constant(base, i, bits);
            Fe h = Fe::from_coeffs(cur, hc);
            if (quadratic_irreducible_fast(h)) {
                cur = extend_once(cur, hc);
                found = true;
                break;
            }
        }
        if (!found) return finish(std::nullopt);
    }
    return finish(cur);
}

TowerSpec trivial_tower(const FieldRef& base) {
    TowerSpec t;
    t.base = base;
    t.full = base;
    t.ell = 0;
    return t;
}

TowerSpec tower_from_descriptor(const FieldRef& base, const FieldRef& full) {
    if (base->p != full->p || base->levels() > full->levels())
        throw Error("base is not a subtower of full");
    for (int i = 0; i < base->levels(); ++i)
        if (base->h[i] != full->h[i]) throw Error("base is not a subtower of full");
    TowerSpec t;
    t.base = base;
    t.full = full;
    t.ell = full->levels() - base->levels();
    return t;
}

std::string tower_to_json(const TowerSpec& t) {
    if (!t.base->is_prime()) throw Error("JSON serialization requires a prime base field");
    nlohmann::json j;
    j["p"] = t.full->p;
    j["ell"] = t.ell;
    j["h"] = t.full->h;
    return j.dump();
}

TowerSpec tower_from_json(const std::string& json) {
    auto j = nlohmann::json::parse(json);
    u64 p = j.at("p").get<u64>();
    int ell = j.at("ell").get<int>();
    auto h = j.at("h").get<std::vector<std::vector<u64>>>();
    if (static_cast<int>(h.size()) != ell) throw Error("tower JSON: level count mismatch");
    FieldRef base = FieldDesc::make_prime(p);
    FieldRef cur = base;
    for (int i = 1; i <= ell; ++i) {
        Fe hi = Fe::from_coeffs(cur, h[i - 1]);
        if (!quadratic_irreducible_fast(hi)) throw Error("tower JSON: level not irreducible");
        cur = extend_once(cur, h[i - 1]);
    }
    return tower_from_descriptor(base, cur);
}

}  // namespace ldprg
