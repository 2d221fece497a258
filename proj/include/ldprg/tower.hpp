#pragma once

#include <optional>

#include "ldprg/mpoly.hpp"
#include "ldprg/sampler.hpp"

namespace ldprg {

/// A validated tower of quadratic extensions above a base field. `base` may
/// itself be a tower; `full` shares its defining constants and adds `ell`
/// further levels, every one of which has been checked irreducible.
struct TowerSpec {
    FieldRef base;
    FieldRef full;
    int ell = 0;

    std::size_t extension_degree() const { return std::size_t{1} << ell; }

    /// Defining constant h_i (1-based level above the base) as an element of
    /// the level-(i-1) field.
    Fe defining_constant(int i) const;

    /// h_i as a multilinear polynomial in w_1..w_{i-1} over the base field.
    /// Only valid when the base field is prime (coefficients are residues).
    MultiPoly defining_poly(int i) const;
};

/// phi: lift a tower element to the unique multilinear polynomial in
/// w_1..w_ell over the base field with the same coefficient vector.
MultiPoly tower_lift(const TowerSpec& t, const Fe& a);

/// pi: reduce a polynomial in w_1..w_ell over the base field modulo the
/// defining relations w_i^2 = h_i; a ring homomorphism with pi(phi(a)) = a.
Fe tower_reduce(const TowerSpec& t, const MultiPoly& g);

/// Build a base-field element of the full tower (coefficients embedded in
/// the first base-degree coordinates).
Fe tower_embed(const TowerSpec& t, const Fe& base_elem);

/// Inverse of tower_embed when the element lies in the base subfield.
std::optional<Fe> tower_restrict(const TowerSpec& t, const Fe& elem);

/// Deterministic irreducibility test over any supported field: for
/// i = 1..a-1 compute x^{Q^i} mod f and require gcd(f, x^{Q^i} - x) = 1;
/// also checks that f divides x^{Q^a} - x.
bool is_irreducible_univariate(const UniPoly& f);

/// Euler-criterion fast path: w^2 - h is irreducible over a field of odd
/// characteristic iff h is a non-square, i.e. h^{(Q-1)/2} != 1.
bool quadratic_irreducible_fast(const Fe& h);

enum class TowerStrategy { sampler, rejection };

struct TowerBuildStats {
    u64 tuples_tried = 0;
    u64 bits_consumed = 0;
};

/// Sample defining constants per the quadratic-tower recipe: h_i uniform in
/// R_i \ {0} (multilinear over the level fields). strategy sampler draws
/// `tries` whole tuples and takes the first fully irreducible one, declaring
/// failure (nullopt) otherwise; strategy rejection retries per level.
std::optional<TowerSpec> build_tower(const FieldRef& base, int ell, BitStream& bits,
                                     TowerStrategy strategy = TowerStrategy::sampler,
                                     u64 tries = 64, TowerBuildStats* stats = nullptr);

/// Number of sampler tries for failure probability <= delta given per-tuple
/// success 1/k.
u64 tower_tries_for(u64 k, double delta);

/// Trivial tower (ell = 0, full == base).
TowerSpec trivial_tower(const FieldRef& base);

/// Wrap an existing full descriptor whose first levels match `base`.
TowerSpec tower_from_descriptor(const FieldRef& base, const FieldRef& full);

/// JSON round-trip: {"p": ..., "ell": ..., "h": [[...], ...]} with
/// coefficients in the multilinear basis order. Base field must be prime.
std::string tower_to_json(const TowerSpec& t);
TowerSpec tower_from_json(const std::string& json);

}  // namespace ldprg
