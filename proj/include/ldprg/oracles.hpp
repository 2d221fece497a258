#pragma once

#include <functional>

#include "ldprg/prg.hpp"

namespace ldprg {

/// Nonnegative exact rational, gcd-reduced. All probabilities in this module
/// are computed with these; doubles appear only in rendered reports.
struct Rational {
    u128 num = 0;
    u128 den = 1;

    Rational() = default;
    Rational(u128 n, u128 d);

    double to_double() const;
    std::string to_string() const;  // "num/den"

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
};

u128 gcd_u128(u128 a, u128 b);
std::string u128_to_string(u128 v);

/// Exact value distribution over a finite field: counts[i] is the number of
/// occurrences of fe_from_index(field, i).
struct Distribution {
    FieldRef field;
    std::vector<u64> counts;
    u64 total = 0;

    void record(const Fe& value);
};

Distribution make_distribution(const FieldRef& f);

/// Exact total-variation distance (1/2) sum_a |P(a) - Q(a)|.
Rational tv_distance(const Distribution& a, const Distribution& b);

/// Distribution of f over the uniform cube F_q^nvars (full enumeration).
Distribution value_distribution(const MultiPoly& f, u128 budget = (u128{1} << 26));

/// Exact TV between f over the uniform cube and f over the image of a
/// seed-indexed generator producing points of the cube.
Rational tv_distance_exact(const MultiPoly& f,
                           const std::function<std::vector<Fe>(u128)>& gen, u128 seeds,
                           u128 budget = (u128{1} << 26));

struct DecompositionWitness {
    UniPoly g;    // deg >= 2
    MultiPoly h;  // deg g * deg h = deg f; g(h) == f re-verified
};

/// Exhaustive decomposability search: for every normalized candidate h (zero
/// constant term, graded-lex-monic leading term, deg e with e | d and
/// 2e <= d), test f in span{1, h, ..., h^{d/e}} by linear algebra. None is a
/// proof of indecomposability (the normalization is lossless).
std::optional<DecompositionWitness> is_decomposable_bruteforce(const MultiPoly& f,
                                                               u128 budget = (u128{1} << 26));

/// Same decision, pruned: the top form of a normalized h is forced (it is
/// the unique monic (d/e)-th root of f's normalized top form, since leading
/// forms multiply over an integral domain), so only h's lower-degree part is
/// enumerated. Complete, and much faster on larger variable counts.
std::optional<DecompositionWitness> is_decomposable_pruned(const MultiPoly& f,
                                                           u128 budget = (u128{1} << 26));

enum class PolyConstraint { nonzero, exact_degree, indecomposable };

/// Rejection-sampled uniform polynomial of degree <= d under the constraint.
/// `indecomposable` additionally requires exact degree d and verifies with
/// the pruned exhaustive search.
MultiPoly random_poly(int nvars, int d, const FieldRef& field, BitStream& rng,
                      PolyConstraint constraint, u128 budget = (u128{1} << 26));

/// Exact TV(f(U_{F_q^n}), U_{F_q}).
Rational equidistribution_check(const MultiPoly& f, u128 budget = (u128{1} << 26));

/// Exact fraction of seeds on which f vanishes at the HSG sample.
Rational hsg_empirical_density(const HsgSpec& spec, const MultiPoly& f,
                               u128 budget = (u128{1} << 26));

struct PreservationStats {
    u64 trials = 0;
    u64 preserved = 0;
    double fraction = 0;
    double wilson_lo = 0;  // Wilson 95% interval
    double wilson_hi = 0;
};

/// Wilson score interval at z = 1.96.
std::pair<double, double> wilson_interval(u64 successes, u64 trials);

/// Monte Carlo check of indecomposability preservation under restriction:
/// sample indecomposable f in n+1 variables of exact degree d, sample
/// (r, s) from the context's seed components, form
/// F = f(b_1(w)x + a_1 y, ..., b_n(w)x + a_n y, y) with b = H1(r), a = H2(s),
/// and test F exhaustively.
PreservationStats restriction_preservation_stats(const PrgContext& ctx, u64 trials,
                                                 BitStream& rng,
                                                 u128 budget = (u128{1} << 26));

/// Exact TV(f(G(U_S)), f(U_{F_q^{n+1}})) over the full structured seed
/// space, via a prime-field counting kernel (precomputed value tables, plain
/// modular arithmetic). Requires a prime F_q; agrees exactly with the
/// generic prg_generate + tv_distance_exact path.
Rational fooling_tv_exact(const PrgContext& ctx, const MultiPoly& f,
                          u128 budget = (u128{1} << 30));

}  // namespace ldprg
