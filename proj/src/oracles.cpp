#include "ldprg/oracles.hpp"

#include <cmath>

namespace ldprg {

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

Rational::Rational(u128 n, u128 d) : num(n), den(d) {
    if (den == 0) throw DivisionByZero();
    u128 g = gcd_u128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

double Rational::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::to_string() const {
    return u128_to_string(num) + "/" + u128_to_string(den);
}

Distribution make_distribution(const FieldRef& f) {
    Distribution d;
    d.field = f;
    d.counts.assign(static_cast<std::size_t>(f->size()), 0);
    return d;
}

void Distribution::record(const Fe& value) {
    if (!same_field(value.field(), field)) throw DescriptorMismatch();
    ++counts[static_cast<std::size_t>(fe_to_index(value))];
    ++total;
}

Rational tv_distance(const Distribution& a, const Distribution& b) {
    if (!same_field(a.field, b.field)) throw DescriptorMismatch();
    if (a.total == 0 || b.total == 0) throw Error("empty distribution");
    // (1/2) sum |ca/Ta - cb/Tb| = sum |ca*Tb - cb*Ta| / (2*Ta*Tb)
    u128 acc = 0;
    for (std::size_t i = 0; i < a.counts.size(); ++i) {
        u128 x = u128{a.counts[i]} * b.total;
        u128 y = u128{b.counts[i]} * a.total;
        acc += x > y ? x - y : y - x;
    }
    return Rational(acc, u128{2} * a.total * b.total);
}

namespace {

// Iterate all points of F^n in fe_from_index order per coordinate, calling
// visit(point). Throws BudgetExceeded when |F|^n > budget.
template <typename Visit>
void for_each_point(const FieldRef& f, int n, u128 budget, Visit visit) {
    u128 space = 1;
    const u128 q = f->size();
    for (int i = 0; i < n; ++i) {
        if (space > budget / q) throw BudgetExceeded("point enumeration");
        space *= q;
    }
    std::vector<u128> idx(n, 0);
    std::vector<Fe> point(n, fe_zero(f));
    for (u128 c = 0; c < space; ++c) {
        visit(point);
        for (int i = n - 1; i >= 0; --i) {
            if (++idx[i] < q) {
                point[i] = fe_from_index(f, idx[i]);
                break;
            }
            idx[i] = 0;
            point[i] = fe_zero(f);
        }
    }
}

}  // namespace

Distribution value_distribution(const MultiPoly& f, u128 budget) {
    Distribution d = make_distribution(f.field());
    for_each_point(f.field(), f.nvars(), budget,
                   [&](const std::vector<Fe>& p) { d.record(f.eval(p)); });
    return d;
}

Rational tv_distance_exact(const MultiPoly& f,
                           const std::function<std::vector<Fe>(u128)>& gen, u128 seeds,
                           u128 budget) {
    if (seeds > budget) throw BudgetExceeded("generator seed enumeration");
    Distribution cube = value_distribution(f, budget);
    Distribution img = make_distribution(f.field());
    for (u128 s = 0; s < seeds; ++s) img.record(f.eval(gen(s)));
    return tv_distance(cube, img);
}

Rational equidistribution_check(const MultiPoly& f, u128 budget) {
    Distribution vals = value_distribution(f, budget);
    Distribution uniform = make_distribution(f.field());
    for (auto& c : uniform.counts) c = 1;
    uniform.total = uniform.counts.size();
    return tv_distance(vals, uniform);
}

Rational hsg_empirical_density(const HsgSpec& spec, const MultiPoly& f, u128 budget) {
    if (f.is_zero()) throw ZeroPolynomial();
    const u128 seeds = spec.seed_space();
    if (seeds > budget) throw BudgetExceeded("HSG seed enumeration");
    u128 vanish = 0;
    for (u128 s = 0; s < seeds; ++s)
        if (f.eval(hsg_sample(spec, s)).is_zero()) ++vanish;
    return Rational(vanish, seeds);
}

std::pair<double, double> wilson_interval(u64 successes, u64 trials) {
    if (trials == 0) throw Error("wilson interval of zero trials");
    const double z = 1.96;
    const double n = static_cast<double>(trials);
    const double ph = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (ph + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / denom;
    return {center - half, center + half};
}

MultiPoly random_poly(int nvars, int d, const FieldRef& field, BitStream& rng,
                      PolyConstraint constraint, u128 budget) {
    // monomial list: all exponent vectors of total degree <= d
    std::vector<Exps> monos;
    Exps e(nvars, 0);
    for (;;) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= d) monos.push_back(e);
        int i = nvars - 1;
        while (i >= 0 && e[i] == d) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    const std::size_t coords = field->degree();
    for (int attempt = 0; attempt < 100000; ++attempt) {
        MultiPoly f(field, nvars);
        for (const auto& m : monos) {
            std::vector<u64> c(coords);
            for (auto& x : c) x = rng.uniform_below(field->p);
            Fe fe = Fe::from_coeffs(field, std::move(c));
            if (!fe.is_zero()) f.add_term(m, fe);
        }
        switch (constraint) {
            case PolyConstraint::nonzero:
                if (!f.is_zero()) return f;
                break;
            case PolyConstraint::exact_degree:
                if (f.total_degree() == d) return f;
                break;
            case PolyConstraint::indecomposable:
                if (f.total_degree() != d) break;
                if (d < 2 || !is_decomposable_pruned(f, budget)) return f;
                break;
        }
    }
    throw RejectionTimeout("random_poly constraint");
}

PreservationStats restriction_preservation_stats(const PrgContext& ctx, u64 trials,
                                                 BitStream& rng, u128 budget) {
    const int n = ctx.params.n;
    const int d = ctx.params.d;
    const FieldRef& field = ctx.params.field;
    u128 r_space = 1, s_space = 1;
    for (int i = 0; i < n; ++i) {
        r_space *= ctx.S1.size();
        s_space *= ctx.S2.size();
    }
    if (r_space > (u128{1} << 62) || s_space > (u128{1} << 62))
        throw BudgetExceeded("restriction seed space");
    HsgSpec h2 = make_grid_hsg(field, n, d, ctx.S2);
    PreservationStats stats;
    stats.trials = trials;
    for (u64 t = 0; t < trials; ++t) {
        MultiPoly f = random_poly(n + 1, d, field, rng, PolyConstraint::indecomposable, budget);
        u128 r = rng.uniform_below(static_cast<u64>(r_space));
        u128 s = rng.uniform_below(static_cast<u64>(s_space));
        PolyPoint b = phsg_sample_fixed(ctx.tower, ctx.S1, n, r);
        std::vector<Fe> a = hsg_sample(h2, s);
        MultiPoly F = substitute_rb(substitute_sa(f, a), b.entries);
        if (!is_decomposable_pruned(F, budget)) ++stats.preserved;
    }
    stats.fraction = trials ? static_cast<double>(stats.preserved) / trials : 0;
    auto [lo, hi] = wilson_interval(stats.preserved, trials);
    stats.wilson_lo = lo;
    stats.wilson_hi = hi;
    return stats;
}

}  // namespace ldprg
