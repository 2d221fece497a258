#include <set>

#include "ldprg/oracles.hpp"

namespace ldprg {

namespace {

// Exponent vectors with total degree in [lo, hi], every exponent <= hi.
std::vector<Exps> monomials_between(int nvars, int lo, int hi) {
    std::vector<Exps> out;
    Exps e(nvars, 0);
    for (;;) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg >= lo && deg <= hi) out.push_back(e);
        int i = nvars - 1;
        while (i >= 0 && e[i] == hi) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    return out;
}

// Solve f = sum_j c_j * basis[j] by Gaussian elimination over the monomial
// coordinates; returns the coefficient vector or nullopt.
std::optional<std::vector<Fe>> solve_span(const MultiPoly& f,
                                          const std::vector<MultiPoly>& basis) {
    const FieldRef& field = f.field();
    std::set<Exps> rowset;
    for (const auto& [e, c] : f.terms()) rowset.insert(e);
    for (const auto& b : basis)
        for (const auto& [e, c] : b.terms()) rowset.insert(e);
    const std::vector<Exps> rows(rowset.begin(), rowset.end());
    const std::size_t nr = rows.size(), nc = basis.size();
    std::vector<std::vector<Fe>> m(nr, std::vector<Fe>(nc + 1, fe_zero(field)));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) m[i][j] = basis[j].coeff(rows[i]);
        m[i][nc] = f.coeff(rows[i]);
    }
    std::size_t rank = 0;
    std::vector<int> pivot_col(nr, -1);
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(m[rank], m[piv]);
        Fe ipiv = inv(m[rank][col]);
        for (std::size_t j = col; j <= nc; ++j) m[rank][j] = mul(m[rank][j], ipiv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Fe factor = m[i][col];
            for (std::size_t j = col; j <= nc; ++j)
                m[i][j] = sub(m[i][j], mul(factor, m[rank][j]));
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (std::size_t i = rank; i < nr; ++i)
        if (!m[i][nc].is_zero()) return std::nullopt;
    std::vector<Fe> sol(nc, fe_zero(field));
    for (std::size_t i = 0; i < rank; ++i) sol[pivot_col[i]] = m[i][nc];
    return sol;
}

// Cheap necessary condition: if f = g(h), then equal h-values at two points
// force equal f-values there. A batch of fixed pseudorandom points rejects
// almost all wrong candidates without linear algebra.
struct CollisionFilter {
    std::vector<std::vector<Fe>> points;
    std::vector<Fe> fvals;

    static CollisionFilter make(const MultiPoly& f, int npts) {
        CollisionFilter cf;
        BitStream bits(u64{0x1d9a2f});  // fixed: the filter must be deterministic
        const FieldRef& field = f.field();
        for (int i = 0; i < npts; ++i) {
            std::vector<Fe> p;
            for (int v = 0; v < f.nvars(); ++v) {
                std::vector<u64> c(field->degree());
                for (auto& x : c) x = bits.uniform_below(field->p);
                p.push_back(Fe::from_coeffs(field, std::move(c)));
            }
            cf.fvals.push_back(f.eval(p));
            cf.points.push_back(std::move(p));
        }
        return cf;
    }

    bool plausible(const MultiPoly& h) const {
        std::vector<Fe> hv;
        hv.reserve(points.size());
        for (const auto& p : points) hv.push_back(h.eval(p));
        for (std::size_t i = 0; i < hv.size(); ++i)
            for (std::size_t j = i + 1; j < hv.size(); ++j)
                if (hv[i] == hv[j] && fvals[i] != fvals[j]) return false;
        return true;
    }
};

std::optional<DecompositionWitness> try_candidate(const MultiPoly& f, const MultiPoly& h,
                                                  int m, const CollisionFilter& filter) {
    if (!filter.plausible(h)) return std::nullopt;
    const FieldRef& field = f.field();
    std::vector<MultiPoly> powers;
    powers.push_back(MultiPoly::constant(field, f.nvars(), fe_one(field)));
    for (int j = 1; j <= m; ++j) powers.push_back(mul(powers.back(), h));
    auto sol = solve_span(f, powers);
    if (!sol) return std::nullopt;
    if ((*sol)[m].is_zero()) return std::nullopt;  // degree would drop below deg f
    UniPoly g(field, *sol);
    MultiPoly recomposed(field, f.nvars());
    for (std::size_t j = 0; j < sol->size(); ++j)
        recomposed = add(recomposed, scale(powers[j], (*sol)[j]));
    if (recomposed != f) throw Error("span solution failed re-verification");
    return DecompositionWitness{std::move(g), h};
}

// h's top form when h is normalized monic: the unique monic m-th root of
// f's normalized top form, by coefficient matching against the leading
// monomial (valid when the characteristic does not divide m).
std::optional<MultiPoly> monic_mth_root(const MultiPoly& top, int m, int e) {
    const FieldRef& field = top.field();
    Exps lead = top.leading_exps();
    Exps lexp(lead.size());
    for (std::size_t i = 0; i < lead.size(); ++i) {
        if (lead[i] % m != 0) return std::nullopt;
        lexp[i] = lead[i] / m;
    }
    Fe minv = inv(Fe(field, m % field->p));
    MultiPoly r = MultiPoly::monomial(field, top.nvars(), lexp, fe_one(field));
    const int guard = static_cast<int>(monomials_between(top.nvars(), e, e).size()) + 1;
    for (int it = 0; it < guard; ++it) {
        MultiPoly err = sub(top, pow(r, m));
        if (err.is_zero()) return r;
        Exps mu = err.leading_exps();
        Exps tau(mu.size());
        int tdeg = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            tau[i] = mu[i] - (m - 1) * lexp[i];
            if (tau[i] < 0) return std::nullopt;
            tdeg += tau[i];
        }
        if (tdeg != e) return std::nullopt;
        r = add(r, MultiPoly::monomial(field, top.nvars(), tau, mul(err.leading_coeff(), minv)));
    }
    return std::nullopt;
}

// Run `visit` over all coefficient assignments (base Q odometer) for the
// given monomials, materialized as a polynomial added to `base`.
template <typename Visit>
bool enumerate_assignments(const MultiPoly& base, const std::vector<Exps>& monos, u128 budget,
                           Visit visit) {
    const FieldRef& field = base.field();
    const u128 q = field->size();
    u128 space = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (space > budget / q) throw BudgetExceeded("decomposition candidate enumeration");
        space *= q;
    }
    std::vector<u128> idx(monos.size(), 0);
    for (u128 c = 0; c < space; ++c) {
        MultiPoly h = base;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (idx[i] != 0) h.add_term(monos[i], fe_from_index(field, idx[i]));
        if (visit(h)) return true;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
    }
    return false;
}

std::vector<int> proper_divisor_degrees(int d) {
    std::vector<int> out;
    for (int e = 1; 2 * e <= d; ++e)
        if (d % e == 0) out.push_back(e);
    return out;
}

}  // namespace

std::optional<DecompositionWitness> is_decomposable_bruteforce(const MultiPoly& f, u128 budget) {
    const int d = f.total_degree();
    if (d < 2) return std::nullopt;
    const CollisionFilter filter = CollisionFilter::make(f, 24);
    std::optional<DecompositionWitness> found;
    for (int e : proper_divisor_degrees(d)) {
        const int m = d / e;
        auto monos = monomials_between(f.nvars(), 1, e);
        MultiPoly zero(f.field(), f.nvars());
        bool hit = enumerate_assignments(zero, monos, budget, [&](const MultiPoly& h) {
            if (h.total_degree() != e || !h.leading_coeff().is_one()) return false;
            if (auto w = try_candidate(f, h, m, filter)) {
                found = std::move(w);
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    return std::nullopt;
}

std::optional<DecompositionWitness> is_decomposable_pruned(const MultiPoly& f, u128 budget) {
    const int d = f.total_degree();
    if (d < 2) return std::nullopt;
    const FieldRef& field = f.field();
    const CollisionFilter filter = CollisionFilter::make(f, 24);
    MultiPoly top(field, f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg == d) top.add_term(e, c);
    }
    top = scale(top, inv(f.leading_coeff()));
    std::optional<DecompositionWitness> found;
    for (int e : proper_divisor_degrees(d)) {
        const int m = d / e;
        if (static_cast<u64>(m) % field->p == 0) return is_decomposable_bruteforce(f, budget);
        auto root = monic_mth_root(top, m, e);
        if (!root) continue;
        auto monos = monomials_between(f.nvars(), 1, e - 1);
        bool hit = enumerate_assignments(*root, monos, budget, [&](const MultiPoly& h) {
            if (auto w = try_candidate(f, h, m, filter)) {
                found = std::move(w);
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    return std::nullopt;
}

}  // namespace ldprg
