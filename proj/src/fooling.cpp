#include "ldprg/oracles.hpp"

namespace ldprg {

Rational fooling_tv_exact(const PrgContext& ctx, const MultiPoly& f, u128 budget) {
    const FieldRef& field = ctx.params.field;
    if (!field->is_prime()) throw PrimeFieldInput();
    const u64 q = field->p;
    const int n = ctx.params.n;
    const int ell = ctx.tower.ell;
    if (f.nvars() != n + 1) throw ArityMismatch("fooling oracle needs an (n+1)-variate f");
    const int d = f.total_degree() < 0 ? 0 : f.total_degree();

    // value table of f over the whole cube, row-major with the last
    // coordinate (y) fastest
    u128 cube = 1;
    for (int i = 0; i <= n; ++i) {
        if (cube > budget / q) throw BudgetExceeded("fooling cube");
        cube *= q;
    }
    std::vector<std::vector<u64>> pows(q, std::vector<u64>(d + 1, 1));
    for (u64 v = 0; v < q; ++v)
        for (int e = 1; e <= d; ++e) pows[v][e] = mod_mul(pows[v][e - 1], v, q);
    struct Term {
        u64 c;
        Exps e;
    };
    std::vector<Term> terms;
    for (const auto& [e, c] : f.terms()) terms.push_back({c.residue(), e});
    std::vector<u64> ftable(static_cast<std::size_t>(cube));
    std::vector<u64> coord(n + 1, 0);
    for (u128 idx = 0; idx < cube; ++idx) {
        u64 acc = 0;
        for (const auto& t : terms) {
            u64 prod = t.c;
            for (int v = 0; v <= n; ++v)
                if (t.e[v] != 0) prod = mod_mul(prod, pows[coord[v]][t.e[v]], q);
            acc = mod_add(acc, prod, q);
        }
        ftable[static_cast<std::size_t>(idx)] = acc;
        for (int v = n; v >= 0; --v) {
            if (++coord[v] < q) break;
            coord[v] = 0;
        }
    }
    std::vector<u64> cube_counts(q, 0);
    for (u64 v : ftable) ++cube_counts[v];

    // per-seed-component tables: A[r][i][t_code] = H1(r)_i(t), B[s][i]
    u128 r_space = 1, s_space = 1, t_space = 1;
    for (int i = 0; i < n; ++i) {
        r_space *= ctx.S1.size();
        s_space *= ctx.S2.size();
    }
    for (int i = 0; i < ell; ++i) t_space *= q;
    const u128 total_seeds = r_space * s_space * t_space * q * q;
    if (total_seeds > budget) throw BudgetExceeded("fooling seed enumeration");
    std::vector<Fe> tpoint(ell, fe_zero(field));
    std::vector<std::vector<std::vector<u64>>> A(static_cast<std::size_t>(r_space));
    for (u128 r = 0; r < r_space; ++r) {
        PolyPoint pp = phsg_sample_fixed(ctx.tower, ctx.S1, n, r);
        auto& Ar = A[static_cast<std::size_t>(r)];
        Ar.assign(n, std::vector<u64>(static_cast<std::size_t>(t_space)));
        std::vector<u64> tidx(ell, 0);
        for (u128 tc = 0; tc < t_space; ++tc) {
            for (int i = 0; i < ell; ++i) tpoint[i] = Fe(field, tidx[i]);
            for (int i = 0; i < n; ++i)
                Ar[i][static_cast<std::size_t>(tc)] = pp.entries[i].eval(tpoint).residue();
            for (int i = ell - 1; i >= 0; --i) {
                if (++tidx[i] < q) break;
                tidx[i] = 0;
            }
        }
    }
    HsgSpec h2 = make_grid_hsg(field, n, ctx.params.d, ctx.S2);
    std::vector<std::vector<u64>> B(static_cast<std::size_t>(s_space));
    for (u128 s = 0; s < s_space; ++s) {
        auto pt = hsg_sample(h2, s);
        for (const auto& x : pt) B[static_cast<std::size_t>(s)].push_back(x.residue());
    }

    // count f(G(seed)) over the full structured seed space; the inner loop
    // over v walks each output coordinate additively
    std::vector<u64> gen_counts(q, 0);
    std::vector<u64> a(n), base(n), x(n);
    for (u128 r = 0; r < r_space; ++r) {
        const auto& Ar = A[static_cast<std::size_t>(r)];
        for (u128 s = 0; s < s_space; ++s) {
            const auto& Bs = B[static_cast<std::size_t>(s)];
            for (u128 tc = 0; tc < t_space; ++tc) {
                for (int i = 0; i < n; ++i) a[i] = Ar[i][static_cast<std::size_t>(tc)];
                for (u64 u = 0; u < q; ++u) {
                    for (int i = 0; i < n; ++i) {
                        base[i] = mod_mul(Bs[i], u, q);
                        x[i] = base[i];
                    }
                    for (u64 v = 0; v < q; ++v) {
                        u128 idx = 0;
                        for (int i = 0; i < n; ++i) idx = idx * q + x[i];
                        idx = idx * q + u;
                        ++gen_counts[ftable[static_cast<std::size_t>(idx)]];
                        for (int i = 0; i < n; ++i) x[i] = mod_add(x[i], a[i], q);
                    }
                }
            }
        }
    }

    u128 acc = 0;
    for (u64 val = 0; val < q; ++val) {
        u128 lhs = u128{cube_counts[val]} * total_seeds;
        u128 rhs = u128{gen_counts[val]} * cube;
        acc += lhs > rhs ? lhs - rhs : rhs - lhs;
    }
    return Rational(acc, u128{2} * cube * total_seeds);
}

}  // namespace ldprg
