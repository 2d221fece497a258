#pragma once

#include <vector>

#include "ldprg/field.hpp"

namespace ldprg {

/// Dense univariate polynomial over a finite field, ascending coefficients.
/// The zero polynomial is the empty list; otherwise the trailing coefficient
/// is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(FieldRef f) : f_(std::move(f)) {}
    UniPoly(FieldRef f, std::vector<Fe> coeffs);

    const FieldRef& field() const { return f_; }
    const std::vector<Fe>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Fe coeff(int i) const;
    Fe leading() const;
    bool is_monic() const;

    Fe eval(const Fe& x) const;

    bool operator==(const UniPoly& o) const { return same_field(f_, o.f_) && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    static UniPoly x(const FieldRef& f);  // the monomial x
    static UniPoly constant(const FieldRef& f, const Fe& c);

    std::string to_string(const std::string& var = "x") const;

  private:
    FieldRef f_;
    std::vector<Fe> c_;
    void trim();
};

UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly sub(const UniPoly& a, const UniPoly& b);
UniPoly neg(const UniPoly& a);
UniPoly mul(const UniPoly& a, const UniPoly& b);
UniPoly scale(const UniPoly& a, const Fe& c);
UniPoly derivative(const UniPoly& a);

/// Quotient/remainder with invertible leading coefficient of b.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

/// Exact division; throws if the remainder is nonzero.
UniPoly divexact(const UniPoly& a, const UniPoly& b);

/// Monic gcd via the Euclidean algorithm (gcd(0,0) = 0).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// x^e mod m by repeated squaring, e up to 2^128-1.
UniPoly powmod(const UniPoly& base, u128 e, const UniPoly& m);

UniPoly compose(const UniPoly& g, const UniPoly& h);  // g(h(x))

/// Sylvester matrix in the convention used throughout this project: the
/// first deg(g) columns hold the shifted coefficients of f (ascending down
/// the column), the remaining deg(f) columns those of g.
template <typename R, typename Ops>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g,
                                             const Ops& ops) {
    const int d1 = static_cast<int>(f.size()) - 1;
    const int d2 = static_cast<int>(g.size()) - 1;
    if (d1 < 0 || d2 < 0) throw ZeroPolynomial();
    if (d1 + d2 < 1) throw BothConstant();
    const int n = d1 + d2;
    std::vector<std::vector<R>> m(n, std::vector<R>(n, ops.zero()));
    for (int c = 0; c < d2; ++c)
        for (int i = 0; i <= d1; ++i) m[i + c][c] = f[i];
    for (int c = 0; c < d1; ++c)
        for (int i = 0; i <= d2; ++i) m[i + c][d2 + c] = g[i];
    return m;
}

/// Determinant by fraction-free Bareiss elimination; needs only exact
/// division in R, so it works over F_q[t] as well as over a field.
template <typename R, typename Ops>
R bareiss_determinant(std::vector<std::vector<R>> m, const Ops& ops) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return ops.one();
    R prev = ops.one();
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (ops.is_zero(m[k][k])) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!ops.is_zero(m[i][k])) {
                    piv = i;
                    break;
                }
            if (piv < 0) return ops.zero();
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R num = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.divexact(num, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? ops.neg(det) : det;
}

/// Ring operations for Fe and UniPoly entries, for the templated
/// sylvester/Bareiss code above.
struct FeOps {
    FieldRef f;
    Fe zero() const { return fe_zero(f); }
    Fe one() const { return fe_one(f); }
    bool is_zero(const Fe& a) const { return a.is_zero(); }
    Fe mul(const Fe& a, const Fe& b) const { return ldprg::mul(a, b); }
    Fe sub(const Fe& a, const Fe& b) const { return ldprg::sub(a, b); }
    Fe neg(const Fe& a) const { return ldprg::neg(a); }
    Fe divexact(const Fe& a, const Fe& b) const { return ldprg::div(a, b); }
};

struct UniPolyOps {
    FieldRef f;
    UniPoly zero() const { return UniPoly(f); }
    UniPoly one() const { return UniPoly::constant(f, fe_one(f)); }
    bool is_zero(const UniPoly& a) const { return a.is_zero(); }
    UniPoly mul(const UniPoly& a, const UniPoly& b) const { return ldprg::mul(a, b); }
    UniPoly sub(const UniPoly& a, const UniPoly& b) const { return ldprg::sub(a, b); }
    UniPoly neg(const UniPoly& a) const { return ldprg::neg(a); }
    UniPoly divexact(const UniPoly& a, const UniPoly& b) const { return ldprg::divexact(a, b); }
};

std::vector<std::vector<Fe>> sylvester(const UniPoly& f, const UniPoly& g);
Fe resultant(const UniPoly& f, const UniPoly& g);

/// Resultant of two polynomials in y whose coefficients live in F_q[t],
/// each given as its list of t-polynomials ascending in y.
UniPoly resultant_ring(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g,
                       const FieldRef& field);

}  // namespace ldprg
