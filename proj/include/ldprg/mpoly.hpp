#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ldprg/unipoly.hpp"

namespace ldprg {

using Exps = std::vector<int>;

/// Graded-lexicographic order on exponent vectors (total degree first, then
/// lex with earlier variables more significant).
bool grlex_less(const Exps& a, const Exps& b);

/// Sparse multivariate polynomial over a finite field. Invariant: no stored
/// coefficient is zero and every exponent vector has length nvars.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(FieldRef f, int nvars) : f_(std::move(f)), nvars_(nvars) {}

    static MultiPoly constant(FieldRef f, int nvars, const Fe& c);
    static MultiPoly monomial(FieldRef f, int nvars, Exps e, const Fe& c);
    static MultiPoly variable(FieldRef f, int nvars, int var);

    const FieldRef& field() const { return f_; }
    int nvars() const { return nvars_; }
    const std::map<Exps, Fe>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;
    Fe coeff(const Exps& e) const;
    Fe constant_term() const;

    /// Largest exponent vector under graded-lex.
    Exps leading_exps() const;
    Fe leading_coeff() const;

    void add_term(const Exps& e, const Fe& c);

    Fe eval(std::span<const Fe> point) const;

    /// Substitute images[i] for variable i; all images share a field and a
    /// common variable count, which becomes the result's.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Coefficient of main_var^k, as a polynomial in the same variable set
    /// (with main_var exponent zero).
    MultiPoly coeff_of(int main_var, int k) const;

    /// Restriction to a univariate polynomial in `var`, with every other
    /// variable set to zero.
    UniPoly univariate_in(int var) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Canonical text: terms in descending graded-lex order, each written
    /// coeff*x1^e1*...*xn^en with zero exponents omitted.
    std::string to_string(const std::string& var_prefix = "x") const;

  private:
    FieldRef f_;
    int nvars_ = 0;
    std::map<Exps, Fe> terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly neg(const MultiPoly& a);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const Fe& c);
MultiPoly pow(const MultiPoly& a, int e);

/// f(x1 + a1*y, ..., xn + an*y, y) for f in n+1 variables with y last.
MultiPoly substitute_sa(const MultiPoly& f, std::span<const Fe> a);

/// f(b1(w)*x, ..., bn(w)*x, y) for f in n+1 variables with y last; each b_i
/// is multilinear in w1..wl. Result variables: x, y, w1..wl.
MultiPoly substitute_rb(const MultiPoly& f, const std::vector<MultiPoly>& b);

MultiPoly partial_derivative(const MultiPoly& f, int var);

/// Multivariate gcd by primitive-part Euclid, normalized to monic leading
/// coefficient under graded-lex. gcd(0,0) = 0.
MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Exact division (throws on nonzero remainder).
MultiPoly mpoly_divexact(const MultiPoly& a, const MultiPoly& b);

/// gcd of the coefficients of f viewed as univariate in main_var.
MultiPoly content(const MultiPoly& f, int main_var);

/// Hypothesis (H): f monic in y with deg_y(f) = deg(f), and
/// Res(f(0,y), df/dy(0,y)) != 0. y is the last variable.
bool check_hypothesis_H(const MultiPoly& f);

/// Variant over F_q[t]: f has a designated transcendental variable t_var,
/// the resultant is taken over the polynomial ring in t. Monicity means the
/// y-leading coefficient is a unit of F_q (degree 0 in t).
bool check_hypothesis_H_ring(const MultiPoly& f, int t_var);

/// Text format: header line "F p" or "F p^k", then the polynomial in the
/// canonical term syntax. parse accepts any term order; print is canonical.
std::string mpoly_print(const MultiPoly& f, const std::string& var_prefix = "x");
/// Parse with the field taken from the header line ("F p"; prime fields
/// only, since a tower is not determined by its size).
MultiPoly mpoly_parse(const std::string& text, int nvars, const std::string& var_prefix = "x");
/// Parse a headerless polynomial body over a known field.
MultiPoly mpoly_parse_body(const std::string& body, FieldRef f, int nvars,
                           const std::string& var_prefix = "x");

}  // namespace ldprg
