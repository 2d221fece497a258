#include "ldprg/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ldprg {

bool grlex_less(const Exps& a, const Exps& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // lex, earlier variables more significant; a < b iff at the first
    // difference a has the smaller exponent
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly MultiPoly::constant(FieldRef f, int nvars, const Fe& c) {
    MultiPoly p(std::move(f), nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(FieldRef f, int nvars, Exps e, const Fe& c) {
    if (static_cast<int>(e.size()) != nvars) throw ArityMismatch("monomial exponent length");
    MultiPoly p(std::move(f), nvars);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(FieldRef f, int nvars, int var) {
    Exps e(nvars, 0);
    e[var] = 1;
    return monomial(f, nvars, std::move(e), fe_one(f));
}

bool MultiPoly::is_constant() const { return total_degree() <= 0; }

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Fe MultiPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? fe_zero(f_) : it->second;
}

Fe MultiPoly::constant_term() const { return coeff(Exps(nvars_, 0)); }

Exps MultiPoly::leading_exps() const {
    if (is_zero()) throw ZeroPolynomial();
    auto best = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (grlex_less(best, e)) best = e;
    return best;
}

Fe MultiPoly::leading_coeff() const { return terms_.at(leading_exps()); }

void MultiPoly::add_term(const Exps& e, const Fe& c) {
    if (static_cast<int>(e.size()) != nvars_) throw ArityMismatch("exponent vector length");
    if (!same_field(c.field(), f_)) throw DescriptorMismatch();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    Fe s = ldprg::add(it->second, c);
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

Fe MultiPoly::eval(std::span<const Fe> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw ArityMismatch("evaluation point length");
    // per-variable power cache
    std::vector<std::vector<Fe>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v) powers[v].push_back(fe_one(f_));
    Fe acc = fe_zero(f_);
    for (const auto& [e, c] : terms_) {
        Fe term = c;
        for (int v = 0; v < nvars_; ++v) {
            auto& pw = powers[v];
            while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(ldprg::mul(pw.back(), point[v]));
            if (e[v] > 0) term = ldprg::mul(term, pw[e[v]]);
        }
        acc = ldprg::add(acc, term);
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw ArityMismatch("substitution image count");
    if (images.empty()) {
        MultiPoly out(f_, 0);
        for (const auto& [e, c] : terms_) out.add_term({}, c);
        return out;
    }
    const int out_vars = images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != out_vars || !same_field(im.field(), f_))
            throw ArityMismatch("substitution images disagree");
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v)
        powers[v].push_back(MultiPoly::constant(f_, out_vars, fe_one(f_)));
    MultiPoly acc(f_, out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(f_, out_vars, c);
        for (int v = 0; v < nvars_; ++v) {
            auto& pw = powers[v];
            while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(ldprg::mul(pw.back(), images[v]));
            if (e[v] > 0) term = ldprg::mul(term, pw[e[v]]);
        }
        acc = ldprg::add(acc, term);
    }
    return acc;
}

MultiPoly MultiPoly::coeff_of(int main_var, int k) const {
    MultiPoly out(f_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[main_var] != k) continue;
        Exps r = e;
        r[main_var] = 0;
        out.add_term(r, c);
    }
    return out;
}

UniPoly MultiPoly::univariate_in(int var) const {
    std::vector<Fe> c(std::max(degree_in(var) + 1, 0), fe_zero(f_));
    for (const auto& [e, coef] : terms_) {
        bool pure = true;
        for (int v = 0; v < nvars_; ++v)
            if (v != var && e[v] != 0) pure = false;
        if (pure) c[e[var]] = ldprg::add(c[e[var]], coef);
    }
    return UniPoly(f_, std::move(c));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!same_field(f_, o.f_) || nvars_ != o.nvars_) return false;
    return terms_ == o.terms_;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
    if (is_zero()) return "0";
    std::vector<const std::pair<const Exps, Fe>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        if (!first) os << " + ";
        first = false;
        os << t->second.to_string();
        for (int v = 0; v < nvars_; ++v) {
            if (t->first[v] == 0) continue;
            os << "*" << var_prefix << (v + 1);
            if (t->first[v] > 1) os << "^" << t->first[v];
        }
    }
    return os.str();
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
    if (!same_field(a.field(), b.field()) || a.nvars() != b.nvars()) throw DescriptorMismatch();
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return add(a, neg(b)); }

MultiPoly neg(const MultiPoly& a) {
    MultiPoly out(a.field(), a.nvars());
    for (const auto& [e, c] : a.terms()) out.add_term(e, ldprg::neg(c));
    return out;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
    if (!same_field(a.field(), b.field()) || a.nvars() != b.nvars()) throw DescriptorMismatch();
    MultiPoly out(a.field(), a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exps e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ldprg::mul(ca, cb));
        }
    return out;
}

MultiPoly scale(const MultiPoly& a, const Fe& c) {
    MultiPoly out(a.field(), a.nvars());
    for (const auto& [e, x] : a.terms()) out.add_term(e, ldprg::mul(x, c));
    return out;
}

MultiPoly pow(const MultiPoly& a, int e) {
    MultiPoly r = MultiPoly::constant(a.field(), a.nvars(), fe_one(a.field()));
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

MultiPoly substitute_sa(const MultiPoly& f, std::span<const Fe> a) {
    const int n = f.nvars() - 1;
    if (static_cast<int>(a.size()) != n) throw ArityMismatch("substitute_sa shift vector");
    std::vector<MultiPoly> images;
    images.reserve(n + 1);
    MultiPoly y = MultiPoly::variable(f.field(), f.nvars(), n);
    for (int i = 0; i < n; ++i)
        images.push_back(add(MultiPoly::variable(f.field(), f.nvars(), i), scale(y, a[i])));
    images.push_back(y);
    return f.substitute(images);
}

MultiPoly substitute_rb(const MultiPoly& f, const std::vector<MultiPoly>& b) {
    const int n = f.nvars() - 1;
    if (static_cast<int>(b.size()) != n) throw ArityMismatch("substitute_rb vector length");
    const int ell = b.empty() ? 0 : b[0].nvars();
    for (const auto& bi : b) {
        if (bi.nvars() != ell) throw ArityMismatch("substitute_rb variable counts disagree");
        for (const auto& [e, c] : bi.terms())
            for (int v = 0; v < ell; ++v)
                if (e[v] > 1) throw NonMultilinearSubstituent();
    }
    // result variables: x (0), y (1), w1..wl (2..)
    const int out_vars = 2 + ell;
    MultiPoly x = MultiPoly::variable(f.field(), out_vars, 0);
    MultiPoly y = MultiPoly::variable(f.field(), out_vars, 1);
    std::vector<MultiPoly> images;
    images.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        // lift b_i from w-space into the result variable space
        MultiPoly bi(f.field(), out_vars);
        for (const auto& [e, c] : b[i].terms()) {
            Exps r(out_vars, 0);
            for (int v = 0; v < ell; ++v) r[2 + v] = e[v];
            bi.add_term(r, c);
        }
        images.push_back(mul(bi, x));
    }
    images.push_back(y);
    return f.substitute(images);
}

MultiPoly partial_derivative(const MultiPoly& f, int var) {
    MultiPoly out(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exps r = e;
        r[var] -= 1;
        out.add_term(r, ldprg::mul(c, Fe(f.field(), static_cast<u64>(e[var]))));
    }
    return out;
}

// ---- multivariate gcd ------------------------------------------------------

namespace {

int pick_main_var(const MultiPoly& a, const MultiPoly& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

MultiPoly monic_grlex(const MultiPoly& a) {
    if (a.is_zero()) return a;
    return scale(a, inv(a.leading_coeff()));
}

// coefficients of f in main_var, ascending
std::vector<MultiPoly> coeff_list(const MultiPoly& f, int v) {
    std::vector<MultiPoly> out;
    for (int k = 0; k <= std::max(f.degree_in(v), 0); ++k) out.push_back(f.coeff_of(v, k));
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

MultiPoly from_coeff_list(const std::vector<MultiPoly>& cs, int v, const FieldRef& f, int nvars) {
    MultiPoly out(f, nvars);
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (const auto& [e, c] : cs[k].terms()) {
            Exps r = e;
            r[v] += static_cast<int>(k);
            out.add_term(r, c);
        }
    return out;
}

// pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a mod b
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int v) {
    auto ac = coeff_list(a, v);
    auto bc = coeff_list(b, v);
    const int db = static_cast<int>(bc.size()) - 1;
    MultiPoly lcb = bc.back();
    std::vector<MultiPoly> r = ac;
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db && !(dr == 0 && r[0].is_zero())) {
        MultiPoly lead = r[dr];
        for (int i = 0; i <= dr; ++i) r[i] = mul(r[i], lcb);
        for (int i = 0; i <= db; ++i) r[dr - db + i] = sub(r[dr - db + i], mul(lead, bc[i]));
        while (r.size() > 1 && r.back().is_zero()) r.pop_back();
        int ndr = static_cast<int>(r.size()) - 1;
        if (ndr == dr) break;  // leading should have cancelled
        dr = ndr;
        if (dr == 0 && r[0].is_zero()) break;
    }
    return from_coeff_list(r, v, a.field(), a.nvars());
}

}  // namespace

MultiPoly mpoly_divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    MultiPoly rem = a;
    MultiPoly quo(a.field(), a.nvars());
    const Exps lb = b.leading_exps();
    const Fe lcinv = inv(b.leading_coeff());
    while (!rem.is_zero()) {
        Exps lr = rem.leading_exps();
        Exps q(lr.size());
        for (std::size_t i = 0; i < lr.size(); ++i) {
            q[i] = lr[i] - lb[i];
            if (q[i] < 0) throw Error("inexact multivariate division");
        }
        Fe qc = mul(rem.leading_coeff(), lcinv);
        MultiPoly qt = MultiPoly::monomial(a.field(), a.nvars(), q, qc);
        quo = add(quo, qt);
        rem = sub(rem, mul(qt, b));
    }
    return quo;
}

MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return monic_grlex(b);
    if (b.is_zero()) return monic_grlex(a);
    int v = pick_main_var(a, b);
    if (v < 0)  // both nonzero constants
        return MultiPoly::constant(a.field(), a.nvars(), fe_one(a.field()));
    auto content_in = [&](const MultiPoly& f) {
        auto cs = coeff_list(f, v);
        MultiPoly g(f.field(), f.nvars());
        for (const auto& c : cs) g = mpoly_gcd(g, c);
        return g;
    };
    MultiPoly ca = content_in(a), cb = content_in(b);
    MultiPoly pa = mpoly_divexact(a, ca), pb = mpoly_divexact(b, cb);
    // primitive Euclid in main variable v
    while (!pb.is_zero() && pb.degree_in(v) > 0) {
        MultiPoly r = prem(pa, pb, v);
        pa = pb;
        pb = r.is_zero() ? r : mpoly_divexact(r, content_in(r));
    }
    MultiPoly g;
    if (pb.is_zero())
        g = pa;
    else  // a nonzero remainder of main-degree 0 means the primitive parts are coprime in v
        g = MultiPoly::constant(a.field(), a.nvars(), fe_one(a.field()));
    g = mpoly_divexact(g, content_in(g));
    return monic_grlex(mul(g, mpoly_gcd(ca, cb)));
}

MultiPoly content(const MultiPoly& f, int main_var) {
    if (f.is_zero()) throw ZeroPolynomial();
    MultiPoly g(f.field(), f.nvars());
    for (int k = 0; k <= f.degree_in(main_var); ++k) g = mpoly_gcd(g, f.coeff_of(main_var, k));
    return g;
}

bool check_hypothesis_H(const MultiPoly& f) {
    if (f.is_constant()) throw ZeroPolynomial();
    const int y = f.nvars() - 1;
    const int d = f.total_degree();
    if (f.degree_in(y) != d) return false;
    Exps top(f.nvars(), 0);
    top[y] = d;
    if (!f.coeff(top).is_one()) return false;
    UniPoly f0 = f.univariate_in(y);
    UniPoly df0 = derivative(f0);
    if (df0.is_zero()) return false;  // vanishes wherever f0 has a root
    if (f0.degree() == 0) return false;
    return !resultant(f0, df0).is_zero();
}

bool check_hypothesis_H_ring(const MultiPoly& f, int t_var) {
    if (f.is_constant()) throw ZeroPolynomial();
    const int y = f.nvars() - 1;
    if (t_var == y) throw ArityMismatch("t variable cannot be the main variable y");
    const int dy = f.degree_in(y);
    // total degree in the x,y variables, with t transparent
    int d = -1;
    for (const auto& [e, c] : f.terms()) {
        int s = 0;
        for (int v = 0; v < f.nvars(); ++v)
            if (v != t_var) s += e[v];
        d = std::max(d, s);
    }
    if (dy != d || dy < 1) return false;
    MultiPoly lead = f.coeff_of(y, dy);
    if (lead.total_degree() != 0 || !lead.leading_coeff().is_one()) return false;
    // set every variable other than y, t to zero; collect coefficients of y^k
    // as univariate polynomials in t
    std::vector<UniPoly> fy, dfy;
    for (int k = 0; k <= dy; ++k) {
        MultiPoly ck = f.coeff_of(y, k);
        // drop terms involving other variables
        std::vector<Fe> tc(std::max(ck.degree_in(t_var) + 1, 1), fe_zero(f.field()));
        for (const auto& [e, c] : ck.terms()) {
            bool pure = true;
            for (int v = 0; v < f.nvars(); ++v)
                if (v != t_var && e[v] != 0) pure = false;
            if (pure) tc[e[t_var]] = ldprg::add(tc[e[t_var]], c);
        }
        fy.emplace_back(f.field(), tc);
        if (k >= 1) {
            UniPoly d_k = scale(fy.back(), Fe(f.field(), static_cast<u64>(k)));
            dfy.resize(std::max<std::size_t>(dfy.size(), k), UniPoly(f.field()));
            dfy[k - 1] = d_k;
        }
    }
    bool df_zero = std::all_of(dfy.begin(), dfy.end(), [](const UniPoly& u) { return u.is_zero(); });
    if (df_zero) return false;
    UniPoly res = resultant_ring(fy, dfy, f.field());
    return !res.is_zero();
}

// ---- text format -----------------------------------------------------------

std::string mpoly_print(const MultiPoly& f, const std::string& var_prefix) {
    std::ostringstream os;
    os << "F " << f.field()->p;
    if (!f.field()->is_prime()) os << "^" << f.field()->degree();
    os << "\n" << f.to_string(var_prefix) << "\n";
    return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

u64 parse_uint(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error("expected integer in polynomial text");
    u64 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = v * 10 + static_cast<u64>(s[i++] - '0');
    return v;
}

}  // namespace

MultiPoly mpoly_parse_body(const std::string& body, FieldRef f, int nvars,
                           const std::string& var_prefix) {
    MultiPoly out(f, nvars);
    std::size_t i = 0;
    skip_ws(body, i);
    if (i < body.size() && body[i] == '0' && (i + 1 == body.size() || body.find_first_not_of(" \t\n", i + 1) == std::string::npos))
        return out;
    while (i < body.size()) {
        Fe c = fe_one(f);
        Exps e(nvars, 0);
        bool saw_factor = false;
        // optional leading coefficient
        skip_ws(body, i);
        if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            c = Fe(f, parse_uint(body, i));
            saw_factor = true;
        }
        for (;;) {
            skip_ws(body, i);
            if (i < body.size() && body[i] == '*') {
                ++i;
                skip_ws(body, i);
            } else if (saw_factor && i < body.size() && body.compare(i, var_prefix.size(), var_prefix) != 0) {
                break;
            }
            if (i >= body.size() || body.compare(i, var_prefix.size(), var_prefix) != 0) break;
            i += var_prefix.size();
            u64 v = parse_uint(body, i);
            if (v < 1 || static_cast<int>(v) > nvars) throw Error("variable index out of range");
            int exp = 1;
            skip_ws(body, i);
            if (i < body.size() && body[i] == '^') {
                ++i;
                exp = static_cast<int>(parse_uint(body, i));
            }
            e[v - 1] += exp;
            saw_factor = true;
        }
        if (!saw_factor) throw Error("empty term in polynomial text");
        out.add_term(e, c);
        skip_ws(body, i);
        if (i >= body.size()) break;
        if (body[i] != '+') throw Error("expected '+' between terms");
        ++i;
    }
    return out;
}

MultiPoly mpoly_parse(const std::string& text, int nvars, const std::string& var_prefix) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (text.compare(i, 1, "F") != 0) throw Error("missing field header");
    ++i;
    u64 p = parse_uint(text, i);
    skip_ws(text, i);
    if (i < text.size() && text[i] == '^')
        throw Error("tower fields need an explicit TowerSpec; use mpoly_parse_body");
    return mpoly_parse_body(text.substr(i), FieldDesc::make_prime(p), nvars, var_prefix);
}

}  // namespace ldprg
