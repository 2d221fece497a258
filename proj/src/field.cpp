#include "ldprg/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ldprg {

u64 mod_pow(u64 a, u128 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 p) {
    if (a % p == 0) throw DivisionByZero();
    // extended Euclid
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(p), nr = static_cast<i64>(a % p);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    assert(r == 1);
    return static_cast<u64>(t < 0 ? t + static_cast<i64>(p) : t);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u128 FieldDesc::size() const {
    u128 q = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (q > (~u128{0}) / p) throw Error("field size exceeds 128 bits");
        q *= p;
    }
    return q;
}

std::shared_ptr<const FieldDesc> FieldDesc::make_prime(u64 p) {
    if (!is_prime_u64(p)) throw Error("characteristic is not prime");
    if (p >= (u64{1} << 31)) throw Error("characteristic must be below 2^31");
    auto d = std::make_shared<FieldDesc>();
    d->p = p;
    return d;
}

std::shared_ptr<const FieldDesc> FieldDesc::make_tower(u64 p, std::vector<std::vector<u64>> h) {
    if (!is_prime_u64(p)) throw Error("characteristic is not prime");
    if (p >= (u64{1} << 31)) throw Error("characteristic must be below 2^31");
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].size() != (std::size_t{1} << i)) throw Error("defining constant has wrong length");
        bool nonzero = false;
        for (auto& c : h[i]) {
            if (c >= p) throw Error("defining constant not reduced mod p");
            nonzero |= (c != 0);
        }
        if (!nonzero) throw Error("defining constant is zero");
    }
    auto d = std::make_shared<FieldDesc>();
    d->p = p;
    d->h = std::move(h);
    return d;
}

bool same_field(const FieldRef& a, const FieldRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Fe::Fe(FieldRef f, u64 base_value) : f_(std::move(f)) {
    c_.assign(f_->degree(), 0);
    c_[0] = base_value % f_->p;
}

Fe Fe::from_coeffs(FieldRef f, std::vector<u64> coeffs) {
    if (coeffs.size() != f->degree()) throw Error("coefficient vector has wrong length");
    Fe e;
    for (auto& c : coeffs) c %= f->p;
    e.f_ = std::move(f);
    e.c_ = std::move(coeffs);
    return e;
}

bool Fe::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 c) { return c == 0; });
}

bool Fe::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](u64 c) { return c == 0; });
}

bool Fe::in_prime_subfield() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](u64 c) { return c == 0; });
}

u64 Fe::residue() const {
    if (!in_prime_subfield()) throw Error("element is outside the prime subfield");
    return c_[0];
}

bool Fe::operator==(const Fe& o) const {
    if (!same_field(f_, o.f_)) throw DescriptorMismatch();
    return c_ == o.c_;
}

std::string Fe::to_string() const {
    if (f_->is_prime()) return std::to_string(c_[0]);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ']';
    return os.str();
}

Fe fe_zero(const FieldRef& f) { return Fe(f, 0); }
Fe fe_one(const FieldRef& f) { return Fe(f, 1); }

namespace {

void check(const Fe& a, const Fe& b) {
    if (!same_field(a.field(), b.field())) throw DescriptorMismatch();
}

using Span = std::pair<const u64*, std::size_t>;

// result += x * y at the given tower level (len = 2^level), reducing
// w_i^2 -> h_i innermost-first via the split (lo + hi*w_level).
void mul_rec(const FieldDesc& F, const u64* x, const u64* y, int level, u64* out, u64* scratch) {
    const u64 p = F.p;
    if (level == 0) {
        out[0] = mod_add(out[0], mod_mul(x[0], y[0], p), p);
        return;
    }
    const std::size_t half = std::size_t{1} << (level - 1);
    // scratch layout: [hi_prod | deeper scratch]
    u64* hi_prod = scratch;
    u64* deeper = scratch + half;
    std::fill(hi_prod, hi_prod + half, 0);
    // lo*lo into out lower half
    mul_rec(F, x, y, level - 1, out, deeper);
    // lo*hi + hi*lo into out upper half
    mul_rec(F, x, y + half, level - 1, out + half, deeper);
    mul_rec(F, x + half, y, level - 1, out + half, deeper);
    // hi*hi * h_level into out lower half
    mul_rec(F, x + half, y + half, level - 1, hi_prod, deeper);
    mul_rec(F, hi_prod, F.h[level - 1].data(), level - 1, out, deeper);
}

std::vector<u64> mul_vec(const FieldDesc& F, const std::vector<u64>& a, const std::vector<u64>& b, int level) {
    const std::size_t len = std::size_t{1} << level;
    std::vector<u64> out(len, 0);
    std::vector<u64> scratch(len > 1 ? len : 1, 0);
    mul_rec(F, a.data(), b.data(), level, out.data(), scratch.data());
    return out;
}

std::vector<u64> inv_vec(const FieldDesc& F, std::vector<u64> a, int level) {
    const u64 p = F.p;
    if (level == 0) return {mod_inv(a[0], p)};
    const std::size_t half = std::size_t{1} << (level - 1);
    std::vector<u64> lo(a.begin(), a.begin() + half);
    std::vector<u64> hi(a.begin() + half, a.end());
    // (lo + hi*w)^-1 = (lo - hi*w) / (lo^2 - hi^2*h)
    std::vector<u64> lo2 = mul_vec(F, lo, lo, level - 1);
    std::vector<u64> hi2 = mul_vec(F, hi, hi, level - 1);
    std::vector<u64> hi2h = mul_vec(F, hi2, F.h[level - 1], level - 1);
    std::vector<u64> den(half);
    bool zero = true;
    for (std::size_t i = 0; i < half; ++i) {
        den[i] = mod_sub(lo2[i], hi2h[i], p);
        zero &= (den[i] == 0);
    }
    if (zero) throw DivisionByZero();
    std::vector<u64> deninv = inv_vec(F, den, level - 1);
    std::vector<u64> rlo = mul_vec(F, lo, deninv, level - 1);
    std::vector<u64> rhi = mul_vec(F, hi, deninv, level - 1);
    std::vector<u64> out(a.size());
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = rlo[i];
        out[i + half] = mod_sub(0, rhi[i], p);
    }
    return out;
}

}  // namespace

Fe add(const Fe& a, const Fe& b) {
    check(a, b);
    const u64 p = a.field()->p;
    std::vector<u64> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_add(c[i], b.coeffs()[i], p);
    return Fe::from_coeffs(a.field(), std::move(c));
}

Fe sub(const Fe& a, const Fe& b) {
    check(a, b);
    const u64 p = a.field()->p;
    std::vector<u64> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_sub(c[i], b.coeffs()[i], p);
    return Fe::from_coeffs(a.field(), std::move(c));
}

Fe neg(const Fe& a) {
    const u64 p = a.field()->p;
    std::vector<u64> c(a.coeffs());
    for (auto& x : c) x = mod_sub(0, x, p);
    return Fe::from_coeffs(a.field(), std::move(c));
}

Fe mul(const Fe& a, const Fe& b) {
    check(a, b);
    return Fe::from_coeffs(a.field(), mul_vec(*a.field(), a.coeffs(), b.coeffs(), a.field()->levels()));
}

Fe inv(const Fe& a) {
    if (a.is_zero()) throw DivisionByZero();
    return Fe::from_coeffs(a.field(), inv_vec(*a.field(), a.coeffs(), a.field()->levels()));
}

Fe div(const Fe& a, const Fe& b) {
    check(a, b);
    return mul(a, inv(b));
}

Fe pow(const Fe& a, u128 e) {
    Fe r = fe_one(a.field());
    Fe base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fe frobenius(const Fe& a) { return pow(a, a.field()->p); }

Fe absolute_trace(const Fe& a, bool strict) {
    const auto& f = a.field();
    if (f->is_prime()) {
        if (strict) throw PrimeFieldInput();
        return a;
    }
    Fe acc = a;
    Fe x = a;
    for (std::size_t i = 1; i < f->degree(); ++i) {
        x = frobenius(x);
        acc = add(acc, x);
    }
    if (!acc.in_prime_subfield()) throw Error("trace left the prime subfield");
    return Fe(FieldDesc::make_prime(f->p), acc.residue());
}

Fe fe_from_index(const FieldRef& f, u128 index) {
    std::vector<u64> c(f->degree());
    for (auto& x : c) {
        x = static_cast<u64>(index % f->p);
        index /= f->p;
    }
    if (index != 0) throw Error("index exceeds field size");
    return Fe::from_coeffs(f, std::move(c));
}

u128 fe_to_index(const Fe& a) {
    u128 idx = 0;
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * a.field()->p + c[i];
    return idx;
}

std::vector<Fe> field_enumerate(const FieldRef& f, u128 budget) {
    u128 q = f->size();
    if (q > budget) throw BudgetExceeded("field enumeration");
    std::vector<Fe> out;
    out.reserve(static_cast<std::size_t>(q));
    for (u128 i = 0; i < q; ++i) out.push_back(fe_from_index(f, i));
    return out;
}

}  // namespace ldprg
