#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ldprg/errors.hpp"

namespace ldprg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// A finite field: either the prime field F_p or a quadratic tower
/// F_p = F_0 c F_1 c ... c F_ell, where F_i = F_{i-1}[w_i] / (w_i^2 - h_i).
///
/// The defining constant h_i is an element of F_{i-1}, stored as its
/// coefficient vector of length 2^{i-1} in the multilinear monomial basis
/// {prod w_j^{e_j} : e in {0,1}^{i-1}} with index bit j-1 = e_j.
///
/// Descriptors are immutable and shared; construction does not verify
/// irreducibility of the w_i^2 - h_i (the tower module does).
struct FieldDesc {
    u64 p = 0;
    std::vector<std::vector<u64>> h;

    int levels() const { return static_cast<int>(h.size()); }
    std::size_t degree() const { return std::size_t{1} << levels(); }
    bool is_prime() const { return h.empty(); }

    /// Number of elements p^degree. Throws if it does not fit in 128 bits.
    u128 size() const;

    bool operator==(const FieldDesc& o) const { return p == o.p && h == o.h; }

    static std::shared_ptr<const FieldDesc> make_prime(u64 p);
    static std::shared_ptr<const FieldDesc> make_tower(u64 p, std::vector<std::vector<u64>> h);
};

using FieldRef = std::shared_ptr<const FieldDesc>;

bool same_field(const FieldRef& a, const FieldRef& b);

/// An element of a FieldDesc, stored canonically: a coefficient vector of
/// length degree() over [0, p), multilinear-basis indexed. Prime fields use
/// length 1.
class Fe {
  public:
    Fe() = default;
    Fe(FieldRef f, u64 base_value);
    static Fe from_coeffs(FieldRef f, std::vector<u64> coeffs);

    const FieldRef& field() const { return f_; }
    const std::vector<u64>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    /// True iff the element lies in the prime subfield.
    bool in_prime_subfield() const;
    /// The residue for elements of the prime subfield.
    u64 residue() const;

    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    FieldRef f_;
    std::vector<u64> c_;
};

Fe fe_zero(const FieldRef& f);
Fe fe_one(const FieldRef& f);

Fe add(const Fe& a, const Fe& b);
Fe sub(const Fe& a, const Fe& b);
Fe neg(const Fe& a);
Fe mul(const Fe& a, const Fe& b);
Fe inv(const Fe& a);
Fe div(const Fe& a, const Fe& b);
Fe pow(const Fe& a, u128 e);

/// Frobenius x -> x^p.
Fe frobenius(const Fe& a);

/// Absolute trace Tr(x) = sum_{i<a} x^{p^i} into the prime field F_p.
/// For a prime-field input this is the identity unless strict is set.
Fe absolute_trace(const Fe& a, bool strict = false);

/// Deterministic enumeration order: lexicographic on the coefficient vector,
/// most significant coordinate last (i.e. index n maps to base-p digits).
Fe fe_from_index(const FieldRef& f, u128 index);
u128 fe_to_index(const Fe& a);

/// All Q elements in fe_from_index order. Rejects Q > budget.
std::vector<Fe> field_enumerate(const FieldRef& f, u128 budget = (u128{1} << 24));

// 64-bit modular helpers (p < 2^31 keeps intermediates in range, but mulmod
// goes through 128 bits anyway).
inline u64 mod_add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 mod_sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mod_mul(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
u64 mod_pow(u64 a, u128 e, u64 p);
u64 mod_inv(u64 a, u64 p);

bool is_prime_u64(u64 n);

}  // namespace ldprg
