#ifndef POLYCOMP_ALGEBRA_PRIME_FIELD_HPP
#define POLYCOMP_ALGEBRA_PRIME_FIELD_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "polycomp/algebra/bigint.hpp"
#include "polycomp/algebra/field.hpp"

namespace polycomp {

class Fp;

/// The prime field F_p. p = 2 is representable; callers that need an odd
/// characteristic check it themselves.
class PrimeField {
public:
    using element_type = Fp;

    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 62;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= max_modulus || !detail::is_prime_u64(p))
            throw Error(ErrorCode::InvalidInput, "modulus " + std::to_string(p) + " is not a supported prime");
    }

    std::uint64_t modulus() const { return p_; }

    Fp zero() const;
    Fp one() const;
    Fp from_int(std::int64_t n) const;
    Fp from_bigint(const BigInt& n) const;
    Fp element(std::uint64_t residue) const;
    std::uint64_t characteristic() const { return p_; }
    FieldDescriptor descriptor() const { return FieldDescriptor::prime_field(p_); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// Element of F_p stored as its residue in [0, p).
class Fp {
public:
    using context_type = PrimeField;

    Fp(std::uint64_t residue, PrimeField field) : r_(residue % field.modulus()), field_(field) {}

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return field_.modulus(); }
    PrimeField context() const { return field_; }
    bool is_zero() const { return r_ == 0; }

    Fp operator-() const { return Fp(r_ == 0 ? 0 : p() - r_, field_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        std::uint64_t s = a.r_ + b.r_;
        if (s >= a.p()) s -= a.p();
        return Fp(s, a.field_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.r_ >= b.r_ ? a.r_ - b.r_ : a.r_ + a.p() - b.r_, a.field_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(detail::mulmod(a.r_, b.r_, a.p()), a.field_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp inverse() const {
        if (r_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p()));
        return Fp(detail::powmod(r_, p() - 2, p()), field_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.check(b);
        return a.r_ == b.r_;
    }

    /// Residue only; the modulus is carried by the context.
    std::string to_string() const { return std::to_string(r_); }

    /// `r mod p`.
    std::string to_qualified_string() const { return std::to_string(r_) + " mod " + std::to_string(p()); }

private:
    std::uint64_t p() const { return field_.modulus(); }

    void check(const Fp& other) const {
        if (field_ != other.field_)
            throw Error(ErrorCode::FieldMismatch, "F_" + std::to_string(p()) + " vs F_" + std::to_string(other.p()));
    }

    std::uint64_t r_;
    PrimeField field_;
};

inline Fp PrimeField::zero() const { return Fp(0, *this); }
inline Fp PrimeField::one() const { return Fp(1, *this); }
inline Fp PrimeField::element(std::uint64_t residue) const { return Fp(residue, *this); }

inline Fp PrimeField::from_int(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), *this);
}

inline Fp PrimeField::from_bigint(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return Fp(r.convert_to<std::uint64_t>(), *this);
}

namespace detail {

inline bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0 || p == 2) return true;
    return powmod(a, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks; requires a to be a nonzero residue modulo an odd prime p.
inline std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
        q >>= 1U;
        ++s;
    }
    std::uint64_t z = 2;
    while (is_quadratic_residue(z, p)) ++z;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t x = powmod(a, (q + 1) / 2, p);
    std::uint64_t t = powmod(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        x = mulmod(x, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return x;
}

} // namespace detail

/// Square root in F_p, if one exists; the smaller of the two residues is returned.
inline std::optional<Fp> sqrt_in_field(const Fp& d) {
    const std::uint64_t p = d.modulus();
    if (d.is_zero() || p == 2) return d;
    if (!detail::is_quadratic_residue(d.residue(), p)) return std::nullopt;
    std::uint64_t r = detail::tonelli_shanks(d.residue(), p);
    return d.context().element(std::min(r, p - r));
}

/// The smallest residue r with r^m = x, if any.
inline std::optional<Fp> nth_root_in_field(const Fp& x, unsigned m) {
    if (m == 0) throw Error(ErrorCode::InvalidInput, "zeroth root");
    const std::uint64_t p = x.modulus();
    const PrimeField field = x.context();
    if (x.is_zero()) return x;
    if (m == 2) return sqrt_in_field(x);
    if (std::gcd<std::uint64_t>(m, p - 1) == 1) {
        // x -> x^m is a bijection; its inverse is x -> x^(m^-1 mod p-1).
        BigInt inv = 0;
        {
            BigInt a = m, b = p - 1, x0 = 1, x1 = 0;
            while (b != 0) {
                BigInt q = a / b;
                BigInt t = a - q * b;
                a = b;
                b = t;
                t = x0 - q * x1;
                x0 = x1;
                x1 = t;
            }
            inv = x0 % (p - 1);
            if (inv < 0) inv += p - 1;
        }
        return field.element(detail::powmod(x.residue(), inv.convert_to<std::uint64_t>(), p));
    }
    if (p > (std::uint64_t{1} << 24))
        throw Error(ErrorCode::InvalidInput, "general m-th roots are only supported for p < 2^24");
    for (std::uint64_t r = 1; r < p; ++r)
        if (detail::powmod(r, m, p) == x.residue()) return field.element(r);
    return std::nullopt;
}

} // namespace polycomp

#endif
