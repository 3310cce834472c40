#ifndef POLYCOMP_ALGEBRA_RATIONAL_HPP
#define POLYCOMP_ALGEBRA_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polycomp/algebra/bigint.hpp"
#include "polycomp/algebra/field.hpp"

namespace polycomp {

class Rational;

/// The field of rational numbers. Stateless.
struct RationalField {
    using element_type = Rational;

    Rational zero() const;
    Rational one() const;
    Rational from_int(std::int64_t n) const;
    std::uint64_t characteristic() const { return 0; }
    FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
    using context_type = RationalField;

    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n) : num_(n), den_(1) {}      // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}               // NOLINT(google-explicit-constructor)

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    RationalField context() const { return {}; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational inverse() const {
        if (num_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of rational zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// `p` or `p/q`.
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Accepts `[+-]digits` or `[+-]digits/digits`; throws InvalidInput otherwise.
    static Rational parse(std::string_view text) {
        auto digits_ok = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        std::string_view n = body.substr(0, slash);
        std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (!digits_ok(n) || !digits_ok(d))
            throw Error(ErrorCode::InvalidInput, "not a rational number: '" + std::string(text) + "'");
        BigInt num{std::string(n)};
        BigInt den{std::string(d)};
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
        return Rational(negative ? BigInt(-num) : num, den);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational RationalField::zero() const { return Rational(); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_int(std::int64_t n) const { return Rational(n); }

/// Square root in Q with nonnegative numerator, if one exists.
inline std::optional<Rational> sqrt_in_field(const Rational& d) {
    if (d.sign() < 0) return std::nullopt;
    auto n = detail::exact_integer_root(d.numerator(), 2);
    auto q = detail::exact_integer_root(d.denominator(), 2);
    if (!n || !q) return std::nullopt;
    return Rational(*n, *q);
}

/// Some m-th root in Q, if one exists. For even m the positive root is returned.
inline std::optional<Rational> nth_root_in_field(const Rational& x, unsigned m) {
    if (m == 0) throw Error(ErrorCode::InvalidInput, "zeroth root");
    if (x.is_zero()) return x;
    if (x.sign() < 0 && m % 2 == 0) return std::nullopt;
    auto n = detail::exact_integer_root(boost::multiprecision::abs(x.numerator()), m);
    auto q = detail::exact_integer_root(x.denominator(), m);
    if (!n || !q) return std::nullopt;
    Rational r(*n, *q);
    return x.sign() < 0 ? -r : r;
}

} // namespace polycomp

#endif
