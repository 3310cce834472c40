#ifndef POLYCOMP_ALGEBRA_QUADRATIC_EXTENSION_HPP
#define POLYCOMP_ALGEBRA_QUADRATIC_EXTENSION_HPP

#include <optional>
#include <string>

#include "polycomp/algebra/field.hpp"

namespace polycomp {

template <Field Base>
class QuadExt;

/// K(sqrt(D)) = K[y]/(y^2 - D). When D is a square in K this is not a field
/// but the representation and all ring operations stay valid; only inverses of
/// zero divisors fail.
template <Field Base>
class QuadraticExtension {
public:
    using element_type = QuadExt<Base>;
    using base_context = typename Base::context_type;

    explicit QuadraticExtension(Base discriminant) : base_(discriminant.context()), d_(std::move(discriminant)) {
        if (d_.is_zero()) throw Error(ErrorCode::InvalidInput, "quadratic extension with D = 0");
    }

    const Base& discriminant() const { return d_; }
    const base_context& base() const { return base_; }

    QuadExt<Base> zero() const { return embed(base_.zero()); }
    QuadExt<Base> one() const { return embed(base_.one()); }
    QuadExt<Base> from_int(std::int64_t n) const { return embed(base_.from_int(n)); }
    QuadExt<Base> embed(const Base& u) const { return QuadExt<Base>(u, base_.zero(), *this); }
    QuadExt<Base> element(const Base& u, const Base& v) const { return QuadExt<Base>(u, v, *this); }
    /// The adjoined root y with y^2 = D.
    QuadExt<Base> sqrt_d() const { return QuadExt<Base>(base_.zero(), base_.one(), *this); }

    std::uint64_t characteristic() const { return base_.characteristic(); }
    FieldDescriptor descriptor() const {
        return FieldDescriptor::quadratic_extension(base_.descriptor(), d_.to_string());
    }

    friend bool operator==(const QuadraticExtension& a, const QuadraticExtension& b) {
        return a.base_ == b.base_ && a.d_ == b.d_;
    }

private:
    base_context base_;
    Base d_;
};

/// u + v*sqrt(D).
template <Field Base>
class QuadExt {
public:
    using context_type = QuadraticExtension<Base>;

    QuadExt(Base u, Base v, context_type ctx) : u_(std::move(u)), v_(std::move(v)), ctx_(std::move(ctx)) {}

    const Base& rational_part() const { return u_; }
    const Base& radical_part() const { return v_; }
    const context_type& context() const { return ctx_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool in_base_field() const { return v_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-u_, -v_, ctx_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.u_ + b.u_, a.v_ + b.v_, a.ctx_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.u_ - b.u_, a.v_ - b.v_, a.ctx_);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        const Base& d = a.ctx_.discriminant();
        return QuadExt(a.u_ * b.u_ + d * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_, a.ctx_);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    QuadExt conjugate() const { return QuadExt(u_, -v_, ctx_); }

    /// u^2 - D v^2.
    Base norm() const { return u_ * u_ - ctx_.discriminant() * v_ * v_; }

    QuadExt inverse() const {
        const Base n = norm();
        if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of a zero divisor in " + ctx_.descriptor().name());
        const Base inv = n.inverse();
        return QuadExt(u_ * inv, -v_ * inv, ctx_);
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return a.u_ == b.u_ && a.v_ == b.v_;
    }

    /// `u + v*sqrt(D)`, with the sign of v folded into the operator.
    std::string to_string() const {
        std::string v = v_.to_string();
        std::string op = " + ";
        if (!v.empty() && v.front() == '-') {
            op = " - ";
            v.erase(0, 1);
        }
        return u_.to_string() + op + v + "*sqrt(" + ctx_.discriminant().to_string() + ")";
    }

private:
    void check(const QuadExt& other) const {
        if (!(ctx_ == other.ctx_))
            throw Error(ErrorCode::FieldMismatch, ctx_.descriptor().name() + " vs " + other.ctx_.descriptor().name());
    }

    Base u_;
    Base v_;
    context_type ctx_;
};

/// Maps u + v*sqrt(D) to the base field: directly when v = 0, otherwise by
/// substituting a square root of D when D is a square in the base field.
template <Field Base>
std::optional<Base> try_descend(const QuadExt<Base>& x) {
    if (x.radical_part().is_zero()) return x.rational_part();
    if (auto s = sqrt_in_field(x.context().discriminant())) return x.rational_part() + x.radical_part() * *s;
    return std::nullopt;
}

} // namespace polycomp

#endif
