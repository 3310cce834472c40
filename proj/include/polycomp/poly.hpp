#ifndef POLYCOMP_POLY_HPP
#define POLYCOMP_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycomp/algebra.hpp"

namespace polycomp {

/// Degree of a polynomial. The zero polynomial has degree NEG_INFINITY, which
/// compares below every finite degree and absorbs addition.
class Degree {
public:
    constexpr explicit Degree(std::size_t d) : value_(d), finite_(true) {}

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return !finite_; }

    std::size_t value() const {
        if (!finite_) throw Error(ErrorCode::InvalidInput, "degree of the zero polynomial is NEG_INFINITY");
        return value_;
    }

    friend constexpr bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator==(const Degree& a, std::size_t b) { return a.finite_ && a.value_ == b; }

    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr std::strong_ordering operator<=>(const Degree& a, std::size_t b) {
        return a <=> Degree(b);
    }

    friend constexpr Degree operator+(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_) return neg_infinity();
        return Degree(a.value_ + b.value_);
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "NEG_INFINITY"; }

private:
    constexpr Degree() = default;

    std::size_t value_ = 0;
    bool finite_ = false;
};

/// Dense univariate polynomial; coefficient i multiplies x^i. The highest
/// stored coefficient is always nonzero, so zero is the empty sequence.
template <Field F>
class Polynomial {
public:
    using field_type = F;
    using context_type = typename F::context_type;

    explicit Polynomial(context_type ctx) : ctx_(std::move(ctx)) {}

    Polynomial(context_type ctx, std::vector<F> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        for (const F& a : c_)
            if (!(a.context() == ctx_))
                throw Error(ErrorCode::FieldMismatch, "coefficient outside " + ctx_.descriptor().name());
        trim();
    }

    /// Ascending integer coefficients mapped into the field.
    static Polynomial from_ints(const context_type& ctx, std::initializer_list<std::int64_t> ascending) {
        std::vector<F> c;
        c.reserve(ascending.size());
        for (auto v : ascending) c.push_back(ctx.from_int(v));
        return Polynomial(ctx, std::move(c));
    }

    static Polynomial constant(const context_type& ctx, F value) { return Polynomial(ctx, {std::move(value)}); }

    static Polynomial monomial(const context_type& ctx, F coeff, std::size_t power) {
        std::vector<F> c(power + 1, ctx.zero());
        c[power] = std::move(coeff);
        return Polynomial(ctx, std::move(c));
    }

    static Polynomial x(const context_type& ctx) { return monomial(ctx, ctx.one(), 1); }

    const context_type& context() const { return ctx_; }
    const std::vector<F>& coefficients() const { return c_; }

    F coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_.zero(); }

    Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }
    bool is_zero() const { return c_.empty(); }
    /// Zero or nonzero constant.
    bool is_constant() const { return c_.size() <= 1; }

    F leading() const {
        if (c_.empty()) return ctx_.zero();
        return c_.back();
    }

    F operator()(const F& at) const {
        F acc = ctx_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (F& a : r.c_) a = -a;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), a.ctx_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Polynomial(a.ctx_, std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, a.ctx_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(a.ctx_, std::move(c));
    }

    friend Polynomial operator*(const F& s, const Polynomial& p) {
        std::vector<F> c = p.c_;
        for (F& a : c) a = s * a;
        return Polynomial(p.ctx_, std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    /// Leading coefficient scaled to one; zero stays zero.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

    /// Applies `fn` to every coefficient, producing a polynomial over `target`.
    template <class Target, class Fn>
    Polynomial<Target> map(const typename Target::context_type& target, Fn&& fn) const {
        std::vector<Target> c;
        c.reserve(c_.size());
        for (const F& a : c_) c.push_back(fn(a));
        return Polynomial<Target>(target, std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    void check(const Polynomial& other) const {
        if (!(ctx_ == other.ctx_))
            throw Error(ErrorCode::FieldMismatch,
                        ctx_.descriptor().name() + " vs " + other.ctx_.descriptor().name());
    }

    context_type ctx_;
    std::vector<F> c_;
};

template <Field F>
Polynomial<F> pow(Polynomial<F> base, std::uint64_t exp) {
    Polynomial<F> result = Polynomial<F>::constant(base.context(), base.context().one());
    while (exp != 0) {
        if (exp & 1U) result = result * base;
        exp >>= 1U;
        if (exp != 0) base = base * base;
    }
    return result;
}

/// outer(inner(x)), by Horner's rule.
template <Field F>
Polynomial<F> compose(const Polynomial<F>& outer, const Polynomial<F>& inner) {
    if (!(outer.context() == inner.context()))
        throw Error(ErrorCode::FieldMismatch, "compose across different fields");
    Polynomial<F> acc(outer.context());
    const auto& c = outer.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * inner + Polynomial<F>::constant(outer.context(), *it);
    return acc;
}

/// Formal derivative. In characteristic p the terms x^(kp) vanish.
template <Field F>
Polynomial<F> derivative(const Polynomial<F>& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return Polynomial<F>(p.context());
    std::vector<F> d;
    d.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        d.push_back(p.context().from_int(static_cast<std::int64_t>(i)) * c[i]);
    return Polynomial<F>(p.context(), std::move(d));
}

template <Field F>
struct DivRem {
    Polynomial<F> quotient;
    Polynomial<F> remainder;
};

template <Field F>
DivRem<F> divrem(const Polynomial<F>& p, const Polynomial<F>& q) {
    if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (!(p.context() == q.context())) throw Error(ErrorCode::FieldMismatch, "divrem across different fields");
    const auto& ctx = p.context();
    if (p.degree() < q.degree()) return {Polynomial<F>(ctx), p};

    std::vector<F> rem = p.coefficients();
    const auto& den = q.coefficients();
    const std::size_t dq = den.size() - 1;
    const F lead_inv = den.back().inverse();
    std::vector<F> quot(rem.size() - dq, ctx.zero());
    for (std::size_t k = rem.size(); k-- > dq;) {
        if (rem[k].is_zero()) continue;
        const F t = rem[k] * lead_inv;
        quot[k - dq] = t;
        for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] = rem[k - dq + j] - t * den[j];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dq), rem.end());
    return {Polynomial<F>(ctx, std::move(quot)), Polynomial<F>(ctx, std::move(rem))};
}

/// Monic greatest common divisor.
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::InvalidInput, "gcd(0, 0) is undefined");
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Polynomial<F> r = divrem(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// gcd(p, p') is constant. Throws InvalidInput for constant p.
template <Field F>
bool is_separable(const Polynomial<F>& p) {
    if (p.is_constant()) throw Error(ErrorCode::InvalidInput, "separability of a constant polynomial");
    return gcd(p, derivative(p)).degree() == 0;
}

/// r with r^m = p, if one exists. The leading coefficient of r is the root
/// chosen by nth_root_in_field for the leading coefficient of p; the rest
/// follows from the coefficients of p from the top down.
template <Field F>
std::optional<Polynomial<F>> nth_root(const Polynomial<F>& p, unsigned m) {
    if (m == 0) throw Error(ErrorCode::InvalidInput, "zeroth root of a polynomial");
    const auto& ctx = p.context();
    const std::uint64_t ch = ctx.characteristic();
    if (ch != 0 && m % ch == 0)
        throw Error(ErrorCode::UnsupportedCharacteristic,
                    "characteristic " + std::to_string(ch) + " divides m = " + std::to_string(m));
    if (m == 1 || p.is_zero()) return p;

    const std::size_t d = p.degree().value();
    if (d % m != 0) return std::nullopt;
    const std::size_t k = d / m;

    auto lead = nth_root_in_field(p.leading(), m);
    if (!lead) return std::nullopt;

    std::vector<F> r(k + 1, ctx.zero());
    r[k] = *lead;
    const F denom = ctx.from_int(m) * pow(*lead, m - 1);
    for (std::size_t i = 1; i <= k; ++i) {
        const Polynomial<F> partial(ctx, r);
        const F have = pow(partial, m).coefficient(d - i);
        r[k - i] = (p.coefficient(d - i) - have) / denom;
    }
    Polynomial<F> root(ctx, std::move(r));
    if (!(pow(root, m) == p)) return std::nullopt;
    return root;
}

} // namespace polycomp

#endif
