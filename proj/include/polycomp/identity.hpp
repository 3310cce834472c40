#ifndef POLYCOMP_IDENTITY_HPP
#define POLYCOMP_IDENTITY_HPP

#include <optional>
#include <string>
#include <utility>

#include "polycomp/chebyshev.hpp"

namespace polycomp {

/// f(g(x)) == f(x) * h(x)^m, exactly.
template <Field F>
bool check_identity(const Polynomial<F>& f, const Polynomial<F>& g, const Polynomial<F>& h, unsigned m) {
    if (m == 0) throw Error(ErrorCode::InvalidInput, "exponent m must be at least 1");
    return compose(f, g) == f * pow(h, m);
}

/// The side conditions under which the two solution families are exhaustive.
struct Hypotheses {
    bool f_separable = false; // implies f nonconstant
    bool g_degree_at_least_2 = false;
    bool g_derivative_nonzero = false;
    bool characteristic_coprime_to_m = false;

    bool all() const {
        return f_separable && g_degree_at_least_2 && g_derivative_nonzero && characteristic_coprime_to_m;
    }
};

/// A quadruple (f, g, h, m) for which the composition equation has been
/// verified. Values that violate the side conditions are representable (they
/// are the interesting counterexamples) and say so through hypotheses().
template <Field F>
class CompositionIdentity {
public:
    static CompositionIdentity certify(Polynomial<F> f, Polynomial<F> g, Polynomial<F> h, unsigned m) {
        if (!check_identity(f, g, h, m))
            throw Error(ErrorCode::VerificationFailed, "f(g(x)) != f(x) h(x)^" + std::to_string(m));
        return CompositionIdentity(std::move(f), std::move(g), std::move(h), m);
    }

    const Polynomial<F>& f() const { return f_; }
    const Polynomial<F>& g() const { return g_; }
    const Polynomial<F>& h() const { return h_; }
    unsigned m() const { return m_; }
    const Hypotheses& hypotheses() const { return hyp_; }

    friend bool operator==(const CompositionIdentity& a, const CompositionIdentity& b) {
        return a.m_ == b.m_ && a.f_ == b.f_ && a.g_ == b.g_ && a.h_ == b.h_;
    }

private:
    CompositionIdentity(Polynomial<F> f, Polynomial<F> g, Polynomial<F> h, unsigned m)
        : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)), m_(m) {
        const std::uint64_t ch = f_.context().characteristic();
        hyp_.f_separable = !f_.is_constant() && is_separable(f_);
        hyp_.g_degree_at_least_2 = g_.degree() >= 2;
        hyp_.g_derivative_nonzero = !derivative(g_).is_zero();
        hyp_.characteristic_coprime_to_m = ch == 0 || m_ % ch != 0;
    }

    Polynomial<F> f_;
    Polynomial<F> g_;
    Polynomial<F> h_;
    unsigned m_;
    Hypotheses hyp_;
};

/// Linear family: f = a x + b and g = (x + b/a) h^m - b/a.
template <Field F>
CompositionIdentity<F> generate_linear(const F& a, const F& b, const Polynomial<F>& h, unsigned m) {
    const auto& ctx = h.context();
    if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "leading coefficient a must be nonzero");
    if (m < 2) throw Error(ErrorCode::InvalidInput, "exponent m must be at least 2");
    const std::uint64_t ch = ctx.characteristic();
    if (ch != 0 && m % ch == 0)
        throw Error(ErrorCode::UnsupportedCharacteristic,
                    "characteristic " + std::to_string(ch) + " divides m = " + std::to_string(m));
    if (h.is_zero() || h.degree().value() * m < 2)
        throw Error(ErrorCode::DegreeTooSmall, "deg g = m deg h must be at least 2");

    using P = Polynomial<F>;
    const F shift = b / a;
    P f(ctx, {b, a});
    P g = (P::x(ctx) + P::constant(ctx, shift)) * pow(h, m) - P::constant(ctx, shift);
    return CompositionIdentity<F>::certify(std::move(f), std::move(g), h, m);
}

/// The affine substitution x = (t sqrt(D) - b) / (2a) taking a*x^2 + b*x + c to
/// (D / 4a)(t^2 - 1). Carried out in K(sqrt(D)) whether or not D is a square in K.
template <Field F>
struct PellNormalization {
    using Ext = QuadExt<F>;

    F a, b, c;
    F discriminant;
    QuadraticExtension<F> extension;
    Ext sqrt_d;
    Polynomial<Ext> forward; // x(t)
    Polynomial<Ext> inverse; // t(x) = (2a x + b) / sqrt(D)
    F scale;                 // D / 4a
};

template <Field F>
F quadratic_discriminant(const F& a, const F& b, const F& c) {
    return b * b - a.context().from_int(4) * a * c;
}

namespace detail {

template <Field F>
PellNormalization<F> make_normalization(const F& a, const F& b, const F& c) {
    const auto& ctx = a.context();
    require_odd_characteristic(ctx, "the quadratic family");
    if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "leading coefficient a must be nonzero");
    const F d = quadratic_discriminant(a, b, c);
    if (d.is_zero()) throw Error(ErrorCode::NotSeparable, "discriminant b^2 - 4ac is zero");

    QuadraticExtension<F> ext(d);
    using Ext = QuadExt<F>;
    using P = Polynomial<Ext>;
    const Ext root = ext.sqrt_d();
    const Ext two_a = ext.embed(ctx.from_int(2) * a);
    const Ext eb = ext.embed(b);
    P forward(ext, {-eb / two_a, root / two_a});
    P inverse(ext, {eb / root, two_a / root});
    return {a, b, c, d, ext, root, std::move(forward), std::move(inverse), d / (ctx.from_int(4) * a)};
}

template <Field F>
Polynomial<QuadExt<F>> embed(const Polynomial<F>& p, const QuadraticExtension<F>& ext) {
    return p.template map<QuadExt<F>>(ext, [&](const F& v) { return ext.embed(v); });
}

template <Field F>
std::optional<Polynomial<F>> descend(const Polynomial<QuadExt<F>>& p, const typename F::context_type& base) {
    std::vector<F> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) {
        auto d = try_descend(v);
        if (!d) return std::nullopt;
        c.push_back(*d);
    }
    return Polynomial<F>(base, std::move(c));
}

} // namespace detail

/// Normalization data for a separable quadratic f, verified by substitution.
template <Field F>
PellNormalization<F> normalize_to_pell(const Polynomial<F>& f) {
    if (f.degree() != 2) throw Error(ErrorCode::InvalidInput, "normalization needs a quadratic polynomial");
    auto norm = detail::make_normalization(f.coefficient(2), f.coefficient(1), f.coefficient(0));
    using P = Polynomial<QuadExt<F>>;
    const P fe = detail::embed(f, norm.extension);
    const P target = norm.extension.embed(norm.scale) * P::from_ints(norm.extension, {-1, 0, 1});
    if (!(compose(fe, norm.forward) == target))
        throw Error(ErrorCode::VerificationFailed, "substitution did not produce (D/4a)(t^2 - 1)");
    return norm;
}

/// Quadratic family member. `extended` always exists; `descended` is present
/// when every coefficient of g and h lies in the base field.
template <Field F>
struct QuadraticIdentity {
    CompositionIdentity<QuadExt<F>> extended;
    std::optional<CompositionIdentity<F>> descended;
    PellNormalization<F> normalization;
};

/// f = a x^2 + b x + c, m = 2,
/// g = (sign_g T_n(y) sqrt(D) - b) / (2a), h = sign_h U_{n-1}(y), y = (2a x + b) / sqrt(D).
template <Field F>
QuadraticIdentity<F> generate_quadratic(const F& a, const F& b, const F& c, std::size_t n, Sign sign_g,
                                        Sign sign_h) {
    auto norm = detail::make_normalization(a, b, c);
    if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "n must be at least 2 so that deg g >= 2");

    using Ext = QuadExt<F>;
    using P = Polynomial<Ext>;
    const auto& ext = norm.extension;
    const auto ladder = chebyshev_ladder<Ext>(n, ext);
    const Ext two_a = ext.embed(a.context().from_int(2) * a);

    const P t_n = compose(ladder[n].first_kind, norm.inverse);
    P g = two_a.inverse() * (sign_element<Ext>(ext, sign_g) * norm.sqrt_d * t_n - P::constant(ext, ext.embed(b)));
    P h = sign_element<Ext>(ext, sign_h) * compose(ladder[n - 1].second_kind, norm.inverse);
    P f(ext, {ext.embed(c), ext.embed(b), ext.embed(a)});

    auto extended = CompositionIdentity<Ext>::certify(f, g, h, 2);
    std::optional<CompositionIdentity<F>> descended;
    const auto& base = a.context();
    auto gd = detail::descend(g, base);
    auto hd = detail::descend(h, base);
    if (gd && hd)
        descended = CompositionIdentity<F>::certify(Polynomial<F>(base, {c, b, a}), std::move(*gd), std::move(*hd), 2);
    return {std::move(extended), std::move(descended), std::move(norm)};
}

/// Closed form of the n = 3 member with both signs +:
/// g = (16a^2 x^3 + 24ab x^2 + (9b^2 + 12ac) x + 8bc) / D,
/// h = (16a^2 x^2 + 16ab x + 3b^2 + 4ac) / D.
template <Field F>
CompositionIdentity<F> generate_lyg(const F& a, const F& b, const F& c) {
    const auto& ctx = a.context();
    require_odd_characteristic(ctx, "the quadratic family");
    if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "leading coefficient a must be nonzero");
    const F d = quadratic_discriminant(a, b, c);
    if (d.is_zero()) throw Error(ErrorCode::NotSeparable, "discriminant b^2 - 4ac is zero");

    auto k = [&](std::int64_t v) { return ctx.from_int(v); };
    const F inv_d = d.inverse();
    Polynomial<F> g(ctx, {k(8) * b * c * inv_d, (k(9) * b * b + k(12) * a * c) * inv_d, k(24) * a * b * inv_d,
                          k(16) * a * a * inv_d});
    Polynomial<F> h(ctx, {(k(3) * b * b + k(4) * a * c) * inv_d, k(16) * a * b * inv_d, k(16) * a * a * inv_d});
    return CompositionIdentity<F>::certify(Polynomial<F>(ctx, {c, b, a}), std::move(g), std::move(h), 2);
}

/// Case II forces m = 2; any other exponent with a quadratic f is rejected.
inline void require_quadratic_exponent(unsigned m) {
    if (m != 2)
        throw Error(ErrorCode::InvalidInput,
                    "with deg f = 2 the composition equation has solutions only for m = 2 (got m = " +
                        std::to_string(m) + ")");
}

} // namespace polycomp

#endif
