#ifndef POLYCOMP_ALGEBRA_FIELD_HPP
#define POLYCOMP_ALGEBRA_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>

#include "polycomp/error.hpp"

namespace polycomp {

/// A choice of +1 or -1; used for Chebyshev sign families and for lambda values.
enum class Sign : int { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
    return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

/// Runtime description of a coefficient field.
struct FieldDescriptor {
    enum class Kind { rationals, prime_field, quadratic_extension };

    Kind kind = Kind::rationals;
    std::uint64_t characteristic = 0;
    std::uint64_t modulus = 0;                   // prime fields only
    std::shared_ptr<const FieldDescriptor> base; // quadratic extensions only
    std::string discriminant;                    // quadratic extensions only, base-field text

    static FieldDescriptor rationals() { return {}; }

    static FieldDescriptor prime_field(std::uint64_t p) {
        FieldDescriptor d;
        d.kind = Kind::prime_field;
        d.characteristic = p;
        d.modulus = p;
        return d;
    }

    static FieldDescriptor quadratic_extension(FieldDescriptor base_field, std::string disc) {
        FieldDescriptor d;
        d.kind = Kind::quadratic_extension;
        d.characteristic = base_field.characteristic;
        d.base = std::make_shared<const FieldDescriptor>(std::move(base_field));
        d.discriminant = std::move(disc);
        return d;
    }

    /// `q`, `fp:<p>`, or `<base>(sqrt(<D>))`.
    std::string name() const {
        switch (kind) {
        case Kind::rationals: return "q";
        case Kind::prime_field: return "fp:" + std::to_string(modulus);
        case Kind::quadratic_extension: return base->name() + "(sqrt(" + discriminant + "))";
        }
        return "?";
    }

    std::string kind_name() const {
        switch (kind) {
        case Kind::rationals: return "rationals";
        case Kind::prime_field: return "prime-field";
        case Kind::quadratic_extension: return "quadratic-extension";
        }
        return "?";
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        if (a.kind != b.kind || a.characteristic != b.characteristic || a.modulus != b.modulus ||
            a.discriminant != b.discriminant)
            return false;
        if (a.base && b.base) return *a.base == *b.base;
        return !a.base && !b.base;
    }
};

/// A field context creates constants and reports the characteristic.
template <class C>
concept FieldContext = std::equality_comparable<C> && requires(const C& c, std::int64_t n) {
    typename C::element_type;
    { c.zero() } -> std::same_as<typename C::element_type>;
    { c.one() } -> std::same_as<typename C::element_type>;
    { c.from_int(n) } -> std::same_as<typename C::element_type>;
    { c.characteristic() } -> std::convertible_to<std::uint64_t>;
    { c.descriptor() } -> std::same_as<FieldDescriptor>;
};

/// Exact field element. Elements know their context so that constants and
/// mismatches can be handled without global state.
template <class F>
concept Field = std::equality_comparable<F> && requires(const F& a, const F& b) {
    typename F::context_type;
    requires FieldContext<typename F::context_type>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inverse() } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.context() } -> std::convertible_to<typename F::context_type>;
    { a.to_string() } -> std::same_as<std::string>;
};

template <Field F>
F pow(F base, std::uint64_t exp) {
    F result = base.context().one();
    while (exp != 0) {
        if (exp & 1U) result = result * base;
        base = base * base;
        exp >>= 1U;
    }
    return result;
}

template <Field F>
F sign_element(const typename F::context_type& ctx, Sign s) {
    return s == Sign::plus ? ctx.one() : -ctx.one();
}

} // namespace polycomp

#endif
