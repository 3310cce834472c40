#ifndef POLYCOMP_CHEBYSHEV_HPP
#define POLYCOMP_CHEBYSHEV_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/poly.hpp"

namespace polycomp {

template <FieldContext C>
void require_odd_characteristic(const C& ctx, std::string_view what) {
    if (ctx.characteristic() == 2)
        throw Error(ErrorCode::UnsupportedCharacteristic, std::string(what) + " requires characteristic != 2");
}

template <Field F>
struct ChebyshevPair {
    std::size_t n;
    Polynomial<F> first_kind;  // T_n
    Polynomial<F> second_kind; // U_n
};

/// T_k and U_k for k = 0..n, from T_0 = 1, T_1 = x, U_0 = 1, U_1 = 2x and
/// P_{k+2} = 2x P_{k+1} - P_k. Coefficients live in the target field throughout.
template <Field F>
std::vector<ChebyshevPair<F>> chebyshev_ladder(std::size_t n, const typename F::context_type& ctx) {
    require_odd_characteristic(ctx, "Chebyshev polynomials");
    using P = Polynomial<F>;
    const P one = P::constant(ctx, ctx.one());
    const P x = P::x(ctx);
    const P two_x = P::monomial(ctx, ctx.from_int(2), 1);

    std::vector<ChebyshevPair<F>> ladder;
    ladder.reserve(n + 1);
    ladder.push_back({0, one, one});
    if (n >= 1) ladder.push_back({1, x, two_x});
    for (std::size_t k = 2; k <= n; ++k) {
        const auto& prev = ladder[k - 1];
        const auto& prev2 = ladder[k - 2];
        ladder.push_back({k, two_x * prev.first_kind - prev2.first_kind, two_x * prev.second_kind - prev2.second_kind});
    }
    return ladder;
}

template <Field F>
Polynomial<F> chebyshev_T(std::size_t n, const typename F::context_type& ctx) {
    return chebyshev_ladder<F>(n, ctx).back().first_kind;
}

/// U_n for n >= -1, with U_{-1} = 0.
template <Field F>
Polynomial<F> chebyshev_U(std::int64_t n, const typename F::context_type& ctx) {
    if (n < -1) throw Error(ErrorCode::InvalidInput, "U_n is defined for n >= -1");
    if (n == -1) {
        require_odd_characteristic(ctx, "Chebyshev polynomials");
        return Polynomial<F>(ctx);
    }
    return chebyshev_ladder<F>(static_cast<std::size_t>(n), ctx).back().second_kind;
}

enum class Parity { even_powers_only, odd_powers_only, mixed };

constexpr std::string_view to_string(Parity p) {
    switch (p) {
    case Parity::even_powers_only: return "even-powers-only";
    case Parity::odd_powers_only: return "odd-powers-only";
    case Parity::mixed: return "mixed";
    }
    return "?";
}

/// Which powers of x carry nonzero coefficients. The zero polynomial counts as even.
template <Field F>
Parity parity_profile(const Polynomial<F>& p) {
    bool even = false;
    bool odd = false;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        (i % 2 == 0 ? even : odd) = true;
    }
    if (even && odd) return Parity::mixed;
    return odd ? Parity::odd_powers_only : Parity::even_powers_only;
}

} // namespace polycomp

#endif
