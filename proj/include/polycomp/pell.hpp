#ifndef POLYCOMP_PELL_HPP
#define POLYCOMP_PELL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "polycomp/chebyshev.hpp"
#include "polycomp/detail/enumerate.hpp"

namespace polycomp {

/// (sign_p, sign_q, n) such that P = sign_p T_n and Q = sign_q U_{n-1}.
struct PellClass {
    Sign sign_p;
    Sign sign_q;
    std::size_t n;

    friend bool operator==(const PellClass&, const PellClass&) = default;
};

/// Canonical order: by n, then sign_p, then sign_q, with + before -.
inline bool operator<(const PellClass& a, const PellClass& b) {
    return std::make_tuple(a.n, -to_int(a.sign_p), -to_int(a.sign_q)) <
           std::make_tuple(b.n, -to_int(b.sign_p), -to_int(b.sign_q));
}

/// P^2 - (x^2 - 1) Q^2 = 1 holds for every value of this type produced here.
template <Field F>
struct PellSolution {
    Polynomial<F> P;
    Polynomial<F> Q;
    std::optional<PellClass> classification;
};

template <Field F>
bool pell_check(const Polynomial<F>& P, const Polynomial<F>& Q) {
    const auto& ctx = P.context();
    require_odd_characteristic(ctx, "the Pell equation");
    const auto x2m1 = Polynomial<F>::from_ints(ctx, {-1, 0, 1});
    return P * P - x2m1 * (Q * Q) == Polynomial<F>::constant(ctx, ctx.one());
}

template <Field F>
PellSolution<F> pell_solution(std::size_t n, Sign sign_p, Sign sign_q, const typename F::context_type& ctx) {
    require_odd_characteristic(ctx, "the Pell equation");
    const auto ladder = chebyshev_ladder<F>(n, ctx);
    Polynomial<F> P = sign_element<F>(ctx, sign_p) * ladder[n].first_kind;
    Polynomial<F> Q = n == 0 ? Polynomial<F>(ctx) : sign_element<F>(ctx, sign_q) * ladder[n - 1].second_kind;
    if (!pell_check(P, Q)) throw Error(ErrorCode::VerificationFailed, "generated Pell pair fails the equation");
    return {std::move(P), std::move(Q), PellClass{sign_p, n == 0 ? Sign::plus : sign_q, n}};
}

namespace detail {

template <Field F>
std::optional<Sign> sign_against(const Polynomial<F>& actual, const Polynomial<F>& reference) {
    if (actual == reference) return Sign::plus;
    if (actual == -reference) return Sign::minus;
    return std::nullopt;
}

} // namespace detail

/// Identifies (P, Q) within the family (+-T_n, +-U_{n-1}); n = deg P. Empty if
/// the pair is not a solution. For n = 0, sign_q is reported as +.
template <Field F>
std::optional<PellClass> pell_classify(const Polynomial<F>& P, const Polynomial<F>& Q) {
    if (!pell_check(P, Q)) return std::nullopt;
    const auto& ctx = P.context();
    const std::size_t n = P.degree().value();
    const auto ladder = chebyshev_ladder<F>(n, ctx);
    const auto sp = detail::sign_against(P, ladder[n].first_kind);
    if (!sp) return std::nullopt;
    if (n == 0) {
        if (!Q.is_zero()) return std::nullopt;
        return PellClass{*sp, Sign::plus, 0};
    }
    const auto sq = detail::sign_against(Q, ladder[n - 1].second_kind);
    if (!sq) return std::nullopt;
    return PellClass{*sp, *sq, n};
}

inline constexpr std::uint64_t default_iteration_ceiling = 50'000'000;

/// All pairs (P, Q) over F_p with deg P <= max_degree and deg Q <= max_degree - 1
/// satisfying the Pell equation, found by trying every coefficient tuple.
/// Sorted by classification; unclassifiable solutions (none are expected)
/// come last.
inline std::vector<PellSolution<Fp>> pell_enumerate_bruteforce(std::uint64_t p, std::size_t max_degree,
                                                               std::uint64_t ceiling = default_iteration_ceiling) {
    if (p % 2 == 0) throw Error(ErrorCode::InvalidInput, "Pell enumeration needs an odd prime");
    const PrimeField field(p);
    const BigInt iterations = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(2 * max_degree + 1));
    if (iterations > ceiling)
        throw Error(ErrorCode::SearchTooLarge,
                    "about " + iterations.str() + " pairs exceeds the ceiling " + std::to_string(ceiling));

    using P = Polynomial<Fp>;
    std::vector<P> ps{P(field)};
    std::vector<P> qs{P(field)};
    for (std::size_t d = 0; d <= max_degree; ++d) {
        auto layer = detail::polynomials_of_degree(field, d, false);
        if (d < max_degree) qs.insert(qs.end(), layer.begin(), layer.end());
        ps.insert(ps.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }

    const auto x2m1 = P::from_ints(field, {-1, 0, 1});
    const P one = P::constant(field, field.one());
    std::vector<P> q_terms;
    q_terms.reserve(qs.size());
    for (const auto& q : qs) q_terms.push_back(x2m1 * (q * q));

    auto blocks = detail::parallel_blocks(ps.size(), [&](std::size_t begin, std::size_t end) {
        std::vector<PellSolution<Fp>> found;
        for (std::size_t i = begin; i < end; ++i) {
            const P p2 = ps[i] * ps[i];
            for (std::size_t j = 0; j < qs.size(); ++j)
                if (p2 - q_terms[j] == one) found.push_back({ps[i], qs[j], pell_classify(ps[i], qs[j])});
        }
        return found;
    });

    std::vector<PellSolution<Fp>> all;
    for (auto& b : blocks) all.insert(all.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.classification && b.classification) return *a.classification < *b.classification;
        if (a.classification || b.classification) return a.classification.has_value();
        return detail::residue_less(a.P, b.P) || (!detail::residue_less(b.P, a.P) && detail::residue_less(a.Q, b.Q));
    });
    return all;
}

} // namespace polycomp

#endif
