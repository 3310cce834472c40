#ifndef POLYCOMP_SEARCH_HPP
#define POLYCOMP_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "polycomp/detail/enumerate.hpp"
#include "polycomp/identity.hpp"

namespace polycomp {

struct SearchConfig {
    std::uint64_t p = 3;
    std::size_t deg_f = 3;
    std::size_t deg_g_min = 2;
    std::size_t deg_g_max = 3;
    unsigned m = 2;
    bool require_separable = true;
    bool require_nonzero_derivative = true;
    std::uint64_t iteration_ceiling = 50'000'000;
};

struct SearchCounters {
    std::uint64_t enumerated_f = 0;
    std::uint64_t enumerated_g = 0;
    std::uint64_t f_divides_composition = 0;
    std::uint64_t quotient_is_mth_power = 0;

    SearchCounters& operator+=(const SearchCounters& o) {
        f_divides_composition += o.f_divides_composition;
        quotient_is_mth_power += o.quotient_is_mth_power;
        return *this;
    }
};

struct SearchReport {
    SearchConfig config;
    bool monic_f_only = true;
    std::vector<CompositionIdentity<Fp>> solutions;
    SearchCounters counters;
    std::chrono::milliseconds duration{0};
};

/// Number of (f, g) pairs the search would visit before filtering.
inline BigInt estimated_pairs(const SearchConfig& c) {
    BigInt fs = boost::multiprecision::pow(BigInt(c.p), static_cast<unsigned>(c.deg_f));
    BigInt gs = 0;
    for (std::size_t d = c.deg_g_min; d <= c.deg_g_max; ++d)
        gs += BigInt(c.p - 1) * boost::multiprecision::pow(BigInt(c.p), static_cast<unsigned>(d));
    return fs * gs;
}

inline void validate(const SearchConfig& c) {
    auto bad = [](const std::string& why) { throw Error(ErrorCode::InvalidConfig, why); };
    if (c.p % 2 == 0 || !detail::is_prime_u64(c.p)) bad("p must be an odd prime");
    if (c.deg_f < 1) bad("deg f must be at least 1");
    if (c.deg_g_min < 2) bad("deg g must be at least 2");
    if (c.deg_g_min > c.deg_g_max) bad("empty deg g range");
    if (c.m < 2) bad("m must be at least 2");
    if (c.m % c.p == 0) bad("p divides m");
    const BigInt pairs = estimated_pairs(c);
    if (pairs > c.iteration_ceiling)
        throw Error(ErrorCode::SearchTooLarge, "about " + pairs.str() + " (f, g) pairs exceeds the ceiling " +
                                                   std::to_string(c.iteration_ceiling));
}

/// Tries every monic f of degree deg_f and every g with deg g in range over
/// F_p. A pair is a solution when f divides f(g) and the quotient is an exact
/// m-th power h^m. Output is sorted by (f, g).
inline SearchReport search_solutions(const SearchConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    const PrimeField field(config.p);

    std::vector<Polynomial<Fp>> fs;
    for (auto& f : detail::polynomials_of_degree(field, config.deg_f, true))
        if (!config.require_separable || is_separable(f)) fs.push_back(std::move(f));

    std::vector<Polynomial<Fp>> gs;
    for (std::size_t d = config.deg_g_min; d <= config.deg_g_max; ++d)
        for (auto& g : detail::polynomials_of_degree(field, d, false))
            if (!config.require_nonzero_derivative || !derivative(g).is_zero()) gs.push_back(std::move(g));

    struct Block {
        std::vector<CompositionIdentity<Fp>> solutions;
        SearchCounters counters;
    };
    auto blocks = detail::parallel_blocks(fs.size(), [&](std::size_t begin, std::size_t end) {
        Block out;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& f = fs[i];
            for (const auto& g : gs) {
                auto [quotient, remainder] = divrem(compose(f, g), f);
                if (!remainder.is_zero()) continue;
                ++out.counters.f_divides_composition;
                auto h = nth_root(quotient, config.m);
                if (!h) continue;
                ++out.counters.quotient_is_mth_power;
                out.solutions.push_back(CompositionIdentity<Fp>::certify(f, g, std::move(*h), config.m));
            }
        }
        return out;
    });

    SearchReport report;
    report.config = config;
    report.counters.enumerated_f = fs.size();
    report.counters.enumerated_g = gs.size();
    for (auto& b : blocks) {
        report.counters += b.counters;
        for (auto& s : b.solutions) report.solutions.push_back(std::move(s));
    }
    std::sort(report.solutions.begin(), report.solutions.end(), [](const auto& a, const auto& b) {
        if (detail::residue_less(a.f(), b.f())) return true;
        if (detail::residue_less(b.f(), a.f())) return false;
        return detail::residue_less(a.g(), b.g());
    });
    report.duration =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

/// f = g = x(x-1)^m and h = x(x-1)^m - 1 over Q: the equation holds although f
/// has a repeated root.
inline CompositionIdentity<Rational> verify_counterexample_separability(unsigned m) {
    if (m < 2) throw Error(ErrorCode::InvalidInput, "m must be at least 2");
    using P = Polynomial<Rational>;
    const RationalField q;
    const P f = P::x(q) * pow(P::from_ints(q, {-1, 1}), m);
    const P h = f - P::constant(q, q.one());
    auto witness = CompositionIdentity<Rational>::certify(f, f, h, m);
    if (is_separable(witness.f()))
        throw Error(ErrorCode::VerificationFailed, "x(x-1)^m unexpectedly separable");
    return witness;
}

} // namespace polycomp

#endif
