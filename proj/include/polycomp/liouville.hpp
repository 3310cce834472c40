#ifndef POLYCOMP_LIOUVILLE_HPP
#define POLYCOMP_LIOUVILLE_HPP

#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "polycomp/identity.hpp"

namespace polycomp {

namespace detail {

inline constexpr unsigned small_prime_bound = 10'000;
inline constexpr unsigned miller_rabin_rounds = 32;

inline bool probably_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < (BigInt(1) << 62)) return is_prime_u64(n.convert_to<std::uint64_t>());
    static thread_local std::mt19937_64 rng(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, miller_rabin_rounds, rng);
}

// Brent's variant of Pollard rho; n must be odd, composite and not a prime power
// of a small prime. Returns a nontrivial factor.
inline BigInt pollard_brent(const BigInt& n) {
    using boost::multiprecision::gcd;
    for (unsigned c = 1;; ++c) {
        auto step = [&](const BigInt& v) { return (v * v + c) % n; };
        BigInt y = 2, x = 2, ys = 2, q = 1, g = 1;
        const unsigned batch = 128;
        std::uint64_t r = 1;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min<std::uint64_t>(batch, r - k); ++i) {
                    y = step(y);
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline unsigned omega_of_cofactor(const BigInt& n) {
    if (n == 1) return 0;
    if (probably_prime(n)) return 1;
    if (auto r = exact_integer_root(n, 2)) return 2 * omega_of_cofactor(*r);
    const BigInt d = pollard_brent(n);
    return omega_of_cofactor(d) + omega_of_cofactor(n / d);
}

} // namespace detail

/// Number of prime factors of n counted with multiplicity. Small primes are
/// removed by trial division; any cofactor left is split with Pollard rho.
inline unsigned big_omega(const BigInt& n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "Omega(n) needs n >= 1");
    BigInt rest = n;
    unsigned count = 0;
    for (unsigned p = 2; p <= detail::small_prime_bound; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > rest) break;
        while (rest % p == 0) {
            rest /= p;
            ++count;
        }
    }
    if (rest == 1) return count;
    if (rest < BigInt(detail::small_prime_bound) * detail::small_prime_bound) return count + 1;
    return count + detail::omega_of_cofactor(rest);
}

/// lambda(n) = (-1)^Omega(|n|).
inline Sign lambda_int(const BigInt& n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "lambda(0) is undefined");
    return big_omega(boost::multiprecision::abs(n)) % 2 == 0 ? Sign::plus : Sign::minus;
}

/// Completely multiplicative extension to Q: lambda(p/q) = lambda(p) lambda(q).
inline Sign lambda_rational(const Rational& r) {
    if (r.is_zero()) throw Error(ErrorCode::InvalidInput, "lambda(0) is undefined");
    return lambda_int(r.numerator()) * lambda_int(r.denominator());
}

struct OrbitEntry {
    BigInt k;
    BigInt value; // f(k)
    Sign lambda;
};

/// Entries j = 0..length-1 with k_{j+1} = g(k_j).
struct LambdaOrbit {
    BigInt seed;
    std::vector<OrbitEntry> entries;
    bool truncated = false; // stopped early at the digit limit

    bool signs_constant() const {
        for (const auto& e : entries)
            if (e.lambda != entries.front().lambda) return false;
        return true;
    }
};

struct OrbitOptions {
    std::size_t digit_limit = 60;
    /// When false an iterate beyond the limit raises OrbitOverflowLimit;
    /// when true the orbit stops there and is flagged as truncated.
    bool truncate_at_limit = false;
};

namespace detail {

inline std::vector<BigInt> integer_coefficients(const Polynomial<Rational>& p, const char* name) {
    std::vector<BigInt> out;
    for (const auto& c : p.coefficients()) {
        if (!c.is_integer())
            throw Error(ErrorCode::InvalidInput, std::string(name) + " must have integer coefficients");
        out.push_back(c.numerator());
    }
    return out;
}

inline BigInt evaluate(const std::vector<BigInt>& c, const BigInt& at) {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
    return acc;
}

inline std::size_t decimal_digits(const BigInt& n) {
    return BigInt(boost::multiprecision::abs(n)).str().size();
}

} // namespace detail

/// Follows k_{j+1} = g(k_j) from `seed` for `steps` steps, recording
/// lambda(f(k_j)). The digit limit applies to both k_j and f(k_j). Throws
/// OrbitHitsRoot if some f(k_j) = 0, and VerificationFailed if the recorded
/// signs differ, which would contradict the identity.
inline LambdaOrbit lambda_orbit(const CompositionIdentity<Rational>& identity, const BigInt& seed, std::size_t steps,
                                const OrbitOptions& options = {}) {
    const auto f = detail::integer_coefficients(identity.f(), "f");
    const auto g = detail::integer_coefficients(identity.g(), "g");
    LambdaOrbit orbit{seed, {}, false};
    BigInt k = seed;
    for (std::size_t j = 0; j <= steps; ++j) {
        BigInt value = detail::evaluate(f, k);
        if (detail::decimal_digits(k) > options.digit_limit || detail::decimal_digits(value) > options.digit_limit) {
            if (options.truncate_at_limit && j > 0) {
                orbit.truncated = true;
                break;
            }
            throw Error(ErrorCode::OrbitOverflowLimit, "orbit value at step " + std::to_string(j) + " exceeds " +
                                                           std::to_string(options.digit_limit) + " digits");
        }
        if (value == 0) throw OrbitHitsRoot(j);
        const Sign s = lambda_int(value);
        orbit.entries.push_back({k, std::move(value), s});
        if (j < steps) k = detail::evaluate(g, k);
    }
    if (!orbit.signs_constant())
        throw Error(ErrorCode::VerificationFailed, "lambda(f(k_j)) changed along the orbit of " + seed.str());
    return orbit;
}

struct SignChangeScan {
    std::vector<std::pair<BigInt, BigInt>> changes; // (n, n+1)
    std::vector<BigInt> zeros;                      // n with f(n) = 0, skipped
};

/// All n in [from, to) with lambda(f(n)) != lambda(f(n+1)); pairs touching a
/// zero of f are skipped and the zero is reported.
inline SignChangeScan sign_change_scan(const Polynomial<Rational>& f, const BigInt& from, const BigInt& to) {
    const auto c = detail::integer_coefficients(f, "f");
    SignChangeScan scan;
    int prev = 0; // 0 before the first nonzero value
    for (BigInt n = from; n <= to; ++n) {
        const BigInt v = detail::evaluate(c, n);
        if (v == 0) {
            scan.zeros.push_back(n);
            prev = 0;
            continue;
        }
        const Sign s = lambda_int(v);
        if (prev != 0 && prev != to_int(s)) scan.changes.emplace_back(n - 1, n);
        prev = to_int(s);
    }
    return scan;
}

} // namespace polycomp

#endif
