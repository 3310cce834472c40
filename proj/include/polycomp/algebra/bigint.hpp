#ifndef POLYCOMP_ALGEBRA_BIGINT_HPP
#define POLYCOMP_ALGEBRA_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

#include "polycomp/error.hpp"

namespace polycomp {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// Deterministic for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// floor(n^(1/k)) for n >= 0, k >= 1.
inline BigInt integer_root_floor(const BigInt& n, unsigned k) {
    if (n < 0 || k == 0) throw Error(ErrorCode::InvalidInput, "integer root of negative value");
    if (n < 2 || k == 1) return n;
    if (k == 2) return boost::multiprecision::sqrt(n);
    // Newton iteration from an overestimate.
    BigInt x = BigInt(1) << (boost::multiprecision::msb(n) / k + 1);
    for (;;) {
        BigInt y = ((k - 1) * x + n / boost::multiprecision::pow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (boost::multiprecision::pow(x + 1, k) <= n) ++x;
    while (boost::multiprecision::pow(x, k) > n) --x;
    return x;
}

inline std::optional<BigInt> exact_integer_root(const BigInt& n, unsigned k) {
    BigInt r = integer_root_floor(n, k);
    if (boost::multiprecision::pow(r, k) == n) return r;
    return std::nullopt;
}

} // namespace detail
} // namespace polycomp

#endif
