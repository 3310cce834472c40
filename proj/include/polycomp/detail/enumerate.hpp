#ifndef POLYCOMP_DETAIL_ENUMERATE_HPP
#define POLYCOMP_DETAIL_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "polycomp/poly.hpp"

namespace polycomp::detail {

/// Every polynomial over F_p of exact degree `degree` (leading coefficient
/// nonzero, or 1 when `monic`), in lexicographic order of the ascending
/// coefficient tuple read from the top.
inline std::vector<Polynomial<Fp>> polynomials_of_degree(const PrimeField& field, std::size_t degree, bool monic) {
    const std::uint64_t p = field.modulus();
    std::vector<Polynomial<Fp>> out;
    std::vector<std::uint64_t> digits(degree + 1, 0);
    digits[degree] = 1;
    for (;;) {
        std::vector<Fp> c;
        c.reserve(degree + 1);
        for (auto d : digits) c.push_back(field.element(d));
        out.emplace_back(field, std::move(c));
        // Odometer, lowest coefficient fastest; leading coefficient last.
        std::size_t i = 0;
        for (; i <= degree; ++i) {
            const bool top = i == degree;
            if (top && monic) return out;
            if (++digits[i] < p) break;
            digits[i] = top ? 1 : 0;
            if (top) return out;
        }
        if (i > degree) return out;
    }
}

/// Splits [0, count) into contiguous blocks and runs `fn(begin, end)` for each
/// block on its own thread. Blocks are returned in order.
template <class Fn>
auto parallel_blocks(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}, std::size_t{}));
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t blocks = std::max<std::size_t>(1, std::min(hw, count));
    std::vector<Result> results(blocks);
    std::vector<std::exception_ptr> errors(blocks);
    std::vector<std::thread> workers;
    workers.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t begin = count * b / blocks;
        const std::size_t end = count * (b + 1) / blocks;
        workers.emplace_back([&, b, begin, end] {
            try {
                results[b] = fn(begin, end);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

/// Lexicographic order on residues from the leading coefficient down, shorter first.
inline bool residue_less(const Polynomial<Fp>& a, const Polynomial<Fp>& b) {
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i].residue() != y[i].residue()) return x[i].residue() < y[i].residue();
    return false;
}

} // namespace polycomp::detail

#endif
