#ifndef POLYCOMP_TEXT_HPP
#define POLYCOMP_TEXT_HPP

#include <cctype>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "polycomp/poly.hpp"

namespace polycomp {

using Json = nlohmann::ordered_json;

namespace detail {

struct CoefficientText {
    bool negative;
    std::string magnitude;
    bool is_one;
};

inline CoefficientText coefficient_text(const Rational& a) {
    return {a.sign() < 0, a.abs().to_string(), a.abs() == Rational(1)};
}

inline CoefficientText coefficient_text(const Fp& a) {
    return {false, a.to_string(), a.residue() == 1};
}

template <Field Base>
CoefficientText coefficient_text(const QuadExt<Base>& a) {
    return {false, "(" + a.to_string() + ")", a == a.context().one()};
}

} // namespace detail

/// Canonical text: descending powers, zero terms dropped, signs folded into
/// the operators, unit coefficients elided except on the constant term.
template <Field F>
std::string print_poly(const Polynomial<F>& p) {
    const auto& c = p.coefficients();
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        const auto t = detail::coefficient_text(c[i]);
        if (out.empty()) {
            if (t.negative) out += '-';
        } else {
            out += t.negative ? '-' : '+';
        }
        if (i == 0 || !t.is_one) out += t.magnitude;
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
    return os << print_poly(p);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_qualified_string(); }
template <Field Base>
std::ostream& operator<<(std::ostream& os, const QuadExt<Base>& a) {
    return os << a.to_string();
}

namespace detail {

inline Rational read_coefficient(const RationalField&, const BigInt& num, const BigInt& den, std::size_t) {
    return Rational(num, den);
}

inline Fp read_coefficient(const PrimeField& field, const BigInt& num, const BigInt& den, std::size_t column) {
    const Fp d = field.from_bigint(den);
    if (d.is_zero())
        throw Error(ErrorCode::InvalidCoefficient, "column " + std::to_string(column) + ": denominator " +
                                                       den.str() + " is not invertible in F_" +
                                                       std::to_string(field.modulus()));
    return field.from_bigint(num) / d;
}

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    struct Term {
        BigInt num;
        BigInt den;
        std::size_t power;
        std::size_t column;
    };

    std::vector<Term> parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek('+') || peek('-')) {
            negative = s_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        for (;;) {
            Term t = term();
            if (negative) t.num = -t.num;
            terms.push_back(std::move(t));
            skip_ws();
            if (pos_ == s_.size()) break;
            if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
            negative = s_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        return terms;
    }

private:
    static constexpr std::size_t max_power = 1U << 20;

    Term term() {
        Term t{1, 1, 0, pos_ + 1};
        if (digit()) {
            t.num = integer();
            skip_ws();
            if (peek('/')) {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                if (!digit()) fail("expected denominator");
                t.den = integer();
                if (t.den == 0) {
                    pos_ = at;
                    fail("denominator must be positive");
                }
                skip_ws();
            }
            if (peek('*')) {
                ++pos_;
                skip_ws();
                if (!peek('x')) fail("expected 'x' after '*'");
            }
            if (!peek('x')) return t;
        } else if (!peek('x')) {
            fail(pos_ == s_.size() ? "unexpected end of input" : "expected coefficient or 'x'");
        }
        ++pos_; // 'x'
        t.power = 1;
        skip_ws();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            if (!digit()) fail("expected exponent");
            BigInt e = integer();
            if (e > max_power) {
                pos_ = at;
                fail("exponent too large");
            }
            t.power = e.convert_to<std::size_t>();
        }
        return t;
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (digit()) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_ + 1, msg); }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `poly := term (('+' | '-') term)*`, `term := coeff? 'x' ('^' n)? | coeff`,
/// `coeff := int ('/' posint)?`, with an optional leading sign, optional
/// whitespace between tokens and an optional '*' before 'x'. Repeated powers
/// are summed.
template <Field F>
Polynomial<F> parse_poly(std::string_view text, const typename F::context_type& ctx) {
    const auto terms = detail::PolyParser(text).parse();
    std::map<std::size_t, F> acc;
    for (const auto& t : terms) {
        F value = detail::read_coefficient(ctx, t.num, t.den, t.column);
        auto [it, inserted] = acc.try_emplace(t.power, value);
        if (!inserted) it->second = it->second + value;
    }
    std::vector<F> c;
    if (!acc.empty()) c.assign(acc.rbegin()->first + 1, ctx.zero());
    for (const auto& [power, value] : acc) c[power] = value;
    return Polynomial<F>(ctx, std::move(c));
}

inline Json to_json(const FieldDescriptor& d) {
    Json j;
    j["kind"] = d.kind_name();
    j["characteristic"] = d.characteristic;
    if (d.kind == FieldDescriptor::Kind::prime_field) j["p"] = d.modulus;
    if (d.kind == FieldDescriptor::Kind::quadratic_extension) {
        j["base"] = to_json(*d.base);
        j["D"] = d.discriminant;
    }
    return j;
}

/// {"coeffs": [...ascending...], "field": {...}}.
template <Field F>
Json to_json(const Polynomial<F>& p) {
    Json coeffs = Json::array();
    for (const F& a : p.coefficients()) coeffs.push_back(a.to_string());
    Json j;
    j["coeffs"] = std::move(coeffs);
    j["field"] = to_json(p.context().descriptor());
    return j;
}

/// `q` or `fp:<p>`.
inline FieldDescriptor parse_field_name(std::string_view name) {
    if (name == "q" || name == "Q") return FieldDescriptor::rationals();
    if (name.substr(0, 3) == "fp:") {
        const std::string digits(name.substr(3));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 20) {
            const std::uint64_t p = std::stoull(digits);
            PrimeField check(p);
            return check.descriptor();
        }
    }
    throw Error(ErrorCode::InvalidInput, "unknown field '" + std::string(name) + "' (expected q or fp:<p>)");
}

} // namespace polycomp

#endif
