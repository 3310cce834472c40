#ifndef POLYCOMP_CLI_HPP
#define POLYCOMP_CLI_HPP

#include <algorithm>
#include <functional>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "polycomp/report.hpp"

namespace polycomp::cli {

enum ExitCode : int { ok = 0, domain_failure = 1, usage = 2 };

/// Bad command-line input that is not a polynomial syntax error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return Sign::plus;
    if (s == "-" || s == "-1") return Sign::minus;
    throw UsageError("sign must be + or -, got '" + s + "'");
}

inline Rational parse_rational_arg(const std::string& s, const char* name) {
    try {
        return Rational::parse(s);
    } catch (const Error&) {
        throw UsageError(std::string(name) + ": not a rational number: '" + s + "'");
    }
}

inline BigInt parse_integer_arg(const std::string& s, const char* name) {
    const Rational r = parse_rational_arg(s, name);
    if (!r.is_integer()) throw UsageError(std::string(name) + ": expected an integer, got '" + s + "'");
    return r.numerator();
}

template <class Ctx>
auto field_value(const Ctx& ctx, const Rational& r) {
    if constexpr (std::is_same_v<Ctx, RationalField>) {
        return r;
    } else {
        const auto d = ctx.from_bigint(r.denominator());
        if (d.is_zero()) throw Error(ErrorCode::InvalidCoefficient, r.to_string() + " is not defined in F_" +
                                                                         std::to_string(ctx.modulus()));
        return ctx.from_bigint(r.numerator()) / d;
    }
}

/// Calls fn(ctx) with a RationalField or a PrimeField.
template <class Fn>
int with_field(const std::string& name, Fn&& fn) {
    FieldDescriptor d;
    try {
        d = parse_field_name(name);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (d.kind == FieldDescriptor::Kind::prime_field) return fn(PrimeField(d.modulus));
    return fn(RationalField{});
}

struct Printer {
    std::ostream& out;
    bool json = false;

    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

template <Field F>
void print_identity_text(std::ostream& out, const CompositionIdentity<F>& id) {
    out << "f = " << print_poly(id.f()) << '\n';
    out << "g = " << print_poly(id.g()) << '\n';
    out << "h = " << print_poly(id.h()) << '\n';
    out << "m = " << id.m() << '\n';
}

/// Builds the command tree. Each leaf stores its action in `action`.
class Dispatcher {
public:
    Dispatcher(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
        app_.name("polycomp");
        app_.description("Exact composition identities f(g(x)) = f(x) h(x)^m, Chebyshev/Pell tools and Liouville lambda.");
        app_.require_subcommand(1);
        app_.set_help_flag("--help", "Print this help message and exit");
        add_chebyshev();
        add_pell();
        add_identity();
        add_search();
        add_lambda();
    }

    int run(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        try {
            app_.parse(args);
        } catch (const CLI::CallForHelp&) {
            out_ << app_.help();
            return ok;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app_.help("", CLI::AppFormatMode::All);
            return ok;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << '\n' << app_.help();
            return usage;
        }
        if (!action_) {
            err_ << app_.help();
            return usage;
        }
        try {
            return action_();
        } catch (const UsageError& e) {
            err_ << "error: " << e.what() << '\n';
            return usage;
        } catch (const Error& e) {
            err_ << "error: " << e.what() << '\n';
            if (e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::InvalidCoefficient) return usage;
            return domain_failure;
        }
    }

private:
    Printer printer() const { return {out_, json_}; }

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, std::function<int()> fn) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->add_flag("--json", json_, "JSON output");
        sub->callback([this, fn = std::move(fn)] { action_ = fn; });
        return sub;
    }

    void add_field_option(CLI::App* sub) {
        sub->add_option("--field", field_, "Coefficient field: q or fp:<p>")->capture_default_str();
    }

    void add_chebyshev() {
        auto* sub = leaf(&app_, "chebyshev", "Chebyshev polynomial T_n or U_n", [this] { return run_chebyshev(); });
        sub->add_option("--kind", kind_, "T or U")->required()->check(CLI::IsMember({"T", "U"}));
        sub->add_option("--n", cheb_n_, "Index n (n >= 0, or n >= -1 for U)")->required();
        add_field_option(sub);
    }

    int run_chebyshev() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            if (cheb_n_ < (kind_ == "U" ? -1 : 0)) throw UsageError("--n out of range");
            const Polynomial<F> p = kind_ == "T" ? chebyshev_T<F>(static_cast<std::size_t>(cheb_n_), ctx)
                                                 : chebyshev_U<F>(cheb_n_, ctx);
            if (json_) {
                Json j;
                j["kind"] = kind_;
                j["n"] = cheb_n_;
                j["poly"] = to_json(p);
                printer().emit(j);
            } else {
                out_ << print_poly(p) << '\n';
            }
            return ok;
        });
    }

    void add_pell() {
        auto* pell = app_.add_subcommand("pell", "Polynomial Pell equation P^2 - (x^2-1) Q^2 = 1");
        pell->require_subcommand(1);

        auto* check = leaf(pell, "check", "Check a pair (P, Q)", [this] { return run_pell_check(); });
        check->add_option("--P", poly_p_, "P(x)")->required();
        check->add_option("--Q", poly_q_, "Q(x)")->required();
        add_field_option(check);

        auto* gen = leaf(pell, "generate", "The solution (sign_p T_n, sign_q U_{n-1})", [this] { return run_pell_generate(); });
        gen->add_option("--n", n_, "Index n >= 0")->required();
        gen->add_option("--sign-p", sign_p_, "+ or -")->capture_default_str();
        gen->add_option("--sign-q", sign_q_, "+ or -")->capture_default_str();
        add_field_option(gen);

        auto* en = leaf(pell, "enumerate", "Exhaustive search over F_p", [this] { return run_pell_enumerate(); });
        en->add_option("--p", p_, "Odd prime")->required();
        en->add_option("--max-deg", max_deg_, "Bound on deg P")->required();
        en->add_option("--ceiling", ceiling_, "Iteration ceiling")->capture_default_str();
    }

    int run_pell_check() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            const auto P = parse_poly<F>(poly_p_, ctx);
            const auto Q = parse_poly<F>(poly_q_, ctx);
            const bool holds = pell_check(P, Q);
            const auto cls = holds ? pell_classify(P, Q) : std::nullopt;
            if (json_) {
                Json j;
                j["ok"] = holds;
                j["classification"] = cls ? to_json(*cls) : Json(nullptr);
                printer().emit(j);
            } else {
                out_ << (holds ? "OK" : "FAIL") << '\n';
                if (cls)
                    out_ << "P = " << sign_char(cls->sign_p) << "T_" << cls->n << ", Q = " << sign_char(cls->sign_q)
                         << "U_" << static_cast<long long>(cls->n) - 1 << '\n';
            }
            return holds ? ok : domain_failure;
        });
    }

    int run_pell_generate() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            const auto s = pell_solution<F>(n_, parse_sign(sign_p_), parse_sign(sign_q_), ctx);
            if (json_) {
                printer().emit(to_json(s));
            } else {
                out_ << "P = " << print_poly(s.P) << '\n' << "Q = " << print_poly(s.Q) << '\n';
            }
            return ok;
        });
    }

    int run_pell_enumerate() {
        const auto all = pell_enumerate_bruteforce(p_, max_deg_, ceiling_);
        if (json_) {
            Json arr = Json::array();
            for (const auto& s : all) arr.push_back(to_json(s));
            Json j;
            j["p"] = p_;
            j["max_deg"] = max_deg_;
            j["solutions"] = std::move(arr);
            printer().emit(j);
            return ok;
        }
        for (const auto& s : all) {
            if (s.classification)
                out_ << "n=" << s.classification->n << " sign_p=" << sign_char(s.classification->sign_p)
                     << " sign_q=" << sign_char(s.classification->sign_q);
            else
                out_ << "unclassified";
            out_ << "  P = " << print_poly(s.P) << "  Q = " << print_poly(s.Q) << '\n';
        }
        out_ << all.size() << " solutions\n";
        return ok;
    }

    void add_identity() {
        auto* id = app_.add_subcommand("identity", "Composition identities f(g(x)) = f(x) h(x)^m");
        id->require_subcommand(1);

        auto* check = leaf(id, "check", "Verify f(g) = f h^m", [this] { return run_identity_check(); });
        check->add_option("--f", poly_f_, "f(x)")->required();
        check->add_option("--g", poly_g_, "g(x)")->required();
        check->add_option("--h", poly_h_, "h(x)")->required();
        check->add_option("--m", m_, "Exponent m >= 1")->required();
        add_field_option(check);

        auto* lin = leaf(id, "linear", "f = ax + b, g = (x + b/a) h^m - b/a", [this] { return run_identity_linear(); });
        lin->add_option("--a", coef_a_, "a")->required();
        lin->add_option("--b", coef_b_, "b")->required();
        lin->add_option("--h", poly_h_, "h(x)")->required();
        lin->add_option("--m", m_, "Exponent m >= 2")->required();
        add_field_option(lin);

        auto* quad = leaf(id, "quadratic", "Chebyshev family for f = ax^2 + bx + c", [this] { return run_identity_quadratic(); });
        add_abc(quad);
        quad->add_option("--n", n_, "Index n >= 2 (deg g = n)")->required();
        quad->add_option("--sign-g", sign_g_, "+ or -")->capture_default_str();
        quad->add_option("--sign-h", sign_h_, "+ or -")->capture_default_str();
        quad->add_option("--m", m_, "Exponent; only 2 is possible")->capture_default_str();
        add_field_option(quad);

        auto* lyg = leaf(id, "lyg", "Closed-form cubic g and quadratic h", [this] { return run_identity_lyg(); });
        add_abc(lyg);
        add_field_option(lyg);
    }

    void add_abc(CLI::App* sub) {
        sub->add_option("--a", coef_a_, "a")->required();
        sub->add_option("--b", coef_b_, "b")->required();
        sub->add_option("--c", coef_c_, "c")->required();
    }

    int run_identity_check() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            if (m_ < 1) throw UsageError("--m must be at least 1");
            const auto f = parse_poly<F>(poly_f_, ctx);
            const auto g = parse_poly<F>(poly_g_, ctx);
            const auto h = parse_poly<F>(poly_h_, ctx);
            const bool holds = check_identity(f, g, h, m_);
            if (json_) {
                Json j;
                j["ok"] = holds;
                j["identity"] = {{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}, {"m", m_}};
                if (holds) j["hypotheses"] = to_json(CompositionIdentity<F>::certify(f, g, h, m_).hypotheses());
                printer().emit(j);
            } else {
                out_ << (holds ? "OK" : "FAIL") << '\n';
            }
            return holds ? ok : domain_failure;
        });
    }

    template <Field F>
    void emit_identity(const CompositionIdentity<F>& id) {
        if (json_) {
            printer().emit(to_json(id));
        } else {
            print_identity_text(out_, id);
        }
    }

    int run_identity_linear() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            const F a = field_value(ctx, parse_rational_arg(coef_a_, "--a"));
            const F b = field_value(ctx, parse_rational_arg(coef_b_, "--b"));
            emit_identity(generate_linear(a, b, parse_poly<F>(poly_h_, ctx), m_));
            return ok;
        });
    }

    int run_identity_quadratic() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            require_quadratic_exponent(m_);
            const F a = field_value(ctx, parse_rational_arg(coef_a_, "--a"));
            const F b = field_value(ctx, parse_rational_arg(coef_b_, "--b"));
            const F c = field_value(ctx, parse_rational_arg(coef_c_, "--c"));
            const auto q = generate_quadratic(a, b, c, n_, parse_sign(sign_g_), parse_sign(sign_h_));
            if (json_) {
                Json j = q.descended ? to_json(*q.descended) : to_json(q.extended);
                j["in_base_field"] = q.descended.has_value();
                j["D"] = q.normalization.discriminant.to_string();
                printer().emit(j);
            } else if (q.descended) {
                print_identity_text(out_, *q.descended);
            } else {
                out_ << "# coefficients lie in " << q.normalization.extension.descriptor().name() << '\n';
                print_identity_text(out_, q.extended);
            }
            return ok;
        });
    }

    int run_identity_lyg() {
        return with_field(field_, [this](const auto& ctx) {
            using F = typename std::decay_t<decltype(ctx)>::element_type;
            const F a = field_value(ctx, parse_rational_arg(coef_a_, "--a"));
            const F b = field_value(ctx, parse_rational_arg(coef_b_, "--b"));
            const F c = field_value(ctx, parse_rational_arg(coef_c_, "--c"));
            emit_identity(generate_lyg(a, b, c));
            return ok;
        });
    }

    void add_search() {
        auto* sub = leaf(&app_, "search", "Exhaustive search for solutions over F_p", [this] { return run_search(); });
        sub->add_option("--p", search_.p, "Odd prime")->required();
        sub->add_option("--deg-f", search_.deg_f, "Degree of f")->required();
        sub->add_option("--deg-g", deg_g_range_, "Degree range lo..hi")->required();
        sub->add_option("--m", search_.m, "Exponent m >= 2")->required();
        sub->add_flag("--no-separable-filter", no_separable_, "Also try non-separable f");
        sub->add_flag("--no-derivative-filter", no_derivative_, "Also try g with g' = 0");
        sub->add_option("--ceiling", search_.iteration_ceiling, "Iteration ceiling")->capture_default_str();
    }

    int run_search() {
        const auto dots = deg_g_range_.find("..");
        try {
            if (dots == std::string::npos) {
                search_.deg_g_min = search_.deg_g_max = std::stoul(deg_g_range_);
            } else {
                search_.deg_g_min = std::stoul(deg_g_range_.substr(0, dots));
                search_.deg_g_max = std::stoul(deg_g_range_.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw UsageError("--deg-g must look like lo..hi");
        }
        search_.require_separable = !no_separable_;
        search_.require_nonzero_derivative = !no_derivative_;
        const auto report = search_solutions(search_);
        if (json_) {
            printer().emit(to_json(report));
            return ok;
        }
        out_ << "p = " << report.config.p << ", deg f = " << report.config.deg_f << " (monic), deg g in "
             << report.config.deg_g_min << ".." << report.config.deg_g_max << ", m = " << report.config.m << '\n';
        out_ << "enumerated f: " << report.counters.enumerated_f << ", g: " << report.counters.enumerated_g
             << ", f | f(g): " << report.counters.f_divides_composition
             << ", m-th powers: " << report.counters.quotient_is_mth_power << '\n';
        for (const auto& s : report.solutions)
            out_ << "f = " << print_poly(s.f()) << "  g = " << print_poly(s.g()) << "  h = " << print_poly(s.h())
                 << '\n';
        out_ << report.solutions.size() << " solutions in " << report.duration.count() << " ms\n";
        return ok;
    }

    void add_lambda() {
        auto* lam = app_.add_subcommand("lambda", "Liouville lambda function");
        lam->require_subcommand(1);

        auto* eval = leaf(lam, "eval", "lambda of an integer or rational", [this] { return run_lambda_eval(); });
        eval->add_option("value", lambda_value_, "n or p/q")->required();

        auto* orbit = leaf(lam, "orbit", "lambda(f(k_j)) along k_{j+1} = g(k_j)", [this] { return run_lambda_orbit(); });
        orbit->add_option("--f", poly_f_, "f(x), integer coefficients")->required();
        orbit->add_option("--g", poly_g_, "g(x), integer coefficients")->required();
        orbit->add_option("--m", m_, "Exponent of the identity")->capture_default_str();
        orbit->add_option("--seed", seed_, "k_0")->required();
        orbit->add_option("--steps", steps_, "Number of iterations")->required();
        orbit->add_option("--digit-limit", digit_limit_, "Maximum decimal digits")->capture_default_str();

        auto* scan = leaf(lam, "scan", "Adjacent sign changes of lambda(f(n))", [this] { return run_lambda_scan(); });
        scan->add_option("--f", poly_f_, "f(x), integer coefficients")->required();
        scan->add_option("--from", from_, "First n")->required();
        scan->add_option("--to", to_, "Last n")->required();
    }

    int run_lambda_eval() {
        const Rational r = parse_rational_arg(lambda_value_, "value");
        const Sign s = lambda_rational(r);
        if (json_) {
            Json j;
            j["input"] = r.to_string();
            j["lambda"] = to_int(s);
            printer().emit(j);
        } else {
            out_ << sign_text(s) << '\n';
        }
        return ok;
    }

    int run_lambda_orbit() {
        const RationalField q;
        const auto f = parse_poly<Rational>(poly_f_, q);
        const auto g = parse_poly<Rational>(poly_g_, q);
        if (f.is_zero()) throw UsageError("--f must be nonzero");
        const auto [quotient, remainder] = divrem(compose(f, g), f);
        std::optional<Polynomial<Rational>> h;
        if (remainder.is_zero() && m_ >= 1) h = nth_root(quotient, m_);
        if (!h) {
            err_ << "error: f(g(x)) is not f(x) times an m-th power for m = " << m_ << '\n';
            return domain_failure;
        }
        const auto identity = CompositionIdentity<Rational>::certify(f, g, *h, m_);
        const auto orbit = lambda_orbit(identity, parse_integer_arg(seed_, "--seed"), steps_,
                                        OrbitOptions{digit_limit_, false});
        if (json_) {
            printer().emit(to_json(orbit));
        } else {
            for (std::size_t j = 0; j < orbit.entries.size(); ++j) {
                const auto& e = orbit.entries[j];
                out_ << j << ' ' << e.k << ' ' << e.value << ' ' << sign_text(e.lambda) << '\n';
            }
        }
        return ok;
    }

    int run_lambda_scan() {
        const RationalField q;
        const auto f = parse_poly<Rational>(poly_f_, q);
        const auto scan = sign_change_scan(f, parse_integer_arg(from_, "--from"), parse_integer_arg(to_, "--to"));
        if (json_) {
            printer().emit(to_json(scan));
        } else {
            for (const auto& z : scan.zeros) out_ << "zero " << z << '\n';
            for (const auto& [a, b] : scan.changes) out_ << a << ' ' << b << '\n';
            out_ << scan.changes.size() << " sign changes\n";
        }
        return ok;
    }

    std::ostream& out_;
    std::ostream& err_;
    CLI::App app_;
    std::function<int()> action_;

    bool json_ = false;
    std::string field_ = "q";
    std::string kind_;
    std::int64_t cheb_n_ = 0;
    std::size_t n_ = 0;
    std::string sign_p_ = "+", sign_q_ = "+", sign_g_ = "+", sign_h_ = "+";
    std::string poly_p_, poly_q_, poly_f_, poly_g_, poly_h_;
    std::string coef_a_, coef_b_, coef_c_;
    unsigned m_ = 2;
    std::uint64_t p_ = 3;
    std::size_t max_deg_ = 1;
    std::uint64_t ceiling_ = default_iteration_ceiling;
    SearchConfig search_;
    std::string deg_g_range_;
    bool no_separable_ = false;
    bool no_derivative_ = false;
    std::string lambda_value_;
    std::string seed_, from_, to_;
    std::size_t steps_ = 0;
    std::size_t digit_limit_ = 60;
};

/// Runs one command line (without the program name). Returns the exit code.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Dispatcher d(out, err);
    return d.run(args);
}

} // namespace polycomp::cli

#endif
