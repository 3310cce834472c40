#ifndef POLYCOMP_REPORT_HPP
#define POLYCOMP_REPORT_HPP

#include "polycomp/liouville.hpp"
#include "polycomp/pell.hpp"
#include "polycomp/search.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

inline std::string sign_text(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

template <Field F>
Json to_json(const CompositionIdentity<F>& id) {
    Json j;
    j["f"] = to_json(id.f());
    j["g"] = to_json(id.g());
    j["h"] = to_json(id.h());
    j["m"] = id.m();
    return j;
}

inline Json to_json(const Hypotheses& h) {
    Json j;
    j["f_separable"] = h.f_separable;
    j["g_degree_at_least_2"] = h.g_degree_at_least_2;
    j["g_derivative_nonzero"] = h.g_derivative_nonzero;
    j["characteristic_coprime_to_m"] = h.characteristic_coprime_to_m;
    return j;
}

inline Json to_json(const PellClass& c) {
    Json j;
    j["sign_p"] = to_int(c.sign_p);
    j["sign_q"] = to_int(c.sign_q);
    j["n"] = c.n;
    return j;
}

template <Field F>
Json to_json(const PellSolution<F>& s) {
    Json j;
    j["P"] = to_json(s.P);
    j["Q"] = to_json(s.Q);
    j["classification"] = s.classification ? to_json(*s.classification) : Json(nullptr);
    return j;
}

inline Json to_json(const SearchReport& r) {
    Json config;
    config["p"] = r.config.p;
    config["deg_f"] = r.config.deg_f;
    config["deg_g"] = {r.config.deg_g_min, r.config.deg_g_max};
    config["m"] = r.config.m;
    config["require_separable"] = r.config.require_separable;
    config["require_nonzero_derivative"] = r.config.require_nonzero_derivative;
    config["iteration_ceiling"] = r.config.iteration_ceiling;
    config["monic_f_only"] = r.monic_f_only;

    Json solutions = Json::array();
    for (const auto& s : r.solutions) solutions.push_back(to_json(s));

    Json counters;
    counters["enumerated_f"] = r.counters.enumerated_f;
    counters["enumerated_g"] = r.counters.enumerated_g;
    counters["f_divides_composition"] = r.counters.f_divides_composition;
    counters["quotient_is_mth_power"] = r.counters.quotient_is_mth_power;

    Json j;
    j["config"] = std::move(config);
    j["solutions"] = std::move(solutions);
    j["counters"] = std::move(counters);
    j["duration_ms"] = r.duration.count();
    return j;
}

inline Json to_json(const LambdaOrbit& o) {
    Json entries = Json::array();
    for (std::size_t j = 0; j < o.entries.size(); ++j) {
        const auto& e = o.entries[j];
        Json row;
        row["j"] = j;
        row["k"] = e.k.str();
        row["f_k"] = e.value.str();
        row["lambda"] = to_int(e.lambda);
        entries.push_back(std::move(row));
    }
    Json j;
    j["seed"] = o.seed.str();
    j["entries"] = std::move(entries);
    j["truncated"] = o.truncated;
    j["signs_constant"] = o.signs_constant();
    return j;
}

inline Json to_json(const SignChangeScan& s) {
    Json changes = Json::array();
    for (const auto& [a, b] : s.changes) changes.push_back({a.str(), b.str()});
    Json zeros = Json::array();
    for (const auto& z : s.zeros) zeros.push_back(z.str());
    Json j;
    j["changes"] = std::move(changes);
    j["zeros"] = std::move(zeros);
    return j;
}

} // namespace polycomp

#endif
