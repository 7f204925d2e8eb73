#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cylhook/errors.hpp"
#include "cylhook/excited.hpp"
#include "cylhook/rational.hpp"
#include "cylhook/tableaux.hpp"

namespace cylhook {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { ExactPass, ConvergedWithinTol, Fail, Inconclusive };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ExactPass: return "ExactPass";
        case Verdict::ConvergedWithinTol: return "ConvergedWithinTol";
        case Verdict::Fail: return "Fail";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "ExactPass") return Verdict::ExactPass;
    if (s == "ConvergedWithinTol") return Verdict::ConvergedWithinTol;
    if (s == "Fail") return Verdict::Fail;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw Error("unknown verdict '" + s + "'");
}

/// Outcome of a series verification run. `partial_sums` holds (window,
/// cumulative sum) samples; every window is recorded for short runs, a
/// logarithmic sample plus the final value for long ones. Wall time is
/// deliberately not part of the report: identical runs must serialize to
/// identical bytes.
struct VerificationReport {
    Rational lhs;                                        // exact count f
    std::vector<std::pair<long, Rational>> partial_sums; // (window, n! * sum)
    Rational final_sum;                                  // value at `window`
    long window = 0;
    bool exhausted = false;
    bool has_tail_estimate = false;
    Rational tail_estimate;      // geometric-ratio extrapolation, heuristic only
    Verdict verdict = Verdict::Inconclusive;
    unsigned long long states = 0;

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.lhs == b.lhs && a.partial_sums == b.partial_sums && a.final_sum == b.final_sum &&
               a.window == b.window && a.exhausted == b.exhausted &&
               a.has_tail_estimate == b.has_tail_estimate &&
               (!a.has_tail_estimate || a.tail_estimate == b.tail_estimate) &&
               a.verdict == b.verdict && a.states == b.states;
    }
};

// ----- JSON helpers (canonical field order, rationals as decimal strings) -----

inline ordered_json rational_to_json(const Rational& r) {
    return ordered_json{{"num", r.num_string()}, {"den", r.den_string()}};
}

inline Rational rational_from_json(const ordered_json& j) {
    return Rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

inline ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["lhs"] = rational_to_json(r.lhs);
    j["verdict"] = to_string(r.verdict);
    j["window"] = r.window;
    j["exhausted"] = r.exhausted;
    j["final_sum"] = rational_to_json(r.final_sum);
    ordered_json sums = ordered_json::array();
    for (const auto& [w, g] : r.partial_sums) sums.push_back(ordered_json::array({w, rational_to_json(g)}));
    j["partial_sums"] = std::move(sums);
    j["tail_estimate"] = r.has_tail_estimate ? rational_to_json(r.tail_estimate) : ordered_json(nullptr);
    j["tail_is_heuristic"] = true;
    j["states"] = r.states;
    return j;
}

inline VerificationReport report_from_json(const ordered_json& j) {
    VerificationReport r;
    r.lhs = rational_from_json(j.at("lhs"));
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.window = j.at("window").get<long>();
    r.exhausted = j.at("exhausted").get<bool>();
    r.final_sum = rational_from_json(j.at("final_sum"));
    for (const auto& e : j.at("partial_sums"))
        r.partial_sums.emplace_back(e.at(0).get<long>(), rational_from_json(e.at(1)));
    if (!j.at("tail_estimate").is_null()) {
        r.has_tail_estimate = true;
        r.tail_estimate = rational_from_json(j.at("tail_estimate"));
    }
    r.states = j.at("states").get<unsigned long long>();
    return r;
}

inline ordered_json shape_to_json(const SkewShape& s) {
    ordered_json j;
    j["outer"] = s.outer.parts();
    j["inner"] = s.inner.parts();
    j["m"] = s.m();
    j["ell"] = s.ell();
    return j;
}

inline ordered_json tableau_to_json(const Tableau& t) {
    ordered_json j;
    j["shape"] = shape_to_json(t.shape);
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < t.shape.cells.size(); ++i) {
        const Cell& c = t.shape.cells[i];
        entries.push_back(ordered_json::array({c.row, c.col, t.entries[i]}));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline ordered_json strata_to_json(const CylEnumeration& e) {
    ordered_json strata = ordered_json::array();
    for (std::size_t depth = 0; depth < e.strata.size(); ++depth) {
        ordered_json diagrams = ordered_json::array();
        for (const CylExcitedDiagram& d : e.strata[depth]) {
            ordered_json cells = ordered_json::array();
            for (const CylCell& c : d.complement) cells.push_back(ordered_json::array({c.row, c.col}));
            diagrams.push_back(std::move(cells));
        }
        ordered_json s;
        s["depth"] = depth;
        s["diagrams"] = std::move(diagrams);
        strata.push_back(std::move(s));
    }
    ordered_json j;
    j["strata"] = std::move(strata);
    j["truncated"] = e.truncated;
    j["states"] = e.states;
    return j;
}

} // namespace cylhook
