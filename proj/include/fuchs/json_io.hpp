#pragma once

#include <string>

#include <json.hpp>

#include "fuchs/decide.hpp"
#include "fuchs/psl2.hpp"

namespace fuchs {

/// Matrix JSON: [["a","b"],["c","d"]] with scalar-expression entries.
/// Bare JSON integers are accepted as a convenience.
inline GroupElement element_from_json(const nlohmann::json& j) {
    bool shape = j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 &&
                 j[1].is_array() && j[1].size() == 2;
    if (!shape) throw input_error("matrix must be a 2x2 array [[a,b],[c,d]]");
    auto cell = [&](int r, int c) -> Scalar {
        const nlohmann::json& v = j[r][c];
        if (v.is_string()) return Scalar::parse(v.get<std::string>());
        if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
        throw input_error("matrix entries must be scalar strings");
    };
    return GroupElement::make(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1));
}

inline GroupElement element_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("matrix argument is not valid JSON");
    return element_from_json(j);
}

inline nlohmann::json element_to_json(const GroupElement& g) {
    const Sl2& m = g.rep();
    return nlohmann::json::array({nlohmann::json::array({m.a.str(), m.b.str()}),
                                  nlohmann::json::array({m.c.str(), m.d.str()})});
}

inline nlohmann::json log_entry_to_json(const MoveLogEntry& e) {
    return {{"move", move_name(e.move)},
            {"triple", e.triple},
            {"words", {e.first_word.str(), e.second_word.str()}}};
}

inline nlohmann::json decision_to_json(const Decision& d) {
    nlohmann::json w(d.witness);
    w["mode"] = d.exact ? "exact" : "float";
    if (!d.exact) w["precision"] = static_cast<long>(d.precision);
    if (!d.trail.empty()) w["triples"] = d.trail;
    if (!d.log.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& e : d.log) rows.push_back(log_entry_to_json(e));
        w["log"] = rows;
    }
    return {{"verdict", verdict_name(d.verdict)},
            {"reason", reason_name(d.reason)},
            {"witness", w}};
}

} // namespace fuchs
