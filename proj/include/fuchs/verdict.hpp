#pragma once

namespace fuchs {

enum class Verdict { yes, no, ambiguous };

enum class Reason {
    case_a_negative_tau,
    case_b_minimized,
    tau_in_gap,
    elliptic_encountered,
    inequality_case1,
    parabolic_rule,
    boundary_tolerance,
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "TRUE";
        case Verdict::no: return "FALSE";
        case Verdict::ambiguous: return "AMBIGUOUS";
    }
    return "?";
}

inline const char* reason_name(Reason r) {
    switch (r) {
        case Reason::case_a_negative_tau: return "case_a_negative_tau";
        case Reason::case_b_minimized: return "case_b_minimized";
        case Reason::tau_in_gap: return "tau_in_gap";
        case Reason::elliptic_encountered: return "elliptic_encountered";
        case Reason::inequality_case1: return "inequality_case1";
        case Reason::parabolic_rule: return "parabolic_rule";
        case Reason::boundary_tolerance: return "boundary_tolerance";
    }
    return "?";
}

} // namespace fuchs
