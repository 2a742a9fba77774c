#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fuchs/nielsen.hpp"
#include "fuchs/verdict.hpp"

namespace fuchs {

enum class MinCase { tau_lt_2, tau_gt_2 };

inline const char* min_case_name(MinCase c) {
    return c == MinCase::tau_lt_2 ? "tau_lt_2" : "tau_gt_2";
}

struct TraceMinResult {
    GeneratorPair final_pair;
    TraceTriple final_triple;          // last sorted triple of the loop
    Scalar tau;
    MinCase case_tag;
    std::vector<TraceTriple> triples;  // sorted trail, normalized input first
    MoveLog log;
    long iterations = 0;
};

namespace detail {

inline TraceTriple current_triple(const GeneratorPair& p) { return triple_of(p); }
inline TraceTriple current_triple(const TripleState& s) { return s.triple; }

/// Bubble the triple into ascending order with pair-level moves: swap
/// exchanges x,y; permute_b exchanges y,z. Strict comparisons, so equal
/// values keep their current order.
template <class State>
State sorted_by_moves(State s, MoveLog& log) {
    for (;;) {
        TraceTriple t = current_triple(s);
        if (t.x > t.y) {
            s = apply_move(s, NielsenMove::swap, &log);
            continue;
        }
        if (t.y > t.z) {
            s = apply_move(s, NielsenMove::permute_b, &log);
            continue;
        }
        return s;
    }
}

} // namespace detail

inline constexpr long default_iteration_cap = 1'000'000;

/// Trace minimization on an actual pair. Lift signs are first normalized so
/// both generator traces are nonnegative (a representative choice, not a
/// Nielsen move, hence unlogged; the trail and the move log start there).
/// Then one z -> xy-z sign fix if tr(UV) < 0, a permutation sort, and the
/// loop replacing the largest entry by xy-z with re-sorting. Stops at
/// z <= xy/2 when tau < 2 and returns the minimizing pair itself; stops at
/// x < 0 when tau > 2 and returns (V', (U'V')^-1), whose product trace is
/// the negative entry.
inline TraceMinResult trace_minimize(const GeneratorPair& input,
                                     long max_iterations = default_iteration_cap) {
    Scalar tau = commutator_trace(input);
    int vs2 = Scalar::compare(tau, Scalar(2));
    if (vs2 == 0) throw precondition_error("metabelian: tr([A,B]) = 2");

    GeneratorPair p = normalize_lifts(input);
    MoveLog log;
    if (p.product_trace().sign() < 0) p = apply_move(p, NielsenMove::invert_second, &log);
    p = detail::sorted_by_moves(std::move(p), log);

    std::vector<TraceTriple> trail{triple_of(p)};
    long iterations = 0;
    for (;;) {
        const TraceTriple& t = trail.back();
        if (vs2 < 0) {
            if (Scalar(2) * t.z <= t.x * t.y) break;
        } else {
            if (t.x.sign() < 0) break;
        }
        if (iterations >= max_iterations)
            throw precondition_error("trace minimization exceeded the iteration cap");
        p = apply_move(p, NielsenMove::invert_second, &log);
        p = detail::sorted_by_moves(std::move(p), log);
        trail.push_back(triple_of(p));
        ++iterations;
    }

    internal_check(commutator_trace(p) == tau, "commutator trace drifted during minimization");
    TraceTriple final_triple = trail.back();

    if (vs2 < 0) {
        internal_check(final_triple.x > Scalar(2) && final_triple.x <= final_triple.y &&
                           final_triple.y <= final_triple.z &&
                           Scalar(2) * final_triple.z <= final_triple.x * final_triple.y,
                       "minimized triple out of shape for tau < 2");
        return {std::move(p), std::move(final_triple), std::move(tau), MinCase::tau_lt_2,
                std::move(trail), std::move(log), iterations};
    }

    // tau > 2: reshape to (V', (U'V')^-1); its trace triple is (y', z', x').
    p = apply_move(p, NielsenMove::swap, &log);
    p = apply_move(p, NielsenMove::invert_second, &log);
    p = apply_move(p, NielsenMove::mul_left_inv, &log);
    {
        Scalar u = p.trace_first();
        Scalar v = p.trace_second();
        Scalar w = p.product_trace();
        internal_check(u.sign() >= 0 && u <= v && w.sign() < 0,
                       "returned pair out of shape for tau > 2");
    }
    return {std::move(p), std::move(final_triple), std::move(tau), MinCase::tau_gt_2,
            std::move(trail), std::move(log), iterations};
}

struct TripleMinResult {
    Verdict verdict;
    Reason reason;
    TraceTriple final_triple;
    std::vector<TraceTriple> triples;
    MoveLog log;
    long iterations = 0;
};

/// The same replacement loop on a bare triple (root traces without root
/// matrices), for tau > 2 only. TRUE when a replacement lands at or below
/// -2; FALSE as soon as any value turns elliptic (|t| < 2), including in
/// the input triple itself.
inline TripleMinResult minimize_triple(const Scalar& x0, const Scalar& y0, const Scalar& z0,
                                       const Scalar& tau,
                                       long max_iterations = default_iteration_cap) {
    internal_check(x0 * x0 + y0 * y0 + z0 * z0 - x0 * y0 * z0 - Scalar(2) == tau,
                   "triple disagrees with the given commutator trace");
    if (Scalar::compare(tau, Scalar(2)) <= 0)
        throw precondition_error("triple minimization requires tr([A,B]) > 2");

    TripleState s{{x0, y0, z0}};
    MoveLog log;
    std::vector<TraceTriple> trail;

    auto elliptic_entry = [&]() -> const Scalar* {
        if (s.triple.x.abs() < Scalar(2)) return &s.triple.x;
        if (s.triple.y.abs() < Scalar(2)) return &s.triple.y;
        if (s.triple.z.abs() < Scalar(2)) return &s.triple.z;
        return nullptr;
    };

    // Normalize: ascending sort, then flip a leading negative into the
    // product slot via z -> xy-z. Bounded; a triple that will not settle
    // cannot meet the 2 <= x <= y <= z precondition.
    s = detail::sorted_by_moves(std::move(s), log);
    for (int attempts = 0;; ++attempts) {
        if (elliptic_entry()) {
            trail.push_back(s.triple);
            return {Verdict::no, Reason::elliptic_encountered, s.triple,
                    std::move(trail), std::move(log), 0};
        }
        if (s.triple.x.sign() >= 0) break;
        if (attempts >= 16)
            throw precondition_error("triple cannot be sorted to 2 <= x <= y <= z");
        s = apply_move(s, NielsenMove::permute_c, &log);
        s = apply_move(s, NielsenMove::invert_second, &log);
        s = detail::sorted_by_moves(std::move(s), log);
    }

    trail.push_back(s.triple);
    long iterations = 0;
    for (;;) {
        if (iterations >= max_iterations)
            throw precondition_error("triple minimization exceeded the iteration cap");
        ++iterations;
        s = apply_move(s, NielsenMove::invert_second, &log);
        Scalar w = s.triple.z;
        if (Scalar::compare(w, Scalar(-2)) <= 0) {
            s = detail::sorted_by_moves(std::move(s), log);
            trail.push_back(s.triple);
            return {Verdict::yes, Reason::case_b_minimized, s.triple,
                    std::move(trail), std::move(log), iterations};
        }
        if (w.abs() < Scalar(2)) {
            s = detail::sorted_by_moves(std::move(s), log);
            trail.push_back(s.triple);
            return {Verdict::no, Reason::elliptic_encountered, s.triple,
                    std::move(trail), std::move(log), iterations};
        }
        s = detail::sorted_by_moves(std::move(s), log);
        trail.push_back(s.triple);
    }
}

struct FloatTripleMinResult {
    Verdict verdict;
    Reason reason;
    std::vector<std::array<std::string, 3>> trail;
    MoveLog log;
    long iterations = 0;
};

/// Float backend of the triple loop for transcendental root traces: every
/// threshold comparison within the context tolerance stops the run as
/// boundary-ambiguous instead of deciding it.
inline FloatTripleMinResult minimize_triple_float(BigFloat x0, BigFloat y0, BigFloat z0,
                                                  const FloatContext& ctx,
                                                  long max_iterations = default_iteration_cap) {
    const BigFloat two(2, ctx.precision);
    const BigFloat minus_two(-2, ctx.precision);
    const BigFloat tol = ctx.tolerance();

    FloatTripleState s{std::move(x0), std::move(y0), std::move(z0)};
    MoveLog log;
    std::vector<std::array<std::string, 3>> trail;

    auto snapshot = [&]() { trail.push_back({s.x.str(), s.y.str(), s.z.str()}); };
    auto sort_state = [&]() {
        for (;;) {
            if (compare(s.x, s.y) > 0) {
                s = apply_move(s, NielsenMove::swap, &log);
                continue;
            }
            if (compare(s.y, s.z) > 0) {
                s = apply_move(s, NielsenMove::permute_b, &log);
                continue;
            }
            break;
        }
    };
    // -1 elliptic, 0 clear, +1 too close to the |t| = 2 boundary
    auto elliptic_state = [&]() {
        for (const BigFloat* e : {&s.x, &s.y, &s.z}) {
            int c = fuzzy_compare(e->abs(), two, tol);
            if (c == 0) return +1;
            if (c < 0) return -1;
        }
        return 0;
    };
    auto finish = [&](Verdict v, Reason r, long it) {
        sort_state();
        snapshot();
        return FloatTripleMinResult{v, r, std::move(trail), std::move(log), it};
    };

    sort_state();
    for (int attempts = 0;; ++attempts) {
        int ec = elliptic_state();
        if (ec > 0) return finish(Verdict::ambiguous, Reason::boundary_tolerance, 0);
        if (ec < 0) return finish(Verdict::no, Reason::elliptic_encountered, 0);
        if (s.x.sign() >= 0) break;
        if (attempts >= 16)
            throw precondition_error("triple cannot be sorted to 2 <= x <= y <= z");
        s = apply_move(s, NielsenMove::permute_c, &log);
        s = apply_move(s, NielsenMove::invert_second, &log);
        sort_state();
    }

    snapshot();
    long iterations = 0;
    for (;;) {
        if (iterations >= max_iterations)
            throw precondition_error("triple minimization exceeded the iteration cap");
        ++iterations;
        s = apply_move(s, NielsenMove::invert_second, &log);
        int c_low = fuzzy_compare(s.z, minus_two, tol);
        if (c_low == 0) return finish(Verdict::ambiguous, Reason::boundary_tolerance, iterations);
        if (c_low < 0) return finish(Verdict::yes, Reason::case_b_minimized, iterations);
        int c_high = fuzzy_compare(s.z, two, tol);
        if (c_high == 0) return finish(Verdict::ambiguous, Reason::boundary_tolerance, iterations);
        if (c_high < 0) return finish(Verdict::no, Reason::elliptic_encountered, iterations);
        sort_state();
        snapshot();
    }
}

} // namespace fuchs
