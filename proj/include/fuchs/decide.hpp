#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuchs/tracemin.hpp"
#include "fuchs/verdict.hpp"

namespace fuchs {

/// A full decision: verdict, why, and the evidence (named values plus the
/// triple trail and move log when minimization ran). Values are rendered
/// exactly in exact mode and as decimal strings in float mode.
struct Decision {
    Verdict verdict = Verdict::no;
    Reason reason = Reason::tau_in_gap;
    bool exact = true;
    mpfr_prec_t precision = 0;
    std::map<std::string, std::string> witness;
    std::vector<std::array<std::string, 3>> trail;
    MoveLog log;
};

/// Rational root exponents m = p/q, n = p'/q', positive and in lowest terms.
struct RootSpec {
    long p = 1;
    long q = 1;
    long pp = 1;
    long qp = 1;

    static RootSpec make(long p, long q, long pp, long qp) {
        if (p < 1 || q < 1 || pp < 1 || qp < 1)
            throw input_error("root exponents must be positive");
        if (std::gcd(p, q) != 1 || std::gcd(pp, qp) != 1)
            throw input_error("root exponent fractions must be in lowest terms");
        return {p, q, pp, qp};
    }

    /// "p" or "p/q" for each exponent.
    static RootSpec parse(const std::string& m, const std::string& n) {
        auto frac = [](const std::string& s) -> std::pair<long, long> {
            try {
                std::size_t pos = 0;
                long num = std::stol(s, &pos);
                if (pos == s.size()) return {num, 1};
                if (s[pos] != '/') throw input_error("bad exponent '" + s + "'");
                std::size_t pos2 = 0;
                long den = std::stol(s.substr(pos + 1), &pos2);
                if (pos + 1 + pos2 != s.size()) throw input_error("bad exponent '" + s + "'");
                return {num, den};
            } catch (const std::logic_error&) {
                throw input_error("bad exponent '" + s + "'");
            }
        };
        auto [p, q] = frac(m);
        auto [pp, qp] = frac(n);
        return make(p, q, pp, qp);
    }

    std::string m_str() const { return std::to_string(p) + "/" + std::to_string(q); }
    std::string n_str() const { return std::to_string(pp) + "/" + std::to_string(qp); }
};

/// Float root-trace bundle: phi = arcosh(trace/2) per generator and the
/// root traces x = 2cosh(phi1/m), y = 2cosh(phi2/n).
struct RootTraceData {
    BigFloat phi1, phi2;
    BigFloat x, y;
};

namespace detail {

inline BigFloat root_trace_float(const Scalar& trace_abs, long index, mpfr_prec_t prec,
                                 BigFloat& phi_out) {
    int c = Scalar::compare(trace_abs, Scalar(2));
    if (c < 0)
        throw precondition_error("elliptic generator: |trace| = " + trace_abs.str() + " < 2");
    if (c == 0) {
        phi_out = BigFloat(0, prec);
        return BigFloat(2, prec);  // parabolic short-circuit, exact
    }
    phi_out = to_bigfloat(trace_abs, prec).div_ui(2).acosh();
    return phi_out.div_ui(static_cast<unsigned long>(index)).cosh().mul_ui(2);
}

} // namespace detail

inline RootTraceData root_trace_data(const Scalar& trA_abs, const Scalar& trB_abs, long m, long n,
                                     mpfr_prec_t precision = 256) {
    if (m < 1 || n < 1) throw input_error("root indices must be positive");
    BigFloat phi1(precision), phi2(precision);
    BigFloat x = detail::root_trace_float(trA_abs, m, precision, phi1);
    BigFloat y = detail::root_trace_float(trB_abs, n, precision, phi2);
    return {std::move(phi1), std::move(phi2), std::move(x), std::move(y)};
}

namespace detail {

inline void attach_trail(Decision& d, const std::vector<TraceTriple>& triples) {
    for (const auto& t : triples) d.trail.push_back(render_triple(t));
}

/// Best rational approximation of v with denominator <= max_den, via the
/// continued fraction of v's exact binary value.
inline std::optional<Rational> rational_reconstruct(const BigFloat& v, unsigned long max_den) {
    if (!mpfr_number_p(v.raw()) || v.sign() <= 0) return std::nullopt;
    Rational exact;
    mpfr_get_q(exact.get_mpq_t(), v.raw());
    Integer n = exact.get_num();
    Integer d = exact.get_den();
    Integer h2(0), h1(1), k2(1), k1(0);
    for (;;) {
        Integer a = n / d;
        Integer h = a * h1 + h2;
        Integer k = a * k1 + k2;
        if (mpz_cmp_ui(k.get_mpz_t(), max_den) > 0) {
            if (k1 == 0) return std::nullopt;
            Rational best(h1, k1);
            best.canonicalize();
            return best;
        }
        Integer r = n - a * d;
        if (r == 0) {
            Rational best(h, k);
            best.canonicalize();
            return best;
        }
        h2 = std::move(h1);
        h1 = std::move(h);
        k2 = std::move(k1);
        k1 = std::move(k);
        n = std::move(d);
        d = std::move(r);
    }
}

} // namespace detail

/// Tries to produce an exact root trace x with S_{p+1}(x) - S_{p-1}(x) = t.
/// p = 1 and the parabolic t = 2 are immediate; p = 2 goes through
/// sqrt(t + 2) in Q(sqrt(D)); p >= 3 reconstructs a rational candidate
/// from a 320-bit float and verifies it exactly. nullopt: no exact form
/// found (callers fall back to the float path).
inline std::optional<Scalar> exact_root_trace(const Scalar& t, long p) {
    if (p < 1) return std::nullopt;
    if (p == 1) return t;  // S_2(t) - S_0(t) = t for every t, elliptic included
    if (Scalar::compare(t, Scalar(2)) < 0) return std::nullopt;
    if (t == Scalar(2)) return Scalar(2);
    if (!t.is_rational()) return std::nullopt;
    if (p == 2) return Scalar::try_sqrt_rational(t.rational_part() + 2);
    BigFloat tf = to_bigfloat(t, 320);
    BigFloat xf = tf.div_ui(2).acosh().div_ui(static_cast<unsigned long>(p)).cosh().mul_ui(2);
    auto cand = detail::rational_reconstruct(xf, 1'000'000'000UL);
    if (!cand) return std::nullopt;
    Scalar x(std::move(*cand));
    if (Scalar::compare(x, Scalar(2)) < 0) return std::nullopt;
    if (s_eval(p + 1, x) - s_eval(p - 1, x) != t) return std::nullopt;
    return x;
}

/// Classification: TRUE iff the pair generates a free Fuchsian group of
/// rank 2, by the sign and size of tau = tr[A,B]. tau <= -2 is immediately
/// TRUE; -2 < tau < 18 (tau != 2) is FALSE; tau >= 18 minimizes and checks
/// the returned pair for tr U >= 2, tr V >= 2, tr(UV) <= -2.
inline Decision is_free_rank2(const GeneratorPair& pair,
                              long max_iterations = default_iteration_cap) {
    Scalar tau = commutator_trace(pair);
    int vs2 = Scalar::compare(tau, Scalar(2));
    if (vs2 == 0) throw precondition_error("metabelian: tr([A,B]) = 2");

    Decision d;
    d.witness["tau"] = tau.str();
    if (Scalar::compare(tau, Scalar(-2)) <= 0) {
        d.verdict = Verdict::yes;
        d.reason = Reason::case_a_negative_tau;
        return d;
    }
    if (vs2 < 0 || Scalar::compare(tau, Scalar(18)) < 0) {
        d.verdict = Verdict::no;
        d.reason = Reason::tau_in_gap;
        return d;
    }

    TraceMinResult r = trace_minimize(pair, max_iterations);
    Scalar u = r.final_pair.trace_first();
    Scalar v = r.final_pair.trace_second();
    Scalar w = r.final_pair.product_trace();
    d.witness["trace_first"] = u.str();
    d.witness["trace_second"] = v.str();
    d.witness["product_trace"] = w.str();
    d.witness["final_triple"] = r.final_triple.str();
    d.witness["iterations"] = std::to_string(r.iterations);
    detail::attach_trail(d, r.triples);
    d.log = std::move(r.log);
    bool ok = u >= Scalar(2) && v >= Scalar(2) && w <= Scalar(-2);
    d.verdict = ok ? Verdict::yes : Verdict::no;
    d.reason = ok ? Reason::case_b_minimized : Reason::elliptic_encountered;
    return d;
}

/// Case I (tau <= -2): the roots generate a free rank-2 Fuchsian group iff
/// S_m(x)^2 S_n(y)^2 <= 1/2 - tau/4. m = n = 1 is exact (S_1 = 1, so the
/// inequality is tau <= -2 itself); otherwise both sides are compared in
/// floats with the context tolerance.
inline Decision root_check_negative_tau(const Scalar& trA_abs, const Scalar& trB_abs,
                                        const Scalar& tau, long m, long n,
                                        const FloatContext& ctx = {}) {
    if (m < 1 || n < 1) throw input_error("root indices must be positive");
    if (Scalar::compare(tau, Scalar(-2)) > 0)
        throw precondition_error("Case I requires tr([A,B]) <= -2");
    if (Scalar::compare(trA_abs, Scalar(2)) <= 0 || Scalar::compare(trB_abs, Scalar(2)) <= 0)
        throw precondition_error("Case I requires hyperbolic generators (|trace| > 2)");

    Decision d;
    d.witness["tau"] = tau.str();
    d.witness["m"] = std::to_string(m);
    d.witness["n"] = std::to_string(n);
    Scalar rhs_exact = Scalar(Rational(1, 2)) - tau / Scalar(4);

    if (m == 1 && n == 1) {
        d.witness["lhs"] = "1";
        d.witness["rhs"] = rhs_exact.str();
        d.verdict = Scalar(1) <= rhs_exact ? Verdict::yes : Verdict::no;
        d.reason = Reason::inequality_case1;
        return d;
    }

    RootTraceData data = root_trace_data(trA_abs, trB_abs, m, n, ctx.precision);
    BigFloat sm = s_eval_float(m, data.x);
    BigFloat sn = s_eval_float(n, data.y);
    BigFloat lhs = sm * sm * sn * sn;
    BigFloat rhs = to_bigfloat(rhs_exact, ctx.precision);
    d.exact = false;
    d.precision = ctx.precision;
    d.witness["x"] = data.x.str();
    d.witness["y"] = data.y.str();
    d.witness["phi1"] = data.phi1.str();
    d.witness["phi2"] = data.phi2.str();
    d.witness["lhs"] = lhs.str();
    d.witness["rhs"] = rhs.str();
    int c = fuzzy_compare(lhs, rhs, ctx.tolerance());
    if (c == 0) {
        d.verdict = Verdict::ambiguous;
        d.reason = Reason::boundary_tolerance;
    } else {
        d.verdict = c < 0 ? Verdict::yes : Verdict::no;
        d.reason = Reason::inequality_case1;
    }
    return d;
}

/// Case II (tau > 2) on actual root matrices: minimize the pair (R,S) and
/// check the returned pair. FALSE always exhibits an elliptic value.
inline Decision root_check_positive_tau(const GeneratorPair& roots,
                                        long max_iterations = default_iteration_cap) {
    Scalar tau = commutator_trace(roots);
    int vs2 = Scalar::compare(tau, Scalar(2));
    if (vs2 == 0) throw precondition_error("metabelian: tr([A,B]) = 2");
    if (vs2 < 0) throw precondition_error("Case II requires tr([R,S]) > 2");

    TraceMinResult r = trace_minimize(roots, max_iterations);
    Decision d;
    d.witness["tau"] = tau.str();
    Scalar u = r.final_pair.trace_first();
    Scalar v = r.final_pair.trace_second();
    Scalar w = r.final_pair.product_trace();
    d.witness["trace_first"] = u.str();
    d.witness["trace_second"] = v.str();
    d.witness["product_trace"] = w.str();
    d.witness["final_triple"] = r.final_triple.str();
    d.witness["iterations"] = std::to_string(r.iterations);
    detail::attach_trail(d, r.triples);
    d.log = std::move(r.log);
    bool ok = u >= Scalar(2) && v >= Scalar(2) && w <= Scalar(-2);
    d.verdict = ok ? Verdict::yes : Verdict::no;
    d.reason = ok ? Reason::case_b_minimized : Reason::elliptic_encountered;
    return d;
}

/// All-parabolic case: free rank 2 survives m-th/n-th roots iff m = n = 1.
/// Witness: the product root trace 2 - 4/(mn).
inline Decision parabolic_root_check(long m, long n) {
    if (m < 1 || n < 1) throw input_error("root indices must be positive");
    Rational mn(m);
    mn *= n;
    Scalar trace = Scalar(Rational(2) - Rational(4) / mn);
    Decision d;
    d.witness["m"] = std::to_string(m);
    d.witness["n"] = std::to_string(n);
    d.witness["product_trace"] = trace.str();
    d.verdict = (m == 1 && n == 1) ? Verdict::yes : Verdict::no;
    d.reason = Reason::parabolic_rule;
    return d;
}

/// The rational power decision: does the group generated by the p/q-th and
/// p'/q'-th roots of A and B stay free Fuchsian of rank 2? Powers up
/// A~ = A^q, B~ = B^q' exactly, then branches on tau~ = tr[A~,B~]:
/// tau~ <= -2 runs Case I with indices p, p'; tau~ > 2 derives the root
/// trace triple (x, y, z) and minimizes it (exactly whenever the root
/// traces have exact forms in one field, else in floats); the open gap
/// -2 < tau~ < 2 has no branch in the underlying algorithm and is
/// rejected. The caller asserts <A,B> itself is free Fuchsian of rank 2.
inline Decision rational_power_decide(const GeneratorPair& pair, const RootSpec& spec,
                                      const FloatContext& ctx = {},
                                      long max_iterations = default_iteration_cap) {
    GroupElement a_pow = power(GroupElement::from_rep(pair.first()), spec.q);
    GroupElement b_pow = power(GroupElement::from_rep(pair.second()), spec.qp);
    GeneratorPair powered(a_pow, b_pow);
    Scalar tau = commutator_trace(powered);
    int vs2 = Scalar::compare(tau, Scalar(2));
    if (vs2 == 0) throw precondition_error("metabelian: tr([A,B]) = 2 for the powered pair");

    Decision d;
    d.witness["m"] = spec.m_str();
    d.witness["n"] = spec.n_str();
    d.witness["tau"] = tau.str();

    if (Scalar::compare(tau, Scalar(-2)) <= 0) {
        Decision inner = root_check_negative_tau(a_pow.trace(), b_pow.trace(), tau, spec.p,
                                                 spec.pp, ctx);
        for (const auto& [k, v] : d.witness) inner.witness[k] = v;
        inner.witness["branch"] = "case1";
        return inner;
    }
    if (vs2 < 0)
        throw precondition_error(
            "tr([A,B]) of the powered pair lies in (-2,2): no branch of the algorithm applies");

    // tau~ > 2: root trace triple, then the triple loop
    d.witness["branch"] = "case2";
    Scalar tr_a = a_pow.trace();
    Scalar tr_b = b_pow.trace();
    Scalar tr_ab = powered.product_trace();

    std::optional<Scalar> ex = exact_root_trace(tr_a, spec.p);
    std::optional<Scalar> ey = ex ? exact_root_trace(tr_b, spec.pp) : std::nullopt;
    if (ex && ey) {
        try {
            const Scalar& x = *ex;
            const Scalar& y = *ey;
            Scalar sp = s_eval(spec.p, x);
            Scalar tp = s_eval(spec.pp, y);
            Scalar z = (tr_ab + s_eval(spec.p + 1, x) * s_eval(spec.pp - 1, y) +
                        s_eval(spec.p - 1, x) * s_eval(spec.pp + 1, y)) /
                       (sp * tp);
            Scalar root_tau = x * x + y * y + z * z - x * y * z - Scalar(2);
            internal_check(root_tau == Scalar(2) + (tau - Scalar(2)) / (sp * sp * tp * tp),
                           "root triple disagrees with the power identity for tau");
            TripleMinResult r = minimize_triple(x, y, z, root_tau, max_iterations);
            d.witness["x"] = x.str();
            d.witness["y"] = y.str();
            d.witness["z"] = z.str();
            d.witness["root_tau"] = root_tau.str();
            d.witness["iterations"] = std::to_string(r.iterations);
            d.witness["final_triple"] = r.final_triple.str();
            detail::attach_trail(d, r.triples);
            d.log = std::move(r.log);
            d.verdict = r.verdict;
            d.reason = r.reason;
            return d;
        } catch (const input_error&) {
            // the two root traces live in different quadratic fields; the
            // z formula mixes them, so this case is float-only
        }
    }

    RootTraceData data = root_trace_data(tr_a, tr_b, spec.p, spec.pp, ctx.precision);
    BigFloat sp = s_eval_float(spec.p, data.x);
    BigFloat tp = s_eval_float(spec.pp, data.y);
    BigFloat z = (to_bigfloat(tr_ab, ctx.precision) +
                  s_eval_float(spec.p + 1, data.x) * s_eval_float(spec.pp - 1, data.y) +
                  s_eval_float(spec.p - 1, data.x) * s_eval_float(spec.pp + 1, data.y)) /
                 (sp * tp);
    d.exact = false;
    d.precision = ctx.precision;
    d.witness["x"] = data.x.str();
    d.witness["y"] = data.y.str();
    d.witness["z"] = z.str();
    FloatTripleMinResult r = minimize_triple_float(data.x, data.y, z, ctx, max_iterations);
    d.witness["iterations"] = std::to_string(r.iterations);
    d.trail = std::move(r.trail);
    if (!d.trail.empty()) {
        const auto& f = d.trail.back();
        d.witness["final_triple"] = "(" + f[0] + "," + f[1] + "," + f[2] + ")";
    }
    d.log = std::move(r.log);
    d.verdict = r.verdict;
    d.reason = r.reason;
    return d;
}

} // namespace fuchs
