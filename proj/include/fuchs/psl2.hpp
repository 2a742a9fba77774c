#pragma once

#include <utility>

#include "fuchs/chebyshev.hpp"
#include "fuchs/scalar.hpp"
#include "fuchs/word.hpp"

namespace fuchs {

/// A fixed SL(2,R) representative [[a,b],[c,d]], det 1. Raw value type;
/// the +/- lift is whatever the arithmetic produced.
struct Sl2 {
    Scalar a, b, c, d;

    static Sl2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

    Scalar det() const { return a * d - b * c; }
    Scalar trace() const { return a + d; }

    friend Sl2 operator*(const Sl2& g, const Sl2& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
    Sl2 inverse() const { return {d, -b, -c, a}; }
    friend Sl2 operator-(const Sl2& g) { return {-g.a, -g.b, -g.c, -g.d}; }

    Sl2 add_diagonal(const Scalar& s) const { return {a + s, b, c, d + s}; }
    Sl2 divide(const Scalar& s) const { return {a / s, b / s, c / s, d / s}; }

    friend bool operator==(const Sl2&, const Sl2&) = default;
    bool is_identity() const { return *this == identity(); }
};

/// PSL(2,R) element: an Sl2 modulo sign, stored canonically. The lift with
/// nonnegative trace is kept; at trace 0 the first nonzero of (b, c, a)
/// is made positive, so equality is plain field comparison.
class GroupElement {
public:
    /// Entry point for user-supplied entries; rejects det != 1.
    static GroupElement make(Scalar a, Scalar b, Scalar c, Scalar d) {
        Sl2 m{std::move(a), std::move(b), std::move(c), std::move(d)};
        Scalar det = m.det();
        if (det != Scalar(1))
            throw input_error("matrix determinant is " + det.str() + ", expected 1");
        return GroupElement(std::move(m));
    }

    /// Internal path for arithmetic results; det 1 is an invariant here.
    static GroupElement from_rep(Sl2 m) {
        internal_check(m.det() == Scalar(1), "representative with det != 1");
        return GroupElement(std::move(m));
    }

    static GroupElement identity() { return GroupElement(Sl2::identity()); }

    const Sl2& rep() const { return m_; }
    Scalar trace() const { return m_.trace(); }
    bool is_identity() const { return m_.is_identity(); }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return from_rep(g.m_ * h.m_);
    }
    GroupElement inverse() const { return from_rep(m_.inverse()); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    explicit GroupElement(Sl2 m) : m_(std::move(m)) { canonicalize(); }

    void canonicalize() {
        int s = m_.trace().sign();
        if (s < 0) {
            m_ = -m_;
            return;
        }
        if (s > 0) return;
        int sb = m_.b.sign();
        if (sb != 0) {
            if (sb < 0) m_ = -m_;
            return;
        }
        int sc = m_.c.sign();
        if (sc != 0) {
            if (sc < 0) m_ = -m_;
            return;
        }
        // trace 0 with b = c = 0 would need det = -a^2 = 1
        internal_check(false, "trace-0 element with zero off-diagonal");
    }

    Sl2 m_;
};

enum class ElementClass { identity, elliptic, parabolic, hyperbolic };

/// |trace| < 2, = 2, > 2 resolve to elliptic, parabolic (or identity),
/// hyperbolic; exact comparisons.
inline ElementClass element_class(const GroupElement& g) {
    int c = Scalar::compare(g.trace(), Scalar(2));
    if (c > 0) return ElementClass::hyperbolic;
    if (c < 0) return ElementClass::elliptic;
    return g.is_identity() ? ElementClass::identity : ElementClass::parabolic;
}

/// g^n = S_n(tr g) g - S_{n-1}(tr g) E, any integer n (the recurrence's odd
/// extension makes the formula uniform; n = -1 reproduces the adjugate).
inline GroupElement power(const GroupElement& g, long n) {
    Scalar t = g.trace();
    Scalar sn = s_eval(n, t);
    Scalar sn1 = s_eval(n - 1, t);
    const Sl2& m = g.rep();
    return GroupElement::from_rep({sn * m.a - sn1, sn * m.b, sn * m.c, sn * m.d - sn1});
}

/// Inverts the power formula: given g = R^m and the root trace x (either
/// sign: the lift of g with trace S_{m+1}(x) - S_{m-1}(x) is used), returns
/// R = (g + S_{m-1}(x) E) / S_m(x). The claimed trace must reproduce tr(g)
/// and S_m(x) must be nonzero; the result is verified by re-powering.
inline GroupElement root_via_formula(const GroupElement& g, long m, const Scalar& root_trace) {
    if (m < 1) throw input_error("root index must be a positive integer");
    Scalar sm = s_eval(m, root_trace);
    if (sm.sign() == 0)
        throw precondition_error("S_m(root trace) = 0; the formula cannot divide");
    Scalar claimed = s_eval(m + 1, root_trace) - s_eval(m - 1, root_trace);
    if (claimed.abs() != g.trace())
        throw precondition_error("root trace " + root_trace.str() +
                                 " is inconsistent with the element's trace " + g.trace().str());
    Sl2 lift = g.rep();
    if (claimed.sign() < 0) lift = -lift;
    GroupElement root = GroupElement::from_rep(lift.add_diagonal(s_eval(m - 1, root_trace)).divide(sm));
    internal_check(power(root, m) == g, "root formula result does not re-power to the input");
    return root;
}

/// Ordered generator pair with fixed SL(2,R) representatives, so the word
/// traces tr(A), tr(B), tr(AB) are well-defined signed values (PSL alone
/// pins each trace only up to sign). Carries the words in the original
/// generators that the current representatives spell.
class GeneratorPair {
public:
    GeneratorPair(const GroupElement& first, const GroupElement& second)
        : first_(first.rep()),
          second_(second.rep()),
          first_word_(Word::generator('a')),
          second_word_(Word::generator('b')) {}

    static GeneratorPair from_reps(Sl2 first, Sl2 second, Word first_word, Word second_word) {
        internal_check(first.det() == Scalar(1) && second.det() == Scalar(1),
                       "pair representative with det != 1");
        GeneratorPair p;
        p.first_ = std::move(first);
        p.second_ = std::move(second);
        p.first_word_ = std::move(first_word);
        p.second_word_ = std::move(second_word);
        return p;
    }

    const Sl2& first() const { return first_; }
    const Sl2& second() const { return second_; }
    const Word& first_word() const { return first_word_; }
    const Word& second_word() const { return second_word_; }

    Scalar trace_first() const { return first_.trace(); }
    Scalar trace_second() const { return second_.trace(); }
    Scalar product_trace() const { return (first_ * second_).trace(); }

    friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;

private:
    GeneratorPair() = default;

    Sl2 first_;
    Sl2 second_;
    Word first_word_;
    Word second_word_;
};

/// Re-chooses the SL(2) lifts so both generator traces are nonnegative (the
/// usual representative convention). Same PSL(2,R) pair, same words; only
/// the signed product trace may change.
inline GeneratorPair normalize_lifts(const GeneratorPair& p) {
    Sl2 f = p.first();
    Sl2 s = p.second();
    if (f.trace().sign() < 0) f = -f;
    if (s.trace().sign() < 0) s = -s;
    return GeneratorPair::from_reps(std::move(f), std::move(s), p.first_word(), p.second_word());
}

/// tr[A,B] = x^2 + y^2 + z^2 - xyz - 2 on the trace triple; independent of
/// representative signs and invariant under Nielsen moves.
inline Scalar commutator_trace(const GeneratorPair& p) {
    Scalar x = p.trace_first();
    Scalar y = p.trace_second();
    Scalar z = p.product_trace();
    return x * x + y * y + z * z - x * y * z - Scalar(2);
}

/// tr[A^m, B^n] = 2 + S_m(tr A)^2 S_n(tr B)^2 (tr[A,B] - 2).
inline Scalar commutator_trace_of_powers(const GeneratorPair& p, long m, long n) {
    Scalar sm = s_eval(m, p.trace_first());
    Scalar sn = s_eval(n, p.trace_second());
    return Scalar(2) + sm * sm * sn * sn * (commutator_trace(p) - Scalar(2));
}

} // namespace fuchs
