#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "fuchs/errors.hpp"

namespace fuchs {

using Rational = mpq_class;
using Integer  = mpz_class;

namespace detail {

/// Splits n > 0 as k^2 * d with d square-free. Trial division extracts every
/// prime square up to the bound; a perfect-square test catches p^2 for larger
/// primes. What remains is certified square-free only while it is < bound^3,
/// otherwise nullopt.
inline std::optional<std::pair<Integer, Integer>> extract_square_part(Integer n) {
    constexpr unsigned long bound = 1'000'000UL;
    Integer k = 1;
    for (unsigned long i = 2; i <= bound; ++i) {
        unsigned long sq = i * i;
        if (mpz_cmp_ui(n.get_mpz_t(), sq) < 0) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), sq)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), sq);
            k *= i;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        k *= r;
        n = 1;
    }
    Integer certify = Integer(bound);
    certify = certify * certify * certify;
    if (n >= certify) return std::nullopt;
    return std::make_pair(std::move(k), std::move(n));
}

struct ScalarParser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) { i += w.size(); return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw input_error("bad scalar '" + std::string(s) + "': " + why);
    }

    Integer digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return Integer(std::string(s.substr(start, i - start)));
    }

    Rational rational() {
        Integer num = digits();
        if (eat('/')) {
            Integer den = digits();
            if (den == 0) fail("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(std::move(num));
    }

    Integer radicand() {
        if (!eat('(')) fail("expected '(' after sqrt");
        skip_ws();
        if (i < s.size() && s[i] == '-') fail("negative radicand");
        Integer d = digits();
        if (!eat(')')) fail("expected ')' after radicand");
        if (d == 0) fail("radicand must be positive");
        return d;
    }
};

} // namespace detail

/// Element of Q or of one real quadratic field Q(sqrt(D)), stored as
/// rational + surd*sqrt(D) with D square-free and D == 0 iff surd == 0.
/// All arithmetic is exact; combining values from different quadratic
/// fields throws input_error.
class Scalar {
public:
    Scalar() : rat_(0), surd_(0), d_(0) {}
    Scalar(long v) : rat_(v), surd_(0), d_(0) {}
    // mpq_class(n, d) is not canonical on its own; normalize so structural
    // equality stays sound whatever the caller hands in
    Scalar(Rational v) : rat_(std::move(v)), surd_(0), d_(0) { canonicalize_input(rat_); }

    /// rat + surd*sqrt(radicand), with the radicand reduced square-free
    /// (so sqrt(12) becomes 2*sqrt(3), sqrt(4) folds into the rational part).
    static Scalar with_surd(Rational rat, Rational surd, const Integer& radicand) {
        canonicalize_input(rat);
        canonicalize_input(surd);
        if (radicand < 0) throw input_error("negative radicand");
        if (radicand == 0 || surd == 0) return Scalar(std::move(rat));
        auto split = detail::extract_square_part(radicand);
        if (!split)
            throw input_error("cannot certify a square-free radicand for sqrt(" +
                              radicand.get_str() + ")");
        auto& [k, d] = *split;
        surd *= Rational(k);
        if (d == 1) return Scalar(rat + surd);
        Scalar out(std::move(rat));
        out.surd_ = std::move(surd);
        out.d_ = std::move(d);
        return out;
    }

    /// Grammar: one optionally signed rational term plus at most one surd
    /// term "r*sqrt(D)" (either order, '*' optional), e.g. "-5/2",
    /// "70 + 28*sqrt(6)", "28*sqrt(6)+70", "sqrt(8)".
    static Scalar parse(std::string_view text) {
        detail::ScalarParser p{text};
        Rational rat(0);
        bool have_rat = false;
        std::optional<std::pair<Rational, Integer>> surd;

        auto add_surd = [&](Rational coef, Integer d) {
            if (surd) p.fail("more than one sqrt term");
            surd.emplace(std::move(coef), std::move(d));
        };

        for (bool first = true;; first = false) {
            p.skip_ws();
            if (p.i >= p.s.size()) {
                if (first) p.fail("empty");
                break;
            }
            int sign = 1;
            if (p.eat('-')) sign = -1;
            else if (!p.eat('+') && !first) p.fail("expected '+' or '-' between terms");

            if (p.eat_word("sqrt")) {
                add_surd(Rational(sign), p.radicand());
                continue;
            }
            Rational r = p.rational();
            bool star = p.eat('*');
            if (p.eat_word("sqrt")) {
                add_surd(sign * r, p.radicand());
            } else if (star) {
                p.fail("expected sqrt after '*'");
            } else {
                if (have_rat) p.fail("more than one rational term");
                have_rat = true;
                rat = sign * r;
            }
        }
        if (surd) return with_surd(std::move(rat), std::move(surd->first), surd->second);
        return Scalar(std::move(rat));
    }

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && rat_ == 0; }

    /// Exact sign in {-1, 0, 1}. When the rational and surd parts pull in
    /// opposite directions, decided by comparing rat^2 against surd^2 * D.
    int sign() const {
        int sr = sgn(rat_);
        int ss = sgn(surd_);
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        int c = cmp(rat_ * rat_, surd_ * surd_ * Rational(d_));
        if (c == 0) return 0;
        return c > 0 ? sr : ss;
    }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    friend Scalar operator-(const Scalar& a) {
        Scalar out(-a.rat_);
        out.surd_ = -a.surd_;
        out.d_ = a.d_;
        return out;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        const Integer& d = join(a, b);
        Scalar out(a.rat_ + b.rat_);
        out.set_surd(a.surd_ + b.surd_, d);
        return out;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        const Integer& d = join(a, b);
        Scalar out(a.rat_ * b.rat_ + a.surd_ * b.surd_ * Rational(d));
        out.set_surd(a.rat_ * b.surd_ + a.surd_ * b.rat_, d);
        return out;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw input_error("division by zero");
        if (b.is_rational()) {
            Scalar out(a.rat_ / b.rat_);
            out.set_surd(a.surd_ / b.rat_, a.d_);
            return out;
        }
        join(a, b);
        Rational norm = b.rat_ * b.rat_ - b.surd_ * b.surd_ * Rational(b.d_);
        internal_check(norm != 0, "zero field norm for a nonzero surd");
        Scalar conj(b.rat_ / norm);
        conj.set_surd(-b.surd_ / norm, b.d_);
        return a * conj;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Structural equality; sound because the representation is canonical.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.d_ == b.d_ && a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    static int compare(const Scalar& a, const Scalar& b) { return (a - b).sign(); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

    /// Canonical text form, inverse of parse: "p/q" or "p/q + r/s*sqrt(D)"
    /// (with " - " when the surd coefficient is negative).
    std::string str() const {
        if (is_rational()) return rat_.get_str();
        std::string out = rat_.get_str();
        Rational s = surd_;
        if (sgn(s) < 0) {
            out += " - ";
            s = -s;
        } else {
            out += " + ";
        }
        return out + s.get_str() + "*sqrt(" + d_.get_str() + ")";
    }

    /// Exact square root of a nonnegative rational as a Scalar, when the
    /// square-free part of num*den is certifiable: sqrt(u/v) = sqrt(uv)/v.
    static std::optional<Scalar> try_sqrt_rational(const Rational& r) {
        if (r < 0) return std::nullopt;
        if (r == 0) return Scalar();
        Integer uv = r.get_num() * r.get_den();
        auto split = detail::extract_square_part(uv);
        if (!split) return std::nullopt;
        auto& [k, d] = *split;
        Rational coef(k, r.get_den());
        coef.canonicalize();
        if (d == 1) return Scalar(std::move(coef));
        Scalar out;
        out.set_surd(std::move(coef), d);
        return out;
    }

private:
    static void canonicalize_input(Rational& r) {
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) throw input_error("zero denominator");
        r.canonicalize();
    }

    static const Integer& join(const Scalar& a, const Scalar& b) {
        if (a.d_ == 0) return b.d_;
        if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
        throw input_error("mixed radicands in one expression: sqrt(" + a.d_.get_str() +
                          ") vs sqrt(" + b.d_.get_str() + ")");
    }

    void set_surd(Rational s, const Integer& d) {
        if (s == 0 || d == 0) {
            surd_ = 0;
            d_ = 0;
        } else {
            surd_ = std::move(s);
            d_ = d;
        }
    }

    Rational rat_;
    Rational surd_;
    Integer d_;
};

} // namespace fuchs
