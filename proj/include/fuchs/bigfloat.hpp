#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fuchs/scalar.hpp"

namespace fuchs {

/// Arbitrary-precision binary float backed by MPFR; every operation rounds
/// to nearest. Binary operators work at the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    /// Decimal text, rejecting anything mpfr cannot parse in full.
    static BigFloat parse(const std::string& text, mpfr_prec_t prec) {
        BigFloat out(prec);
        if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw input_error("bad float '" + text + "'");
        return out;
    }

    static BigFloat pow2(long e, mpfr_prec_t prec = 64) {
        BigFloat out(prec);
        mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
        return out;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    BigFloat abs() const {
        BigFloat out(precision());
        mpfr_abs(out.v_, v_, MPFR_RNDN);
        return out;
    }

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat out(a.precision());
        mpfr_neg(out.v_, a.v_, MPFR_RNDN);
        return out;
    }
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }

    BigFloat div_ui(unsigned long k) const {
        BigFloat out(precision());
        mpfr_div_ui(out.v_, v_, k, MPFR_RNDN);
        return out;
    }
    BigFloat mul_ui(unsigned long k) const {
        BigFloat out(precision());
        mpfr_mul_ui(out.v_, v_, k, MPFR_RNDN);
        return out;
    }

    BigFloat cosh() const {
        BigFloat out(precision());
        mpfr_cosh(out.v_, v_, MPFR_RNDN);
        return out;
    }
    /// Requires *this >= 1.
    BigFloat acosh() const {
        BigFloat out(precision());
        mpfr_acosh(out.v_, v_, MPFR_RNDN);
        internal_check(!mpfr_nan_p(out.v_), "acosh argument below 1");
        return out;
    }
    BigFloat sqrt() const {
        BigFloat out(precision());
        mpfr_sqrt(out.v_, v_, MPFR_RNDN);
        internal_check(!mpfr_nan_p(out.v_), "sqrt of a negative value");
        return out;
    }

    friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

    /// Scientific-notation decimal with enough digits to round-trip.
    std::string str() const {
        int digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 2;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    static BigFloat binop(const BigFloat& a, const BigFloat& b,
                          int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        BigFloat out(std::max(a.precision(), b.precision()));
        fn(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }

    mpfr_t v_;
};

/// Correctly rounded value of an exact Scalar at the requested precision.
/// The surd case recomputes at growing working precision until the result
/// provably rounds the same as the exact value (guards against cancellation
/// between the rational and surd parts).
inline BigFloat to_bigfloat(const Scalar& s, mpfr_prec_t prec) {
    BigFloat out(prec);
    if (s.is_rational()) {
        mpfr_set_q(out.raw(), s.rational_part().get_mpq_t(), MPFR_RNDN);
        return out;
    }
    for (mpfr_prec_t work = prec + 64;; work += 64) {
        mpfr_t t, u;
        mpfr_init2(t, work);
        mpfr_init2(u, work);
        mpfr_set_z(t, s.radicand().get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(t, t, MPFR_RNDN);
        mpfr_mul_q(t, t, s.surd_part().get_mpq_t(), MPFR_RNDN);
        mpfr_exp_t emax = mpfr_get_exp(t);
        if (sgn(s.rational_part()) != 0) {
            mpfr_set_q(u, s.rational_part().get_mpq_t(), MPFR_RNDN);
            emax = std::max(emax, mpfr_get_exp(u));
            mpfr_add(t, t, u, MPFR_RNDN);
        }
        bool done = false;
        if (!mpfr_zero_p(t)) {
            // At most a handful of nearest roundings, each within
            // 2^(emax - work); relative to t's exponent that leaves
            // work - 3 - slack trustworthy bits.
            long slack = static_cast<long>(emax - mpfr_get_exp(t));
            long err = static_cast<long>(work) - 3 - slack;
            if (err > static_cast<long>(prec) + 2 &&
                mpfr_can_round(t, err, MPFR_RNDN, MPFR_RNDN, prec)) {
                mpfr_set(out.raw(), t, MPFR_RNDN);
                done = true;
            }
        }
        mpfr_clear(t);
        mpfr_clear(u);
        if (done) return out;
    }
}

/// Precision and comparison-tolerance bundle for the float code paths.
struct FloatContext {
    mpfr_prec_t precision = 256;
    long tolerance_exp = -128;

    BigFloat tolerance() const { return BigFloat::pow2(tolerance_exp); }
};

/// Three-way comparison that reports 0 whenever |a - b| <= tol; callers
/// treat that band as boundary-ambiguous rather than deciding it.
inline int fuzzy_compare(const BigFloat& a, const BigFloat& b, const BigFloat& tol) {
    BigFloat d = a - b;
    if (d.abs() <= tol) return 0;
    return d.sign();
}

} // namespace fuchs
