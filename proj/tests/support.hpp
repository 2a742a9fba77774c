#pragma once

#include <random>

#include "fuchs/nielsen.hpp"
#include "fuchs/psl2.hpp"

namespace fix {

using fuchs::GeneratorPair;
using fuchs::GroupElement;
using fuchs::Integer;
using fuchs::NielsenMove;
using fuchs::Rational;
using fuchs::Scalar;

// one fixed seed per binary; test runs must not flake
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed2026ULL);
    return gen;
}

inline long rand_long(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline Rational rand_rational(long hi = 6, long den_hi = 4) {
    Rational r(rand_long(-hi, hi), rand_long(1, den_hi));
    r.canonicalize();
    return r;
}

// SL(2,Q): pick a != 0, b, c and solve d = (1 + bc) / a
inline GroupElement rand_element() {
    for (;;) {
        Rational a = rand_rational();
        if (a == 0) continue;
        Rational b = rand_rational();
        Rational c = rand_rational();
        Rational d = (Rational(1) + b * c) / a;
        return GroupElement::make(Scalar(a), Scalar(b), Scalar(c), Scalar(d));
    }
}

inline GeneratorPair rand_pair() { return GeneratorPair(rand_element(), rand_element()); }

inline NielsenMove rand_move() { return static_cast<NielsenMove>(rand_long(0, 10)); }

// pair whose trace triple is exactly (x, y, xi + 1/xi); needs x, y > 0
inline GeneratorPair triple_pair(const Rational& x, const Rational& y, const Rational& xi) {
    GroupElement a = GroupElement::make(Scalar(x), Scalar(-1), Scalar(1), Scalar(0));
    GroupElement b =
        GroupElement::make(Scalar(0), Scalar(xi), Scalar(Rational(-1) / xi), Scalar(y));
    return GeneratorPair(a, b);
}

} // namespace fix
