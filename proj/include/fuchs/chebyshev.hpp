#pragma once

#include <utility>

#include "fuchs/bigfloat.hpp"
#include "fuchs/scalar.hpp"

namespace fuchs {

/// S_0 = 0, S_1 = 1, S_n = x*S_{n-1} - S_{n-2}, extended by S_{-m} = -S_m.
/// Always evaluated through the recurrence, in O(|n|) exact operations.
inline Scalar s_eval(long n, const Scalar& x) {
    if (n < 0) return -s_eval(-n, x);
    Scalar prev(0);
    Scalar cur(1);
    if (n == 0) return prev;
    for (long i = 1; i < n; ++i) {
        Scalar next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Same recurrence on BigFloat, at the precision of x.
inline BigFloat s_eval_float(long n, const BigFloat& x) {
    if (n < 0) return -s_eval_float(-n, x);
    BigFloat prev(0, x.precision());
    BigFloat cur(1, x.precision());
    if (n == 0) return prev;
    for (long i = 1; i < n; ++i) {
        BigFloat next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace fuchs
