#pragma once

#include <stdexcept>
#include <string>

namespace fuchs {

/// Malformed or out-of-domain user input: bad syntax, zero denominators,
/// determinant != 1, mixed radicands, non-coprime exponents.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its mathematical domain even though the
/// input was well-formed: metabelian pairs, elliptic generators, trace gaps.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariants. A failure here is a bug, not a usage error.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

} // namespace fuchs
