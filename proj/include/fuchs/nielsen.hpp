#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fuchs/bigfloat.hpp"
#include "fuchs/psl2.hpp"

namespace fuchs {

/// Generating-pair rewrites: the elementary swap / inversion / one-sided
/// multiplication moves, plus the derived composites that permute the trace
/// triple (permute_*) or replace an entry by xy-z (replace_*).
enum class NielsenMove {
    swap,           // (A,B) -> (B,A)
    invert_first,   // (A,B) -> (A^-1,B)
    invert_second,  // (A,B) -> (A,B^-1)
    mul_right,      // (A,B) -> (A,BA)
    mul_right_inv,  // (A,B) -> (A,BA^-1)
    mul_left,       // (A,B) -> (A,AB)
    mul_left_inv,   // (A,B) -> (A,A^-1B)
    permute_b,      // (U,V) -> (U^-1,UV)
    permute_c,      // (U,V) -> (UV,V^-1)
    replace_e,      // (U,V) -> (U,U^-1V)
    replace_f,      // (U,V) -> (UV^-1,V)
};

inline const char* move_name(NielsenMove m) {
    switch (m) {
        case NielsenMove::swap: return "swap";
        case NielsenMove::invert_first: return "invert_first";
        case NielsenMove::invert_second: return "invert_second";
        case NielsenMove::mul_right: return "mul_right";
        case NielsenMove::mul_right_inv: return "mul_right_inv";
        case NielsenMove::mul_left: return "mul_left";
        case NielsenMove::mul_left_inv: return "mul_left_inv";
        case NielsenMove::permute_b: return "permute_b";
        case NielsenMove::permute_c: return "permute_c";
        case NielsenMove::replace_e: return "replace_e";
        case NielsenMove::replace_f: return "replace_f";
    }
    return "?";
}

/// (tr U, tr V, tr UV) on the pair's fixed representatives.
struct TraceTriple {
    Scalar x, y, z;

    friend bool operator==(const TraceTriple&, const TraceTriple&) = default;
    std::string str() const { return "(" + x.str() + "," + y.str() + "," + z.str() + ")"; }
};

inline TraceTriple triple_of(const GeneratorPair& p) {
    return {p.trace_first(), p.trace_second(), p.product_trace()};
}

/// One audit record per applied move: the move, the trace triple it
/// produced (rendered), and the words the new pair spells in the
/// original generators.
struct MoveLogEntry {
    NielsenMove move;
    std::array<std::string, 3> triple;
    Word first_word;
    Word second_word;
};
using MoveLog = std::vector<MoveLogEntry>;

inline std::array<std::string, 3> render_triple(const TraceTriple& t) {
    return {t.x.str(), t.y.str(), t.z.str()};
}

namespace detail {

/// How each move acts on a trace triple; valid over any commutative ring,
/// so it serves both the exact and the float backends.
template <class T>
std::array<T, 3> moved_triple(NielsenMove m, const T& x, const T& y, const T& z) {
    switch (m) {
        case NielsenMove::swap: return {y, x, z};
        case NielsenMove::invert_first: return {x, y, x * y - z};
        case NielsenMove::invert_second: return {x, y, x * y - z};
        case NielsenMove::mul_right: return {x, z, x * z - y};
        case NielsenMove::mul_right_inv: return {x, x * y - z, y};
        case NielsenMove::mul_left: return {x, z, x * z - y};
        case NielsenMove::mul_left_inv: return {x, x * y - z, y};
        case NielsenMove::permute_b: return {x, z, y};
        case NielsenMove::permute_c: return {z, y, x};
        case NielsenMove::replace_e: return {x, x * y - z, y};
        case NielsenMove::replace_f: return {x * y - z, y, x};
    }
    throw std::logic_error("unknown move");
}

inline std::pair<Word, Word> moved_words(NielsenMove m, const Word& u, const Word& v) {
    switch (m) {
        case NielsenMove::swap: return {v, u};
        case NielsenMove::invert_first: return {u.inverse(), v};
        case NielsenMove::invert_second: return {u, v.inverse()};
        case NielsenMove::mul_right: return {u, v * u};
        case NielsenMove::mul_right_inv: return {u, v * u.inverse()};
        case NielsenMove::mul_left: return {u, u * v};
        case NielsenMove::mul_left_inv: return {u, u.inverse() * v};
        case NielsenMove::permute_b: return {u.inverse(), u * v};
        case NielsenMove::permute_c: return {u * v, v.inverse()};
        case NielsenMove::replace_e: return {u, u.inverse() * v};
        case NielsenMove::replace_f: return {u * v.inverse(), v};
    }
    throw std::logic_error("unknown move");
}

} // namespace detail

inline TraceTriple predicted_triple(NielsenMove m, const TraceTriple& t) {
    auto [x, y, z] = detail::moved_triple<Scalar>(m, t.x, t.y, t.z);
    return {std::move(x), std::move(y), std::move(z)};
}

/// Applies one move to the pair: matrices and words together. Asserts that
/// the matrix-level triple matches the trace-identity prediction, then
/// appends an audit record when a log is given.
inline GeneratorPair apply_move(const GeneratorPair& p, NielsenMove m, MoveLog* log = nullptr) {
    TraceTriple before = triple_of(p);
    const Sl2& A = p.first();
    const Sl2& B = p.second();
    Sl2 na, nb;
    switch (m) {
        case NielsenMove::swap: na = B; nb = A; break;
        case NielsenMove::invert_first: na = A.inverse(); nb = B; break;
        case NielsenMove::invert_second: na = A; nb = B.inverse(); break;
        case NielsenMove::mul_right: na = A; nb = B * A; break;
        case NielsenMove::mul_right_inv: na = A; nb = B * A.inverse(); break;
        case NielsenMove::mul_left: na = A; nb = A * B; break;
        case NielsenMove::mul_left_inv: na = A; nb = A.inverse() * B; break;
        case NielsenMove::permute_b: na = A.inverse(); nb = A * B; break;
        case NielsenMove::permute_c: na = A * B; nb = B.inverse(); break;
        case NielsenMove::replace_e: na = A; nb = A.inverse() * B; break;
        case NielsenMove::replace_f: na = A * B.inverse(); nb = B; break;
    }
    auto [wu, wv] = detail::moved_words(m, p.first_word(), p.second_word());
    GeneratorPair out =
        GeneratorPair::from_reps(std::move(na), std::move(nb), std::move(wu), std::move(wv));
    TraceTriple got = triple_of(out);
    internal_check(got == predicted_triple(m, before),
                   "matrix triple disagrees with the trace-identity prediction");
    if (log) log->push_back({m, render_triple(got), out.first_word(), out.second_word()});
    return out;
}

/// Triple-only state for when no matrices exist (root traces known, roots
/// not constructed). Words are still tracked; they are exact bookkeeping.
struct TripleState {
    TraceTriple triple;
    Word first_word = Word::generator('a');
    Word second_word = Word::generator('b');
};

inline TripleState apply_move(const TripleState& s, NielsenMove m, MoveLog* log = nullptr) {
    TripleState out;
    out.triple = predicted_triple(m, s.triple);
    auto [wu, wv] = detail::moved_words(m, s.first_word, s.second_word);
    out.first_word = std::move(wu);
    out.second_word = std::move(wv);
    if (log) log->push_back({m, render_triple(out.triple), out.first_word, out.second_word});
    return out;
}

/// Float twin of TripleState, for inherently transcendental root traces.
struct FloatTripleState {
    BigFloat x, y, z;
    Word first_word = Word::generator('a');
    Word second_word = Word::generator('b');
};

inline FloatTripleState apply_move(const FloatTripleState& s, NielsenMove m,
                                   MoveLog* log = nullptr) {
    auto [nx, ny, nz] = detail::moved_triple<BigFloat>(m, s.x, s.y, s.z);
    auto [wu, wv] = detail::moved_words(m, s.first_word, s.second_word);
    FloatTripleState out{std::move(nx), std::move(ny), std::move(nz), std::move(wu), std::move(wv)};
    if (log) log->push_back({m, {out.x.str(), out.y.str(), out.z.str()}, out.first_word, out.second_word});
    return out;
}

/// Rebuilds the pair a MoveLog describes; the audit path for log consumers.
inline GeneratorPair replay(const GeneratorPair& initial, const MoveLog& log) {
    GeneratorPair p = initial;
    for (const auto& e : log) p = apply_move(p, e.move);
    return p;
}

} // namespace fuchs
