// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuchs/decide.hpp"
#include "support.hpp"

using namespace fuchs;
using fix::rand_long;
using fix::rand_move;
using fix::rand_pair;
using fix::triple_pair;

namespace {

int failures = 0;

void criterion(int n, const std::string& title, const std::function<std::string()>& body) {
    std::string note;
    bool ok = true;
    try {
        note = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    if (!note.empty() && note.rfind("FAIL", 0) == 0) ok = false;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << title;
    if (!note.empty() && note.rfind("FAIL", 0) != 0) std::cout << " (" << note << ")";
    if (!ok) {
        std::cout << " [" << note << "]";
        ++failures;
    }
    std::cout << "\n";
}

std::string fail(const std::string& why) { return "FAIL: " + why; }

GeneratorPair golden_pair() {
    return {GroupElement::make(Scalar(44), Scalar(61), Scalar(31), Scalar(43)),
            GroupElement::make(Scalar(3), Scalar(4), Scalar(2), Scalar(3))};
}

GeneratorPair sample_pair() {
    return {GroupElement::make(Scalar(-1), Scalar::parse("28*sqrt(6)+70"),
                               Scalar::parse("28*sqrt(6)-70"), Scalar(195)),
            GroupElement::make(Scalar(2627796), Scalar(-19043), Scalar(19043), Scalar(-138))};
}

bool triples_equal(const std::vector<TraceTriple>& got,
                   const std::vector<const char*>& expect) {
    if (got.size() != expect.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i].str() != expect[i]) return false;
    return true;
}

std::string join_triples(const std::vector<TraceTriple>& ts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? " -> " : "") << ts[i].str();
    return os.str();
}

} // namespace

int main() {
    criterion(1, "golden minimization run, tau = -2", [] {
        GeneratorPair p = golden_pair();
        auto t0 = std::chrono::steady_clock::now();
        TraceMinResult r = trace_minimize(p);
        Decision d = is_free_rank2(p);
        auto t1 = std::chrono::steady_clock::now();
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
        if (r.tau != Scalar(-2)) return fail("tau = " + r.tau.str());
        if (!triples_equal(r.triples,
                           {"(6,87,507)", "(6,15,87)", "(3,6,15)", "(3,3,6)", "(3,3,3)"}))
            return fail("sequence " + join_triples(r.triples));
        if (d.verdict != Verdict::yes) return fail("verdict not TRUE");
        if (us >= 10000) return fail("took " + std::to_string(us) + " us");
        return std::to_string(us) + " us";
    });

    criterion(2, "golden minimization run, tau = 177/4", [] {
        GeneratorPair p(GroupElement::make(Scalar(26), Scalar(-1), Scalar(1), Scalar(0)),
                        GroupElement::make(Scalar(0), Scalar(2), Scalar(Rational(-1, 2)),
                                           Scalar(53)));
        TraceMinResult r = trace_minimize(p);
        if (r.tau != Scalar::parse("177/4")) return fail("tau = " + r.tau.str());
        if (!triples_equal(r.triples,
                           {"(5/2,26,53)", "(5/2,12,26)", "(5/2,4,12)", "(-2,5/2,4)"}))
            return fail("sequence " + join_triples(r.triples));
        if (r.final_pair.trace_first() != Scalar::parse("5/2") ||
            r.final_pair.trace_second() != Scalar(4) ||
            r.final_pair.product_trace() != Scalar(-2))
            return fail("returned pair traces (" + r.final_pair.trace_first().str() + ", " +
                        r.final_pair.trace_second().str() + "), product " +
                        r.final_pair.product_trace().str());
        if (is_free_rank2(p).verdict != Verdict::yes) return fail("verdict not TRUE");
        return std::string();
    });

    criterion(3, "half and third roots of the big sample pair", [] {
        GeneratorPair p = sample_pair();
        Scalar tau = commutator_trace(p);
        if (tau != Scalar::parse("1137226022466")) return fail("tau = " + tau.str());
        Decision d = rational_power_decide(p, RootSpec::make(2, 1, 3, 1));
        if (d.verdict != Verdict::yes) return fail("verdict not TRUE");
        if (!d.exact) return fail("not decided on the exact path");
        if (d.witness.at("x") != "14" || d.witness.at("y") != "138" || d.witness.at("z") != "10")
            return fail("root triple (" + d.witness.at("x") + "," + d.witness.at("y") + "," +
                        d.witness.at("z") + ")");
        std::vector<std::array<std::string, 3>> expect = {{"10", "14", "138"},
                                                          {"2", "10", "14"},
                                                          {"2", "6", "10"},
                                                          {"2", "2", "6"},
                                                          {"-2", "2", "2"}};
        if (d.trail != expect) return fail("wrong triple sequence");
        GroupElement a = GroupElement::from_rep(p.first());
        GroupElement b = GroupElement::from_rep(p.second());
        GroupElement r = root_via_formula(a, 2, Scalar(14));
        GroupElement s = root_via_formula(b, 3, Scalar(138));
        if (power(r, 2) != a) return fail("R^2 != A");
        if (power(s, 3) != b) return fail("S^3 != B");
        return std::string();
    });

    criterion(4, "power formula equals repeated multiplication", [] {
        for (int i = 0; i < 200; ++i) {
            GroupElement g = fix::rand_element();
            long n = rand_long(0, 10);
            GroupElement by_formula = power(g, n);
            GroupElement by_product = GroupElement::identity();
            for (long k = 0; k < n; ++k) by_product = by_product * g;
            if (by_formula != by_product)
                return fail("mismatch at sample " + std::to_string(i) + ", n = " +
                            std::to_string(n));
        }
        return std::string("200 samples");
    });

    criterion(5, "commutator trace of powers matches direct computation", [] {
        if (commutator_trace_of_powers(golden_pair(), 2, 3) != Scalar::parse("-37088098"))
            return fail("golden value at (2,3) wrong");
        for (int i = 0; i < 100; ++i) {
            GeneratorPair p = rand_pair();
            long m = rand_long(1, 5);
            long n = rand_long(1, 5);
            Sl2 am = power(GroupElement::from_rep(p.first()), m).rep();
            Sl2 bn = power(GroupElement::from_rep(p.second()), n).rep();
            Scalar direct = (am * bn * am.inverse() * bn.inverse()).trace();
            if (commutator_trace_of_powers(p, m, n) != direct)
                return fail("mismatch at sample " + std::to_string(i));
        }
        return std::string("100 samples");
    });

    criterion(6, "Chebyshev-like identity suite", [] {
        std::vector<Scalar> grid;
        for (long num : {-10, -7, -5, -3, -2, -1, 0, 1, 2, 3, 5, 7, 10}) grid.push_back(Scalar(num));
        for (auto [num, den] : {std::pair<long, long>{-7, 2}, {-1, 3}, {1, 2}, {5, 2}, {17, 4}})
            grid.push_back(Scalar(Rational(num, den)));

        for (const Scalar& x : grid) {
            for (long m = -4; m <= 12; ++m)
                for (long n = 0; n <= 12; ++n)
                    if (s_eval(m + n, x) !=
                        s_eval(m, x) * s_eval(n + 1, x) - s_eval(m - 1, x) * s_eval(n, x))
                        return fail("sum identity at x = " + x.str());
            for (long n = -12; n <= 12; ++n)
                if (s_eval(n, x) * s_eval(n, x) - s_eval(n + 1, x) * s_eval(n - 1, x) !=
                    Scalar(1))
                    return fail("consecutive-product identity at x = " + x.str());
            for (long m = 0; m <= 12; ++m)
                for (long n = 0; n <= 12; ++n)
                    if (s_eval(m * n, x) !=
                        s_eval(m, s_eval(n + 1, x) - s_eval(n - 1, x)) * s_eval(n, x))
                        return fail("composition identity at x = " + x.str());
        }

        for (auto [num, den] : {std::pair<long, long>{-5, 1}, {-3, 2}, {-1, 3}, {1, 2},
                                {2, 1}, {3, 1}, {7, 2}, {10, 1}}) {
            Rational t(num, den);
            Scalar x(t + Rational(1) / t);
            for (long n = 0; n <= 12; ++n) {
                Rational tn = 1;
                for (long k = 0; k < n; ++k) tn *= t;
                Rational den = tn / t * (1 - t * t);  // t^(n-1) (1 - t^2)
                if (s_eval(n, x) != Scalar((1 - tn * tn) / den))
                    return fail("closed form at t = " + t.get_str() + ", n = " +
                                std::to_string(n));
            }
        }

        for (long n = 0; n <= 50; ++n)
            if (s_eval(n, Scalar(2)) != Scalar(n)) return fail("S_n(2) != n");
        return std::string();
    });

    criterion(7, "move invariance of the commutator trace and triple tracking", [] {
        for (int i = 0; i < 100; ++i) {
            GeneratorPair p = rand_pair();
            Scalar tau = commutator_trace(p);
            for (int j = 0; j < 20; ++j) {
                NielsenMove mv = rand_move();
                TraceTriple predicted = predicted_triple(mv, triple_of(p));
                p = apply_move(p, mv);
                if (commutator_trace(p) != tau)
                    return fail("commutator trace drifted at pair " + std::to_string(i));
                if (triple_of(p) != predicted)
                    return fail("triple prediction missed at pair " + std::to_string(i));
            }
        }
        return std::string("100 pairs x 20 moves");
    });

    criterion(8, "minimal triple is unique under re-presentation", [] {
        const Rational fixtures[][3] = {
            {Rational(3), Rational(3), Rational(2)},    {Rational(3), Rational(3), Rational(3)},
            {Rational(5, 2), Rational(4), Rational(2)}, {Rational(5, 2), Rational(4), Rational(3)},
            {Rational(3), Rational(4), Rational(3)},    {Rational(3), Rational(4), Rational(2)},
            {Rational(4), Rational(4), Rational(3)},    {Rational(5, 2), Rational(5, 2), Rational(2)},
            {Rational(3), Rational(5), Rational(4)},    {Rational(7, 2), Rational(3), Rational(2)}};
        for (const auto& f : fixtures) {
            GeneratorPair p = triple_pair(f[0], f[1], f[2]);
            if (Scalar::compare(commutator_trace(p), Scalar(2)) >= 0)
                return fail("fixture tau not below 2");
            TraceTriple expect = trace_minimize(p).final_triple;
            for (int k = 0; k < 10; ++k) {
                GeneratorPair scrambled = p;
                for (int j = 0; j < 10; ++j) scrambled = apply_move(scrambled, rand_move());
                if (trace_minimize(scrambled).final_triple != expect)
                    return fail("final triple changed under scramble");
            }
        }
        return std::string("10 pairs x 10 scrambles");
    });

    criterion(9, "negative-tau root inequality boundary", [] {
        Decision exact = root_check_negative_tau(Scalar(87), Scalar(6), Scalar(-2), 1, 1);
        if (exact.verdict != Verdict::yes) return fail("m = n = 1 not TRUE");
        if (!exact.exact || exact.witness.at("lhs") != exact.witness.at("rhs"))
            return fail("m = n = 1 not an exact tie");
        Decision fl = root_check_negative_tau(Scalar(87), Scalar(6), Scalar(-2), 2, 1);
        if (fl.verdict != Verdict::no) return fail("half root not FALSE");
        BigFloat lhs = BigFloat::parse(fl.witness.at("lhs"), 256);
        BigFloat err = (lhs - BigFloat(89, 256)).abs();
        if (compare(err, BigFloat::pow2(-200, 64)) >= 0)
            return fail("lhs not within 2^-200 of 89");
        return std::string();
    });

    criterion(10, "parabolic root rule truth table", [] {
        struct Row {
            long m, n;
            Verdict v;
            const char* trace;
        } rows[] = {{1, 1, Verdict::yes, "-2"},
                    {1, 2, Verdict::no, "0"},
                    {2, 1, Verdict::no, "0"},
                    {2, 2, Verdict::no, "1"}};
        for (const auto& r : rows) {
            Decision d = parabolic_root_check(r.m, r.n);
            if (d.verdict != r.v || d.witness.at("product_trace") != r.trace)
                return fail("row (" + std::to_string(r.m) + "," + std::to_string(r.n) + ")");
        }
        return std::string();
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
